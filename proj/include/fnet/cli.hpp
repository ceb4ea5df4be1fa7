#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fnet::cli {

enum class Command { kVerify, kSectors, kBeta, kChain, kDelta, kDiscriminate, kCatalog };
enum class OutputFormat { kJson, kMarkdown, kText };

/// A parsed invocation.  Code inputs are file paths or catalog names.
struct JobSpec {
  Command command = Command::kVerify;
  OutputFormat format = OutputFormat::kText;
  std::string c_code;
  std::string d_code;
  std::string beta_bits;
  std::string catalog_name;
  std::string spins_csv;
  std::vector<std::string> groups;
  int threads = 0;  // 0 = hardware concurrency
};

OutputFormat parse_format(const std::string& name);  // "json" | "markdown" | "text"

/// Runs one job.  Exit status: 0 on success, 1 on mathematical
/// inconsistency (failed certificate, model/lifting/degeneracy errors),
/// 2 on parse, input, or capacity errors.  The status depends only on the
/// mathematical outcome, never on the output format.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace fnet::cli
