#include "fnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fnet/catalog.hpp"
#include "fnet/render.hpp"

namespace fnet::cli {

namespace {

BinaryCode load_code(const std::string& name, const char* role) {
  if (name.empty())
    throw InputError(std::string("missing --") + role + " input");
  if (std::filesystem::exists(name)) {
    std::ifstream in(name);
    if (!in) throw InputError("cannot open " + name);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& err) {
      throw InputError(name + ": " + err.what());
    }
    return code_from_json(j);
  }
  if (auto code = catalog_code(name)) return *code;
  throw InputError(name + ": not a file and not a catalog name");
}

std::string human_weight(std::int64_t sixteenths) {
  std::int64_t num = sixteenths;
  std::int64_t den = 16;
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  if (den == 1 || num == 0) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string spin_text(const SixteenthWeight& w) {
  if (w.spin_is_one()) return "+1";
  if (w.spin_is_real()) return "-1";
  return "e(2pi*i*" + std::to_string(w.spin_exponent()) + "/16)";
}

void emit_json(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// ---- verify ----------------------------------------------------------

void render_certificate_text(const Certificate& cert, std::ostream& out) {
  for (const CertStage& s : cert.stages)
    out << (s.passed ? "  [pass] " : "  [FAIL] ") << s.name << ": " << s.detail << "\n";
  if (cert.passed) {
    out << "certificate: PASS (holomorphic framed extension, structure codes (C, D))\n";
  } else {
    out << "certificate: FAIL at stage " << cert.first_failure << "\n";
  }
}

void render_certificate_markdown(const Certificate& cert, std::ostream& out) {
  out << "| stage | result | detail |\n|---|---|---|\n";
  for (const CertStage& s : cert.stages)
    out << "| " << s.name << " | " << (s.passed ? "pass" : "**fail**") << " | "
        << s.detail << " |\n";
  out << "\n**certificate: " << (cert.passed ? "PASS" : "FAIL at " + cert.first_failure)
      << "**\n";
}

int run_verify(const JobSpec& spec, std::ostream& out) {
  BinaryCode d = load_code(spec.d_code, "d-code");
  BinaryCode c = spec.c_code.empty() ? dual(d) : load_code(spec.c_code, "c-code");
  const Certificate cert =
      certify_main_theorem(StructureCodes(std::move(c), std::move(d)),
                           CertifyOptions{spec.threads});
  switch (spec.format) {
    case OutputFormat::kJson: emit_json(to_json(cert), out); break;
    case OutputFormat::kMarkdown: render_certificate_markdown(cert, out); break;
    case OutputFormat::kText: render_certificate_text(cert, out); break;
  }
  return cert.passed ? 0 : 1;
}

// ---- sectors / beta --------------------------------------------------

std::string class_spins(const BetaReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (i) s += ",";
    s += spin_text(r.classes[i].spin);
  }
  return s;
}

void beta_table(const std::vector<BetaReport>& reports, OutputFormat format,
                std::ostream& out) {
  if (format == OutputFormat::kMarkdown) {
    out << "| beta | wt | C_beta | classes | m | t | d | class spins |\n"
        << "|---|---|---|---|---|---|---|---|\n";
    for (const BetaReport& r : reports)
      out << "| " << r.beta.to_string() << " | " << r.weight << " | " << r.c_beta_size
          << " | " << r.num_classes << " | " << r.multiplicity_m << " | " << r.split_t
          << " | " << r.irreducible_dim_d << " | " << class_spins(r) << " |\n";
    return;
  }
  const int beta_width =
      std::max<int>(4, reports.empty() ? 0 : reports.front().beta.length());
  out << std::left << std::setw(beta_width + 2) << "beta" << std::setw(4) << "wt"
      << std::setw(10) << "|C_beta|" << std::setw(9) << "classes" << std::setw(6)
      << "m" << std::setw(6) << "t" << std::setw(3) << "d" << "class-spins\n";
  for (const BetaReport& r : reports)
    out << std::left << std::setw(beta_width + 2) << r.beta.to_string()
        << std::setw(4) << r.weight << std::setw(10) << r.c_beta_size.str()
        << std::setw(9) << r.num_classes << std::setw(6) << r.multiplicity_m.str()
        << std::setw(6) << r.split_t.str() << std::setw(3) << r.irreducible_dim_d
        << class_spins(r) << "\n";
}

void render_report_summary(const ExtensionReport& r, OutputFormat format,
                           std::ostream& out) {
  out << r.total_sectors << " sectors";
  if (r.total_sectors <= 16) {
    // Expand the weight multiset, one entry per split copy, ascending.
    std::vector<std::int64_t> weights;
    for (const BetaReport& b : r.beta_reports)
      for (const AlphaClass& cls : b.classes)
        for (BigInt i = 0; i < b.split_t; ++i)
          weights.push_back(weight_and_spin(cls.rep).sixteenths);
    std::sort(weights.begin(), weights.end());
    out << "; weights ";
    for (std::size_t i = 0; i < weights.size(); ++i)
      out << (i ? ", " : "") << human_weight(weights[i]);
  }
  out << "; mu = " << r.total_mu << " (target " << r.target_mu << ")"
      << (r.consistent ? "" : "  INCONSISTENT") << "\n\n";
  beta_table(r.beta_reports, format, out);
}

int run_sectors(const JobSpec& spec, std::ostream& out) {
  const BinaryCode c = load_code(spec.c_code, "c-code");
  const ExtensionReport report = full_report(c, FullReportOptions{spec.threads});
  if (spec.format == OutputFormat::kJson)
    emit_json(to_json(report), out);
  else
    render_report_summary(report, spec.format, out);
  return report.consistent ? 0 : 1;
}

int run_beta(const JobSpec& spec, std::ostream& out) {
  const BinaryCode c = load_code(spec.c_code, "c-code");
  if (spec.beta_bits.empty()) throw InputError("missing --beta bitstring");
  const BetaReport report = beta_report(c, BitWord::from_string(spec.beta_bits));
  if (spec.format == OutputFormat::kJson) {
    emit_json(to_json(report), out);
    return 0;
  }
  beta_table({report}, spec.format, out);
  out << "\nclass representatives:\n";
  for (const AlphaClass& cls : report.classes)
    out << "  " << cls.rep.to_string() << "  weight " << human_weight(weight_and_spin(cls.rep).sixteenths)
        << "  spin " << spin_text(cls.spin) << "\n";
  return 0;
}

// ---- chain / delta ---------------------------------------------------

int run_chain(const JobSpec& spec, std::ostream& out) {
  const BinaryCode d = load_code(spec.d_code, "d-code");
  if (spec.beta_bits.empty()) throw InputError("missing --beta bitstring");
  const std::vector<ChainStep> chain = build_chain(d, BitWord::from_string(spec.beta_bits));
  if (spec.format == OutputFormat::kJson) {
    emit_json(to_json(chain), out);
    return 0;
  }
  for (std::size_t r = 0; r < chain.size(); ++r) {
    out << "D_" << r + 1 << ": rank " << chain[r].d_code.rank() << ", "
        << to_string(divisibility_class(chain[r].d_code)) << ", dual rank "
        << chain[r].c_code.rank() << "\n";
    for (const BitWord& row : chain[r].d_code.basis())
      out << "    " << row.to_string() << "\n";
  }
  return 0;
}

int run_delta(const JobSpec& spec, std::ostream& out) {
  BinaryCode d = load_code(spec.d_code, "d-code");
  BinaryCode c = spec.c_code.empty() ? dual(d) : load_code(spec.c_code, "c-code");
  const DeltaTable table = build_delta(StructureCodes(std::move(c), std::move(d)));
  if (spec.format == OutputFormat::kJson) {
    emit_json(to_json(table), out);
    return 0;
  }
  if (spec.format == OutputFormat::kMarkdown) {
    out << "| beta | rep | spin | generated ok |\n|---|---|---|---|\n";
    for (const DeltaEntry& e : table.entries)
      out << "| " << e.beta.to_string() << " | " << e.chosen.rep.to_string() << " | "
          << spin_text(e.chosen.spin) << " | "
          << (e.generated_has_spin_one ? "yes" : "NO") << " |\n";
  } else {
    const int width = table.entries.empty() ? 4 : table.entries.front().beta.length() + 2;
    out << std::left << std::setw(width) << "beta" << std::setw(width) << "rep"
        << std::setw(6) << "spin" << "generated-ok\n";
    for (const DeltaEntry& e : table.entries)
      out << std::left << std::setw(width) << e.beta.to_string() << std::setw(width)
          << e.chosen.rep.to_string() << std::setw(6) << spin_text(e.chosen.spin)
          << (e.generated_has_spin_one ? "yes" : "NO") << "\n";
  }
  out << "\n" << table.entries.size() << " entries; "
      << table.mismatch_count << " generated-table mismatches\n";
  return 0;
}

// ---- discriminate ----------------------------------------------------

std::vector<int> parse_spins(const std::string& csv) {
  std::vector<int> spins;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    spins.push_back(std::stoi(item));
  if (spins.empty()) throw InputError("empty --spins list");
  return spins;
}

AbelianGroup parse_group(const std::string& text) {
  std::vector<int> factors;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, 'x'))
    factors.push_back(std::stoi(item));
  return AbelianGroup(std::move(factors));
}

int run_discriminate(const JobSpec& spec, std::ostream& out) {
  const std::vector<int> spins = parse_spins(spec.spins_csv);
  if (spec.groups.empty()) throw InputError("need at least one --group");
  Json result;
  result["spins"] = spins;
  Json groups = Json::array();
  for (const std::string& gname : spec.groups) {
    const AbelianGroup group = parse_group(gname);
    if (group.order() != static_cast<int>(spins.size()))
      throw InputError("group " + group.to_string() + " has order " +
                       std::to_string(group.order()) + " but " +
                       std::to_string(spins.size()) + " spins were given");
    Json g;
    g["group"] = group.to_string();
    const auto witness = find_admissible_assignment(group, spins);
    g["admits"] = witness.has_value();
    if (witness) {
      Json w = Json::array();
      for (int i = 0; i < group.order(); ++i) w.push_back(witness->spin_exponent(i));
      g["witness"] = std::move(w);
      g["order_two"] = to_string(witness->order_two_status());
    } else {
      g["witness"] = nullptr;
      g["order_two"] = nullptr;
    }
    groups.push_back(std::move(g));
  }
  result["groups"] = std::move(groups);
  if (spec.format == OutputFormat::kJson) {
    emit_json(result, out);
    return 0;
  }
  for (const auto& g : result["groups"])
    out << g["group"].get<std::string>() << ": "
        << (g["admits"].get<bool>() ? "admits a nondegenerate assignment ("
                                    + g["witness"].dump() + ", order-two "
                                    + g["order_two"].get<std::string>() + ")"
                                    : "no valid nondegenerate assignment")
        << "\n";
  return 0;
}

// ---- catalog ---------------------------------------------------------

int run_catalog(const JobSpec& spec, std::ostream& out) {
  if (spec.catalog_name.empty()) {
    if (spec.format == OutputFormat::kJson) {
      Json rows = Json::array();
      for (const auto& row : catalog_listing()) {
        Json r;
        r["pattern"] = row[0];
        r["description"] = row[1];
        r["example"] = row[2];
        rows.push_back(std::move(r));
      }
      emit_json(rows, out);
    } else {
      for (const auto& row : catalog_listing())
        out << row[0] << "\t" << row[1] << "\t(e.g. " << row[2] << ")\n";
    }
    return 0;
  }
  const auto code = catalog_code(spec.catalog_name);
  if (!code) throw InputError(spec.catalog_name + ": not a catalog name");
  if (spec.format == OutputFormat::kJson) {
    emit_json(to_json(*code), out);
  } else {
    out << spec.catalog_name << ": length " << code->length() << ", rank "
        << code->rank() << "\n";
    for (const BitWord& row : code->basis()) out << "  " << row.to_string() << "\n";
  }
  return 0;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "markdown") return OutputFormat::kMarkdown;
  if (name == "text") return OutputFormat::kText;
  throw InputError("unknown format: " + name);
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::kVerify: return run_verify(spec, out);
      case Command::kSectors: return run_sectors(spec, out);
      case Command::kBeta: return run_beta(spec, out);
      case Command::kChain: return run_chain(spec, out);
      case Command::kDelta: return run_delta(spec, out);
      case Command::kDiscriminate: return run_discriminate(spec, out);
      case Command::kCatalog: return run_catalog(spec, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    err << "model inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const LiftError& e) {
    err << "lifting error: " << e.what() << "\n";
    return 1;
  } catch (const DegeneracyError& e) {
    err << "degeneracy error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fnet::cli
