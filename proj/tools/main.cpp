#include <CLI11.hpp>
#include <iostream>

#include "fnet/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact sector theory of code conformal nets and certification "
               "of holomorphic framed extensions from structure codes (C, D)"};
  app.require_subcommand(1);

  fnet::cli::JobSpec spec;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json | markdown | text")
        ->check(CLI::IsMember({"json", "markdown", "text"}));
    cmd->add_option("--threads", spec.threads, "worker threads (0 = hardware)");
  };

  auto* verify = app.add_subcommand(
      "verify", "run the full certificate for structure codes (C, D)");
  verify->add_option("--c-code", spec.c_code, "1/2-code file or catalog name (default: dual of D)");
  verify->add_option("--d-code", spec.d_code, "1/16-code file or catalog name")->required();
  add_common(verify);

  auto* sectors = app.add_subcommand(
      "sectors", "irreducible sectors of the extension by C: counts, spins, mu accounting");
  sectors->add_option("--c-code", spec.c_code, "code file or catalog name")->required();
  add_common(sectors);

  auto* beta = app.add_subcommand("beta", "single tau-word report with class representatives");
  beta->add_option("--c-code", spec.c_code, "code file or catalog name")->required();
  beta->add_option("--beta", spec.beta_bits, "tau-word bitstring")->required();
  add_common(beta);

  auto* chain = app.add_subcommand("chain", "decreasing triply-even code chain through beta");
  chain->add_option("--d-code", spec.d_code, "code file or catalog name")->required();
  chain->add_option("--beta", spec.beta_bits, "chain pivot bitstring")->required();
  add_common(chain);

  auto* delta = app.add_subcommand("delta", "spin-1 automorphism table isomorphic to D");
  delta->add_option("--c-code", spec.c_code, "1/2-code (default: dual of D)");
  delta->add_option("--d-code", spec.d_code, "1/16-code file or catalog name")->required();
  add_common(delta);

  auto* discriminate = app.add_subcommand(
      "discriminate", "which abelian groups carry the observed spins as modular data");
  discriminate->add_option("--spins", spec.spins_csv, "spin exponents in sixteenths, e.g. 0,2,8,2")
      ->required();
  discriminate->add_option("--group", spec.groups, "cyclic factors, e.g. 4 or 2x2 (repeatable)")
      ->required();
  add_common(discriminate);

  auto* catalog = app.add_subcommand("catalog", "built-in code families");
  catalog->add_option("--catalog", spec.catalog_name, "print one entry, e.g. rm-1-4");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // flag misuse is a parse error; --help is not
  }

  using fnet::cli::Command;
  if (verify->parsed()) spec.command = Command::kVerify;
  if (sectors->parsed()) spec.command = Command::kSectors;
  if (beta->parsed()) spec.command = Command::kBeta;
  if (chain->parsed()) spec.command = Command::kChain;
  if (delta->parsed()) spec.command = Command::kDelta;
  if (discriminate->parsed()) spec.command = Command::kDiscriminate;
  if (catalog->parsed()) spec.command = Command::kCatalog;
  spec.format = fnet::cli::parse_format(format);

  return fnet::cli::run(spec, std::cout, std::cerr);
}
