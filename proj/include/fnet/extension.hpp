#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnet/induction.hpp"
#include "fnet/weight_enum.hpp"

namespace fnet {

/// A candidate pair of structure codes: C extends by automorphisms (the
/// 1/2-code), D carries the tau-words of the extending sectors (the
/// 1/16-code).  Only equal lengths are enforced here; everything else is
/// what the checkers certify.
struct StructureCodes {
  StructureCodes(BinaryCode c, BinaryCode d)
      : c_code(std::move(c)), d_code(std::move(d)) {
    if (c_code.length() != d_code.length())
      throw InputError("StructureCodes: lengths differ");
  }

  BinaryCode c_code;
  BinaryCode d_code;

  int length() const { return c_code.length(); }
  /// length / 16 when the length is a positive multiple of 16, else 0.
  int n16() const {
    return length() > 0 && length() % 16 == 0 ? length() / 16 : 0;
  }
};

/// Diagnostics for the three conditions on the 1/16-code: length a positive
/// multiple of 16, triply even, all-one word present.
struct LyDiagnostics {
  int length = 0;
  bool length_ok = false;
  int n16 = 0;  // length / 16 when length_ok
  bool triply_even = false;
  bool has_all_one = false;

  bool all() const { return length_ok && triply_even && has_all_one; }
};

struct StructureDiagnostics {
  bool c_even = false;
  bool d_triply_even = false;
  bool c_subset_dual_d = false;
  bool c_equals_dual_d = false;

  bool all_with_equality() const {
    return c_even && d_triply_even && c_subset_dual_d && c_equals_dual_d;
  }
};

LyDiagnostics check_ly_conditions(const BinaryCode& d);
StructureDiagnostics check_structure_codes(const StructureCodes& s);

/// 4^n / (|C| |D|)^2 as an exact rational; equals 1 iff the ranks of C and D
/// sum to the length.
BigRat holomorphic_mu(const StructureCodes& s);

/// One row of the automorphism table: the chosen spin-1 dimension-1 class
/// for a tau-word, plus the cross-check against the table generated from
/// the generator choices.
struct DeltaEntry {
  BitWord beta;
  AlphaClass chosen;             // lexicographically least spin-1 class
  bool generated_has_spin_one;   // generator-product expansion contains one
  bool generated_matches;        // and its least spin-1 class is `chosen`
};

/// The certified automorphism set isomorphic to D: exactly one spin-1,
/// dimension-1 class per codeword, with the generator decomposition
/// cross-checked through fusion of the chosen representatives.
struct DeltaTable {
  std::vector<DeltaEntry> entries;  // one per word of D, sorted by weight then word
  std::vector<std::pair<BitWord, Sector>> generator_choices;
  bool complete = false;
  bool generated_all_spin_one = false;
  int mismatch_count = 0;
};

/// Requires C = dual(D) with D triply even (InputError otherwise) and a
/// consistent full_report (its errors propagate).  ModelError when some
/// tau-word has no spin-1 class, which signals invalid input codes.
DeltaTable build_delta(const StructureCodes& s);

struct CertStage {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The full verification bundle.  Stages run in order and stop at the first
/// failure; `first_failure` names it.
struct Certificate {
  std::vector<CertStage> stages;
  bool passed = false;
  std::string first_failure;

  LyDiagnostics ly;
  std::optional<StructureDiagnostics> structure;
  std::optional<ExtensionReport> report;
  std::optional<BigRat> mu;
  std::optional<DeltaTable> delta;
  std::vector<BitWord> chain_betas;             // nontrivial words of D
  std::vector<std::vector<ChainStep>> chains;   // parallel to chain_betas
};

struct CertifyOptions {
  int threads = 1;
};

/// Runs every check: the three conditions on D, the structure-code
/// diagnostics with C = dual(D), full-report consistency, holomorphic
/// mu-index 1, the delta table, and a triply-even code chain for every
/// nontrivial word of D.
Certificate certify_main_theorem(const StructureCodes& s, const CertifyOptions& opts = {});

}  // namespace fnet
