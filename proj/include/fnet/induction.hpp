#pragma once

#include <vector>

#include "fnet/binary_code.hpp"
#include "fnet/sector.hpp"

namespace fnet {

/// An equivalence class of lifted sectors with tau-word beta: two sectors
/// induce the same extension sector iff they differ by the action of a
/// codeword.  `rep` is the lexicographically least member; all members share
/// the same spin because the code is even and orthogonal to beta.
struct AlphaClass {
  BitWord beta;
  Sector rep;
  SixteenthWeight spin;

  bool operator==(const AlphaClass&) const = default;
};

/// The full accounting for one tau-word beta under the dimension-1 model:
///   m = |C_beta| / 2^{w/2},  t = 2^w / |C_beta|,  d = 1,
/// so that m^2 t = |C_beta| = <alpha, alpha> and m t d = 2^{w/2} = dim(alpha).
struct BetaReport {
  BitWord beta;
  int weight = 0;                  // w = wt(beta)
  BigInt num_lambda;               // 2^{n-w} sectors with this tau-word
  BigInt c_beta_size;              // |C_beta|
  std::int64_t num_classes = 0;    // num_lambda * |C_beta| / |C|
  BigInt multiplicity_m;
  BigInt split_t;
  int irreducible_dim_d = 1;
  BigInt mu_contribution;          // num_classes * t * d^2 = 2^n / |C|
  std::vector<AlphaClass> classes;
};

/// Global accounting for the extension by C: one BetaReport per word of the
/// dual, mu-index saturation against 4^n / |C|^2.
struct ExtensionReport {
  BinaryCode code;
  BinaryCode dual_code;
  std::vector<BetaReport> beta_reports;
  BigInt total_sectors;
  BigInt total_mu;
  BigInt target_mu;
  bool consistent = false;
};

/// True iff the alpha-induction of the sector descends to the extension by
/// C, i.e. its tau-word is orthogonal to every codeword.
bool lifts(const Sector& s, const BinaryCode& c);

/// Equivalent criterion through S-matrix signs: the tensor S-matrix entry
/// against every automorphism sector of the code is nonnegative.  Checked on
/// the basis; signs are multiplicative along the code.
bool lifts_by_s_matrix_sign(const Sector& s, const BinaryCode& c);

/// <alpha_lambda, alpha_mu> = sum over codewords of the multiplicity of the
/// codeword sector in the fusion lambda * mu.  Zero unless the tau-words
/// agree; |C_beta| when the sectors sit in the same class.  Both sectors
/// must lift.
BigInt hom_alpha(const Sector& lambda, const Sector& mu, const BinaryCode& c);

/// All classes with the given tau-word, in ascending order of representative.
/// Requires beta in dual(c) (LiftError otherwise) and c even.
std::vector<AlphaClass> alpha_classes(const BinaryCode& c, const BitWord& beta);

/// Requires beta in dual(c), wt(beta) even, c even and containing the
/// all-one word.  ModelError when the d=1 model fails an integrality or
/// bound check (|C_beta| >= 2^{w/2}).
BetaReport beta_report(const BinaryCode& c, const BitWord& beta);

struct FullReportOptions {
  int threads = 1;  // <= 0 picks the hardware concurrency
};

/// Runs beta_report for every word of dual(c) (sorted by weight, then
/// lexicographically) and checks mu-index saturation.  Per-beta reports are
/// independent and may be evaluated concurrently.
ExtensionReport full_report(const BinaryCode& c, const FullReportOptions& opts = {});

}  // namespace fnet
