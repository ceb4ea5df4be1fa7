#include "fnet/induction.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace fnet {

bool lifts(const Sector& s, const BinaryCode& c) {
  if (s.length() != c.length()) throw InputError("lifts: length mismatch");
  const BitWord tau = tau_word(s);
  for (const BitWord& row : c.basis())
    if (tau.dot(row)) return false;
  return true;
}

bool lifts_by_s_matrix_sign(const Sector& s, const BinaryCode& c) {
  if (s.length() != c.length()) throw InputError("lifts: length mismatch");
  for (const BitWord& row : c.basis())
    if (tensor_s_entry(s, code_sector(row)).sign() < 0) return false;
  return true;
}

namespace {

void require_beta_in_dual(const BinaryCode& c, const BitWord& beta, const char* who) {
  if (beta.length() != c.length())
    throw InputError(std::string(who) + ": beta length mismatch");
  for (const BitWord& row : c.basis())
    if (beta.dot(row))
      throw LiftError(std::string(who) + ": beta is not in the dual, no sector with this tau-word lifts");
}

// Off-support part of a sector's {0,1/2} assignment, as a word over the
// punctured coordinates.
BitWord off_support_bits(const Sector& s, const std::vector<int>& off) {
  BitWord x(static_cast<int>(off.size()));
  for (std::size_t j = 0; j < off.size(); ++j)
    if (s.label(off[j]) == IsingLabel::kH12) x.set(static_cast<int>(j) + 1, true);
  return x;
}

std::vector<int> off_support_coords(const BitWord& beta) {
  std::vector<int> off;
  off.reserve(static_cast<std::size_t>(beta.length() - beta.weight()));
  for (int j = 1; j <= beta.length(); ++j)
    if (!beta.get(j)) off.push_back(j);
  return off;
}

}  // namespace

BigInt hom_alpha(const Sector& lambda, const Sector& mu, const BinaryCode& c) {
  if (!lifts(lambda, c) || !lifts(mu, c))
    throw LiftError("hom_alpha: both sectors must lift along the code");
  const BitWord beta = tau_word(lambda);
  if (!(beta == tau_word(mu))) return 0;  // no automorphism links distinct tau-words

  // <alpha_lambda, alpha_mu> counts the codewords c with N_{lambda mu}^{c} = 1.
  // On supp(beta) both factors are 1/16 and either outcome matches; off the
  // support the product is the fixed sector lambda+mu, pinning the codeword
  // restriction.  Hence |C_beta| when the off-support difference lies in the
  // punctured code, else 0.
  const std::vector<int> off = off_support_coords(beta);
  const BitWord diff = off_support_bits(lambda, off) ^ off_support_bits(mu, off);
  const BinaryCode punctured = puncture_off_support(c, beta);
  if (!punctured.contains(diff)) return 0;
  return subcode_supported_on(c, beta).cardinality();
}

std::vector<AlphaClass> alpha_classes(const BinaryCode& c, const BitWord& beta) {
  require_beta_in_dual(c, beta, "alpha_classes");
  if (!is_even(c)) throw InputError("alpha_classes: code is not even");

  const std::vector<int> off = off_support_coords(beta);
  const BinaryCode punctured = puncture_off_support(c, beta);
  const int free_count = static_cast<int>(off.size()) - punctured.rank();
  if (free_count > kMaterializeCapRank)
    throw CapacityError("alpha_classes: 2^" + std::to_string(free_count) +
                        " classes exceed the materialization cap");

  // Spin well-definedness: acting by a codeword shifts the weight numerator
  // by 8 * (weight of the codeword off the support), which must vanish mod
  // 16.  Evenness of the code plus orthogonality to beta force it; verify on
  // the basis, where it generates the whole code.
  for (const BitWord& row : c.basis()) {
    const int off_weight = row.weight() - (row & beta).weight();
    if (off_weight % 2 != 0)
      throw InternalError("alpha_classes: class spin would be ill-defined");
  }

  // Minimal class representatives are exactly the sectors whose off-support
  // word vanishes on the pivot columns of the punctured code: reducing by a
  // pivot row strictly decreases the word, so the zero-on-pivots coset
  // member is the lexicographic minimum.
  std::vector<bool> is_pivot(off.size() + 1, false);
  for (int p : punctured.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free_coords;  // original coordinates, ascending
  for (std::size_t j = 0; j < off.size(); ++j)
    if (!is_pivot[j + 1]) free_coords.push_back(off[j]);

  std::vector<IsingLabel> base(static_cast<std::size_t>(c.length()), IsingLabel::kH0);
  for (int j = 1; j <= beta.length(); ++j)
    if (beta.get(j)) base[static_cast<std::size_t>(j - 1)] = IsingLabel::kH116;

  std::vector<AlphaClass> classes;
  classes.reserve(std::size_t{1} << free_count);
  const std::uint64_t count = std::uint64_t{1} << free_count;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<IsingLabel> labels = base;
    // Leftmost free coordinate is the most significant bit, so the
    // representatives come out in ascending sector order.
    for (int i = 0; i < free_count; ++i)
      if ((mask >> (free_count - 1 - i)) & 1)
        labels[static_cast<std::size_t>(free_coords[static_cast<std::size_t>(i)] - 1)] =
            IsingLabel::kH12;
    Sector rep(std::move(labels));
    const SixteenthWeight spin = weight_and_spin(rep);
    if (c.rank() > 0) {
      // One concrete translate per class: same spin expected.
      const Sector moved = act(rep, c.basis().front());
      if (weight_and_spin(moved).spin_exponent() != spin.spin_exponent())
        throw InternalError("alpha_classes: spin differs within a class");
    }
    classes.push_back(AlphaClass{beta, std::move(rep), spin});
  }
  return classes;
}

BetaReport beta_report(const BinaryCode& c, const BitWord& beta) {
  require_beta_in_dual(c, beta, "beta_report");
  const int w = beta.weight();
  if (w % 2 != 0) throw InputError("beta_report: beta has odd weight");
  if (!is_even(c)) throw InputError("beta_report: code is not even");
  if (!c.contains(BitWord::ones(c.length())))
    throw InputError("beta_report: code does not contain the all-one word");

  const int n = c.length();
  const int k = c.rank();
  const BinaryCode c_beta = subcode_supported_on(c, beta);
  const int rb = c_beta.rank();
  if (rb > w)
    throw InternalError("beta_report: |C_beta| exceeds 2^wt(beta)");

  BetaReport report;
  report.beta = beta;
  report.weight = w;
  report.num_lambda = BigInt(1) << (n - w);
  report.c_beta_size = BigInt(1) << rb;

  // Dimension-1 model.  m integral means |C_beta| >= 2^{w/2}, the lower
  // bound on the self-intersection; t is integral since C_beta sits inside
  // the coordinates of beta.
  if (rb < w / 2)
    throw ModelError("beta_report: |C_beta| = 2^" + std::to_string(rb) +
                     " violates the bound 2^" + std::to_string(w / 2) +
                     " at beta = " + beta.to_string());
  report.multiplicity_m = BigInt(1) << (rb - w / 2);
  report.split_t = BigInt(1) << (w - rb);
  report.irreducible_dim_d = 1;

  report.classes = alpha_classes(c, beta);
  report.num_classes = static_cast<std::int64_t>(report.classes.size());
  if (BigInt(report.num_classes) * c.cardinality() != report.num_lambda * report.c_beta_size)
    throw InternalError("beta_report: class count mismatch");
  report.mu_contribution = BigInt(report.num_classes) * report.split_t;
  if (report.mu_contribution != (BigInt(1) << (n - k)))
    throw InternalError("beta_report: mu contribution is not |dual|");
  return report;
}

ExtensionReport full_report(const BinaryCode& c, const FullReportOptions& opts) {
  if (!is_even(c)) throw InputError("full_report: code is not even");
  if (!c.contains(BitWord::ones(c.length())))
    throw InputError("full_report: code does not contain the all-one word");

  BinaryCode d = dual(c);
  if (d.rank() > kEnumerationCapRank)
    throw CapacityError("full_report: dual rank exceeds the enumeration cap");
  if (d.rank() > kMaterializeCapRank)
    throw CapacityError("full_report: dual too large to materialize");
  std::vector<BitWord> betas = d.enumerate();
  std::sort(betas.begin(), betas.end(), [](const BitWord& a, const BitWord& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  });

  std::vector<BetaReport> reports(betas.size());
  int threads = opts.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp<int>(threads, 1, static_cast<int>(betas.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < betas.size(); ++i) reports[i] = beta_report(c, betas[i]);
  } else {
    std::vector<std::future<void>> jobs;
    jobs.reserve(static_cast<std::size_t>(threads));
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next.fetch_add(1); i < betas.size(); i = next.fetch_add(1))
          reports[i] = beta_report(c, betas[i]);
      }));
    for (auto& j : jobs) j.get();  // rethrows per-beta failures
  }

  ExtensionReport out{c, std::move(d), std::move(reports), 0, 0, 0, false};
  for (const BetaReport& r : out.beta_reports) {
    out.total_sectors += BigInt(r.num_classes) * r.split_t;
    out.total_mu += r.mu_contribution;
  }
  out.target_mu = BigInt(1) << (2 * (c.length() - c.rank()));
  out.consistent = out.total_mu == out.target_mu;
  return out;
}

}  // namespace fnet
