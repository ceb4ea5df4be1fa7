#include "fnet/extension.hpp"

#include <algorithm>
#include <map>

namespace fnet {

LyDiagnostics check_ly_conditions(const BinaryCode& d) {
  LyDiagnostics diag;
  diag.length = d.length();
  diag.length_ok = d.length() > 0 && d.length() % 16 == 0;
  diag.n16 = diag.length_ok ? d.length() / 16 : 0;
  diag.triply_even = divisibility_class(d) == Divisibility::kTriplyEven;
  diag.has_all_one = d.contains(BitWord::ones(d.length()));
  return diag;
}

StructureDiagnostics check_structure_codes(const StructureCodes& s) {
  StructureDiagnostics diag;
  diag.c_even = is_even(s.c_code);
  diag.d_triply_even = divisibility_class(s.d_code) == Divisibility::kTriplyEven;
  const BinaryCode dual_d = dual(s.d_code);
  diag.c_subset_dual_d = dual_d.contains_code(s.c_code);
  diag.c_equals_dual_d = s.c_code == dual_d;
  return diag;
}

BigRat holomorphic_mu(const StructureCodes& s) {
  const int n = s.length();
  const BigInt numer = BigInt(1) << (2 * n);
  const BigInt denom = BigInt(1) << (2 * (s.c_code.rank() + s.d_code.rank()));
  return BigRat(numer, denom);
}

namespace {

// Zero-on-pivots coset representative of x modulo the punctured code: the
// lexicographic minimum of its coset.
BitWord coset_rep(BitWord x, const BinaryCode& punctured) {
  for (const BitWord& row : punctured.basis())
    if (x.get(row.leading())) x ^= row;
  return x;
}

Sector rep_sector(const BitWord& beta, const std::vector<int>& off, const BitWord& x) {
  std::vector<IsingLabel> labels(static_cast<std::size_t>(beta.length()), IsingLabel::kH0);
  for (int j = 1; j <= beta.length(); ++j)
    if (beta.get(j)) labels[static_cast<std::size_t>(j - 1)] = IsingLabel::kH116;
  for (std::size_t j = 0; j < off.size(); ++j)
    if (x.get(static_cast<int>(j) + 1))
      labels[static_cast<std::size_t>(off[j] - 1)] = IsingLabel::kH12;
  return Sector(std::move(labels));
}

std::vector<int> off_coords(const BitWord& beta) {
  std::vector<int> off;
  for (int j = 1; j <= beta.length(); ++j)
    if (!beta.get(j)) off.push_back(j);
  return off;
}

BitWord off_bits(const Sector& s, const std::vector<int>& off) {
  BitWord x(static_cast<int>(off.size()));
  for (std::size_t j = 0; j < off.size(); ++j)
    if (s.label(off[j]) == IsingLabel::kH12) x.set(static_cast<int>(j) + 1, true);
  return x;
}

}  // namespace

DeltaTable build_delta(const StructureCodes& s) {
  const StructureDiagnostics diag = check_structure_codes(s);
  if (!diag.all_with_equality())
    throw InputError("build_delta: structure codes are not a valid pair with C = dual(D)");
  const ExtensionReport report = full_report(s.c_code);
  if (!report.consistent)
    throw ModelError("build_delta: full report is inconsistent");

  std::map<BitWord, const BetaReport*> by_beta;
  for (const BetaReport& r : report.beta_reports) by_beta.emplace(r.beta, &r);

  auto least_spin_one = [](const std::vector<AlphaClass>& classes)
      -> const AlphaClass* {
    for (const AlphaClass& cls : classes)
      if (cls.spin.spin_is_one()) return &cls;  // classes are rep-sorted
    return nullptr;
  };

  DeltaTable table;
  table.complete = true;
  table.generated_all_spin_one = true;

  // Generator choices: the lexicographically least spin-1 class for each
  // RREF basis word of D.
  const std::vector<int> d_pivots = s.d_code.pivots();
  std::vector<Sector> gen_reps;
  for (const BitWord& gen : s.d_code.basis()) {
    const AlphaClass* cls = least_spin_one(by_beta.at(gen)->classes);
    if (cls == nullptr)
      throw ModelError("build_delta: no spin-1 class for generator " + gen.to_string());
    table.generator_choices.emplace_back(gen, cls->rep);
    gen_reps.push_back(cls->rep);
  }

  for (const BetaReport& r : report.beta_reports) {
    const AlphaClass* chosen = least_spin_one(r.classes);
    if (chosen == nullptr)
      throw ModelError("build_delta: no spin-1 class for tau-word " + r.beta.to_string());

    // Cross-check against the generated table: fuse the chosen generator
    // representatives along the RREF decomposition of beta and look for a
    // spin-1 class among the classes present in the expansion.
    SectorSum product(Sector::identity(s.length()));
    for (std::size_t i = 0; i < d_pivots.size(); ++i)
      if (r.beta.get(d_pivots[i])) product = fuse_sum(product, gen_reps[i]);

    const std::vector<int> off = off_coords(r.beta);
    const BinaryCode punctured = puncture_off_support(s.c_code, r.beta);
    std::optional<Sector> generated_least;
    for (const auto& [term, mult] : product.terms()) {
      if (!(tau_word(term) == r.beta))
        throw InternalError("build_delta: generator product left the tau-word class");
      const Sector rep = rep_sector(r.beta, off, coset_rep(off_bits(term, off), punctured));
      if (!weight_and_spin(rep).spin_is_one()) continue;
      if (!generated_least || rep < *generated_least) generated_least = rep;
    }

    DeltaEntry entry{r.beta, *chosen, generated_least.has_value(),
                     generated_least.has_value() && *generated_least == chosen->rep};
    if (!entry.generated_has_spin_one) table.generated_all_spin_one = false;
    if (!entry.generated_matches) ++table.mismatch_count;
    table.entries.push_back(std::move(entry));
  }

  // The zero word must map to the identity class.
  for (const DeltaEntry& e : table.entries)
    if (e.beta.is_zero() && !(e.chosen.rep == Sector::identity(s.length())))
      throw InternalError("build_delta: zero tau-word did not choose the identity class");
  return table;
}

namespace {

bool chain_step_sound(const ChainStep& step, const BitWord& all_one) {
  if (divisibility_class(step.d_code) != Divisibility::kTriplyEven) return false;
  if (!step.d_code.contains(all_one)) return false;
  return step.c_code == dual(step.d_code);
}

}  // namespace

Certificate certify_main_theorem(const StructureCodes& s, const CertifyOptions& opts) {
  Certificate cert;
  auto stage = [&cert](const std::string& name, bool ok, std::string detail) {
    cert.stages.push_back(CertStage{name, ok, std::move(detail)});
    if (!ok && cert.first_failure.empty()) cert.first_failure = name;
    return ok;
  };

  cert.ly = check_ly_conditions(s.d_code);
  if (!stage("ly-length", cert.ly.length_ok,
             "length " + std::to_string(cert.ly.length) + (cert.ly.length_ok ? " = 16*" + std::to_string(cert.ly.n16) : " is not a positive multiple of 16")))
    return cert;
  if (!stage("ly-triply-even", cert.ly.triply_even,
             "D is " + to_string(divisibility_class(s.d_code))))
    return cert;
  if (!stage("ly-all-one", cert.ly.has_all_one,
             cert.ly.has_all_one ? "all-one word present" : "all-one word missing"))
    return cert;

  cert.structure = check_structure_codes(s);
  if (!stage("c-even", cert.structure->c_even,
             cert.structure->c_even ? "C is even" : "C has an odd-weight word"))
    return cert;
  if (!stage("c-subset-dual", cert.structure->c_subset_dual_d,
             cert.structure->c_subset_dual_d ? "C is contained in dual(D)"
                                             : "C is not contained in dual(D)"))
    return cert;
  if (!stage("c-equals-dual", cert.structure->c_equals_dual_d,
             "rank(C) = " + std::to_string(s.c_code.rank()) + ", rank(dual(D)) = " +
                 std::to_string(s.length() - s.d_code.rank())))
    return cert;

  try {
    cert.report = full_report(s.c_code, FullReportOptions{opts.threads});
  } catch (const ModelError& err) {
    stage("full-report", false, err.what());
    return cert;
  }
  if (!stage("full-report", cert.report->consistent,
             cert.report->total_sectors.str() + " sectors, mu " +
                 cert.report->total_mu.str() + " against target " +
                 cert.report->target_mu.str()))
    return cert;

  cert.mu = holomorphic_mu(s);
  if (!stage("holomorphic-mu", *cert.mu == 1,
             "4^n / (|C||D|)^2 = " + cert.mu->str()))
    return cert;

  try {
    cert.delta = build_delta(s);
  } catch (const ModelError& err) {
    stage("delta", false, err.what());
    return cert;
  }
  const bool delta_ok = cert.delta->complete && cert.delta->generated_all_spin_one;
  if (!stage("delta", delta_ok,
             std::to_string(cert.delta->entries.size()) + " spin-1 entries, " +
                 std::to_string(cert.delta->mismatch_count) +
                 " generated-table mismatches"))
    return cert;

  const BitWord all_one = BitWord::ones(s.length());
  bool chains_ok = true;
  std::string chain_detail;
  for (const DeltaEntry& e : cert.delta->entries) {
    if (e.beta.is_zero() || e.beta == all_one) continue;
    cert.chain_betas.push_back(e.beta);
    std::vector<ChainStep> chain = build_chain(s.d_code, e.beta);
    for (std::size_t r = 0; r < chain.size(); ++r) {
      if (!chain_step_sound(chain[r], all_one)) chains_ok = false;
      if (r + 1 < chain.size()) {
        if (chain[r].d_code.rank() != chain[r + 1].d_code.rank() + 1) chains_ok = false;
        if (!chain[r].d_code.contains_code(chain[r + 1].d_code)) chains_ok = false;
        if (!chain[r + 1].c_code.contains_code(chain[r].c_code)) chains_ok = false;
      }
    }
    if (chain.front().d_code != s.d_code ||
        chain.back().d_code != make_code(s.length(), {all_one}))
      chains_ok = false;
    if (!chains_ok && chain_detail.empty())
      chain_detail = "chain for " + e.beta.to_string() + " failed";
    cert.chains.push_back(std::move(chain));
  }
  if (chain_detail.empty())
    chain_detail = std::to_string(cert.chains.size()) + " triply-even chains";
  if (!stage("chains", chains_ok, chain_detail)) return cert;

  cert.passed = true;
  return cert;
}

}  // namespace fnet
