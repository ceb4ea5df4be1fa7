#include <doctest.h>

#include <random>

#include "fnet/induction.hpp"
#include "test_util.hpp"

using namespace fnet;
using L = IsingLabel;

namespace {

Sector random_sector(std::mt19937_64& rng, int n) {
  std::vector<L> labels;
  for (int i = 0; i < n; ++i) labels.push_back(kIsingLabels[rng() % 3]);
  return Sector(std::move(labels));
}

// Random even code containing the all-one word (valid full_report input).
BinaryCode random_extension_code(std::mt19937_64& rng, int n) {
  std::vector<BitWord> gens{BitWord::ones(n)};
  const int extra = static_cast<int>(rng() % 5);
  for (int i = 0; i < extra; ++i) {
    BitWord w = fnet::test::random_word(rng, n);
    if (w.weight() % 2 != 0) w.set(1 + static_cast<int>(rng() % n), !w.get(1));
    if (w.weight() % 2 != 0) continue;
    gens.push_back(std::move(w));
  }
  return make_code(n, gens);
}

// Direct definition of <alpha_lambda, alpha_mu>: sum over all codewords of
// the multiplicity of the codeword sector in the fusion product.
BigInt hom_alpha_oracle(const Sector& lambda, const Sector& mu, const BinaryCode& c) {
  const SectorSum prod = fuse_sectors(lambda, mu);
  BigInt total = 0;
  for (const BitWord& w : c.enumerate())
    total += prod.multiplicity(code_sector(w));
  return total;
}

}  // namespace

TEST_CASE("lifting criterion") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  CHECK(lifts(Sector::from_string("ss"), rep2));
  CHECK_FALSE(lifts(Sector::from_string("s0"), rep2));
  CHECK(lifts(Sector::from_string("0e"), rep2));
  CHECK(lifts(Sector::from_string("ee"), rep2));
}

TEST_CASE("inner-product lifting agrees with the S-matrix sign criterion") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const BinaryCode c = fnet::test::random_code(rng, n, 6);
    const Sector s = random_sector(rng, n);
    CHECK(lifts(s, c) == lifts_by_s_matrix_sign(s, c));
  }
}

TEST_CASE("hom_alpha closed form and named values") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  const Sector ss = Sector::from_string("ss");
  CHECK(hom_alpha(ss, ss, rep2) == 2);  // |C_beta| with beta = 11
  CHECK(hom_alpha(Sector::identity(2), Sector::from_string("ee"), rep2) == 1);
  CHECK(hom_alpha(Sector::identity(2), Sector::identity(2), rep2) == 1);
  CHECK(hom_alpha(Sector::identity(2), ss, rep2) == 0);  // distinct tau-words
  CHECK_THROWS_AS(hom_alpha(Sector::from_string("s0"), ss, rep2), LiftError);
}

TEST_CASE("hom_alpha equals the enumeration oracle") {
  std::mt19937_64 rng(73);
  int checked = 0;
  while (checked < 250) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const BinaryCode c = fnet::test::random_code(rng, n, 4);
    const Sector lambda = random_sector(rng, n);
    Sector mu = random_sector(rng, n);
    if (rng() % 2) mu = act(lambda, fnet::test::random_word(rng, n));  // same tau-word half the time
    if (!lifts(lambda, c) || !lifts(mu, c)) continue;
    CHECK(hom_alpha(lambda, mu, c) == hom_alpha_oracle(lambda, mu, c));
    ++checked;
  }
}

TEST_CASE("alpha classes of the two-coordinate diagonal code") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});

  const auto trivial = alpha_classes(rep2, BitWord::zeros(2));
  REQUIRE(trivial.size() == 2);
  CHECK(trivial[0].rep == Sector::identity(2));
  CHECK(trivial[1].rep == Sector::from_string("0e"));  // class {0e, e0}, minimal rep
  CHECK(trivial[0].spin.spin_is_one());
  CHECK(trivial[1].spin.spin_exponent() == 8);

  const auto diag = alpha_classes(rep2, BitWord::ones(2));
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].rep == Sector::from_string("ss"));
  CHECK(diag[0].spin.spin_exponent() == 2);  // weight 1/8

  CHECK_THROWS_AS(alpha_classes(rep2, BitWord::from_string("10")), LiftError);
}

TEST_CASE("alpha classes partition the lambdas with class size |C|/|C_beta|") {
  std::mt19937_64 rng(79);
  int checked = 0;
  while (checked < 60) {
    const int n = 2 + 2 * static_cast<int>(rng() % 7);
    const BinaryCode c = random_extension_code(rng, n);
    // beta: random word of the dual.
    const BinaryCode d = dual(c);
    if (d.rank() == 0) continue;
    BitWord beta(n);
    for (const BitWord& row : d.basis())
      if (rng() & 1) beta ^= row;
    const auto classes = alpha_classes(c, beta);
    const BigInt class_size =
        c.cardinality() / subcode_supported_on(c, beta).cardinality();
    CHECK(BigInt(static_cast<std::int64_t>(classes.size())) * class_size ==
          BigInt(1) << (n - beta.weight()));
    // Representatives are minimal: translating by random codewords never
    // goes below the representative.
    const auto& cls = classes[rng() % classes.size()];
    for (int i = 0; i < 10; ++i) {
      BitWord w(n);
      for (const BitWord& row : c.basis())
        if (rng() & 1) w ^= row;
      const Sector moved = act(cls.rep, w);
      CHECK_FALSE(moved < cls.rep);
      CHECK(weight_and_spin(moved).spin_exponent() == cls.spin.spin_exponent());
    }
    ++checked;
  }
}

TEST_CASE("beta report: named small cases") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  const BetaReport diag = beta_report(rep2, BitWord::ones(2));
  CHECK(diag.weight == 2);
  CHECK(diag.c_beta_size == 2);
  CHECK(diag.multiplicity_m == 1);
  CHECK(diag.split_t == 2);
  CHECK(diag.num_classes == 1);
  CHECK(diag.irreducible_dim_d == 1);
  CHECK(diag.mu_contribution == 2);

  const BetaReport zero = beta_report(rep2, BitWord::zeros(2));
  CHECK(zero.multiplicity_m == 1);
  CHECK(zero.split_t == 1);
  CHECK(zero.num_classes == 2);
}

TEST_CASE("beta report: the rank-15 even code of length 16") {
  const BinaryCode c = dual(make_code(16, {BitWord::ones(16)}));
  REQUIRE(c.rank() == 15);
  const BetaReport r = beta_report(c, BitWord::ones(16));
  CHECK(r.weight == 16);
  CHECK(r.c_beta_size == 32768);
  CHECK(r.multiplicity_m == 128);  // 2^{8n-1} at n = 1
  CHECK(r.split_t == 2);
  CHECK(r.num_classes == 1);
  CHECK(r.irreducible_dim_d == 1);
  CHECK(r.classes[0].rep == Sector(std::vector<L>(16, L::kH116)));
  CHECK(r.classes[0].spin.spin_is_one());

  const BetaReport z = beta_report(c, BitWord::zeros(16));
  CHECK(z.num_classes == 2);
  CHECK(z.multiplicity_m == 1);
  CHECK(z.split_t == 1);
}

TEST_CASE("beta report flags the model violation") {
  // C = <(1)_4>: for beta = 1100 the supported subcode is trivial, below
  // the 2^{w/2} bound, so the d = 1 model cannot hold.
  const BinaryCode c = make_code(4, {BitWord::ones(4)});
  CHECK_THROWS_AS(beta_report(c, BitWord::from_string("1100")), ModelError);
}

TEST_CASE("beta report rejects bad inputs") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  CHECK_THROWS_AS(beta_report(rep2, BitWord::from_string("10")), LiftError);
  const BinaryCode no_allone = make_code(4, {BitWord::from_string("1100")});
  CHECK_THROWS_AS(beta_report(no_allone, BitWord::zeros(4)), InputError);
}

TEST_CASE("full report reproduces the four-sector extension") {
  const ExtensionReport r = full_report(make_code(2, {BitWord::ones(2)}));
  CHECK(r.total_sectors == 4);
  CHECK(r.total_mu == 4);
  CHECK(r.target_mu == 4);
  CHECK(r.consistent);
  // Weight multiset {0, 1/8, 1/2, 1/8} in sixteenths, expanded per split.
  std::vector<std::int64_t> weights;
  for (const BetaReport& b : r.beta_reports)
    for (const AlphaClass& cls : b.classes)
      for (BigInt i = 0; i < b.split_t; ++i)
        weights.push_back(weight_and_spin(cls.rep).sixteenths);
  std::sort(weights.begin(), weights.end());
  CHECK(weights == std::vector<std::int64_t>{0, 2, 2, 8});
  for (const BetaReport& b : r.beta_reports)
    CHECK(b.irreducible_dim_d == 1);
}

TEST_CASE("full report on the minimal 1/16-code pair") {
  const ExtensionReport r = full_report(dual(make_code(16, {BitWord::ones(16)})));
  CHECK(r.total_sectors == 4);
  CHECK(r.total_mu == 4);
  CHECK(r.consistent);
  REQUIRE(r.beta_reports.size() == 2);
  CHECK(r.beta_reports[0].beta == BitWord::zeros(16));
  CHECK(r.beta_reports[1].beta == BitWord::ones(16));
}

TEST_CASE("full report is independent of the thread count") {
  const BinaryCode c = dual(reed_muller(1, 4));
  const ExtensionReport serial = full_report(c, {1});
  const ExtensionReport parallel = full_report(c, {4});
  REQUIRE(serial.beta_reports.size() == parallel.beta_reports.size());
  for (std::size_t i = 0; i < serial.beta_reports.size(); ++i) {
    CHECK(serial.beta_reports[i].beta == parallel.beta_reports[i].beta);
    CHECK(serial.beta_reports[i].classes == parallel.beta_reports[i].classes);
  }
  CHECK(serial.total_mu == parallel.total_mu);
}

TEST_CASE("model identities hold on random valid inputs") {
  std::mt19937_64 rng(83);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + 2 * static_cast<int>(rng() % 7);
    const BinaryCode c = random_extension_code(rng, n);
    const BinaryCode d = dual(c);
    BitWord beta(n);
    for (const BitWord& row : d.basis())
      if (rng() & 1) beta ^= row;
    BetaReport r;
    try {
      r = beta_report(c, beta);
    } catch (const ModelError&) {
      continue;  // genuine bound violations are exercised elsewhere
    }
    CHECK(r.multiplicity_m * r.multiplicity_m * r.split_t == r.c_beta_size);
    CHECK(r.multiplicity_m * r.split_t * r.irreducible_dim_d ==
          BigInt(1) << (r.weight / 2));
    CHECK(r.multiplicity_m * (BigInt(1) << (r.weight / 2)) ==
          BigInt(r.irreducible_dim_d) * r.c_beta_size);
    CHECK(r.mu_contribution == dual(c).cardinality());
    ++checked;
  }
}
