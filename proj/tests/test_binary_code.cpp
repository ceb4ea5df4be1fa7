#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"

using namespace fnet;

TEST_CASE("make_code canonical examples") {
  const BinaryCode c = make_code(2, {BitWord::from_string("11")});
  CHECK(c.rank() == 1);
  CHECK(c.cardinality() == 2);
  CHECK(c.contains(BitWord::zeros(2)));
  CHECK(c.contains(BitWord::ones(2)));

  const BinaryCode zero = make_code(4, {});
  CHECK(zero.rank() == 0);
  CHECK(zero.cardinality() == 1);

  CHECK_THROWS_AS(make_code(4, {BitWord::from_string("101")}), InputError);
}

TEST_CASE("canonicalization is invariant under generating-set changes") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 22);
    const BinaryCode c = test::random_code(rng, n, 8);
    // Random row operations: sums of random subsets of the basis, duplicated
    // and shuffled, must canonicalize to the same code.
    std::vector<BitWord> gens;
    for (int i = 0; i < 12; ++i) {
      BitWord w(n);
      for (const BitWord& row : c.basis())
        if (rng() & 1) w ^= row;
      gens.push_back(std::move(w));
    }
    for (const BitWord& row : c.basis()) gens.push_back(row);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(make_code(n, gens) == c);
  }
}

TEST_CASE("rank against an independent elimination oracle") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<BitWord> gens;
    const int k = static_cast<int>(rng() % 7);
    for (int i = 0; i < k; ++i) gens.push_back(test::random_word(rng, n));
    const BinaryCode c = make_code(n, gens);
    std::vector<std::vector<int>> rows;
    for (const BitWord& g : gens) {
      std::vector<int> row(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) row[static_cast<std::size_t>(j - 1)] = g.get(j);
      rows.push_back(std::move(row));
    }
    CHECK(c.rank() == test::rank_oracle(rows));
  }
}

TEST_CASE("reed_muller family") {
  CHECK(reed_muller(0, 4) == make_code(16, {BitWord::ones(16)}));
  CHECK(reed_muller(1, 4).rank() == 5);
  CHECK(reed_muller(1, 4).cardinality() == 32);
  CHECK(reed_muller(4, 4).rank() == 16);  // full space
  CHECK(reed_muller(2, 4).rank() == 11);
  CHECK_THROWS_AS(reed_muller(3, 2), InputError);
  CHECK_THROWS_AS(reed_muller(-1, 2), InputError);
  CHECK_THROWS_AS(reed_muller(1, 11), InputError);

  // Every word of RM(1,4) except 0 and (1)_16 has weight 8.
  for (const BitWord& w : reed_muller(1, 4).enumerate()) {
    if (w.is_zero() || w == BitWord::ones(16)) continue;
    CHECK(w.weight() == 8);
  }
}

TEST_CASE("dual: small exact cases") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  CHECK(dual(rep2) == rep2);  // self-dual at length 2

  // dual(RM(1,4)) = RM(2,4), rank 11, cross-checked against brute-force
  // orthogonality over all 2^16 words.
  const BinaryCode rm14 = reed_muller(1, 4);
  const BinaryCode d = dual(rm14);
  CHECK(d.rank() == 11);
  CHECK(d == reed_muller(2, 4));
  std::vector<BitWord> orthogonal;
  for (std::uint32_t x = 0; x < (1u << 16); ++x) {
    BitWord w(16);
    for (int j = 0; j < 16; ++j)
      if ((x >> j) & 1) w.set(j + 1, true);
    bool ok = true;
    for (const BitWord& row : rm14.basis())
      if (w.dot(row)) { ok = false; break; }
    if (ok) orthogonal.push_back(std::move(w));
  }
  std::sort(orthogonal.begin(), orthogonal.end());
  CHECK(orthogonal == d.enumerate());
}

TEST_CASE("dual involution and rank complement") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const BinaryCode c = test::random_code(rng, n, 10);
    const BinaryCode d = dual(c);
    CHECK(c.rank() + d.rank() == n);
    CHECK(dual(d) == c);
  }
}

TEST_CASE("subcode supported on a word") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  CHECK(subcode_supported_on(rep2, BitWord::ones(2)) == rep2);
  CHECK(subcode_supported_on(rep2, BitWord::zeros(2)).rank() == 0);

  // C_beta for C = RM(2,4) and a weight-8 word of RM(1,4) has 2^4 words;
  // brute force over all 2^11 codewords agrees.
  const BinaryCode rm24 = reed_muller(2, 4);
  for (const BitWord& beta : reed_muller(1, 4).enumerate()) {
    if (beta.weight() != 8) continue;
    const BinaryCode sub = subcode_supported_on(rm24, beta);
    int count = 0;
    for (const BitWord& w : rm24.enumerate())
      if ((w & beta) == w) {
        ++count;
        CHECK(sub.contains(w));
      }
    CHECK(sub.cardinality() == count);
    CHECK(sub.cardinality() == 16);
  }
}

TEST_CASE("puncture off support") {
  const BinaryCode rep2 = make_code(2, {BitWord::ones(2)});
  CHECK(puncture_off_support(rep2, BitWord::ones(2)).length() == 0);
  CHECK(puncture_off_support(rep2, BitWord::ones(2)).cardinality() == 1);
  CHECK(puncture_off_support(rep2, BitWord::zeros(2)) == rep2);

  const BinaryCode rm24 = reed_muller(2, 4);
  for (const BitWord& beta : reed_muller(1, 4).enumerate()) {
    if (beta.weight() != 8) continue;
    CHECK(puncture_off_support(rm24, beta).cardinality() == (1 << 7));
  }
}

TEST_CASE("subcode and puncture factor the cardinality") {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const BinaryCode c = test::random_code(rng, n, 8);
    const BitWord beta = test::random_word(rng, n);
    const BinaryCode sub = subcode_supported_on(c, beta);
    const BinaryCode punct = puncture_off_support(c, beta);
    CHECK(sub.cardinality() * punct.cardinality() == c.cardinality());
    // Membership sanity on a random codeword.
    BitWord w(n);
    for (const BitWord& row : c.basis())
      if (rng() & 1) w ^= row;
    if ((w & beta) == w) CHECK(sub.contains(w));
  }
}

TEST_CASE("direct sums") {
  const BinaryCode rep8 = make_code(8, {BitWord::ones(8)});
  const BinaryCode two_blocks = direct_sum(rep8, rep8);
  CHECK(two_blocks.rank() == 2);
  CHECK(two_blocks.length() == 16);
  CHECK(two_blocks.contains(BitWord::from_string("1111111100000000")));
  CHECK(two_blocks.contains(BitWord::ones(16)));

  const BinaryCode zero0 = make_code(0, {});
  const BinaryCode rm14 = reed_muller(1, 4);
  CHECK(direct_sum(rm14, zero0) == rm14);

  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 120; ++iter) {
    const BinaryCode a = test::random_code(rng, 1 + static_cast<int>(rng() % 8), 4);
    const BinaryCode b = test::random_code(rng, 1 + static_cast<int>(rng() % 8), 4);
    CHECK(dual(direct_sum(a, b)) == direct_sum(dual(a), dual(b)));
    CHECK(direct_sum(a, b).rank() == a.rank() + b.rank());
  }
}

TEST_CASE("build_chain preconditions") {
  const BinaryCode rep16 = make_code(16, {BitWord::ones(16)});
  CHECK_THROWS_AS(build_chain(rep16, BitWord::ones(16)), InputError);
  CHECK_THROWS_AS(build_chain(rep16, BitWord::zeros(16)), InputError);
  CHECK_THROWS_AS(build_chain(rep16, BitWord::from_string("1111111100000000")),
                  InputError);  // not in D
}

TEST_CASE("build_chain forced rank-2 chain") {
  const BitWord beta = BitWord::from_string("1111111100000000");
  const BinaryCode d = make_code(16, {beta, BitWord::ones(16)});
  const auto chain = build_chain(d, beta);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].d_code == d);
  CHECK(chain[1].d_code == make_code(16, {BitWord::ones(16)}));
}
