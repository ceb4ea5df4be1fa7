#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace fnet;

TEST_CASE("string round trip and coordinate convention") {
  const BitWord w = BitWord::from_string("1010");
  CHECK(w.length() == 4);
  CHECK(w.get(1));
  CHECK_FALSE(w.get(2));
  CHECK(w.get(3));
  CHECK(w.to_string() == "1010");
  CHECK(w.leading() == 1);
  CHECK(w.support() == std::vector<int>{1, 3});
}

TEST_CASE("weight of the constant words") {
  CHECK(BitWord::ones(16).weight() == 16);
  CHECK(BitWord::zeros(8).weight() == 0);
  CHECK(BitWord::zeros(8).is_zero());
}

TEST_CASE("xor, and, dot") {
  const BitWord a = BitWord::from_string("1100");
  const BitWord b = BitWord::from_string("1010");
  CHECK((a ^ b).to_string() == "0110");
  CHECK((a & b).to_string() == "1000");
  CHECK(a.dot(b) == true);   // intersection {1}, odd
  CHECK(a.dot(a) == false);  // weight 2, even
}

TEST_CASE("lexicographic order equals string order across limb boundaries") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 140);
    const BitWord a = test::random_word(rng, n);
    const BitWord b = test::random_word(rng, n);
    const bool lex = a.to_string() < b.to_string();
    CHECK((a < b) == lex);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(BitWord::from_string("10x1"), InputError);
  CHECK_THROWS_AS(BitWord(4).set(5, true), InputError);
  CHECK_THROWS_AS(BitWord(4) ^ BitWord(5), InputError);
  CHECK_THROWS_AS(BitWord(2000), InputError);
}

TEST_CASE("max capacity word") {
  BitWord w = BitWord::ones(kMaxWordBits);
  CHECK(w.weight() == kMaxWordBits);
  w.set(kMaxWordBits, false);
  CHECK(w.weight() == kMaxWordBits - 1);
  CHECK(w.leading() == 1);
}
