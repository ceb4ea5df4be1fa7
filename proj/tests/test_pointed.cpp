#include <doctest.h>

#include "fnet/pointed.hpp"

using namespace fnet;
using OrderTwo = PointedModularData::OrderTwo;

namespace {

// Every spin map G -> {0, 8} with spin(0) = 0 (the +-1 spin assignments).
int count_real_nondegenerate(const AbelianGroup& g, bool* all_order_two) {
  const int n = g.order();
  int found = 0;
  if (all_order_two) *all_order_two = true;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> spins(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) spins[static_cast<std::size_t>(i)] = ((mask >> (i - 1)) & 1) * 8;
    const auto data = PointedModularData::try_create(g, spins);
    if (!data || !data->nondegenerate()) continue;
    ++found;
    if (all_order_two && data->order_two_status() != OrderTwo::kHolds)
      *all_order_two = false;
  }
  return found;
}

}  // namespace

TEST_CASE("abelian group arithmetic") {
  const AbelianGroup z4({4});
  CHECK(z4.order() == 4);
  CHECK(z4.add(1, 3) == 0);
  CHECK(z4.add(2, 3) == 1);
  CHECK(z4.negate(1) == 3);
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.element_order(2) == 2);
  CHECK(z4.to_string() == "Z4");

  const AbelianGroup z22({2, 2});
  CHECK(z22.order() == 4);
  CHECK(z22.add(1, 2) == 3);
  CHECK(z22.negate(3) == 3);
  CHECK(z22.element_order(3) == 2);
  CHECK(z22.to_string() == "Z2xZ2");
}

TEST_CASE("pairing exponents on the four-sector data") {
  // Z4 with spins (0, 2, 8, 2) in sixteenths: the observed weights 0, 1/8,
  // 1/2, 1/8.
  const auto data = PointedModularData::create(AbelianGroup({4}), {0, 2, 8, 2});
  CHECK(data.y_exponent(1, 1) == 4);  // 8 - 2 - 2
  CHECK(data.y_exponent(1, 3) == 12);
  for (int h = 0; h < 4; ++h) CHECK(data.y_exponent(0, h) == 0);
  CHECK_FALSE(data.all_spins_real());
  CHECK(data.nondegenerate());
  CHECK(data.order_two_status() == OrderTwo::kHypothesisNotMet);
}

TEST_CASE("forced pairing on Z2") {
  const auto data = PointedModularData::create(AbelianGroup({2}), {0, 8});
  CHECK(data.y_exponent(1, 1) == 0);  // 0 - 16, reduced
  CHECK_FALSE(data.nondegenerate());
  CHECK_THROWS_AS(data.order_two_status(), DegeneracyError);
}

TEST_CASE("quadratic-form consistency rejects the Klein group with these spins") {
  // Any placement of the spins (0,2,8,2) on Z2xZ2 breaks bilinearity: an
  // order-2 element with spin exponent 2 would need -4 = 2*(-4) mod 16.
  const AbelianGroup z22({2, 2});
  const std::vector<std::vector<int>> placements = {
      {0, 2, 8, 2}, {0, 2, 2, 8}, {0, 8, 2, 2}};
  for (const auto& spins : placements) {
    std::string why;
    CHECK_FALSE(PointedModularData::try_create(z22, spins, &why).has_value());
    CHECK(why == "pairing is not bilinear; spins are not a quadratic form");
  }
  CHECK_FALSE(find_admissible_assignment(z22, {0, 2, 8, 2}).has_value());
}

TEST_CASE("Z4 admits the four-sector assignment; exhaustive witness search") {
  const auto witness = find_admissible_assignment(AbelianGroup({4}), {0, 2, 8, 2});
  REQUIRE(witness.has_value());
  CHECK(witness->spin_exponent(0) == 0);
  CHECK(witness->spin_exponent(2) == 8);  // the order-2 element carries -1
  CHECK(witness->spin_exponent(1) == 2);
  CHECK(witness->spin_exponent(3) == 2);
  CHECK(witness->nondegenerate());
}

TEST_CASE("bilinearity holds exhaustively on valid data") {
  const auto toric = PointedModularData::create(AbelianGroup({2, 2}), {0, 0, 0, 8});
  const auto z4 = PointedModularData::create(AbelianGroup({4}), {0, 2, 8, 2});
  for (const PointedModularData& data : {toric, z4}) {
    const int n = data.group().order();
    for (int g = 0; g < n; ++g)
      for (int gp = 0; gp < n; ++gp)
        for (int h = 0; h < n; ++h)
          CHECK(data.y_exponent(data.group().add(g, gp), h) ==
                (data.y_exponent(g, h) + data.y_exponent(gp, h)) % 16);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) CHECK(data.y_exponent(g, h) == data.y_exponent(h, g));
  }
  CHECK(toric.nondegenerate());
  CHECK(toric.order_two_status() == OrderTwo::kHolds);
}

TEST_CASE("order-two theorem: exhaustive search over real spin assignments") {
  // Groups with an element of order > 2 admit no nondegenerate +-1 spin
  // assignment at all.  With +-1 spins the pairing is alternating over
  // GF(2) (the diagonal is -2*spin = 0 mod 16), so nondegeneracy also needs
  // an even number of Z2 factors: Z2 and Z2^3 admit none, Z2^2 does, and
  // every witness there has all elements of order <= 2.
  bool all_order_two = true;
  CHECK(count_real_nondegenerate(AbelianGroup({4}), nullptr) == 0);
  CHECK(count_real_nondegenerate(AbelianGroup({8}), nullptr) == 0);
  CHECK(count_real_nondegenerate(AbelianGroup({2, 4}), nullptr) == 0);
  CHECK(count_real_nondegenerate(AbelianGroup({2, 2}), &all_order_two) > 0);
  CHECK(all_order_two);
  CHECK(count_real_nondegenerate(AbelianGroup({2}), nullptr) == 0);
  CHECK(count_real_nondegenerate(AbelianGroup({2, 2, 2}), nullptr) == 0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(PointedModularData::create(AbelianGroup({4}), {0, 2, 8}), InputError);
  CHECK_THROWS_AS(PointedModularData::create(AbelianGroup({4}), {1, 2, 8, 2}), InputError);
  CHECK_THROWS_AS(PointedModularData::create(AbelianGroup({4}), {0, 2, 8, 6}), InputError);
  CHECK_FALSE(find_admissible_assignment(AbelianGroup({2, 2}), {4, 4, 4, 4}).has_value());
  CHECK_THROWS_AS(find_admissible_assignment(AbelianGroup({2}), {0, 8, 8}), InputError);
}
