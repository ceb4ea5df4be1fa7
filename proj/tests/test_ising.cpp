#include <doctest.h>

#include "fnet/ising.hpp"

using namespace fnet;
using L = IsingLabel;

TEST_CASE("s-matrix entries") {
  const DyadicRootTwo half(1, 0, 1);
  const DyadicRootTwo root_half(0, 1, 1);
  CHECK(s_entry(L::kH0, L::kH0) == half);
  CHECK(s_entry(L::kH0, L::kH116) == root_half);
  CHECK(s_entry(L::kH0, L::kH12) == half);
  CHECK(s_entry(L::kH116, L::kH116) == DyadicRootTwo());
  CHECK(s_entry(L::kH116, L::kH12) == -root_half);
  CHECK(s_entry(L::kH12, L::kH12) == half);
  CHECK(s_entry(L::kH0, L::kH116).a() == 0);
  CHECK(s_entry(L::kH0, L::kH116).b() == 1);
  CHECK(s_entry(L::kH0, L::kH116).e() == 1);
}

TEST_CASE("s-matrix is symmetric with orthonormal rows and S^2 = I") {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(s_matrix()[i][j] == s_matrix()[j][i]);
      DyadicRootTwo dot;
      for (std::size_t k = 0; k < 3; ++k)
        dot += s_matrix()[i][k] * s_matrix()[j][k];
      CHECK(dot == (i == j ? DyadicRootTwo::from_int(1) : DyadicRootTwo()));
    }
}

TEST_CASE("fusion rules") {
  CHECK(fuse(L::kH12, L::kH12) == std::vector<L>{L::kH0});
  CHECK(fuse(L::kH12, L::kH116) == std::vector<L>{L::kH116});
  CHECK(fuse(L::kH116, L::kH12) == std::vector<L>{L::kH116});
  CHECK(fuse(L::kH116, L::kH116) == std::vector<L>{L::kH0, L::kH12});
  for (L x : kIsingLabels) {
    CHECK(fuse(L::kH0, x) == std::vector<L>{x});
    CHECK(fuse(x, L::kH0) == std::vector<L>{x});
    for (L y : kIsingLabels) CHECK(fuse(x, y) == fuse(y, x));
  }
}

TEST_CASE("weights, dimensions, mu-index") {
  CHECK(conformal_weight(L::kH0).sixteenths == 0);
  CHECK(conformal_weight(L::kH116).sixteenths == 1);
  CHECK(conformal_weight(L::kH12).sixteenths == 8);
  CHECK(ising_dim(L::kH0) == DyadicRootTwo::from_int(1));
  CHECK(ising_dim(L::kH116) == DyadicRootTwo::sqrt2());
  CHECK(ising_dim(L::kH12) == DyadicRootTwo::from_int(1));
  DyadicRootTwo mu;
  for (L x : kIsingLabels) mu += ising_dim(x) * ising_dim(x);
  CHECK(mu == DyadicRootTwo::from_int(4));
}

TEST_CASE("spins") {
  CHECK(conformal_weight(L::kH0).spin_is_one());
  CHECK(conformal_weight(L::kH12).spin_is_real());
  CHECK_FALSE(conformal_weight(L::kH12).spin_is_one());
  CHECK_FALSE(conformal_weight(L::kH116).spin_is_real());
}

TEST_CASE("verlinde formula reproduces the fusion table") {
  const auto n = verlinde_fusion_from_s();
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      const auto& products = fuse(kIsingLabels[x], kIsingLabels[y]);
      for (std::size_t z = 0; z < 3; ++z) {
        const int expected =
            std::count(products.begin(), products.end(), kIsingLabels[z]);
        CHECK(n[x][y][z] == expected);
      }
    }
  // Named entries.
  CHECK(n[1][1][2] == 1);  // 1/16 * 1/16 contains 1/2
  CHECK(n[2][1][1] == 1);  // 1/2 * 1/16 = 1/16
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      CHECK(n[0][x][y] == (x == y ? 1 : 0));  // unit row
}
