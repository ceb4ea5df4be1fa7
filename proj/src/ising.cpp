#include "fnet/ising.hpp"

namespace fnet {

char label_char(IsingLabel x) {
  switch (x) {
    case IsingLabel::kH0: return '0';
    case IsingLabel::kH116: return 's';
    case IsingLabel::kH12: return 'e';
  }
  return '?';
}

const std::array<std::array<DyadicRootTwo, 3>, 3>& s_matrix() {
  static const auto m = [] {
    const DyadicRootTwo h(1, 0, 1);   // 1/2
    const DyadicRootTwo r(0, 1, 1);   // sqrt2/2
    const DyadicRootTwo z;
    return std::array<std::array<DyadicRootTwo, 3>, 3>{{
        {{h, r, h}},
        {{r, z, -r}},
        {{h, -r, h}},
    }};
  }();
  return m;
}

DyadicRootTwo s_entry(IsingLabel row, IsingLabel col) {
  return s_matrix()[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

const std::vector<IsingLabel>& fuse(IsingLabel x, IsingLabel y) {
  using L = IsingLabel;
  static const std::vector<IsingLabel> h0{L::kH0};
  static const std::vector<IsingLabel> h116{L::kH116};
  static const std::vector<IsingLabel> h12{L::kH12};
  static const std::vector<IsingLabel> h0_h12{L::kH0, L::kH12};
  if (x == L::kH0) return y == L::kH0 ? h0 : (y == L::kH116 ? h116 : h12);
  if (y == L::kH0) return x == L::kH116 ? h116 : h12;
  if (x == L::kH12 && y == L::kH12) return h0;
  if (x == L::kH116 && y == L::kH116) return h0_h12;
  return h116;  // 1/2 * 1/16 in either order
}

SixteenthWeight conformal_weight(IsingLabel x) {
  switch (x) {
    case IsingLabel::kH0: return {0};
    case IsingLabel::kH116: return {1};
    case IsingLabel::kH12: return {8};
  }
  return {0};
}

DyadicRootTwo ising_dim(IsingLabel x) {
  return x == IsingLabel::kH116 ? DyadicRootTwo::sqrt2() : DyadicRootTwo::from_int(1);
}

std::array<std::array<std::array<int, 3>, 3>, 3> verlinde_fusion_from_s() {
  std::array<std::array<std::array<int, 3>, 3>, 3> n{};
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z) {
        DyadicRootTwo acc;
        for (std::size_t k = 0; k < 3; ++k) {
          // All Ising sectors are self-conjugate, so S* = S.
          const DyadicRootTwo term =
              s_matrix()[x][k] * s_matrix()[y][k] * s_matrix()[z][k] *
              s_matrix()[0][k].inverse();
          acc += term;
        }
        std::int64_t v;
        try {
          v = acc.as_integer();
        } catch (const ArithmeticError&) {
          throw InternalError("verlinde_fusion_from_s: entry " + acc.to_string() +
                              " is not an integer");
        }
        if (v < 0)
          throw InternalError("verlinde_fusion_from_s: negative multiplicity");
        n[x][y][z] = static_cast<int>(v);
      }
  return n;
}

}  // namespace fnet
