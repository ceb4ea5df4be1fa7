#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fnet/dyadic_root_two.hpp"

namespace fnet {

/// The three sectors of the c = 1/2 Virasoro net, named and ordered by
/// conformal weight: h = 0, 1/16, 1/2.
enum class IsingLabel : std::uint8_t { kH0 = 0, kH116 = 1, kH12 = 2 };

inline constexpr std::array<IsingLabel, 3> kIsingLabels = {
    IsingLabel::kH0, IsingLabel::kH116, IsingLabel::kH12};

char label_char(IsingLabel x);  // '0', 's', 'e'

/// A conformal weight h counted in sixteenths.  The spin omega = e^{2 pi i h}
/// depends only on the numerator mod 16; it is real iff that residue is 0
/// (omega = +1) or 8 (omega = -1).
struct SixteenthWeight {
  std::int64_t sixteenths = 0;

  int spin_exponent() const {
    return static_cast<int>(((sixteenths % 16) + 16) % 16);
  }
  bool spin_is_one() const { return spin_exponent() == 0; }
  bool spin_is_real() const { return spin_exponent() % 8 == 0; }

  bool operator==(const SixteenthWeight&) const = default;
  auto operator<=>(const SixteenthWeight&) const = default;

  std::string to_string() const { return std::to_string(sixteenths) + "/16"; }
};

/// The modular S-matrix of the Ising category, rows and columns ordered
/// (h0, h1/16, h1/2):
///   [ 1/2      sqrt2/2   1/2    ]
///   [ sqrt2/2  0        -sqrt2/2]
///   [ 1/2     -sqrt2/2   1/2    ]
const std::array<std::array<DyadicRootTwo, 3>, 3>& s_matrix();

DyadicRootTwo s_entry(IsingLabel row, IsingLabel col);

/// Fusion product of two labels.  h0 is the unit; 1/2 * 1/2 = 0;
/// 1/2 * 1/16 = 1/16; 1/16 * 1/16 = 0 + 1/2.
const std::vector<IsingLabel>& fuse(IsingLabel x, IsingLabel y);

SixteenthWeight conformal_weight(IsingLabel x);  // 0, 1, 8 sixteenths
DyadicRootTwo ising_dim(IsingLabel x);           // 1, sqrt2, 1

/// Fusion multiplicities recomputed from the S-matrix by the Verlinde
/// formula N_{xy}^z = sum_k S_xk S_yk S_zk / S_0k, with exact division.
/// Every entry must come out a nonnegative integer; anything else throws
/// InternalError (it would mean the S-matrix is wrong).
std::array<std::array<std::array<int, 3>, 3>, 3> verlinde_fusion_from_s();

}  // namespace fnet
