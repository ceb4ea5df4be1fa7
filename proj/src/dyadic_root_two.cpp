#include "fnet/dyadic_root_two.hpp"

#include <bit>

namespace fnet {

std::int64_t DyadicRootTwo::checked_shl(std::int64_t x, int sh) {
  for (int i = 0; i < sh; ++i) x = checked_mul(x, 2);
  return x;
}

DyadicRootTwo DyadicRootTwo::operator+(const DyadicRootTwo& o) const {
  const int e = std::max(e_, o.e_);
  const std::int64_t a = checked_add(checked_shl(a_, e - e_), checked_shl(o.a_, e - o.e_));
  const std::int64_t b = checked_add(checked_shl(b_, e - e_), checked_shl(o.b_, e - o.e_));
  return DyadicRootTwo(a, b, e);
}

DyadicRootTwo DyadicRootTwo::operator*(const DyadicRootTwo& o) const {
  // (a1 + b1 r)(a2 + b2 r) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) r,  r = sqrt2.
  const std::int64_t a =
      checked_add(checked_mul(a_, o.a_), checked_mul(2, checked_mul(b_, o.b_)));
  const std::int64_t b = checked_add(checked_mul(a_, o.b_), checked_mul(o.a_, b_));
  return DyadicRootTwo(a, b, e_ + o.e_);
}

int DyadicRootTwo::sign() const {
  if (a_ == 0 && b_ == 0) return 0;
  if (a_ >= 0 && b_ >= 0) return 1;
  if (a_ <= 0 && b_ <= 0) return -1;
  // Mixed signs: compare a^2 with 2 b^2 exactly.
  const __int128 aa = static_cast<__int128>(a_) * a_;
  const __int128 bb = static_cast<__int128>(b_) * b_ * 2;
  if (aa == bb) return 0;  // unreachable: sqrt2 is irrational
  const bool a_dominates = aa > bb;
  return (a_ > 0) == a_dominates ? 1 : -1;
}

DyadicRootTwo DyadicRootTwo::inverse() const {
  const bool rational = (b_ == 0 && a_ != 0);
  const bool pure_root = (a_ == 0 && b_ != 0);
  if (!rational && !pure_root)
    throw ArithmeticError("DyadicRootTwo: no representable inverse for " + to_string());
  const std::int64_t coef = rational ? a_ : b_;
  const std::uint64_t mag = static_cast<std::uint64_t>(coef < 0 ? -coef : coef);
  if (!std::has_single_bit(mag))
    throw ArithmeticError("DyadicRootTwo: no representable inverse for " + to_string());
  const int j = std::countr_zero(mag);
  const std::int64_t numer = checked_shl(coef < 0 ? -1 : 1, e_);
  // 1 / (a / 2^e)        = 2^e / a
  // 1 / (b sqrt2 / 2^e)  = 2^e sqrt2 / (2 b)
  if (rational) return DyadicRootTwo(numer, 0, j);
  return DyadicRootTwo(0, numer, j + 1);
}

std::string DyadicRootTwo::to_string() const {
  std::string s = "(" + std::to_string(a_);
  s += b_ < 0 ? "-" : "+";
  s += std::to_string(b_ < 0 ? -b_ : b_);
  s += "√2)/2^" + std::to_string(e_);
  return s;
}

}  // namespace fnet
