#pragma once

#include <cstdint>
#include <string>

#include "fnet/errors.hpp"

namespace fnet {

/// Exact scalar (a + b*sqrt(2)) / 2^e with integer a, b and e >= 0.
///
/// Normal form: e = 0, or a and b not both even.  Every S-matrix entry and
/// statistical dimension in this library lives in this ring; arithmetic is
/// overflow-checked and throws rather than wrapping.  The ring is not a
/// field: division exists only through inverse(), which handles exactly the
/// units (+-2^p and +-2^p*sqrt2 scaled by powers of two) and throws on
/// anything else.
class DyadicRootTwo {
 public:
  constexpr DyadicRootTwo() : a_(0), b_(0), e_(0) {}
  DyadicRootTwo(std::int64_t a, std::int64_t b, int e) : a_(a), b_(b), e_(e) {
    if (e < 0) throw InputError("DyadicRootTwo: negative exponent");
    normalize();
  }
  static DyadicRootTwo from_int(std::int64_t v) { return DyadicRootTwo(v, 0, 0); }
  static DyadicRootTwo half() { return DyadicRootTwo(1, 0, 1); }
  static DyadicRootTwo sqrt2() { return DyadicRootTwo(0, 1, 0); }
  static DyadicRootTwo sqrt2_over_2() { return DyadicRootTwo(0, 1, 1); }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  int e() const { return e_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return b_ == 0 && e_ == 0; }
  /// Integer value; throws unless is_integer().
  std::int64_t as_integer() const {
    if (!is_integer()) throw ArithmeticError("DyadicRootTwo: not an integer: " + to_string());
    return a_;
  }

  /// Exact sign of the real value a + b*sqrt2 (scaling by 2^e is positive).
  int sign() const;

  DyadicRootTwo operator-() const { return DyadicRootTwo(-a_, -b_, e_); }
  DyadicRootTwo operator+(const DyadicRootTwo& o) const;
  DyadicRootTwo operator-(const DyadicRootTwo& o) const { return *this + (-o); }
  DyadicRootTwo operator*(const DyadicRootTwo& o) const;
  DyadicRootTwo& operator+=(const DyadicRootTwo& o) { return *this = *this + o; }
  DyadicRootTwo& operator*=(const DyadicRootTwo& o) { return *this = *this * o; }

  DyadicRootTwo times_sqrt2() const { return DyadicRootTwo(checked_mul(b_, 2), a_, e_); }
  DyadicRootTwo div_two() const { return DyadicRootTwo(a_, b_, e_ + 1); }
  DyadicRootTwo div_sqrt2() const { return DyadicRootTwo(checked_mul(b_, 2), a_, e_ + 1); }

  /// Multiplicative inverse for monomial power-of-two values, e.g.
  /// inverse(1/2) = 2, inverse(sqrt2/2) = sqrt2.  ArithmeticError otherwise.
  DyadicRootTwo inverse() const;

  bool operator==(const DyadicRootTwo& o) const {
    return a_ == o.a_ && b_ == o.b_ && e_ == o.e_;
  }

  /// Renders the normal form, e.g. "(0+1√2)/2^1".
  std::string to_string() const;

 private:
  void normalize() {
    while (e_ > 0 && a_ % 2 == 0 && b_ % 2 == 0) {
      a_ /= 2;
      b_ /= 2;
      --e_;
    }
    if (a_ == 0 && b_ == 0) e_ = 0;
  }

  static std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
      throw ArithmeticError("DyadicRootTwo: multiplication overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
      throw ArithmeticError("DyadicRootTwo: addition overflow");
    return r;
  }
  static std::int64_t checked_shl(std::int64_t x, int sh);

  std::int64_t a_;
  std::int64_t b_;
  int e_;
};

}  // namespace fnet
