#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fnet/errors.hpp"

namespace fnet {

inline constexpr int kMaxWordBits = 1024;
inline constexpr int kWordLimbs = kMaxWordBits / 64;

/// Fixed-capacity word over GF(2).
///
/// Coordinates are 1-based.  Coordinate 1 is the leftmost character of the
/// string form and the most significant bit of limb 0, so comparing limbs as
/// unsigned integers gives exactly the lexicographic order of the bitstrings.
/// Bits beyond length() are always zero.
class BitWord {
 public:
  BitWord() : length_(0) { limbs_.fill(0); }

  explicit BitWord(int length) : length_(length) {
    if (length < 0 || length > kMaxWordBits)
      throw InputError("BitWord: length out of range: " + std::to_string(length));
    limbs_.fill(0);
  }

  static BitWord zeros(int length) { return BitWord(length); }

  static BitWord ones(int length) {
    BitWord w(length);
    for (int j = 1; j <= length; ++j) w.set(j, true);
    return w;
  }

  /// Parses a string over {'0','1'} such as "1111111100000000".
  static BitWord from_string(const std::string& bits);

  int length() const { return length_; }
  int limb_count() const { return (length_ + 63) / 64; }
  std::span<const std::uint64_t> limbs() const {
    return {limbs_.data(), static_cast<std::size_t>(limb_count())};
  }

  bool get(int coord) const {
    check_coord(coord);
    return (limbs_[(coord - 1) >> 6] >> (63 - ((coord - 1) & 63))) & 1u;
  }

  void set(int coord, bool value) {
    check_coord(coord);
    const std::uint64_t mask = std::uint64_t{1} << (63 - ((coord - 1) & 63));
    if (value)
      limbs_[(coord - 1) >> 6] |= mask;
    else
      limbs_[(coord - 1) >> 6] &= ~mask;
  }

  int weight() const {
    int w = 0;
    for (int i = 0; i < limb_count(); ++i) w += std::popcount(limbs_[i]);
    return w;
  }

  std::vector<int> support() const;

  bool is_zero() const {
    for (int i = 0; i < limb_count(); ++i)
      if (limbs_[i]) return false;
    return true;
  }

  /// Smallest set coordinate, or 0 if the word is zero.
  int leading() const {
    for (int i = 0; i < limb_count(); ++i)
      if (limbs_[i]) return 64 * i + std::countl_zero(limbs_[i]) + 1;
    return 0;
  }

  /// GF(2) inner product: parity of the support intersection.
  bool dot(const BitWord& other) const {
    check_same_length(other);
    std::uint64_t acc = 0;
    for (int i = 0; i < limb_count(); ++i) acc ^= limbs_[i] & other.limbs_[i];
    return std::popcount(acc) & 1;
  }

  BitWord operator^(const BitWord& other) const {
    check_same_length(other);
    BitWord r(length_);
    for (int i = 0; i < limb_count(); ++i) r.limbs_[i] = limbs_[i] ^ other.limbs_[i];
    return r;
  }

  BitWord& operator^=(const BitWord& other) {
    check_same_length(other);
    for (int i = 0; i < limb_count(); ++i) limbs_[i] ^= other.limbs_[i];
    return *this;
  }

  BitWord operator&(const BitWord& other) const {
    check_same_length(other);
    BitWord r(length_);
    for (int i = 0; i < limb_count(); ++i) r.limbs_[i] = limbs_[i] & other.limbs_[i];
    return r;
  }

  bool operator==(const BitWord& other) const {
    if (length_ != other.length_) return false;
    for (int i = 0; i < limb_count(); ++i)
      if (limbs_[i] != other.limbs_[i]) return false;
    return true;
  }

  /// Lexicographic order of the bitstring ('0' < '1'), length first.
  std::strong_ordering operator<=>(const BitWord& other) const {
    if (auto c = length_ <=> other.length_; c != 0) return c;
    for (int i = 0; i < limb_count(); ++i)
      if (auto c = limbs_[i] <=> other.limbs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  void check_coord(int coord) const {
    if (coord < 1 || coord > length_)
      throw InputError("BitWord: coordinate " + std::to_string(coord) +
                       " outside 1.." + std::to_string(length_));
  }
  void check_same_length(const BitWord& other) const {
    if (length_ != other.length_)
      throw InputError("BitWord: length mismatch: " + std::to_string(length_) +
                       " vs " + std::to_string(other.length_));
  }

  int length_;
  std::array<std::uint64_t, kWordLimbs> limbs_;
};

inline int weight(const BitWord& w) { return w.weight(); }
inline std::vector<int> support(const BitWord& w) { return w.support(); }

}  // namespace fnet
