#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fnet/bitword.hpp"
#include "fnet/ising.hpp"

namespace fnet {

/// An irreducible sector of the n-fold tensor power of the c = 1/2 Virasoro
/// net: one Ising label per coordinate.  Statistical dimension 2^{k/2} where
/// k counts the 1/16 entries; conformal weight is the coordinate sum.
class Sector {
 public:
  Sector() = default;
  explicit Sector(std::vector<IsingLabel> labels) : labels_(std::move(labels)) {}

  /// Identity sector (all h0) of the given length.
  static Sector identity(int length) {
    return Sector(std::vector<IsingLabel>(static_cast<std::size_t>(length), IsingLabel::kH0));
  }

  /// Parses a string over {0, s, e} such as "ss" for (1/16, 1/16).
  static Sector from_string(const std::string& text);

  int length() const { return static_cast<int>(labels_.size()); }
  IsingLabel label(int coord) const {  // 1-based
    return labels_[static_cast<std::size_t>(coord - 1)];
  }
  const std::vector<IsingLabel>& labels() const { return labels_; }

  /// Number of 1/16 entries.
  int tau_weight() const;

  std::string to_string() const;

  bool operator==(const Sector&) const = default;
  /// Lexicographic with h0 < h1/16 < h1/2 per coordinate, leftmost first.
  std::strong_ordering operator<=>(const Sector& o) const {
    if (auto c = labels_.size() <=> o.labels_.size(); c != 0) return c;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (auto c = labels_[i] <=> o.labels_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<IsingLabel> labels_;
};

/// Formal nonnegative-integer combination of sectors, kept sorted with
/// multiplicities merged so equality is decidable.
class SectorSum {
 public:
  SectorSum() = default;
  explicit SectorSum(const Sector& s) { terms_.emplace_back(s, 1); }

  const std::vector<std::pair<Sector, std::uint64_t>>& terms() const { return terms_; }
  std::size_t distinct_count() const { return terms_.size(); }

  void add(const Sector& s, std::uint64_t multiplicity);

  /// Multiplicity of s (0 if absent).
  std::uint64_t multiplicity(const Sector& s) const;

  DyadicRootTwo total_dim() const;

  bool operator==(const SectorSum&) const = default;

 private:
  std::vector<std::pair<Sector, std::uint64_t>> terms_;
};

/// Bit i set iff the i-th label is 1/16.
BitWord tau_word(const Sector& s);

/// Conformal weight in sixteenths: #(1/16 entries) + 8 * #(1/2 entries).
/// The spin is its residue mod 16.
SixteenthWeight weight_and_spin(const Sector& s);

/// The automorphism sector of a codeword: entry i is 1/2 iff c_i = 1.
Sector code_sector(const BitWord& c);

DyadicRootTwo sector_dim(const Sector& s);

/// Componentwise fusion; total dimension is multiplicative.
SectorSum fuse_sectors(const Sector& a, const Sector& b);

/// Fuses every term of a sum with one more sector.
SectorSum fuse_sum(const SectorSum& sum, const Sector& b);

/// The unique sector in fuse_sectors(s, code_sector(c)): flips h0 <-> h1/2
/// where c is set, fixes 1/16 entries.
Sector act(const Sector& s, const BitWord& c);

/// Entry of the tensor-power S-matrix: the product of the per-coordinate
/// Ising S-matrix entries.  The full 3^n x 3^n matrix is never materialized.
DyadicRootTwo tensor_s_entry(const Sector& a, const Sector& b);

}  // namespace fnet
