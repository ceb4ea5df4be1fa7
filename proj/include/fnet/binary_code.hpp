#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fnet/bitword.hpp"

namespace fnet {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Direct codeword enumeration is permitted up to this rank; operations that
/// would have to walk more than 2^26 words fail with CapacityError instead.
inline constexpr int kEnumerationCapRank = 26;

/// Results that materialize one object per codeword (enumerated word lists,
/// class lists) are capped lower than the streaming scans.
inline constexpr int kMaterializeCapRank = 20;

/// A linear code over GF(2) in canonical form: the basis is the reduced
/// row-echelon generator matrix with pivot columns strictly increasing.
/// Two BinaryCode values are equal iff their canonical bases are identical.
class BinaryCode {
 public:
  /// The zero code of the given length.
  explicit BinaryCode(int length) : length_(length) {
    if (length < 0 || length > kMaxWordBits)
      throw InputError("BinaryCode: length out of range: " + std::to_string(length));
  }

  int length() const { return length_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  BigInt cardinality() const { return BigInt(1) << rank(); }

  /// RREF basis rows, ordered by pivot column.
  const std::vector<BitWord>& basis() const { return basis_; }

  /// Pivot column of each basis row (ascending).
  std::vector<int> pivots() const;

  bool contains(const BitWord& w) const;
  bool contains_code(const BinaryCode& other) const;

  bool operator==(const BinaryCode& other) const {
    return length_ == other.length_ && basis_ == other.basis_;
  }

  /// All 2^rank codewords in lexicographic order.  CapacityError above the
  /// materialization cap.
  std::vector<BitWord> enumerate() const;

 private:
  friend BinaryCode make_code(int, const std::vector<BitWord>&);
  int length_;
  std::vector<BitWord> basis_;
};

/// Canonical RREF span of the generators; dependent generators are absorbed.
BinaryCode make_code(int length, const std::vector<BitWord>& generators);

/// Dual code; rank(C) + rank(dual(C)) = length.
BinaryCode dual(const BinaryCode& c);

/// True iff every codeword has even weight (decided on the basis alone,
/// since weight is additive mod 2).
bool is_even(const BinaryCode& c);

/// Subcode of words whose support is contained in supp(beta).  Computed by
/// restriction to the off-support columns followed by a kernel computation,
/// so it never enumerates codewords.
BinaryCode subcode_supported_on(const BinaryCode& c, const BitWord& beta);

/// Image of the code under deletion of the coordinates in supp(beta).
/// Cardinality is |C| / |subcode_supported_on(C, beta)|.
BinaryCode puncture_off_support(const BinaryCode& c, const BitWord& beta);

BitWord word_direct_sum(const BitWord& a, const BitWord& b);
BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b);

struct ChainStep {
  BinaryCode d_code;
  BinaryCode c_code;  // dual of d_code
};

/// Decreasing chain D = D_1 > D_2 > ... > D_{p-1} = <beta, all-one>
/// > D_p = <all-one>, with index 2 at every step.  Every D_r contains the
/// all-one word and stays triply even (subcodes of a triply even code are
/// triply even).  Requires D triply even, all-one in D, beta in D and beta
/// distinct from the zero and all-one words.
std::vector<ChainStep> build_chain(const BinaryCode& d, const BitWord& beta);

/// Reed-Muller code RM(r, m): evaluations of the monomials of degree <= r on
/// GF(2)^m.  Length 2^m, rank sum_{i<=r} binom(m, i).
BinaryCode reed_muller(int r, int m);

/// Incremental RREF basis.  Used by make_code and by the chain construction;
/// also handy for membership and independence tests against a growing span.
class GaussianBasis {
 public:
  explicit GaussianBasis(int length) : length_(length) {}

  /// Reduces w against the current rows; inserts the residue if nonzero.
  /// Returns true if the rank grew.
  bool insert(BitWord w);

  /// Residue of w after reduction (zero iff w is in the span).
  BitWord reduce(BitWord w) const;

  bool contains(const BitWord& w) const { return reduce(w).is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int length() const { return length_; }

  /// Rows in RREF with ascending pivots.
  const std::vector<BitWord>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int length_;
  std::vector<BitWord> rows_;   // ascending pivot order
  std::vector<int> pivots_;
};

}  // namespace fnet
