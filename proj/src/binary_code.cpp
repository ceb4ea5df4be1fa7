#include "fnet/binary_code.hpp"

#include <algorithm>

namespace fnet {

bool GaussianBasis::insert(BitWord w) {
  if (w.length() != length_)
    throw InputError("GaussianBasis: word length " + std::to_string(w.length()) +
                     " does not match code length " + std::to_string(length_));
  w = reduce(std::move(w));
  if (w.is_zero()) return false;
  const int p = w.leading();
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  // Back-substitute so the new pivot column is elementary.
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].get(p)) rows_[i] ^= w;
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

BitWord GaussianBasis::reduce(BitWord w) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (w.get(pivots_[i])) w ^= rows_[i];
  return w;
}

BinaryCode make_code(int length, const std::vector<BitWord>& generators) {
  GaussianBasis basis(length);
  for (const BitWord& g : generators) basis.insert(g);
  BinaryCode c(length);
  c.basis_ = basis.rows();
  return c;
}

std::vector<int> BinaryCode::pivots() const {
  std::vector<int> p;
  p.reserve(basis_.size());
  for (const BitWord& row : basis_) p.push_back(row.leading());
  return p;
}

bool BinaryCode::contains(const BitWord& w) const {
  if (w.length() != length_)
    throw InputError("BinaryCode::contains: length mismatch");
  BitWord r = w;
  for (const BitWord& row : basis_)
    if (r.get(row.leading())) r ^= row;
  return r.is_zero();
}

bool BinaryCode::contains_code(const BinaryCode& other) const {
  if (other.length_ != length_)
    throw InputError("BinaryCode::contains_code: length mismatch");
  for (const BitWord& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

std::vector<BitWord> BinaryCode::enumerate() const {
  if (rank() > kMaterializeCapRank)
    throw CapacityError("BinaryCode::enumerate: rank " + std::to_string(rank()) +
                        " exceeds materialization cap " + std::to_string(kMaterializeCapRank));
  const std::uint64_t count = std::uint64_t{1} << rank();
  std::vector<BitWord> words;
  words.reserve(count);
  // Gray-code walk: step i flips the row indexed by the lowest set bit of i.
  BitWord cur(length_);
  words.push_back(cur);
  for (std::uint64_t i = 1; i < count; ++i) {
    cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    words.push_back(cur);
  }
  std::sort(words.begin(), words.end());
  return words;
}

bool is_even(const BinaryCode& c) {
  for (const BitWord& row : c.basis())
    if (row.weight() & 1) return false;
  return true;
}

BinaryCode dual(const BinaryCode& c) {
  const int n = c.length();
  const std::vector<int> piv = c.pivots();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n) + 1, false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;

  // For each free column f, the dual gets the word with a 1 at f and a 1 at
  // every pivot p_i whose row has a 1 at f.
  std::vector<BitWord> gens;
  gens.reserve(static_cast<std::size_t>(n - c.rank()));
  for (int f = 1; f <= n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitWord w(n);
    w.set(f, true);
    for (int i = 0; i < c.rank(); ++i)
      if (c.basis()[static_cast<std::size_t>(i)].get(f)) w.set(piv[static_cast<std::size_t>(i)], true);
    gens.push_back(std::move(w));
  }
  return make_code(n, gens);
}

BinaryCode subcode_supported_on(const BinaryCode& c, const BitWord& beta) {
  if (beta.length() != c.length())
    throw InputError("subcode_supported_on: beta length mismatch");
  const int k = c.rank();
  // Off-support coordinates, in order.
  std::vector<int> off;
  for (int j = 1; j <= c.length(); ++j)
    if (!beta.get(j)) off.push_back(j);
  const int ncols = static_cast<int>(off.size());

  // Rows of the basis restricted to the off-support columns, augmented with
  // coefficient words tracking the row operations.  Combinations whose
  // restriction vanishes are exactly the codewords supported inside beta.
  struct AugRow {
    BitWord restricted;
    BitWord coeff;
  };
  std::vector<AugRow> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    AugRow r{BitWord(ncols), BitWord(k)};
    for (int j = 0; j < ncols; ++j)
      if (c.basis()[static_cast<std::size_t>(i)].get(off[static_cast<std::size_t>(j)]))
        r.restricted.set(j + 1, true);
    r.coeff.set(i + 1, true);
    rows.push_back(std::move(r));
  }

  // Eliminate on the restricted part only.
  std::vector<BitWord> kernel_combos;
  std::vector<AugRow> reduced;
  for (AugRow& r : rows) {
    for (const AugRow& s : reduced)
      if (r.restricted.get(s.restricted.leading())) {
        r.restricted ^= s.restricted;
        r.coeff ^= s.coeff;
      }
    if (r.restricted.is_zero())
      kernel_combos.push_back(r.coeff);
    else
      reduced.push_back(std::move(r));
  }

  std::vector<BitWord> gens;
  gens.reserve(kernel_combos.size());
  for (const BitWord& combo : kernel_combos) {
    BitWord w(c.length());
    for (int i = 0; i < k; ++i)
      if (combo.get(i + 1)) w ^= c.basis()[static_cast<std::size_t>(i)];
    gens.push_back(std::move(w));
  }
  return make_code(c.length(), gens);
}

BinaryCode puncture_off_support(const BinaryCode& c, const BitWord& beta) {
  if (beta.length() != c.length())
    throw InputError("puncture_off_support: beta length mismatch");
  std::vector<int> kept;
  for (int j = 1; j <= c.length(); ++j)
    if (!beta.get(j)) kept.push_back(j);
  std::vector<BitWord> gens;
  gens.reserve(c.basis().size());
  for (const BitWord& row : c.basis()) {
    BitWord w(static_cast<int>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (row.get(kept[j])) w.set(static_cast<int>(j) + 1, true);
    gens.push_back(std::move(w));
  }
  return make_code(static_cast<int>(kept.size()), gens);
}

BitWord word_direct_sum(const BitWord& a, const BitWord& b) {
  if (a.length() + b.length() > kMaxWordBits)
    throw InputError("word_direct_sum: combined length exceeds capacity");
  BitWord w(a.length() + b.length());
  for (int j = 1; j <= a.length(); ++j)
    if (a.get(j)) w.set(j, true);
  for (int j = 1; j <= b.length(); ++j)
    if (b.get(j)) w.set(a.length() + j, true);
  return w;
}

BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b) {
  std::vector<BitWord> gens;
  gens.reserve(a.basis().size() + b.basis().size());
  const BitWord zero_a(a.length());
  const BitWord zero_b(b.length());
  for (const BitWord& row : a.basis()) gens.push_back(word_direct_sum(row, zero_b));
  for (const BitWord& row : b.basis()) gens.push_back(word_direct_sum(zero_a, row));
  return make_code(a.length() + b.length(), gens);
}

namespace {

// Lexicographically smallest codeword of `code` outside span(have).
// Walks all codewords; callers keep rank(code) small.
BitWord smallest_independent(const BinaryCode& code, const GaussianBasis& have) {
  if (code.rank() > kEnumerationCapRank)
    throw CapacityError("build_chain: code rank exceeds enumeration cap");
  const std::uint64_t count = std::uint64_t{1} << code.rank();
  BitWord cur(code.length());
  BitWord best(code.length());
  bool found = false;
  for (std::uint64_t i = 1; i < count; ++i) {
    cur ^= code.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    if (found && !(cur < best)) continue;
    if (!have.contains(cur)) {
      best = cur;
      found = true;
    }
  }
  if (!found) throw InternalError("smallest_independent: span already full");
  return best;
}

}  // namespace

std::vector<ChainStep> build_chain(const BinaryCode& d, const BitWord& beta) {
  const int n = d.length();
  if (beta.length() != n) throw InputError("build_chain: beta length mismatch");
  const BitWord all_one = BitWord::ones(n);
  if (beta.is_zero() || beta == all_one)
    throw InputError("build_chain: beta must differ from the zero and all-one words");
  if (!d.contains(beta)) throw InputError("build_chain: beta not in D");
  if (!d.contains(all_one)) throw InputError("build_chain: D does not contain the all-one word");

  // Basis of D listed so that peeling from the back walks the chain:
  // [all-one, beta, extension words...].  Extension words are chosen greedily
  // as the lexicographically smallest codeword independent of the span so far.
  std::vector<BitWord> ordered{all_one, beta};
  GaussianBasis span(n);
  span.insert(all_one);
  span.insert(beta);
  while (span.rank() < d.rank()) {
    BitWord next = smallest_independent(d, span);
    span.insert(next);
    ordered.push_back(std::move(next));
  }

  const int p = d.rank();
  std::vector<ChainStep> chain;
  chain.reserve(static_cast<std::size_t>(p));
  for (int r = 1; r <= p; ++r) {
    // D_r spans the first p - r + 1 ordered generators.
    std::vector<BitWord> gens(ordered.begin(), ordered.begin() + (p - r + 1));
    BinaryCode dr = make_code(n, gens);
    BinaryCode cr = dual(dr);
    chain.push_back(ChainStep{std::move(dr), std::move(cr)});
  }
  return chain;
}

BinaryCode reed_muller(int r, int m) {
  if (r < 0 || m < 0 || r > m)
    throw InputError("reed_muller: need 0 <= r <= m");
  if (m > 10)
    throw InputError("reed_muller: length 2^" + std::to_string(m) + " exceeds word capacity");
  const int n = 1 << m;
  std::vector<BitWord> gens;
  for (int t = 0; t < n; ++t) {
    if (std::popcount(static_cast<unsigned>(t)) > r) continue;
    // Row of the monomial with variable mask t: 1 at point y iff t's
    // variables are all set in y.
    BitWord row(n);
    for (int y = 0; y < n; ++y)
      if ((y & t) == t) row.set(y + 1, true);
    gens.push_back(std::move(row));
  }
  return make_code(n, gens);
}

}  // namespace fnet
