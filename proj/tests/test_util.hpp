#pragma once

#include <random>
#include <vector>

#include "fnet/binary_code.hpp"

namespace fnet::test {

inline BitWord random_word(std::mt19937_64& rng, int n) {
  BitWord w(n);
  std::bernoulli_distribution bit(0.5);
  for (int j = 1; j <= n; ++j)
    if (bit(rng)) w.set(j, true);
  return w;
}

inline BinaryCode random_code(std::mt19937_64& rng, int n, int max_generators) {
  std::uniform_int_distribution<int> count(0, max_generators);
  std::vector<BitWord> gens;
  const int k = count(rng);
  gens.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) gens.push_back(random_word(rng, n));
  return make_code(n, gens);
}

// From-scratch span enumeration: every coefficient mask, rebuilt by XOR of
// the selected rows each time.  Independent of the Gray-walk kernels.
inline std::vector<BitWord> enumerate_oracle(const BinaryCode& c) {
  const std::uint64_t count = std::uint64_t{1} << c.rank();
  std::vector<BitWord> words;
  words.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    BitWord w(c.length());
    for (int i = 0; i < c.rank(); ++i)
      if ((mask >> i) & 1) w ^= c.basis()[static_cast<std::size_t>(i)];
    words.push_back(std::move(w));
  }
  return words;
}

// Row-reduction rank over bool matrices, no BitWord machinery.
inline int rank_oracle(std::vector<std::vector<int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != row && rows[r][col])
        for (std::size_t j = 0; j < ncols; ++j) rows[r][j] ^= rows[row][j];
    ++row;
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<int>> to_bool_matrix(const BinaryCode& c) {
  std::vector<std::vector<int>> rows;
  for (const BitWord& w : c.basis()) {
    std::vector<int> row(static_cast<std::size_t>(c.length()));
    for (int j = 1; j <= c.length(); ++j) row[static_cast<std::size_t>(j - 1)] = w.get(j);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fnet::test
