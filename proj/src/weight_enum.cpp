#include "fnet/weight_enum.hpp"

#include <map>
#include <mutex>

#include "fnet/wenum_kernel.hpp"

namespace fnet {

std::string to_string(Divisibility d) {
  switch (d) {
    case Divisibility::kNone: return "none";
    case Divisibility::kEven: return "even";
    case Divisibility::kDoublyEven: return "doubly-even";
    case Divisibility::kTriplyEven: return "triply-even";
  }
  return "?";
}

namespace {

std::vector<std::uint64_t> raw_histogram(const BinaryCode& c) {
  if (c.rank() > kEnumerationCapRank)
    throw CapacityError("weight_enumerator: rank " + std::to_string(c.rank()) +
                        " exceeds enumeration cap " + std::to_string(kEnumerationCapRank));
  const int nlimbs = std::max(1, (c.length() + 63) / 64);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.rank()) * nlimbs, 0);
  for (int i = 0; i < c.rank(); ++i) {
    const auto limbs = c.basis()[static_cast<std::size_t>(i)].limbs();
    for (std::size_t l = 0; l < limbs.size(); ++l)
      rows[static_cast<std::size_t>(i) * nlimbs + l] = limbs[l];
  }
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(nlimbs) * 64 + 1, 0);
  wenum::weight_histogram(rows.data(), c.rank(), nlimbs, hist.data());
  hist.resize(static_cast<std::size_t>(c.length()) + 1);
  return hist;
}

}  // namespace

std::vector<BigInt> weight_enumerator(const BinaryCode& c) {
  const auto hist = raw_histogram(c);
  return std::vector<BigInt>(hist.begin(), hist.end());
}

Divisibility divisibility_class(const BinaryCode& c) {
  const auto hist = raw_histogram(c);
  int div = 8;
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w] == 0) continue;
    while (div > 1 && w % static_cast<std::size_t>(div) != 0) div /= 2;
  }
  switch (div) {
    case 8: return Divisibility::kTriplyEven;
    case 4: return Divisibility::kDoublyEven;
    case 2: return Divisibility::kEven;
    default: return Divisibility::kNone;
  }
}

namespace {

// Binomial row C(m, 0..m), memoized behind a lock.
const std::vector<BigInt>& binomial_row(int m) {
  static std::mutex lock;
  static std::map<int, std::vector<BigInt>> cache;
  std::scoped_lock guard(lock);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1;
  for (int i = 1; i <= m; ++i)
    row[static_cast<std::size_t>(i)] =
        row[static_cast<std::size_t>(i - 1)] * (m - i + 1) / i;
  return cache.emplace(m, std::move(row)).first->second;
}

BigInt binom(int m, int i) {
  if (i < 0 || i > m) return 0;
  return binomial_row(m)[static_cast<std::size_t>(i)];
}

}  // namespace

std::vector<BigInt> macwilliams_dual_enumerator(const BinaryCode& c) {
  const int n = c.length();
  const std::vector<BigInt> a = weight_enumerator(c);
  const BigInt size = c.cardinality();
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int w = 0; w <= n; ++w) {
      if (a[static_cast<std::size_t>(w)] == 0) continue;
      // Krawtchouk value K_j(w).
      BigInt kj = 0;
      for (int i = 0; i <= j; ++i) {
        const BigInt term = binom(w, i) * binom(n - w, j - i);
        if (i & 1)
          kj -= term;
        else
          kj += term;
      }
      acc += a[static_cast<std::size_t>(w)] * kj;
    }
    if (acc % size != 0)
      throw InternalError("macwilliams_dual_enumerator: non-integral coefficient");
    out[static_cast<std::size_t>(j)] = acc / size;
  }
  return out;
}

}  // namespace fnet
