#include <atomic>
#include <bit>

#include "fnet/wenum_kernel.hpp"

namespace fnet::wenum {

namespace {
std::atomic<bool> g_force_scalar{false};
}

void set_force_scalar(bool force) { g_force_scalar.store(force, std::memory_order_relaxed); }

bool force_scalar_requested() { return g_force_scalar.load(std::memory_order_relaxed); }

void weight_histogram_scalar(const std::uint64_t* rows, int k, int nlimbs,
                             std::uint64_t* hist) {
  std::uint64_t cur[16] = {0};
  // Gray-code walk: from index i-1 to i, XOR the row indexed by the lowest
  // set bit of i.  Index 0 is the zero word.
  hist[0] += 1;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < count; ++i) {
    const std::uint64_t* row = rows + static_cast<std::size_t>(std::countr_zero(i)) * nlimbs;
    int w = 0;
    for (int l = 0; l < nlimbs; ++l) {
      cur[l] ^= row[l];
      w += std::popcount(cur[l]);
    }
    hist[w] += 1;
  }
}

#if !(defined(__x86_64__) || defined(_M_X64))
bool avx2_available() { return false; }
#endif

const char* active_kernel() {
  if (force_scalar_requested() || !avx2_available()) return "scalar";
  return "avx2";
}

void weight_histogram(const std::uint64_t* rows, int k, int nlimbs, std::uint64_t* hist) {
#if defined(__x86_64__) || defined(_M_X64)
  // The vector kernel runs four lane-parallel walks; it needs at least four
  // chunks to split the index space into.
  if (!force_scalar_requested() && avx2_available() && k >= 3) {
    weight_histogram_avx2(rows, k, nlimbs, hist);
    return;
  }
#endif
  weight_histogram_scalar(rows, k, nlimbs, hist);
}

}  // namespace fnet::wenum
