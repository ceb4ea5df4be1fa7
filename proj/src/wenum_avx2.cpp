#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstring>

#include "fnet/wenum_kernel.hpp"

namespace fnet::wenum {

bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

// Per-64-bit-lane popcount: nibble LUT via vpshufb, then vpsadbw to sum the
// bytes of each qword.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i cnt =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

void weight_histogram_avx2(const std::uint64_t* rows, int k, int nlimbs,
                           std::uint64_t* hist) {
  if (k < 3) {  // fewer than four nonempty chunks
    weight_histogram_scalar(rows, k, nlimbs, hist);
    return;
  }

  // Four Gray-code walks over the four quarters of the index space.  Within
  // a quarter, step j flips row ctz(j) regardless of the quarter base, so all
  // lanes XOR the same broadcast row each step.
  const std::uint64_t chunk = std::uint64_t{1} << (k - 2);
  alignas(32) std::uint64_t state[16][4];  // state[limb][lane]
  std::memset(state, 0, sizeof(state));
  for (int lane = 0; lane < 4; ++lane) {
    const std::uint64_t gray = (chunk * lane) ^ ((chunk * lane) >> 1);
    for (int bit = 0; bit < k; ++bit)
      if ((gray >> bit) & 1)
        for (int l = 0; l < nlimbs; ++l)
          state[l][lane] ^= rows[static_cast<std::size_t>(bit) * nlimbs + l];
  }

  __m256i vstate[16];
  for (int l = 0; l < nlimbs; ++l)
    vstate[l] = _mm256_load_si256(reinterpret_cast<const __m256i*>(state[l]));

  alignas(32) std::uint64_t weights[4];
  auto tally = [&](const __m256i* vs) {
    __m256i w = _mm256_setzero_si256();
    for (int l = 0; l < nlimbs; ++l) w = _mm256_add_epi64(w, popcount_epi64(vs[l]));
    _mm256_store_si256(reinterpret_cast<__m256i*>(weights), w);
    hist[weights[0]] += 1;
    hist[weights[1]] += 1;
    hist[weights[2]] += 1;
    hist[weights[3]] += 1;
  };

  tally(vstate);
  for (std::uint64_t j = 1; j < chunk; ++j) {
    const std::uint64_t* row =
        rows + static_cast<std::size_t>(std::countr_zero(j)) * nlimbs;
    for (int l = 0; l < nlimbs; ++l) {
      const __m256i r = _mm256_set1_epi64x(static_cast<long long>(row[l]));
      vstate[l] = _mm256_xor_si256(vstate[l], r);
    }
    tally(vstate);
  }
}

}  // namespace fnet::wenum

#endif  // x86_64
