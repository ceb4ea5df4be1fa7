#pragma once

#include <cstdint>

namespace fnet::wenum {

/// Adds one count to hist[weight(c)] for every codeword c in the span of the
/// k rows (2^k combinations, the zero word included).  `rows` holds k rows of
/// `nlimbs` limbs each, row-major; `hist` must have at least 64*nlimbs + 1
/// entries.  Dispatches to the best kernel for the running CPU.
void weight_histogram(const std::uint64_t* rows, int k, int nlimbs, std::uint64_t* hist);

/// Portable reference kernel (single Gray-code walk).
void weight_histogram_scalar(const std::uint64_t* rows, int k, int nlimbs,
                             std::uint64_t* hist);

#if defined(__x86_64__) || defined(_M_X64)
/// AVX2 kernel: four Gray-code walks in the lanes of 256-bit registers.
/// Callable only when avx2_available().
void weight_histogram_avx2(const std::uint64_t* rows, int k, int nlimbs,
                           std::uint64_t* hist);
#endif

bool avx2_available();

/// Pins the dispatcher to the scalar kernel (for equivalence tests).
void set_force_scalar(bool force);

/// Name of the kernel weight_histogram would pick right now.
const char* active_kernel();

}  // namespace fnet::wenum
