#pragma once

#include <string>
#include <vector>

#include "fnet/binary_code.hpp"

namespace fnet {

enum class Divisibility { kNone, kEven, kDoublyEven, kTriplyEven };

std::string to_string(Divisibility d);

/// Coefficients A_0..A_n with A_w = number of codewords of weight w.
/// Walks all 2^rank codewords; CapacityError above the enumeration cap.
std::vector<BigInt> weight_enumerator(const BinaryCode& c);

/// Largest of even / doubly even / triply even that all codeword weights
/// satisfy, decided from the weight enumerator.
Divisibility divisibility_class(const BinaryCode& c);

/// Weight enumerator of dual(c) via the MacWilliams transform
///   A'_j = (1/|C|) sum_w A_w K_j(w),   K_j(w) = sum_i (-1)^i C(w,i) C(n-w,j-i).
/// Agrees with weight_enumerator(dual(c)) whenever both sides fit the caps,
/// but only needs 2^rank(c) work.
std::vector<BigInt> macwilliams_dual_enumerator(const BinaryCode& c);

}  // namespace fnet
