#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnet/binary_code.hpp"

namespace fnet {

/// Built-in code families, addressable wherever a code file is accepted:
///   rep-N      repetition code <(1)_N>
///   even-N     all even-weight words of length N (dual of rep-N)
///   rm-R-M     Reed-Muller RM(R, M), length 2^M
///   pair-A-B   <(1)_A (0)_B, (0)_A (1)_B>
/// rep-2 is the length-2 code {(0,0), (1,1)}.
std::optional<BinaryCode> catalog_code(const std::string& name);

/// (pattern, description, example) rows for the catalog listing.
std::vector<std::array<std::string, 3>> catalog_listing();

}  // namespace fnet
