#include "fnet/catalog.hpp"

#include <array>
#include <charconv>

namespace fnet {

namespace {

// Parses "prefix-N" or "prefix-A-B"; returns the numbers on match.
std::optional<std::vector<int>> match(const std::string& name, const std::string& prefix,
                                      std::size_t arity) {
  if (name.rfind(prefix + "-", 0) != 0) return std::nullopt;
  std::vector<int> nums;
  std::size_t pos = prefix.size() + 1;
  while (pos <= name.size()) {
    const std::size_t dash = name.find('-', pos);
    const std::size_t end = dash == std::string::npos ? name.size() : dash;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + pos, name.data() + end, v);
    if (ec != std::errc{} || ptr != name.data() + end) return std::nullopt;
    nums.push_back(v);
    if (dash == std::string::npos) break;
    pos = dash + 1;
  }
  if (nums.size() != arity) return std::nullopt;
  return nums;
}

}  // namespace

std::optional<BinaryCode> catalog_code(const std::string& name) {
  if (auto n = match(name, "rep", 1)) {
    const int length = (*n)[0];
    if (length < 1 || length > kMaxWordBits) return std::nullopt;
    return make_code(length, {BitWord::ones(length)});
  }
  if (auto n = match(name, "even", 1)) {
    const int length = (*n)[0];
    if (length < 1 || length > kMaxWordBits) return std::nullopt;
    return dual(make_code(length, {BitWord::ones(length)}));
  }
  if (auto n = match(name, "rm", 2)) {
    const int r = (*n)[0];
    const int m = (*n)[1];
    if (r < 0 || m < 0 || r > m || m > 10) return std::nullopt;
    return reed_muller(r, m);
  }
  if (auto n = match(name, "pair", 2)) {
    const int a = (*n)[0];
    const int b = (*n)[1];
    if (a < 1 || b < 1 || a + b > kMaxWordBits) return std::nullopt;
    return direct_sum(make_code(a, {BitWord::ones(a)}), make_code(b, {BitWord::ones(b)}));
  }
  return std::nullopt;
}

std::vector<std::array<std::string, 3>> catalog_listing() {
  return {
      {"rep-N", "repetition code <(1)_N>; rep-2 is {(0,0),(1,1)}", "rep-16"},
      {"even-N", "all even-weight words of length N (dual of rep-N)", "even-16"},
      {"rm-R-M", "Reed-Muller RM(R,M) of length 2^M", "rm-1-4"},
      {"pair-A-B", "<(1)_A (0)_B, (0)_A (1)_B>, the split two-block code", "pair-8-8"},
  };
}

}  // namespace fnet
