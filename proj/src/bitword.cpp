#include "fnet/bitword.hpp"

namespace fnet {

BitWord BitWord::from_string(const std::string& bits) {
  if (static_cast<int>(bits.size()) > kMaxWordBits)
    throw InputError("BitWord: literal longer than " + std::to_string(kMaxWordBits));
  BitWord w(static_cast<int>(bits.size()));
  for (int j = 1; j <= w.length_; ++j) {
    const char c = bits[static_cast<std::size_t>(j - 1)];
    if (c == '1')
      w.set(j, true);
    else if (c != '0')
      throw InputError(std::string("BitWord: bad character '") + c + "' in literal");
  }
  return w;
}

std::vector<int> BitWord::support() const {
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(weight()));
  for (int i = 0; i < limb_count(); ++i) {
    std::uint64_t v = limbs_[i];
    while (v) {
      const int bit = std::countl_zero(v);
      s.push_back(64 * i + bit + 1);
      v &= ~(std::uint64_t{1} << (63 - bit));
    }
  }
  return s;
}

std::string BitWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int j = 1; j <= length_; ++j)
    if (get(j)) s[static_cast<std::size_t>(j - 1)] = '1';
  return s;
}

}  // namespace fnet
