#include "fnet/pointed.hpp"

#include <algorithm>

namespace fnet {

AbelianGroup::AbelianGroup(std::vector<int> factor_orders)
    : factors_(std::move(factor_orders)) {
  if (factors_.empty()) factors_.push_back(1);
  order_ = 1;
  for (int f : factors_) {
    if (f < 1) throw InputError("AbelianGroup: factor orders must be positive");
    if (order_ > 4096 / f) throw InputError("AbelianGroup: order too large");
    order_ *= f;
  }
}

int AbelianGroup::add(int g, int h) const {
  int out = 0;
  int place = 1;
  for (int f : factors_) {
    const int gi = (g / place) % f;
    const int hi = (h / place) % f;
    out += ((gi + hi) % f) * place;
    place *= f;
  }
  return out;
}

int AbelianGroup::negate(int g) const {
  int out = 0;
  int place = 1;
  for (int f : factors_) {
    const int gi = (g / place) % f;
    out += ((f - gi) % f) * place;
    place *= f;
  }
  return out;
}

int AbelianGroup::element_order(int g) const {
  int k = 1;
  int acc = g;
  while (acc != 0) {
    acc = add(acc, g);
    ++k;
  }
  return k;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

std::optional<PointedModularData> PointedModularData::try_create(
    AbelianGroup group, std::vector<int> spin16, std::string* why) {
  auto fail = [&](const std::string& reason) -> std::optional<PointedModularData> {
    if (why) *why = reason;
    return std::nullopt;
  };
  const int n = group.order();
  if (static_cast<int>(spin16.size()) != n)
    return fail("spin list size does not match the group order");
  for (int& s : spin16) s = ((s % 16) + 16) % 16;
  if (spin16[0] != 0) return fail("identity must have spin exponent 0");
  for (int g = 0; g < n; ++g)
    if (spin16[static_cast<std::size_t>(group.negate(g))] != spin16[static_cast<std::size_t>(g)])
      return fail("spin of the inverse differs from the spin of the element");

  PointedModularData data(std::move(group), std::move(spin16));
  // Quadratic-form consistency: the pairing must be bilinear.
  for (int g = 0; g < n; ++g)
    for (int gp = 0; gp < n; ++gp)
      for (int h = 0; h < n; ++h) {
        const int lhs = data.y_exponent(data.group_.add(g, gp), h);
        const int rhs = (data.y_exponent(g, h) + data.y_exponent(gp, h)) % 16;
        if (lhs != rhs) return fail("pairing is not bilinear; spins are not a quadratic form");
      }
  return data;
}

PointedModularData PointedModularData::create(AbelianGroup group, std::vector<int> spin16) {
  std::string why;
  auto data = try_create(std::move(group), std::move(spin16), &why);
  if (!data) throw InputError("PointedModularData: " + why);
  return *std::move(data);
}

bool PointedModularData::all_spins_real() const {
  return std::all_of(spin16_.begin(), spin16_.end(), [](int s) { return s % 8 == 0; });
}

int PointedModularData::y_exponent(int g, int h) const {
  const int sum = spin16_[static_cast<std::size_t>(group_.add(g, h))];
  const int sg = spin16_[static_cast<std::size_t>(g)];
  const int sh = spin16_[static_cast<std::size_t>(h)];
  return ((sum - sg - sh) % 16 + 16) % 16;
}

bool PointedModularData::nondegenerate() const {
  for (int g = 1; g < group_.order(); ++g) {
    bool in_radical = true;
    for (int h = 0; h < group_.order() && in_radical; ++h)
      if (y_exponent(g, h) != 0) in_radical = false;
    if (in_radical) return false;
  }
  return true;
}

PointedModularData::OrderTwo PointedModularData::order_two_status() const {
  if (!nondegenerate())
    throw DegeneracyError("order_two_status: the pairing is degenerate");
  if (!all_spins_real()) return OrderTwo::kHypothesisNotMet;
  for (int g = 1; g < group_.order(); ++g)
    if (group_.add(g, g) != 0) return OrderTwo::kFails;
  return OrderTwo::kHolds;
}

std::string to_string(PointedModularData::OrderTwo v) {
  switch (v) {
    case PointedModularData::OrderTwo::kHolds: return "holds";
    case PointedModularData::OrderTwo::kFails: return "fails";
    case PointedModularData::OrderTwo::kHypothesisNotMet: return "hypothesis not met";
  }
  return "?";
}

std::optional<PointedModularData> find_admissible_assignment(
    const AbelianGroup& group, std::vector<int> spin16_multiset) {
  if (static_cast<int>(spin16_multiset.size()) != group.order())
    throw InputError("find_admissible_assignment: multiset size must equal the group order");
  for (int& s : spin16_multiset) s = ((s % 16) + 16) % 16;
  std::sort(spin16_multiset.begin(), spin16_multiset.end());
  auto zero = std::find(spin16_multiset.begin(), spin16_multiset.end(), 0);
  if (zero == spin16_multiset.end()) return std::nullopt;  // identity needs spin 1
  spin16_multiset.erase(zero);

  // All distinct assignments of the remaining multiset onto elements 1..n-1.
  do {
    std::vector<int> spins(static_cast<std::size_t>(group.order()));
    spins[0] = 0;
    std::copy(spin16_multiset.begin(), spin16_multiset.end(), spins.begin() + 1);
    auto data = PointedModularData::try_create(group, std::move(spins));
    if (data && data->nondegenerate()) return data;
  } while (std::next_permutation(spin16_multiset.begin(), spin16_multiset.end()));
  return std::nullopt;
}

}  // namespace fnet
