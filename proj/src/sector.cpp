#include "fnet/sector.hpp"

#include <algorithm>

namespace fnet {

Sector Sector::from_string(const std::string& text) {
  std::vector<IsingLabel> labels;
  labels.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': labels.push_back(IsingLabel::kH0); break;
      case 's': labels.push_back(IsingLabel::kH116); break;
      case 'e': labels.push_back(IsingLabel::kH12); break;
      default:
        throw InputError(std::string("Sector: bad character '") + c +
                         "' (alphabet is {0, s, e})");
    }
  }
  return Sector(std::move(labels));
}

int Sector::tau_weight() const {
  int k = 0;
  for (IsingLabel x : labels_)
    if (x == IsingLabel::kH116) ++k;
  return k;
}

std::string Sector::to_string() const {
  std::string s;
  s.reserve(labels_.size());
  for (IsingLabel x : labels_) s.push_back(label_char(x));
  return s;
}

void SectorSum::add(const Sector& s, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), s,
      [](const auto& term, const Sector& key) { return term.first < key; });
  if (it != terms_.end() && it->first == s) {
    if (__builtin_add_overflow(it->second, multiplicity, &it->second))
      throw ArithmeticError("SectorSum: multiplicity overflow");
  } else {
    terms_.insert(it, {s, multiplicity});
  }
}

std::uint64_t SectorSum::multiplicity(const Sector& s) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), s,
      [](const auto& term, const Sector& key) { return term.first < key; });
  return (it != terms_.end() && it->first == s) ? it->second : 0;
}

DyadicRootTwo SectorSum::total_dim() const {
  DyadicRootTwo acc;
  for (const auto& [s, m] : terms_)
    acc += sector_dim(s) * DyadicRootTwo::from_int(static_cast<std::int64_t>(m));
  return acc;
}

BitWord tau_word(const Sector& s) {
  BitWord w(s.length());
  for (int j = 1; j <= s.length(); ++j)
    if (s.label(j) == IsingLabel::kH116) w.set(j, true);
  return w;
}

SixteenthWeight weight_and_spin(const Sector& s) {
  std::int64_t total = 0;
  for (IsingLabel x : s.labels()) total += conformal_weight(x).sixteenths;
  return {total};
}

Sector code_sector(const BitWord& c) {
  std::vector<IsingLabel> labels(static_cast<std::size_t>(c.length()), IsingLabel::kH0);
  for (int j = 1; j <= c.length(); ++j)
    if (c.get(j)) labels[static_cast<std::size_t>(j - 1)] = IsingLabel::kH12;
  return Sector(std::move(labels));
}

DyadicRootTwo sector_dim(const Sector& s) {
  const int k = s.tau_weight();
  // (sqrt2)^k = 2^{k/2} or 2^{(k-1)/2} sqrt2.
  DyadicRootTwo d = DyadicRootTwo::from_int(1);
  for (int i = 0; i < k / 2; ++i) d = d * DyadicRootTwo::from_int(2);
  if (k & 1) d = d.times_sqrt2();
  return d;
}

SectorSum fuse_sectors(const Sector& a, const Sector& b) {
  if (a.length() != b.length())
    throw InputError("fuse_sectors: length mismatch");
  std::vector<std::vector<IsingLabel>> partials{{}};
  for (int j = 1; j <= a.length(); ++j) {
    const auto& options = fuse(a.label(j), b.label(j));
    if (options.size() == 1) {
      for (auto& p : partials) p.push_back(options[0]);
    } else {
      std::vector<std::vector<IsingLabel>> next;
      next.reserve(partials.size() * options.size());
      for (const auto& p : partials)
        for (IsingLabel opt : options) {
          next.push_back(p);
          next.back().push_back(opt);
        }
      partials = std::move(next);
    }
  }
  SectorSum sum;
  for (auto& p : partials) sum.add(Sector(std::move(p)), 1);
  return sum;
}

SectorSum fuse_sum(const SectorSum& sum, const Sector& b) {
  SectorSum out;
  for (const auto& [s, m] : sum.terms()) {
    const SectorSum part = fuse_sectors(s, b);
    for (const auto& [t, mt] : part.terms()) {
      std::uint64_t mm;
      if (__builtin_mul_overflow(m, mt, &mm))
        throw ArithmeticError("fuse_sum: multiplicity overflow");
      out.add(t, mm);
    }
  }
  return out;
}

Sector act(const Sector& s, const BitWord& c) {
  if (s.length() != c.length()) throw InputError("act: length mismatch");
  std::vector<IsingLabel> labels = s.labels();
  for (int j = 1; j <= c.length(); ++j) {
    if (!c.get(j)) continue;
    IsingLabel& x = labels[static_cast<std::size_t>(j - 1)];
    if (x == IsingLabel::kH0)
      x = IsingLabel::kH12;
    else if (x == IsingLabel::kH12)
      x = IsingLabel::kH0;
  }
  return Sector(std::move(labels));
}

DyadicRootTwo tensor_s_entry(const Sector& a, const Sector& b) {
  if (a.length() != b.length())
    throw InputError("tensor_s_entry: length mismatch");
  DyadicRootTwo acc = DyadicRootTwo::from_int(1);
  for (int j = 1; j <= a.length(); ++j) {
    acc = acc * s_entry(a.label(j), b.label(j));
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace fnet
