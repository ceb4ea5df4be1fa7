#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fnet/errors.hpp"

namespace fnet {

/// Finite abelian group presented as a product of cyclic factors.  Elements
/// are indexed 0..order-1 in mixed radix, identity = 0.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factor_orders);

  int order() const { return order_; }
  const std::vector<int>& factors() const { return factors_; }

  int add(int g, int h) const;
  int negate(int g) const;
  /// Smallest k >= 1 with k*g = 0.
  int element_order(int g) const;

  std::string to_string() const;  // e.g. "Z4", "Z2xZ2"

 private:
  std::vector<int> factors_;
  int order_;
};

/// A pointed modular datum: every object invertible (dimension 1), spins
/// sixteenth roots of unity given by exponents mod 16.
///
/// Validity means the spins form a quadratic refinement of a bicharacter:
/// spin(0) = 0, spin(-g) = spin(g), and the associated pairing is bilinear.
/// try_create returns nullopt (with a reason) on invalid data, so exhaustive
/// searches can probe candidate assignments without exceptions.
class PointedModularData {
 public:
  static std::optional<PointedModularData> try_create(AbelianGroup group,
                                                      std::vector<int> spin16,
                                                      std::string* why = nullptr);
  /// Throwing variant of try_create (InputError).
  static PointedModularData create(AbelianGroup group, std::vector<int> spin16);

  const AbelianGroup& group() const { return group_; }
  int spin_exponent(int g) const { return spin16_[static_cast<std::size_t>(g)]; }
  bool all_spins_real() const;

  /// Exponent of the pairing entry for (g, h):
  /// spin(g+h) - spin(g) - spin(h) mod 16.  Symmetric and bilinear.
  int y_exponent(int g, int h) const;

  /// True iff the pairing has trivial radical, i.e. no nonidentity g pairs
  /// to 0 with everything.  Equivalent to invertibility of the would-be
  /// S-matrix without ever leaving integer arithmetic.
  bool nondegenerate() const;

  enum class OrderTwo { kHolds, kFails, kHypothesisNotMet };

  /// With all spins +-1 and a nondegenerate pairing, every element must
  /// square to the identity; kFails would indicate inconsistent input.
  /// kHypothesisNotMet when some spin is not real.  DegeneracyError when the
  /// pairing is degenerate.
  OrderTwo order_two_status() const;

 private:
  PointedModularData(AbelianGroup group, std::vector<int> spin16)
      : group_(std::move(group)), spin16_(std::move(spin16)) {}

  AbelianGroup group_;
  std::vector<int> spin16_;
};

std::string to_string(PointedModularData::OrderTwo v);

/// Searches every assignment of the spin multiset onto the nonidentity
/// elements (identity takes exponent 0, which must be in the multiset) for a
/// valid nondegenerate datum.  Returns a witness if one exists.
std::optional<PointedModularData> find_admissible_assignment(
    const AbelianGroup& group, std::vector<int> spin16_multiset);

}  // namespace fnet
