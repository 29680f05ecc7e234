#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "povswb/exactnum/subspace.hpp"
#include "povswb/semilin/formula.hpp"

namespace povswb::order {

using exact::Rational;
using exact::Subspace;
using exact::Vector;
using semilin::SemiLinearSet;

/// Raised when an iterated construction does not stabilize within its cap.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A postcondition that the theory guarantees failed on a concrete instance.
class internal_check_failure : public std::logic_error {
 public:
  explicit internal_check_failure(const std::string& what) : std::logic_error(what) {}
};

/// Q^dim pre-ordered by a homogeneous semi-linear positive set.
/// Homogeneity is enforced here; convexity and 0 in X+ are checked by
/// validate_wedge.
class PreOrderedSpace {
 public:
  explicit PreOrderedSpace(SemiLinearSet positive);

  std::size_t dim() const { return positive_.dim(); }
  const SemiLinearSet& positive() const { return positive_; }
  /// Relative-interior point of cl X+ used as the universal regulator.
  const Vector& regulator() const { return regulator_; }

  /// x >= 0 as a formula, for x with affine coordinates.
  semilin::Formula nonneg(const semilin::LinPoint& x) const { return semilin::member(positive_, x); }

 private:
  SemiLinearSet positive_;
  Vector regulator_;
};

/// Closed positive orthant of Q^dim.
PreOrderedSpace orthant(std::size_t dim);
/// Lexicographic order of Q^dim: first nonzero coordinate positive.
PreOrderedSpace lexicographic(std::size_t dim);

struct WedgeCheck {
  bool valid = false;
  bool contains_zero = false;
  /// x, y in X+ with x + y outside X+, when additivity fails.
  std::optional<std::pair<Vector, Vector>> additivity_witness;
};

WedgeCheck validate_wedge(const PreOrderedSpace& space);

/// [a,b] = (a + X+) ∩ (b - X+).
SemiLinearSet order_interval(const PreOrderedSpace& space, const Vector& a, const Vector& b);

/// X+ ∩ -X+, verified to be a subspace.
Subspace lineality(const PreOrderedSpace& space);
bool is_cone(const PreOrderedSpace& space);

/// X+ - X+ = X.
bool is_majorizing(const PreOrderedSpace& space);

/// {x : ±x <= t u for every t > 0}, u the regulator.
SemiLinearSet infinitesimal_set(const PreOrderedSpace& space);
/// The infinitesimal set, verified to be a subspace and an order ideal.
Subspace infinitesimal_ideal(const PreOrderedSpace& space);
bool is_almost_archimedean(const PreOrderedSpace& space);

/// A y with n y <= u for all n (u the regulator) but y not <= 0.
std::optional<Vector> archimedean_witness(const PreOrderedSpace& space);
bool is_archimedean(const PreOrderedSpace& space);

/// Requires u in X+; throws std::invalid_argument otherwise.
bool has_order_unit(const PreOrderedSpace& space, const Vector& u);

bool is_order_ideal(const PreOrderedSpace& space, const Subspace& v);

}  // namespace povswb::order
