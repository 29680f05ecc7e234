#pragma once

#include <stdexcept>
#include <string>

#include "povswb/order/quotient.hpp"

namespace povswb::maps {

using exact::Matrix;
using exact::Vector;
using order::PreOrderedSpace;
using semilin::SemiLinearSet;

/// Raised when a decision procedure refuses an instance above its size cap.
class size_cap_refused : public std::runtime_error {
 public:
  explicit size_cap_refused(const std::string& what) : std::runtime_error(what) {}
};

/// Q^n -> Q^m between pre-ordered spaces, as an m x n matrix.
class LinearMap {
 public:
  LinearMap(Matrix matrix, PreOrderedSpace domain, PreOrderedSpace codomain);

  const Matrix& matrix() const { return matrix_; }
  const PreOrderedSpace& domain() const { return domain_; }
  const PreOrderedSpace& codomain() const { return codomain_; }

  Vector apply(const Vector& x) const { return matrix_.apply(x); }

 private:
  Matrix matrix_;
  PreOrderedSpace domain_;
  PreOrderedSpace codomain_;
};

/// T(X+) ⊆ Y+.
bool is_positive(const LinearMap& t);

/// Largest domain dimension is_order_bounded accepts without an override.
inline constexpr std::size_t kOrderBoundedDimCap = 3;

/// Every order interval maps into some order interval. The sentence has
/// three quantifier blocks over 3n + 2m variables, so domains above
/// kOrderBoundedDimCap are refused unless `override_cap` is set.
bool is_order_bounded(const LinearMap& t, bool override_cap = false);

/// Whether the preimage of s is ru-closed in the domain. s must be
/// ru-closed in the codomain (std::invalid_argument otherwise).
bool check_ru_continuity(const LinearMap& t, const SemiLinearSet& s);

/// phi = factor ∘ quotient_map, where quotient_map is the projection of the
/// domain onto its Archimedeanization.
struct Factorization {
  order::QuotientPresentation presentation;
  LinearMap quotient_map;
  LinearMap factor;
};

/// The unique positive map through the Archimedeanization of phi's domain.
/// phi must be positive into an Archimedean space (std::invalid_argument);
/// a failed postcondition raises order::internal_check_failure.
Factorization factor_through_archimedeanization(const LinearMap& phi, std::size_t cap = order::kDefaultCap);

}  // namespace povswb::maps
