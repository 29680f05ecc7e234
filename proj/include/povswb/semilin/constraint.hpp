#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "povswb/exactnum/rational.hpp"

namespace povswb::semilin {

using exact::Rational;
using exact::Vector;

/// coeffs . x  REL  constant
enum class Relation { LT, LE, EQ };

/// A rational linear constraint in normal form: integer coefficients with
/// content 1; equalities additionally have a positive leading coefficient.
/// Constraints with no variables collapse to the canonical true (0 <= 0)
/// or false (0 < 0) constraint.
class LinConstraint {
 public:
  LinConstraint(Vector coeffs, Relation rel, Rational constant);

  static LinConstraint always_true(std::size_t dim);
  static LinConstraint always_false(std::size_t dim);

  const Vector& coeffs() const { return coeffs_; }
  Relation relation() const { return rel_; }
  const Rational& constant() const { return constant_; }
  std::size_t dim() const { return coeffs_.size(); }

  bool is_strict() const { return rel_ == Relation::LT; }
  bool is_trivial() const;
  bool is_true() const;
  bool is_false() const;
  bool is_homogeneous() const { return sgn(constant_) == 0; }
  bool involves(std::size_t var) const { return sgn(coeffs_.at(var)) != 0; }

  bool satisfied_by(const Vector& x) const;

  /// Pieces whose union is the complement (one piece, or two for an equality).
  std::vector<LinConstraint> negation() const;

  /// Strict inequalities become non-strict; others unchanged.
  LinConstraint relaxed() const;

  /// Extends the coefficient vector with zeros up to `dim` variables.
  LinConstraint padded(std::size_t dim) const;

  /// Places the coefficients at variable `offset` of a `dim`-dimensional space.
  LinConstraint embedded(std::size_t dim, std::size_t offset) const;

  std::string to_string(const std::vector<std::string>& names) const;

  auto operator<=>(const LinConstraint& other) const {
    if (auto c = rel_ <=> other.rel_; c != 0) return c;
    if (coeffs_ < other.coeffs_) return std::strong_ordering::less;
    if (other.coeffs_ < coeffs_) return std::strong_ordering::greater;
    if (constant_ < other.constant_) return std::strong_ordering::less;
    if (other.constant_ < constant_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const LinConstraint& other) const {
    return rel_ == other.rel_ && coeffs_ == other.coeffs_ && constant_ == other.constant_;
  }

 private:
  LinConstraint() = default;
  void normalize();

  Vector coeffs_;
  Relation rel_ = Relation::LE;
  Rational constant_;
};

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t dim);

}  // namespace povswb::semilin
