#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <vector>

#include "povswb/semilin/semilinear_set.hpp"

namespace povswb::semilin {

/// An affine expression sum_i coeffs[i] * v_i + constant over formula
/// variables. Missing trailing coefficients are zero.
struct LinExpr {
  Vector coeffs;
  Rational constant;

  static LinExpr var(std::size_t index);
  static LinExpr constant_of(const Rational& c);

  Rational coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Rational(0); }

  friend LinExpr operator+(const LinExpr& a, const LinExpr& b);
  friend LinExpr operator-(const LinExpr& a, const LinExpr& b);
  friend LinExpr operator-(const LinExpr& a);
  friend LinExpr operator*(const Rational& s, const LinExpr& a);
};

/// A point of Q^n whose coordinates are affine expressions.
using LinPoint = std::vector<LinExpr>;

/// Variables v_{first}, ..., v_{first+n-1} as a point.
LinPoint var_point(std::size_t first, std::size_t n);
LinPoint const_point(const Vector& v);
LinPoint operator+(const LinPoint& a, const LinPoint& b);
LinPoint operator-(const LinPoint& a, const LinPoint& b);
LinPoint operator*(const LinExpr& scalar_var, const Vector& direction);

/// First-order formula over linear rational arithmetic. Variables are
/// numbered; the first `free_dim` (as passed to qe) are free, every other
/// variable must be bound by exactly one quantifier.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Exists, Forall };

  static Formula truth();
  static Formula falsity();
  static Formula atom(LinConstraint c);
  static Formula compare(const LinExpr& lhs, Relation rel, const LinExpr& rhs);
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula implies(Formula a, Formula b);
  static Formula exists(std::vector<std::size_t> vars, Formula body);
  static Formula forall(std::vector<std::size_t> vars, Formula body);

  Kind kind() const;
  const LinConstraint& constraint() const;
  const std::vector<Formula>& children() const;
  const std::vector<std::size_t>& bound() const;

  /// Number of variable slots referenced anywhere in the formula.
  std::size_t width() const;

  /// Truth value at a full assignment of every variable slot; quantifiers
  /// are not allowed here (use the oracle in tests for those).
  bool evaluate_quantifier_free(const Vector& assignment) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// x in s, where the coordinates of x are affine expressions.
Formula member(const SemiLinearSet& s, const LinPoint& x);

/// Quantifier elimination: the set of assignments to the first `free_dim`
/// variables satisfying f. Existentials are eliminated cell by cell with
/// Fourier-Motzkin; universals as not-exists-not.
SemiLinearSet qe(const Formula& f, std::size_t free_dim);

/// Truth of a sentence (no free variables).
bool qe_holds(const Formula& sentence);

}  // namespace povswb::semilin
