#include "povswb/semilin/constraint.hpp"

#include <algorithm>
#include <utility>

namespace povswb::semilin {

LinConstraint::LinConstraint(Vector coeffs, Relation rel, Rational constant)
    : coeffs_(std::move(coeffs)), rel_(rel), constant_(std::move(constant)) {
  normalize();
}

LinConstraint LinConstraint::always_true(std::size_t dim) {
  return LinConstraint(exact::zero_vector(dim), Relation::LE, 0);
}

LinConstraint LinConstraint::always_false(std::size_t dim) {
  return LinConstraint(exact::zero_vector(dim), Relation::LT, 0);
}

void LinConstraint::normalize() {
  if (exact::is_zero(coeffs_)) {
    bool holds = false;
    switch (rel_) {
      case Relation::LT: holds = sgn(constant_) > 0; break;
      case Relation::LE: holds = sgn(constant_) >= 0; break;
      case Relation::EQ: holds = sgn(constant_) == 0; break;
    }
    rel_ = holds ? Relation::LE : Relation::LT;
    constant_ = 0;
    return;
  }
  const exact::Integer l = exact::denominator_lcm(coeffs_);
  exact::Integer g = 0;
  for (const auto& c : coeffs_) {
    exact::Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(l, g);
  factor.canonicalize();
  if (rel_ == Relation::EQ) {
    const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (sgn(*lead) < 0) factor = -factor;
  }
  if (factor != 1) {
    for (auto& c : coeffs_) c *= factor;
    constant_ *= factor;
  }
}

bool LinConstraint::is_trivial() const { return exact::is_zero(coeffs_); }
bool LinConstraint::is_true() const { return is_trivial() && rel_ == Relation::LE; }
bool LinConstraint::is_false() const { return is_trivial() && rel_ == Relation::LT; }

bool LinConstraint::satisfied_by(const Vector& x) const {
  const Rational lhs = exact::dot(coeffs_, x);
  switch (rel_) {
    case Relation::LT: return lhs < constant_;
    case Relation::LE: return lhs <= constant_;
    case Relation::EQ: return lhs == constant_;
  }
  return false;
}

std::vector<LinConstraint> LinConstraint::negation() const {
  const Vector neg = exact::negate(coeffs_);
  switch (rel_) {
    case Relation::LT: return {LinConstraint(neg, Relation::LE, -constant_)};
    case Relation::LE: return {LinConstraint(neg, Relation::LT, -constant_)};
    case Relation::EQ:
      return {LinConstraint(coeffs_, Relation::LT, constant_), LinConstraint(neg, Relation::LT, -constant_)};
  }
  return {};
}

LinConstraint LinConstraint::relaxed() const {
  LinConstraint r = *this;
  if (r.rel_ == Relation::LT) r.rel_ = Relation::LE;
  return r;
}

LinConstraint LinConstraint::padded(std::size_t dim) const {
  for (std::size_t i = dim; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) throw exact::dimension_error("cannot pad a constraint to a smaller dimension");
  LinConstraint r = *this;
  r.coeffs_.resize(dim, Rational(0));
  return r;
}

LinConstraint LinConstraint::embedded(std::size_t dim, std::size_t offset) const {
  if (offset + coeffs_.size() > dim) throw exact::dimension_error("constraint does not fit the target space");
  LinConstraint r = *this;
  r.coeffs_.assign(dim, Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + static_cast<std::ptrdiff_t>(offset));
  return r;
}

std::string LinConstraint::to_string(const std::vector<std::string>& names) const {
  if (is_true()) return "true";
  if (is_false()) return "false";
  // Render with every term moved left: sum c_i x_i - k REL 0, flipped to > / >=
  // when that avoids a leading minus sign.
  std::string lhs;
  bool first = true;
  const bool flip = rel_ != Relation::EQ && [&] {
    const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
    return sgn(*lead) < 0;
  }();
  auto term = [&](const Rational& c, const std::string* name) {
    const Rational v = flip ? Rational(-c) : c;
    if (sgn(v) == 0) return;
    const bool neg = sgn(v) < 0;
    const Rational mag = neg ? Rational(-v) : v;
    if (first) {
      if (neg) lhs += "-";
    } else {
      lhs += neg ? " - " : " + ";
    }
    first = false;
    if (name == nullptr) {
      lhs += exact::to_string(mag);
    } else {
      if (mag != 1) lhs += exact::to_string(mag) + "*";
      lhs += *name;
    }
  };
  for (std::size_t i = 0; i < coeffs_.size(); ++i) term(coeffs_[i], &names.at(i));
  term(-constant_, nullptr);
  std::string op;
  switch (rel_) {
    case Relation::LT: op = flip ? " > " : " < "; break;
    case Relation::LE: op = flip ? " >= " : " <= "; break;
    case Relation::EQ: op = " = "; break;
  }
  return lhs + op + "0";
}

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace povswb::semilin
