#include "povswb/exactnum/rational.hpp"

#include <algorithm>
#include <cctype>

namespace povswb::exact {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  const auto den = text.substr(slash + 1);
  if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {
void require_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw dimension_error("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}
}  // namespace

Rational dot(const Vector& a, const Vector& b) {
  require_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vector negate(const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Integer denominator_lcm(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Vector primitive(const Vector& v) {
  if (is_zero(v)) return v;
  const Integer l = denominator_lcm(v);
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(l, g);
  factor.canonicalize();
  return scale(factor, v);
}

}  // namespace povswb::exact
