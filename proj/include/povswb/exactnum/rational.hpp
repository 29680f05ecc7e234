#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace povswb::exact {

/// Exact rational scalar. GMP keeps every value reduced with a positive
/// denominator once canonicalized; all constructors below canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

class dimension_error : public std::invalid_argument {
 public:
  explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q" (no whitespace). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Compact form: "3", "-1/2".
std::string to_string(const Rational& value);

/// Always "p/q", used by machine-readable reports.
std::string to_fraction_string(const Rational& value);

std::string to_string(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
Vector negate(const Vector& v);

/// Positive multiple of v with coprime integer entries; zero stays zero.
Vector primitive(const Vector& v);

/// Smallest positive multiplier turning every entry into an integer.
Integer denominator_lcm(const Vector& v);

}  // namespace povswb::exact
