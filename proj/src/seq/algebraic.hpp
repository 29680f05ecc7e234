#pragma once

#include <cstdint>
#include <vector>

#include "povswb/exactnum/rational.hpp"

namespace povswb::seq::detail {

using exact::Integer;
using exact::Rational;

/// b^e for any integer e (b nonzero when e < 0).
Rational power(const Rational& b, long e);

/// Sign of base + sum_i coeff_i * k^(-exponent_i), exact: with r = k^(1/N)
/// this is the sign of a rational polynomial at r, decided by a gcd with
/// x^N - k and interval refinement.
/// Also returns a positive lower bound on the absolute value when the sign
/// is nonzero.
struct SignBound {
  int sign = 0;
  Rational magnitude;
};
SignBound sign_with_roots(const Rational& base, const std::vector<std::pair<Rational, Rational>>& terms,
                          std::uint64_t k);

}  // namespace povswb::seq::detail
