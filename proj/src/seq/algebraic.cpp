#include "algebraic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace povswb::seq::detail {

namespace {

// Coefficients from the constant term upward, without trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Integer to_integer(std::uint64_t k) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(k), 0, 0, &k);
  return z;
}

}  // namespace

Rational power(const Rational& b, long e) {
  Integer num, den;
  const unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), m);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

SignBound sign_with_roots(const Rational& base, const std::vector<std::pair<Rational, Rational>>& terms,
                          std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("sequence indices start at 1");
  if (terms.empty()) return {sgn(base), abs(base)};
  unsigned long n = 1;
  for (const auto& [c, p] : terms) {
    const unsigned long d = mpz_get_ui(p.get_den_mpz_t());
    n = std::lcm(n, d);
  }
  const Integer kk = to_integer(k);
  Integer root;
  const bool exact_root = mpz_root(root.get_mpz_t(), kk.get_mpz_t(), n) != 0;
  // k^(-p) = r^(-pN) with integer pN.
  std::vector<long> exps;
  for (const auto& [c, p] : terms) {
    const Rational e = p * Rational(static_cast<long>(n));
    exps.push_back(mpz_get_si(e.get_num_mpz_t()));
  }
  if (exact_root) {
    Rational v = base;
    for (std::size_t i = 0; i < terms.size(); ++i) v += terms[i].first * power(Rational(root), -exps[i]);
    return {sgn(v), abs(v)};
  }

  // r^E times the value: base * x^E + sum c_i x^(E - e_i), evaluated at r.
  const long top = *std::max_element(exps.begin(), exps.end());
  Poly p(static_cast<std::size_t>(top) + 1, Rational(0));
  p[static_cast<std::size_t>(top)] += base;
  for (std::size_t i = 0; i < terms.size(); ++i) p[static_cast<std::size_t>(top - exps[i])] += terms[i].first;
  trim(p);
  if (p.empty()) return {};

  // Brackets r within 2^-bits via an integer root of k * 2^(N bits), and
  // stops once the slope bound shows the sign cannot change inside.
  bool zero_checked = false;
  for (unsigned long bits = 32;; bits *= 2) {
    Integer scaled = kk << static_cast<mp_bitcnt_t>(n * bits), floor_root;
    mpz_root(floor_root.get_mpz_t(), scaled.get_mpz_t(), n);
    Integer unit = 1;
    unit <<= static_cast<mp_bitcnt_t>(bits);
    const Rational lo(floor_root, unit), hi(floor_root + 1, unit);
    Rational slope = 0, hp = 1;
    for (std::size_t j = 1; j < p.size(); ++j) {
      slope += Rational(static_cast<long>(j)) * abs(p[j]) * hp;
      hp *= hi;
    }
    const Rational at_lo = eval(p, lo);
    const Rational spread = slope * (hi - lo);
    if (abs(at_lo) > spread) return {sgn(at_lo), (abs(at_lo) - spread) / power(hi, top)};
    if (!zero_checked && bits >= 128) {
      zero_checked = true;
      // r is the only positive real root of x^N - k, and it is simple, so a
      // common factor vanishes at r exactly when it changes sign across it.
      Poly minimal(n + 1, Rational(0));
      minimal[0] = -Rational(kk);
      minimal[n] = 1;
      const Poly g = gcd(p, minimal);
      const Rational a(root), b(root + 1);
      if (g.size() >= 2 && sgn(eval(g, a)) != sgn(eval(g, b))) return {};
    }
  }
}

}  // namespace povswb::seq::detail
