#pragma once

#include <vector>

#include "povswb/order/closure.hpp"

// Brute-force checks that only use pointwise membership in X+, never
// quantifier elimination.
namespace oracle {

using povswb::exact::Rational;
using povswb::exact::Vector;
using povswb::order::PreOrderedSpace;
using povswb::semilin::SemiLinearSet;

inline bool leq(const PreOrderedSpace& s, const Vector& a, const Vector& b) {
  return s.positive().contains(povswb::exact::subtract(b, a));
}

// ±(s - x) <= w.
inline bool within(const PreOrderedSpace& sp, const Vector& s, const Vector& x, const Vector& w) {
  const Vector gap = povswb::exact::subtract(s, x);
  return leq(sp, gap, w) && leq(sp, povswb::exact::negate(gap), w);
}

inline bool witness_verifies(const PreOrderedSpace& sp, const SemiLinearSet& set, const Vector& x,
                             const povswb::order::RuWitness& w) {
  if (!sp.positive().contains(w.regulator)) return false;
  for (std::size_t n = 1; n <= w.approximants.size(); ++n) {
    const Vector& s = w.approximants[n - 1];
    if (!set.contains(s)) return false;
    if (!within(sp, s, x, povswb::exact::scale(Rational(1, static_cast<long>(n)), w.regulator))) return false;
  }
  return true;
}

// Vectors with entries in {-1, 0, 1}.
inline std::vector<Vector> sign_vectors(std::size_t dim) {
  std::vector<Vector> out{{}};
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (long e = -1; e <= 1; ++e) {
        Vector w = v;
        w.emplace_back(e);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

// Searches a small grid for some y in `cone` with ±(y - c) <= w.
inline bool grid_hit(const PreOrderedSpace& sp, const SemiLinearSet& cone, const Vector& c, const Vector& w,
                     long range, long den) {
  const std::size_t dim = c.size();
  std::vector<long> k(dim, -range * den);
  while (true) {
    Vector y = c;
    for (std::size_t i = 0; i < dim; ++i) y[i] += Rational(k[i], den);
    if (cone.contains(y) && within(sp, y, c, w)) return true;
    std::size_t i = 0;
    while (i < dim && k[i] == range * den) k[i++] = -range * den;
    if (i == dim) return false;
    ++k[i];
  }
}

// Sequential derived set of a cone by exhaustive search: some small regulator
// w in X+ such that for every n in {1, 2, 4, ..., 64} a grid point y of the
// cone has ±(y - n x) <= w. Scaling by n turns "s in S with ±(s - x) <= w/n"
// into this form.
inline bool searched_limit(const PreOrderedSpace& sp, const SemiLinearSet& cone, const Vector& x, long range,
                           long den) {
  for (const auto& w : sign_vectors(x.size())) {
    if (!sp.positive().contains(w)) continue;
    bool all = true;
    for (long n = 1; n <= 64 && all; n *= 2)
      all = grid_hit(sp, cone, povswb::exact::scale(Rational(n), x), w, range, den);
    if (all) return true;
  }
  return false;
}

}  // namespace oracle
