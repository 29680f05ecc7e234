#include "povswb/order/closure.hpp"

namespace povswb::order {

using semilin::Formula;
using semilin::LinExpr;
using semilin::LinPoint;
using semilin::Relation;

SemiLinearSet derived_set(const PreOrderedSpace& space, const SemiLinearSet& s) {
  const std::size_t d = space.dim();
  if (s.dim() != d) throw exact::dimension_error("set and space differ in dimension");
  // Slots: x = 0..d-1, t = d, s = d+1..2d.
  const LinPoint x = semilin::var_point(0, d);
  const LinPoint p = semilin::var_point(d + 1, d);
  const LinPoint tu = LinExpr::var(d) * space.regulator();
  const LinPoint gap = p - x;
  std::vector<std::size_t> approx;
  for (std::size_t i = d + 1; i <= 2 * d; ++i) approx.push_back(i);
  const Formula close = Formula::exists(
      approx, Formula::conj({semilin::member(s, p), space.nonneg(tu - gap), space.nonneg(gap + tu)}));
  const Formula f = Formula::forall(
      {d}, Formula::implies(Formula::compare(LinExpr::constant_of(0), Relation::LT, LinExpr::var(d)), close));
  return semilin::coalesce(qe(f, d));
}

std::optional<RuWitness> ru_witness(const PreOrderedSpace& space, const SemiLinearSet& s, const Vector& x,
                                    std::size_t terms) {
  if (!derived_set(space, s).contains(x)) return std::nullopt;
  RuWitness w{space.regulator(), Rational(1), {}};
  for (std::size_t n = 1; n <= terms; ++n) {
    const Vector step = exact::scale(Rational(1, static_cast<long>(n)), space.regulator());
    const auto near = intersect(s, order_interval(space, exact::subtract(x, step), exact::add(x, step)));
    auto pt = near.sample();
    if (!pt) throw internal_check_failure("derived-set member " + exact::to_string(x) + " has no approximant at n = " +
                                          std::to_string(n));
    w.approximants.push_back(std::move(*pt));
  }
  return w;
}

ClosureTrace ru_closure(const PreOrderedSpace& space, const SemiLinearSet& s, std::size_t cap) {
  ClosureTrace trace;
  trace.iterates.push_back(normalize(s));
  while (true) {
    SemiLinearSet next = derived_set(space, trace.iterates.back());
    if (set_equal(next, trace.iterates.back())) break;
    if (trace.steps == cap)
      throw cap_exceeded("ru-closure did not stabilize within " + std::to_string(cap) + " derivations");
    ++trace.steps;
    trace.iterates.push_back(std::move(next));
  }
  trace.closure = trace.iterates.back();
  return trace;
}

bool is_ru_closed(const PreOrderedSpace& space, const SemiLinearSet& s) { return set_equal(derived_set(space, s), s); }

std::size_t alpha_type(const PreOrderedSpace& space, std::size_t cap) {
  return ru_closure(space, space.positive(), cap).steps;
}

}  // namespace povswb::order
