#include "povswb/order/space.hpp"

#include "povswb/semilin/cone.hpp"

namespace povswb::order {

using semilin::Cell;
using semilin::Formula;
using semilin::LinConstraint;
using semilin::LinExpr;
using semilin::LinPoint;
using semilin::Relation;

namespace {

void check_dim(const PreOrderedSpace& space, const Vector& v, const char* what) {
  if (v.size() != space.dim())
    throw exact::dimension_error(std::string(what) + " has " + std::to_string(v.size()) +
                                 " coordinates, space has dimension " + std::to_string(space.dim()));
}

// 0 < v_slot
Formula t_positive(std::size_t slot) {
  return Formula::compare(LinExpr::constant_of(0), Relation::LT, LinExpr::var(slot));
}

Formula in_subspace(const Subspace& v, const LinPoint& x) {
  std::vector<Formula> eqs;
  for (const auto& n : v.normals()) {
    LinExpr e = LinExpr::constant_of(0);
    for (std::size_t i = 0; i < n.size(); ++i) e = e + n[i] * x[i];
    eqs.push_back(Formula::compare(e, Relation::EQ, LinExpr::constant_of(0)));
  }
  return Formula::conj(std::move(eqs));
}

SemiLinearSet origin(std::size_t dim) { return SemiLinearSet::point(exact::zero_vector(dim)); }

}  // namespace

PreOrderedSpace::PreOrderedSpace(SemiLinearSet positive) : positive_(std::move(positive)) {
  for (const auto& c : positive_.cells())
    for (const auto& k : c.constraints())
      if (!k.is_homogeneous())
        throw std::invalid_argument("positive set has a non-homogeneous constraint: " +
                                    k.to_string(semilin::default_names(dim())));
  regulator_ = positive_.is_empty() ? exact::zero_vector(dim()) : semilin::regulator_point(positive_);
}

PreOrderedSpace orthant(std::size_t dim) {
  std::vector<LinConstraint> rows;
  for (std::size_t i = 0; i < dim; ++i)
    rows.emplace_back(exact::scale(-1, exact::unit_vector(dim, i)), Relation::LE, 0);
  return PreOrderedSpace(SemiLinearSet::from_cell(Cell(dim, std::move(rows))));
}

PreOrderedSpace lexicographic(std::size_t dim) {
  std::vector<Cell> cells;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::vector<LinConstraint> rows;
    for (std::size_t i = 0; i < lead; ++i) rows.emplace_back(exact::unit_vector(dim, i), Relation::EQ, 0);
    rows.emplace_back(exact::scale(-1, exact::unit_vector(dim, lead)), Relation::LT, 0);
    cells.emplace_back(dim, std::move(rows));
  }
  cells.push_back(origin(dim).cells().front());
  return PreOrderedSpace(SemiLinearSet(dim, std::move(cells)));
}

WedgeCheck validate_wedge(const PreOrderedSpace& space) {
  const std::size_t d = space.dim();
  const SemiLinearSet& w = space.positive();
  WedgeCheck r;
  r.contains_zero = w.contains(exact::zero_vector(d));
  const SemiLinearSet pairs = intersect(semilin::embed(w, 2 * d, 0), semilin::embed(w, 2 * d, d));
  exact::Matrix add(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) add(i, i) = add(i, d + i) = 1;
  if (auto bad = subset_witness(pairs, preimage(w, add))) {
    r.additivity_witness = std::make_pair(Vector(bad->begin(), bad->begin() + static_cast<std::ptrdiff_t>(d)),
                                          Vector(bad->begin() + static_cast<std::ptrdiff_t>(d), bad->end()));
  }
  r.valid = r.contains_zero && !r.additivity_witness;
  return r;
}

SemiLinearSet order_interval(const PreOrderedSpace& space, const Vector& a, const Vector& b) {
  check_dim(space, a, "interval endpoint");
  check_dim(space, b, "interval endpoint");
  return normalize(intersect(translate(space.positive(), a), translate(reflect(space.positive()), b)));
}

Subspace lineality(const PreOrderedSpace& space) {
  const SemiLinearSet both = intersect(space.positive(), reflect(space.positive()));
  const Subspace span = semilin::linear_span(both);
  if (!set_equal(both, SemiLinearSet::subspace(span)))
    throw internal_check_failure("X+ ∩ -X+ is not a subspace; the positive set is not a wedge");
  return span;
}

bool is_cone(const PreOrderedSpace& space) { return lineality(space).is_trivial(); }

bool is_majorizing(const PreOrderedSpace& space) {
  const std::size_t d = space.dim();
  const LinPoint x = semilin::var_point(0, d), w1 = semilin::var_point(d, d), w2 = semilin::var_point(2 * d, d);
  std::vector<Formula> body{space.nonneg(w1), space.nonneg(w2)};
  for (std::size_t i = 0; i < d; ++i) body.push_back(Formula::compare(x[i], Relation::EQ, w1[i] - w2[i]));
  std::vector<std::size_t> bound;
  for (std::size_t i = d; i < 3 * d; ++i) bound.push_back(i);
  const SemiLinearSet differences = qe(Formula::exists(bound, Formula::conj(std::move(body))), d);
  return set_equal(differences, SemiLinearSet::universe(d));
}

SemiLinearSet infinitesimal_set(const PreOrderedSpace& space) {
  const std::size_t d = space.dim();
  const LinPoint x = semilin::var_point(0, d);
  const LinPoint tu = LinExpr::var(d) * space.regulator();
  const Formula f = Formula::forall(
      {d}, Formula::implies(t_positive(d), Formula::conj({space.nonneg(tu - x), space.nonneg(tu + x)})));
  return qe(f, d);
}

Subspace infinitesimal_ideal(const PreOrderedSpace& space) {
  const SemiLinearSet inf = infinitesimal_set(space);
  const Subspace span = semilin::linear_span(inf);
  if (!set_equal(inf, SemiLinearSet::subspace(span)))
    throw internal_check_failure("the infinitesimal set is not a subspace");
  if (!is_order_ideal(space, span)) throw internal_check_failure("the infinitesimal subspace is not an order ideal");
  return span;
}

bool is_almost_archimedean(const PreOrderedSpace& space) { return infinitesimal_ideal(space).is_trivial(); }

std::optional<Vector> archimedean_witness(const PreOrderedSpace& space) {
  const std::size_t d = space.dim();
  const LinPoint y = semilin::var_point(0, d);
  const LinPoint tu = LinExpr::var(d) * space.regulator();
  const Formula bounded = Formula::forall(
      {d}, Formula::implies(t_positive(d),
                            space.nonneg(tu - y)));
  return subset_witness(qe(bounded, d), reflect(space.positive()));
}

bool is_archimedean(const PreOrderedSpace& space) { return !archimedean_witness(space).has_value(); }

bool has_order_unit(const PreOrderedSpace& space, const Vector& u) {
  check_dim(space, u, "order unit candidate");
  if (!space.positive().contains(u)) throw std::invalid_argument("order unit candidate " + exact::to_string(u) + " is not positive");
  const std::size_t d = space.dim();
  const LinPoint x = semilin::var_point(0, d);
  const LinPoint tu = LinExpr::var(d) * u;
  const Formula f = Formula::exists(
      {d}, Formula::conj({t_positive(d),
                          space.nonneg(tu - x), space.nonneg(tu + x)}));
  return set_equal(qe(f, d), SemiLinearSet::universe(d));
}

bool is_order_ideal(const PreOrderedSpace& space, const Subspace& v) {
  if (v.ambient_dim() != space.dim()) throw exact::dimension_error("subspace lives in a different ambient space");
  const std::size_t d = space.dim();
  const LinPoint x = semilin::var_point(0, d), a = semilin::var_point(d, d), b = semilin::var_point(2 * d, d);
  std::vector<std::size_t> bound;
  for (std::size_t i = d; i < 3 * d; ++i) bound.push_back(i);
  const Formula between = Formula::exists(
      bound, Formula::conj({in_subspace(v, a), in_subspace(v, b), space.nonneg(x - a), space.nonneg(b - x)}));
  return set_subset(qe(between, d), SemiLinearSet::subspace(v));
}

}  // namespace povswb::order
