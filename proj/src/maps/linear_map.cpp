#include "povswb/maps/linear_map.hpp"

namespace povswb::maps {

using semilin::Formula;
using semilin::LinExpr;
using semilin::LinPoint;

namespace {

// m * v for a point of affine expressions.
LinPoint apply_to(const Matrix& m, const LinPoint& v) {
  LinPoint out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    LinExpr e = LinExpr::constant_of(0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) e = e + m(i, j) * v[j];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

LinearMap::LinearMap(Matrix matrix, PreOrderedSpace domain, PreOrderedSpace codomain)
    : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (matrix_.cols() != domain_.dim() || matrix_.rows() != codomain_.dim())
    throw exact::dimension_error("a " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                                 " matrix cannot map Q^" + std::to_string(domain_.dim()) + " to Q^" +
                                 std::to_string(codomain_.dim()));
}

bool is_positive(const LinearMap& t) {
  return semilin::set_subset(semilin::linear_image(t.domain().positive(), t.matrix()), t.codomain().positive());
}

bool is_order_bounded(const LinearMap& t, bool override_cap) {
  const std::size_t n = t.domain().dim(), m = t.codomain().dim();
  if (n > kOrderBoundedDimCap && !override_cap)
    throw size_cap_refused("order-boundedness is capped at domain dimension " + std::to_string(kOrderBoundedDimCap) +
                           " (got " + std::to_string(n) + "); pass the override to run it anyway");
  const LinPoint a = semilin::var_point(0, n), b = semilin::var_point(n, n);
  const LinPoint c = semilin::var_point(2 * n, m), d = semilin::var_point(2 * n + m, m);
  const LinPoint x = semilin::var_point(2 * n + 2 * m, n);
  const LinPoint tx = apply_to(t.matrix(), x);
  auto slots = [](std::size_t first, std::size_t count) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(first + i);
    return v;
  };
  const Formula inside = Formula::forall(
      slots(2 * n + 2 * m, n),
      Formula::implies(Formula::conj({t.domain().nonneg(x - a), t.domain().nonneg(b - x)}),
                       Formula::conj({t.codomain().nonneg(tx - c), t.codomain().nonneg(d - tx)})));
  return semilin::qe_holds(Formula::forall(slots(0, 2 * n), Formula::exists(slots(2 * n, 2 * m), inside)));
}

bool check_ru_continuity(const LinearMap& t, const SemiLinearSet& s) {
  if (s.dim() != t.codomain().dim()) throw exact::dimension_error("test set does not live in the codomain");
  if (!order::is_ru_closed(t.codomain(), s))
    throw std::invalid_argument("test set " + s.to_string() + " is not ru-closed in the codomain");
  return order::is_ru_closed(t.domain(), semilin::preimage(s, t.matrix()));
}

Factorization factor_through_archimedeanization(const LinearMap& phi, std::size_t cap) {
  if (!is_positive(phi)) throw std::invalid_argument("the map is not positive");
  if (!order::is_archimedean(phi.codomain())) throw std::invalid_argument("the codomain is not Archimedean");
  order::QuotientPresentation q = order::archimedeanization(phi.domain(), cap);
  for (const auto& v : q.kernel.basis())
    if (!exact::is_zero(phi.apply(v)))
      throw order::internal_check_failure("the map does not vanish on " + exact::to_string(v));
  LinearMap quotient_map(q.projection, phi.domain(), q.quotient);
  LinearMap factor(phi.matrix() * q.section, q.quotient, phi.codomain());
  if (!(factor.matrix() * q.projection == phi.matrix()))
    throw order::internal_check_failure("the factor composed with the projection differs from the map");
  if (exact::rank(q.projection) != q.projection.rows())
    throw order::internal_check_failure("the projection onto the quotient is not surjective");
  if (!is_positive(factor)) throw order::internal_check_failure("the factor is not positive");
  return {std::move(q), std::move(quotient_map), std::move(factor)};
}

}  // namespace povswb::maps
