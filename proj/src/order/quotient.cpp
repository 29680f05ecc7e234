#include "povswb/order/quotient.hpp"

namespace povswb::order {

QuotientPresentation quotient_by(const SemiLinearSet& wedge, const Subspace& a) {
  const std::size_t d = wedge.dim();
  if (a.ambient_dim() != d) throw exact::dimension_error("kernel and wedge live in different spaces");
  const std::vector<Vector> complement = exact::complement_vectors(a);
  std::vector<Vector> columns = complement;
  columns.insert(columns.end(), a.basis().begin(), a.basis().end());
  const auto inv = exact::inverse(exact::Matrix::from_columns(d, columns));
  if (!inv) throw internal_check_failure("complement and kernel do not form a basis");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < complement.size(); ++i) rows.push_back(inv->row(i));
  exact::Matrix projection = exact::Matrix::from_rows(d, rows);
  exact::Matrix section = exact::Matrix::from_columns(d, complement);
  PreOrderedSpace quotient(semilin::coalesce(linear_image(wedge, projection)));
  return {a, std::move(projection), std::move(section), std::move(quotient)};
}

QuotientPresentation archimedeanization(const PreOrderedSpace& space, std::size_t cap) {
  const SemiLinearSet closed = ru_closure(space, space.positive(), cap).closure;
  const Subspace a = lineality(PreOrderedSpace(closed));
  QuotientPresentation q = quotient_by(closed, a);

  const std::size_t k = q.projection.rows();
  if (!(q.projection * q.section == exact::Matrix::identity(k)))
    throw internal_check_failure("projection does not invert the section");
  for (const auto& v : a.basis())
    if (!exact::is_zero(q.projection.apply(v))) throw internal_check_failure("projection does not annihilate A");
  if (!is_cone(q.quotient)) throw internal_check_failure("the quotient wedge is not a cone");
  if (!is_archimedean(q.quotient)) throw internal_check_failure("the quotient is not Archimedean");
  if (is_majorizing(q.quotient) != is_majorizing(space))
    throw internal_check_failure("the quotient is majorizing differently from X");
  return q;
}

IdealTower ideal_tower(const PreOrderedSpace& space, std::size_t cap) {
  IdealTower tower;
  tower.ideals.emplace_back(space.dim());
  while (true) {
    const Subspace& current = tower.ideals.back();
    const QuotientPresentation q = quotient_by(space.positive(), current);
    std::vector<Vector> lifted;
    const Subspace infinitesimals = infinitesimal_ideal(q.quotient);
    for (const auto& v : infinitesimals.basis()) lifted.push_back(q.section.apply(v));
    Subspace next = current.sum(Subspace::span(space.dim(), lifted));
    const bool stable = next == current;
    if (!stable && tower.ideals.size() > cap)
      throw cap_exceeded("infinitesimal tower did not stabilize within " + std::to_string(cap) + " steps");
    tower.ideals.push_back(std::move(next));
    if (stable) break;
  }
  tower.lambda = tower.ideals.size() - 2;
  return tower;
}

}  // namespace povswb::order
