#include "povswb/order/analysis.hpp"

namespace povswb::order {

using semilin::Cell;
using semilin::LinConstraint;
using semilin::Relation;

AnalysisReport analyze(const PreOrderedSpace& space, std::size_t cap) {
  AnalysisReport r;
  r.regulator = space.regulator();
  const WedgeCheck check = validate_wedge(space);
  r.is_wedge = check.valid;
  r.additivity_witness = check.additivity_witness;
  if (!r.is_wedge) return r;

  const Subspace lin = lineality(space);
  r.lineality_dim = lin.dimension();
  r.is_cone = lin.is_trivial();
  r.is_majorizing = is_majorizing(space);
  r.archimedean_witness = archimedean_witness(space);
  r.is_archimedean = !r.archimedean_witness;
  r.is_almost_archimedean = is_almost_archimedean(space);

  try {
    ClosureTrace trace = ru_closure(space, space.positive(), cap);
    r.alpha_type = trace.steps;
    r.is_ru_closed = trace.steps == 0;
    r.closure_steps = std::move(trace.iterates);
  } catch (const cap_exceeded&) {
    r.is_ru_closed = is_ru_closed(space, space.positive());
  }
  try {
    IdealTower tower = ideal_tower(space, cap);
    r.lambda_type = tower.lambda;
    r.ideals = std::move(tower.ideals);
  } catch (const cap_exceeded&) {
  }
  return r;
}

long WedgeGenerator::uniform(long lo, long hi) {
  return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

LinConstraint WedgeGenerator::random_constraint(std::size_t dim, bool strict_allowed) {
  while (true) {
    Vector c(dim);
    for (auto& x : c) x = uniform(-3, 3);
    if (exact::is_zero(c)) continue;
    const Relation rel = strict_allowed && uniform(0, 1) == 0 ? Relation::LT : Relation::LE;
    return LinConstraint(std::move(c), rel, 0);
  }
}

SemiLinearSet WedgeGenerator::random_candidate(std::size_t dim) {
  std::vector<Cell> cells;
  const long n = uniform(1, 3);
  for (long i = 0; i < n; ++i) {
    std::vector<LinConstraint> rows;
    const long m = uniform(1, 4);
    for (long j = 0; j < m; ++j) rows.push_back(random_constraint(dim, true));
    cells.emplace_back(dim, std::move(rows));
  }
  cells.push_back(SemiLinearSet::point(exact::zero_vector(dim)).cells().front());
  return SemiLinearSet(dim, std::move(cells));
}

SemiLinearSet WedgeGenerator::lex_style(std::size_t dim, int depth) {
  const LinConstraint lead = random_constraint(dim, false);
  const LinConstraint strict(lead.coeffs(), Relation::LT, 0);
  const LinConstraint flat(lead.coeffs(), Relation::EQ, 0);
  // The tail is any wedge; intersected with {l = 0} it orders the hyperplane.
  SemiLinearSet tail = depth > 0 && uniform(0, 1) == 0 ? lex_style(dim, depth - 1) : SemiLinearSet(dim);
  if (tail.cells().empty()) {
    std::vector<LinConstraint> rows;
    const long m = uniform(0, 3);
    for (long j = 0; j < m; ++j) rows.push_back(random_constraint(dim, true));
    tail = SemiLinearSet(dim, {Cell(dim, std::move(rows)), SemiLinearSet::point(exact::zero_vector(dim)).cells().front()});
  }
  std::vector<Cell> cells{Cell(dim, {strict})};
  for (const auto& c : tail.cells()) cells.push_back(c.with(flat));
  return SemiLinearSet(dim, std::move(cells));
}

PreOrderedSpace WedgeGenerator::next(std::size_t dim) {
  while (true) {
    SemiLinearSet candidate = uniform(0, 2) == 0 ? lex_style(dim, static_cast<int>(dim)) : random_candidate(dim);
    PreOrderedSpace space(normalize(candidate));
    if (validate_wedge(space).valid) return space;
    ++rejected_;
  }
}

}  // namespace povswb::order
