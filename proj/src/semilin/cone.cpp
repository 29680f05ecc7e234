#include "povswb/semilin/cone.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace povswb::semilin {

namespace {

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vector> cone_generators(const Cell& c) {
  const std::size_t dim = c.dim();
  std::vector<Vector> eqs;
  std::vector<Vector> ineqs;
  for (const auto& k : c.constraints()) {
    if (!k.is_homogeneous()) throw std::invalid_argument("cone_generators: non-homogeneous constraint");
    if (k.is_strict()) throw std::invalid_argument("cone_generators: strict constraint");
    if (k.is_trivial()) continue;
    (k.relation() == Relation::EQ ? eqs : ineqs).push_back(k.coeffs());
  }

  std::vector<Vector> all = eqs;
  all.insert(all.end(), ineqs.begin(), ineqs.end());
  const exact::Subspace lineality =
      all.empty() ? exact::Subspace::whole(dim) : exact::kernel_basis(exact::Matrix::from_rows(dim, all));

  // Equalities cutting out the span of the pointed part.
  std::vector<Vector> frame = eqs;
  frame.insert(frame.end(), lineality.basis().begin(), lineality.basis().end());
  const std::size_t span_dim =
      frame.empty() ? dim : exact::kernel_basis(exact::Matrix::from_rows(dim, frame)).dimension();

  std::vector<Vector> rays;
  if (span_dim > 0) {
    for_each_subset(ineqs.size(), span_dim - 1, [&](const std::vector<std::size_t>& tight) {
      std::vector<Vector> rows = frame;
      for (auto t : tight) rows.push_back(ineqs[t]);
      const exact::Subspace line =
          rows.empty() ? exact::Subspace::whole(dim) : exact::kernel_basis(exact::Matrix::from_rows(dim, rows));
      if (line.dimension() != 1) return;
      for (const Vector& cand : {line.basis()[0], exact::negate(line.basis()[0])}) {
        const bool inside = std::all_of(ineqs.begin(), ineqs.end(),
                                        [&](const Vector& a) { return sgn(exact::dot(a, cand)) <= 0; });
        if (!inside) continue;
        Vector ray = exact::primitive(cand);
        if (std::find(rays.begin(), rays.end(), ray) == rays.end()) rays.push_back(std::move(ray));
      }
    });
  }
  std::sort(rays.begin(), rays.end(), std::greater<>());
  for (const auto& v : lineality.basis()) {
    Vector p = exact::primitive(v);
    rays.push_back(p);
    rays.push_back(exact::negate(p));
  }
  return rays;
}

SemiLinearSet cone_hull(const std::vector<Vector>& generators, std::size_t dim) {
  const std::size_t k = generators.size();
  const std::size_t total = dim + k;
  std::vector<LinConstraint> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector c = exact::zero_vector(total);
    c[i] = 1;
    for (std::size_t j = 0; j < k; ++j) c[dim + j] = -generators[j].at(i);
    rows.emplace_back(std::move(c), Relation::EQ, 0);
  }
  std::vector<std::size_t> lambdas;
  for (std::size_t j = 0; j < k; ++j) {
    rows.emplace_back(exact::scale(-1, exact::unit_vector(total, dim + j)), Relation::LE, 0);
    lambdas.push_back(dim + j);
  }
  auto projected = project(Cell(total, std::move(rows)), lambdas);
  if (!projected) throw std::logic_error("cone hull unexpectedly empty");
  return normalize(truncate(SemiLinearSet::from_cell(std::move(*projected)), dim));
}

exact::Subspace linear_span(const SemiLinearSet& s) {
  std::vector<Vector> gens;
  for (const auto& c : s.cells()) {
    if (cell_is_empty(c)) continue;
    if (!c.is_homogeneous()) throw std::invalid_argument("linear_span: non-homogeneous set");
    auto g = cone_generators(c.relaxed());
    gens.insert(gens.end(), g.begin(), g.end());
  }
  return exact::Subspace::span(s.dim(), gens);
}

Vector regulator_point(const SemiLinearSet& wedge) {
  Vector u = exact::zero_vector(wedge.dim());
  bool any = false;
  for (const auto& c : wedge.cells()) {
    if (cell_is_empty(c)) continue;
    any = true;
    for (const auto& g : cone_generators(c.relaxed())) u = exact::add(u, g);
  }
  if (!any) throw std::invalid_argument("regulator_point: empty wedge");
  return u;
}

}  // namespace povswb::semilin
