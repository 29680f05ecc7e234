#include "povswb/semilin/semilinear_set.hpp"

#include <algorithm>
#include <utility>

namespace povswb::semilin {

namespace {

void check_cells(std::size_t n) {
  if (n > limits().max_cells)
    throw capacity_error("cell capacity exceeded: " + std::to_string(n) + " > " +
                         std::to_string(limits().max_cells) + " cells");
}

void require_dim(const SemiLinearSet& a, const SemiLinearSet& b) {
  if (a.dim() != b.dim())
    throw exact::dimension_error("semi-linear sets live in Q^" + std::to_string(a.dim()) + " and Q^" +
                                 std::to_string(b.dim()));
}

// The single constraint of `a` that is not in `b`, when all others agree.
std::optional<std::pair<std::size_t, std::size_t>> single_difference(const Cell& a, const Cell& b) {
  const auto& ra = a.constraints();
  const auto& rb = b.constraints();
  if (ra.size() != rb.size()) return std::nullopt;
  std::optional<std::size_t> ia;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (std::find(rb.begin(), rb.end(), ra[i]) == rb.end()) {
      if (ia) return std::nullopt;
      ia = i;
    }
  }
  if (!ia) return std::nullopt;
  std::optional<std::size_t> ib;
  for (std::size_t j = 0; j < rb.size(); ++j) {
    if (std::find(ra.begin(), ra.end(), rb[j]) == ra.end()) {
      if (ib) return std::nullopt;
      ib = j;
    }
  }
  if (!ib) return std::nullopt;
  return std::make_pair(*ia, *ib);
}

// Replacement for two bounds whose union is simpler: complementary
// half-spaces vanish (nullopt inside the optional), c < k with c = k gives c <= k.
std::optional<std::optional<LinConstraint>> merge_bounds(const LinConstraint& p, const LinConstraint& q) {
  if (p.relation() != Relation::EQ && q.relation() != Relation::EQ) {
    const auto neg = p.negation();
    if (neg.size() == 1 && neg[0] == q) return std::optional<LinConstraint>{};
    return std::nullopt;
  }
  const LinConstraint& eq = p.relation() == Relation::EQ ? p : q;
  const LinConstraint& other = p.relation() == Relation::EQ ? q : p;
  if (!other.is_strict()) return std::nullopt;
  if (other.coeffs() == eq.coeffs() && other.constant() == eq.constant())
    return std::optional<LinConstraint>{LinConstraint(eq.coeffs(), Relation::LE, eq.constant())};
  if (other.coeffs() == exact::negate(eq.coeffs()) && other.constant() == -eq.constant())
    return std::optional<LinConstraint>{LinConstraint(other.coeffs(), Relation::LE, other.constant())};
  return std::nullopt;
}

}  // namespace

SemiLinearSet::SemiLinearSet(std::size_t dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
  for (const auto& c : cells_)
    if (c.dim() != dim_) throw exact::dimension_error("cell dimension differs from set dimension");
}

SemiLinearSet SemiLinearSet::universe(std::size_t dim) { return SemiLinearSet(dim, {Cell(dim)}); }

SemiLinearSet SemiLinearSet::from_cell(Cell cell) {
  const std::size_t d = cell.dim();
  return SemiLinearSet(d, {std::move(cell)});
}

SemiLinearSet SemiLinearSet::point(const Vector& p) {
  std::vector<LinConstraint> rows;
  for (std::size_t i = 0; i < p.size(); ++i) rows.emplace_back(exact::unit_vector(p.size(), i), Relation::EQ, p[i]);
  return from_cell(Cell(p.size(), std::move(rows)));
}

SemiLinearSet SemiLinearSet::subspace(const exact::Subspace& s) {
  std::vector<LinConstraint> rows;
  for (const auto& n : s.normals()) rows.emplace_back(n, Relation::EQ, 0);
  return from_cell(Cell(s.ambient_dim(), std::move(rows)));
}

bool SemiLinearSet::contains(const Vector& x) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.contains(x); });
}

bool SemiLinearSet::is_empty() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return cell_is_empty(c); });
}

bool SemiLinearSet::is_homogeneous() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.is_homogeneous(); });
}

std::optional<Vector> SemiLinearSet::sample() const {
  for (const auto& c : cells_)
    if (auto p = sample_point(c)) return p;
  return std::nullopt;
}

std::string SemiLinearSet::to_string(const std::vector<std::string>& names) const {
  if (cells_.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) out += " | ";
    out += "(" + cells_[i].to_string(names) + ")";
  }
  return out;
}

std::string SemiLinearSet::to_string() const { return to_string(default_names(dim_)); }

namespace {

// Simplified nonempty cells without duplicates; sets `universal` when some
// cell has no constraints left.
std::vector<Cell> simplified_cells(const std::vector<Cell>& in, bool& universal) {
  std::vector<Cell> cells;
  universal = false;
  for (const auto& c : in) {
    auto simple = simplify(c);
    if (!simple) continue;
    if (simple->constraints().empty()) {
      universal = true;
      return {};
    }
    if (std::find(cells.begin(), cells.end(), *simple) == cells.end()) cells.push_back(std::move(*simple));
  }
  return cells;
}

// Repeatedly merges pairs of cells differing in one complementary bound.
// Returns false when a merge produced the whole space.
bool merge_pass(std::vector<Cell>& cells, std::size_t dim) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cells.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cells.size() && !changed; ++j) {
        const auto diff = single_difference(cells[i], cells[j]);
        if (!diff) continue;
        const auto merged = merge_bounds(cells[i].constraints()[diff->first], cells[j].constraints()[diff->second]);
        if (!merged) continue;
        std::vector<LinConstraint> rows;
        for (std::size_t k = 0; k < cells[i].constraints().size(); ++k)
          if (k != diff->first) rows.push_back(cells[i].constraints()[k]);
        if (*merged) rows.push_back(**merged);
        auto simple = simplify(Cell(dim, std::move(rows)));
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(j));
        if (simple) {
          if (simple->constraints().empty()) return false;
          cells[i] = std::move(*simple);
        } else {
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        }
        changed = true;
      }
    }
  }
  return true;
}

// Bounds satisfied by every cell in the group, drawn from the members'
// own constraints, their relaxations and the halves of their equalities.
Cell envelope(const std::vector<const Cell*>& group, std::size_t dim) {
  std::vector<LinConstraint> candidates;
  auto offer = [&](const LinConstraint& k) {
    if (std::find(candidates.begin(), candidates.end(), k) == candidates.end()) candidates.push_back(k);
  };
  for (const Cell* c : group) {
    for (const auto& k : c->constraints()) {
      offer(k);
      if (k.relation() == Relation::EQ) {
        offer(LinConstraint(k.coeffs(), Relation::LE, k.constant()));
        offer(LinConstraint(exact::negate(k.coeffs()), Relation::LE, -k.constant()));
      } else if (k.is_strict()) {
        offer(k.relaxed());
      }
    }
  }
  std::vector<LinConstraint> rows;
  for (const auto& k : candidates) {
    const Cell half(dim, {k});
    if (std::all_of(group.begin(), group.end(), [&](const Cell* c) { return cell_subset(*c, half); }))
      rows.push_back(k);
  }
  return Cell(dim, std::move(rows));
}

// Whether env minus the union of the group is empty; gives up (false) when
// the difference splits into too many pieces.
bool covered(const Cell& env, const std::vector<const Cell*>& group) {
  constexpr std::size_t kMaxPieces = 256;
  std::vector<Cell> pieces{env};
  for (const Cell* c : group) {
    std::vector<Cell> next;
    for (const auto& p : pieces) {
      Cell prefix = p;
      for (const auto& k : c->constraints()) {
        for (const auto& piece : k.negation()) {
          Cell cand = prefix.with(piece);
          if (!cell_is_empty(cand)) next.push_back(std::move(cand));
        }
        prefix = prefix.with(k);
        if (cell_is_empty(prefix)) break;
      }
      if (next.size() > kMaxPieces) return false;
    }
    pieces = std::move(next);
    if (pieces.empty()) return true;
  }
  return false;
}

// Replaces groups of cells whose union is convex by that union. Returns
// false when the union is the whole space.
bool convex_merge(std::vector<Cell>& cells, std::size_t dim) {
  if (cells.size() < 2) return true;
  std::vector<const Cell*> all;
  for (const auto& c : cells) all.push_back(&c);
  const Cell whole = envelope(all, dim);
  if (covered(whole, all)) {
    auto simple = simplify(whole);
    if (simple->constraints().empty()) return false;
    cells = {std::move(*simple)};
    return true;
  }
  std::vector<Cell> out;
  std::vector<bool> used(cells.size(), false);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<const Cell*> group{&cells[i]};
    std::optional<Cell> hull;
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (used[j]) continue;
      group.push_back(&cells[j]);
      Cell env = envelope(group, dim);
      if (covered(env, group)) {
        used[j] = true;
        hull = std::move(env);
      } else {
        group.pop_back();
      }
    }
    if (!hull) {
      out.push_back(cells[i]);
      continue;
    }
    auto simple = simplify(*hull);
    if (simple->constraints().empty()) return false;
    out.push_back(std::move(*simple));
  }
  cells = std::move(out);
  return true;
}

}  // namespace

SemiLinearSet normalize(const SemiLinearSet& s) {
  bool universal = false;
  std::vector<Cell> cells = simplified_cells(s.cells(), universal);
  if (universal) return SemiLinearSet::universe(s.dim());

  bool changed = true;
  while (changed) {
    changed = false;
    // Drop cells contained in another cell; a sample point of the smaller
    // cell outside the larger one rules inclusion out cheaply.
    std::vector<Vector> samples;
    samples.reserve(cells.size());
    for (const auto& c : cells) samples.push_back(*sample_point(c));
    std::vector<bool> dropped(cells.size(), false);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (i == j || dropped[j] || !cells[j].contains(samples[i])) continue;
        if (cell_subset(cells[i], cells[j])) {
          dropped[i] = true;
          break;
        }
      }
    }
    std::vector<Cell> kept;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!dropped[i]) kept.push_back(std::move(cells[i]));
    cells = std::move(kept);

    const std::size_t before = cells.size();
    if (!merge_pass(cells, s.dim())) return SemiLinearSet::universe(s.dim());
    changed = cells.size() != before;
  }
  return SemiLinearSet(s.dim(), std::move(cells));
}

SemiLinearSet coalesce(const SemiLinearSet& s) {
  const SemiLinearSet n = normalize(s);
  std::vector<Cell> cells = n.cells();
  if (!convex_merge(cells, s.dim())) return SemiLinearSet::universe(s.dim());
  if (cells.size() == n.cells().size()) return n;
  return normalize(SemiLinearSet(s.dim(), std::move(cells)));
}

SemiLinearSet complement(const SemiLinearSet& s) {
  const std::size_t dim = s.dim();
  std::vector<Cell> result{Cell(dim)};
  bool universal = false;
  std::vector<Cell> input = simplified_cells(s.cells(), universal);
  if (universal) return SemiLinearSet::empty(dim);
  // Fewest constraints first keeps the intermediate unions small.
  std::stable_sort(input.begin(), input.end(),
                   [](const Cell& a, const Cell& b) { return a.constraints().size() < b.constraints().size(); });
  for (const auto& cell : input) {
    // Not (k1 & ... & km) as the disjoint union of k1 & ... & k(i-1) & not ki.
    std::vector<Cell> next;
    for (const auto& r : result) {
      Cell prefix = r;
      for (const auto& k : cell.constraints()) {
        for (const auto& piece : k.negation()) {
          Cell cand = prefix.with(piece);
          if (!cell_is_empty(cand)) next.push_back(std::move(cand));
        }
        prefix = prefix.with(k);
        if (cell_is_empty(prefix)) break;
      }
      check_cells(next.size());
    }
    result = simplified_cells(next, universal);
    if (universal) {
      result = {Cell(dim)};
      continue;
    }
    if (!merge_pass(result, dim)) result = {Cell(dim)};
    if (result.empty()) break;
  }
  return normalize(SemiLinearSet(dim, std::move(result)));
}

SemiLinearSet intersect(const SemiLinearSet& a, const SemiLinearSet& b) {
  require_dim(a, b);
  std::vector<Cell> cells;
  for (const auto& ca : a.cells()) {
    for (const auto& cb : b.cells()) {
      Cell c = ca.conjoin(cb);
      if (!cell_is_empty(c)) cells.push_back(std::move(c));
    }
    check_cells(cells.size());
  }
  return normalize(SemiLinearSet(a.dim(), std::move(cells)));
}

SemiLinearSet unite(const SemiLinearSet& a, const SemiLinearSet& b) {
  require_dim(a, b);
  std::vector<Cell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  check_cells(cells.size());
  return normalize(SemiLinearSet(a.dim(), std::move(cells)));
}

namespace {

std::optional<Vector> escape_search(const Cell& cell, const std::vector<Cell>& others, std::size_t i) {
  if (cell_is_empty(cell)) return std::nullopt;
  if (i == others.size()) return sample_point(cell);
  const Cell& b = others[i];
  if (b.constraints().empty()) return std::nullopt;
  if (cell_is_empty(cell.conjoin(b))) return escape_search(cell, others, i + 1);
  for (const auto& k : b.constraints()) {
    for (const auto& piece : k.negation()) {
      if (auto w = escape_search(cell.with(piece), others, i + 1)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Vector> subset_witness(const SemiLinearSet& a, const SemiLinearSet& b) {
  require_dim(a, b);
  for (const auto& ca : a.cells()) {
    if (auto w = escape_search(ca, b.cells(), 0)) return w;
  }
  return std::nullopt;
}

bool set_subset(const SemiLinearSet& a, const SemiLinearSet& b) { return !subset_witness(a, b).has_value(); }

bool set_equal(const SemiLinearSet& a, const SemiLinearSet& b) { return set_subset(a, b) && set_subset(b, a); }

SemiLinearSet topo_closure(const SemiLinearSet& s) {
  std::vector<Cell> cells;
  for (const auto& c : s.cells()) {
    if (cell_is_empty(c)) continue;
    cells.push_back(c.relaxed());
  }
  return normalize(SemiLinearSet(s.dim(), std::move(cells)));
}

SemiLinearSet project_out(const SemiLinearSet& s, const std::vector<std::size_t>& vars) {
  std::vector<Cell> cells;
  for (const auto& c : s.cells()) {
    if (auto p = project(c, vars)) cells.push_back(std::move(*p));
  }
  return normalize(SemiLinearSet(s.dim(), std::move(cells)));
}

SemiLinearSet truncate(const SemiLinearSet& s, std::size_t dim) {
  if (dim > s.dim()) throw exact::dimension_error("truncation to a larger dimension");
  std::vector<Cell> cells;
  for (const auto& c : s.cells()) {
    std::vector<LinConstraint> rows;
    for (const auto& k : c.constraints()) {
      for (std::size_t i = dim; i < s.dim(); ++i)
        if (k.involves(i)) throw std::logic_error("truncation would drop a constrained coordinate");
      rows.emplace_back(Vector(k.coeffs().begin(), k.coeffs().begin() + static_cast<std::ptrdiff_t>(dim)),
                        k.relation(), k.constant());
    }
    cells.emplace_back(dim, std::move(rows));
  }
  return SemiLinearSet(dim, std::move(cells));
}

SemiLinearSet embed(const SemiLinearSet& s, std::size_t dim, std::size_t offset) {
  std::vector<Cell> cells;
  for (const auto& c : s.cells()) cells.push_back(c.embedded(dim, offset));
  return SemiLinearSet(dim, std::move(cells));
}

SemiLinearSet linear_image(const SemiLinearSet& s, const exact::Matrix& m) {
  if (m.cols() != s.dim())
    throw exact::dimension_error("map expects Q^" + std::to_string(m.cols()) + ", set lives in Q^" +
                                 std::to_string(s.dim()));
  const std::size_t out = m.rows();
  const std::size_t total = out + s.dim();
  std::vector<LinConstraint> graph;
  for (std::size_t i = 0; i < out; ++i) {
    Vector c = exact::zero_vector(total);
    c[i] = 1;
    for (std::size_t j = 0; j < s.dim(); ++j) c[out + j] = -m(i, j);
    graph.emplace_back(std::move(c), Relation::EQ, 0);
  }
  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < s.dim(); ++j) vars.push_back(out + j);
  std::vector<Cell> cells;
  for (const auto& c : s.cells()) {
    Cell lifted = c.embedded(total, out);
    for (const auto& g : graph) lifted = lifted.with(g);
    if (auto p = project(lifted, vars)) cells.push_back(std::move(*p));
  }
  return normalize(truncate(SemiLinearSet(total, std::move(cells)), out));
}

SemiLinearSet affine_preimage(const SemiLinearSet& s, const exact::Matrix& m, const Vector& b) {
  if (m.rows() != s.dim() || b.size() != s.dim()) throw exact::dimension_error("affine map does not land in the set's space");
  const exact::Matrix mt = m.transpose();
  std::vector<Cell> cells;
  for (const auto& c : s.cells()) {
    std::vector<LinConstraint> rows;
    for (const auto& k : c.constraints())
      rows.emplace_back(mt.apply(k.coeffs()), k.relation(), k.constant() - exact::dot(k.coeffs(), b));
    cells.emplace_back(m.cols(), std::move(rows));
  }
  return normalize(SemiLinearSet(m.cols(), std::move(cells)));
}

SemiLinearSet preimage(const SemiLinearSet& s, const exact::Matrix& m) {
  return affine_preimage(s, m, exact::zero_vector(s.dim()));
}

SemiLinearSet translate(const SemiLinearSet& s, const Vector& v) {
  return affine_preimage(s, exact::Matrix::identity(s.dim()), exact::negate(v));
}

SemiLinearSet reflect(const SemiLinearSet& s) {
  exact::Matrix m = exact::Matrix::identity(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) m(i, i) = -1;
  return preimage(s, m);
}

}  // namespace povswb::semilin
