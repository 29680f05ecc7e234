#include "povswb/semilin/cell.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "povswb/exactnum/matrix.hpp"
#include "simplex.hpp"

namespace povswb::semilin {

namespace {

Limits g_limits;

using Rows = std::vector<LinConstraint>;

struct Bounds {
  std::optional<Rational> lo;
  bool lo_strict = false;
  std::optional<Rational> hi;
  bool hi_strict = false;
};

bool leading_negative(const Vector& c) {
  for (const auto& x : c)
    if (sgn(x) != 0) return sgn(x) < 0;
  return false;
}

void tighten_hi(Bounds& b, const Rational& k, bool strict) {
  if (!b.hi || k < *b.hi) {
    b.hi = k;
    b.hi_strict = strict;
  } else if (k == *b.hi) {
    b.hi_strict = b.hi_strict || strict;
  }
}

void tighten_lo(Bounds& b, const Rational& k, bool strict) {
  if (!b.lo || k > *b.lo) {
    b.lo = k;
    b.lo_strict = strict;
  } else if (k == *b.lo) {
    b.lo_strict = b.lo_strict || strict;
  }
}

// Groups parallel constraints by direction and keeps only the tightest
// lower/upper bound for each; a closed two-sided bound with equal ends
// becomes an equality. nullopt means a contradiction was found.
std::optional<Rows> tidy(const Rows& rows, std::size_t dim) {
  std::map<Vector, Bounds> by_dir;
  for (const auto& r : rows) {
    if (r.is_trivial()) {
      if (r.is_false()) return std::nullopt;
      continue;
    }
    const bool strict = r.is_strict();
    if (r.relation() == Relation::EQ) {
      Bounds& b = by_dir[r.coeffs()];
      tighten_hi(b, r.constant(), false);
      tighten_lo(b, r.constant(), false);
    } else if (leading_negative(r.coeffs())) {
      Bounds& b = by_dir[exact::negate(r.coeffs())];
      tighten_lo(b, -r.constant(), strict);
    } else {
      Bounds& b = by_dir[r.coeffs()];
      tighten_hi(b, r.constant(), strict);
    }
  }
  Rows out;
  out.reserve(by_dir.size() * 2);
  for (const auto& [dir, b] : by_dir) {
    if (b.lo && b.hi) {
      if (*b.lo > *b.hi) return std::nullopt;
      if (*b.lo == *b.hi) {
        if (b.lo_strict || b.hi_strict) return std::nullopt;
        out.emplace_back(dir, Relation::EQ, *b.lo);
        continue;
      }
    }
    if (b.lo) out.emplace_back(exact::negate(dir), b.lo_strict ? Relation::LT : Relation::LE, -*b.lo);
    if (b.hi) out.emplace_back(dir, b.hi_strict ? Relation::LT : Relation::LE, *b.hi);
  }
  (void)dim;
  return out;
}

void check_rows(std::size_t n) {
  if (n > g_limits.max_constraints)
    throw capacity_error("constraint capacity exceeded: " + std::to_string(n) + " > " +
                         std::to_string(g_limits.max_constraints) + " constraints in one cell");
}

std::optional<Rows> fm_step(const Rows& rows, std::size_t var, std::size_t dim) {
  // Prefer an equality: exact substitution, no pairing.
  const LinConstraint* eq = nullptr;
  std::size_t eq_support = dim + 1;
  for (const auto& r : rows) {
    if (r.relation() != Relation::EQ || !r.involves(var)) continue;
    std::size_t support = 0;
    for (const auto& c : r.coeffs()) support += sgn(c) != 0;
    if (support < eq_support) {
      eq = &r;
      eq_support = support;
    }
  }
  Rows out;
  if (eq != nullptr) {
    const Rational& pivot = eq->coeffs()[var];
    for (const auto& r : rows) {
      if (&r == eq) continue;
      if (!r.involves(var)) {
        out.push_back(r);
        continue;
      }
      const Rational f = r.coeffs()[var] / pivot;
      Vector c(dim);
      for (std::size_t i = 0; i < dim; ++i) c[i] = r.coeffs()[i] - f * eq->coeffs()[i];
      c[var] = 0;
      out.emplace_back(std::move(c), r.relation(), r.constant() - f * eq->constant());
    }
    return tidy(out, dim);
  }
  std::vector<const LinConstraint*> pos;
  std::vector<const LinConstraint*> neg;
  for (const auto& r : rows) {
    const int s = sgn(r.coeffs()[var]);
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  check_rows(out.size() + pos.size() * neg.size());
  for (const auto* p : pos) {
    for (const auto* n : neg) {
      const Rational a = p->coeffs()[var];
      const Rational b = -n->coeffs()[var];
      Vector c(dim);
      for (std::size_t i = 0; i < dim; ++i) c[i] = b * p->coeffs()[i] + a * n->coeffs()[i];
      c[var] = 0;
      const bool strict = p->is_strict() || n->is_strict();
      out.emplace_back(std::move(c), strict ? Relation::LT : Relation::LE, b * p->constant() + a * n->constant());
    }
  }
  return tidy(out, dim);
}

// Next variable to eliminate: one carrying an equality if possible,
// otherwise the one producing the fewest resolvents.
std::optional<std::size_t> pick_variable(const Rows& rows, std::size_t dim) {
  std::optional<std::size_t> best;
  long best_score = 0;
  for (std::size_t v = 0; v < dim; ++v) {
    long p = 0;
    long n = 0;
    bool has_eq = false;
    for (const auto& r : rows) {
      const int s = sgn(r.coeffs()[v]);
      if (s == 0) continue;
      if (r.relation() == Relation::EQ) has_eq = true;
      (s > 0 ? p : n) += 1;
    }
    if (p + n == 0) continue;
    const long score = has_eq ? -1 : p * n - p - n;
    if (!best || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

bool rows_empty(const Rows& input, std::size_t dim) {
  const auto rows = tidy(input, dim);
  return !rows || !detail::strict_feasible_point(*rows, dim);
}

// Rows beyond this count after an elimination step are pruned for redundancy.
constexpr std::size_t kPruneAbove = 8;

// One elimination step followed by exact redundancy pruning once the system
// grows, which keeps Fourier-Motzkin from blowing up doubly exponentially.
std::optional<Rows> eliminate(const Rows& rows, std::size_t var, std::size_t dim) {
  auto out = fm_step(rows, var, dim);
  if (!out || out->size() <= kPruneAbove) return out;
  if (rows_empty(*out, dim)) return std::nullopt;
  return detail::drop_redundant(std::move(*out), dim);
}

bool fm_rows_empty(const Rows& input, std::size_t dim) {
  auto rows = tidy(input, dim);
  while (rows) {
    const auto v = pick_variable(*rows, dim);
    if (!v) return false;
    rows = fm_step(*rows, *v, dim);
  }
  return true;
}

Rational pick_between(const std::optional<Rational>& lo, bool lo_strict, const std::optional<Rational>& hi,
                      bool hi_strict) {
  auto ok = [&](const Rational& v) {
    if (lo && (lo_strict ? v <= *lo : v < *lo)) return false;
    if (hi && (hi_strict ? v >= *hi : v > *hi)) return false;
    return true;
  };
  if (ok(0)) return 0;
  if (lo && !hi) {
    Rational v = *lo + 1;
    mpz_fdiv_q(v.get_num_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    v.get_den() = 1;
    return v;
  }
  if (hi && !lo) {
    Rational v = *hi - 1;
    mpz_cdiv_q(v.get_num_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    v.get_den() = 1;
    return v;
  }
  // Bounded on both sides: an integer if one fits, else the midpoint.
  Rational c = *lo;
  mpz_fdiv_q(c.get_num_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  c.get_den() = 1;
  c += 1;
  if (ok(c)) return c;
  if (ok(*lo)) return *lo;
  Rational mid = (*lo + *hi) / 2;
  return mid;
}

}  // namespace

const Limits& limits() { return g_limits; }
void set_limits(const Limits& l) { g_limits = l; }

Cell::Cell(std::size_t dim, std::vector<LinConstraint> constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
  for (const auto& c : constraints_)
    if (c.dim() != dim_) throw exact::dimension_error("constraint dimension differs from cell dimension");
}

bool Cell::contains(const Vector& x) const {
  if (x.size() != dim_) throw exact::dimension_error("point dimension differs from cell dimension");
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.satisfied_by(x); });
}

bool Cell::is_homogeneous() const {
  return std::all_of(constraints_.begin(), constraints_.end(), [](const auto& c) { return c.is_homogeneous(); });
}

bool Cell::has_strict() const {
  return std::any_of(constraints_.begin(), constraints_.end(), [](const auto& c) { return c.is_strict(); });
}

Cell Cell::with(const LinConstraint& c) const {
  Cell r = *this;
  if (c.dim() != dim_) throw exact::dimension_error("constraint dimension differs from cell dimension");
  r.constraints_.push_back(c);
  return r;
}

Cell Cell::conjoin(const Cell& other) const {
  if (other.dim_ != dim_) throw exact::dimension_error("conjoining cells of different dimension");
  Cell r = *this;
  r.constraints_.insert(r.constraints_.end(), other.constraints_.begin(), other.constraints_.end());
  return r;
}

Cell Cell::relaxed() const {
  Cell r = *this;
  for (auto& c : r.constraints_) c = c.relaxed();
  return r;
}

Cell Cell::embedded(std::size_t dim, std::size_t offset) const {
  std::vector<LinConstraint> rows;
  rows.reserve(constraints_.size());
  for (const auto& c : constraints_) rows.push_back(c.embedded(dim, offset));
  return Cell(dim, std::move(rows));
}

std::string Cell::to_string(const std::vector<std::string>& names) const {
  if (constraints_.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (i) out += " & ";
    out += constraints_[i].to_string(names);
  }
  return out;
}

bool cell_is_empty(const Cell& c) { return rows_empty(c.constraints(), c.dim()); }

bool fm_is_empty(const Cell& c) { return fm_rows_empty(c.constraints(), c.dim()); }

std::optional<Vector> sample_point(const Cell& c) {
  const std::size_t dim = c.dim();
  std::vector<std::pair<std::size_t, Rows>> trail;
  auto rows = tidy(c.constraints(), dim);
  while (rows) {
    const auto v = pick_variable(*rows, dim);
    if (!v) break;
    trail.emplace_back(*v, *rows);
    rows = eliminate(*rows, *v, dim);
  }
  if (!rows) return std::nullopt;

  Vector x = exact::zero_vector(dim);
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    const std::size_t var = it->first;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_strict = false;
    bool hi_strict = false;
    std::optional<Rational> fixed;
    for (const auto& r : it->second) {
      const Rational& a = r.coeffs()[var];
      if (sgn(a) == 0) continue;
      Rational rest = 0;
      for (std::size_t i = 0; i < dim; ++i)
        if (i != var && sgn(r.coeffs()[i]) != 0) rest += r.coeffs()[i] * x[i];
      const Rational bound = (r.constant() - rest) / a;
      if (r.relation() == Relation::EQ) {
        fixed = bound;
      } else if (sgn(a) > 0) {
        if (!hi || bound < *hi || (bound == *hi && r.is_strict())) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || r.is_strict()) : r.is_strict();
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && r.is_strict())) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || r.is_strict()) : r.is_strict();
          lo = bound;
        }
      }
    }
    x[var] = fixed ? *fixed : pick_between(lo, lo_strict, hi, hi_strict);
  }
  if (!c.contains(x)) throw std::logic_error("sample point back-substitution produced a point outside its cell");
  return x;
}

namespace {

// Equalities in reduced row-echelon form; inequalities rewritten so they do
// not mention pivot variables. nullopt when the equalities are inconsistent
// or an inequality reduces to false.
std::optional<Rows> reduce_by_equalities(const Rows& rows, std::size_t dim) {
  Rows eqs;
  Rows ineqs;
  for (const auto& r : rows) (r.relation() == Relation::EQ ? eqs : ineqs).push_back(r);
  if (eqs.empty()) return rows;

  exact::Matrix m(eqs.size(), dim + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = eqs[i].coeffs()[j];
    m(i, dim) = eqs[i].constant();
  }
  const exact::EchelonForm e = exact::rref(std::move(m));
  Rows out;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == dim) return std::nullopt;
    const Vector row = e.reduced.row(i);
    out.emplace_back(Vector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dim)), Relation::EQ, row[dim]);
  }
  for (const auto& r : ineqs) {
    Vector c = r.coeffs();
    Rational k = r.constant();
    for (std::size_t i = 0; i < e.rank(); ++i) {
      const Rational f = c[e.pivots[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) c[j] -= f * e.reduced(i, j);
      k -= f * e.reduced(i, dim);
    }
    LinConstraint reduced(std::move(c), r.relation(), k);
    if (reduced.is_false()) return std::nullopt;
    if (!reduced.is_true()) out.push_back(std::move(reduced));
  }
  return out;
}

}  // namespace

std::optional<Cell> simplify(const Cell& c) {
  const std::size_t dim = c.dim();
  auto rows = tidy(c.constraints(), dim);
  if (!rows || rows_empty(*rows, dim)) return std::nullopt;

  // Promote non-strict bounds that are tight everywhere to equalities.
  bool changed = true;
  while (changed) {
    changed = false;
    rows = reduce_by_equalities(*rows, dim);
    if (rows) rows = tidy(*rows, dim);
    if (!rows) throw std::logic_error("a nonempty cell became empty during canonicalization");
    for (auto& r : *rows) {
      if (r.relation() != Relation::LE) continue;
      Rows probe = *rows;
      for (auto& q : probe)
        if (q == r) q = LinConstraint(r.coeffs(), Relation::LT, r.constant());
      if (rows_empty(probe, dim)) {
        r = LinConstraint(r.coeffs(), Relation::EQ, r.constant());
        changed = true;
        break;
      }
    }
  }

  // Drop inequalities implied by the remaining constraints.
  std::size_t i = 0;
  while (i < rows->size()) {
    if ((*rows)[i].relation() == Relation::EQ) {
      ++i;
      continue;
    }
    Rows probe;
    probe.reserve(rows->size());
    for (std::size_t j = 0; j < rows->size(); ++j)
      if (j != i) probe.push_back((*rows)[j]);
    probe.push_back((*rows)[i].negation().front());
    if (rows_empty(probe, dim)) {
      rows->erase(rows->begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::stable_sort(rows->begin(), rows->end(), [](const LinConstraint& x, const LinConstraint& y) {
    const bool xe = x.relation() == Relation::EQ;
    const bool ye = y.relation() == Relation::EQ;
    if (xe != ye) return xe;
    if (xe) return false;
    return x < y;
  });
  return Cell(dim, std::move(*rows));
}

std::optional<Cell> project(const Cell& c, const std::vector<std::size_t>& vars) {
  const std::size_t dim = c.dim();
  auto rows = tidy(c.constraints(), dim);
  for (std::size_t v : vars) {
    if (!rows) return std::nullopt;
    if (v >= dim) throw exact::dimension_error("projection variable out of range");
    rows = eliminate(*rows, v, dim);
  }
  if (!rows) return std::nullopt;
  return simplify(Cell(dim, std::move(*rows)));
}

bool cell_subset(const Cell& a, const Cell& b) {
  if (a.dim() != b.dim()) throw exact::dimension_error("cell inclusion across dimensions");
  for (const auto& k : b.constraints()) {
    for (const auto& piece : k.negation()) {
      Rows probe = a.constraints();
      probe.push_back(piece);
      if (!rows_empty(probe, a.dim())) return false;
    }
  }
  return true;
}

}  // namespace povswb::semilin
