#include "simplex.hpp"

#include <stdexcept>

namespace povswb::semilin::detail {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, Vector(cols + 1, Rational(0))), basis_(rows, 0), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule; the objectives used here are always bounded.
  Rational maximize(const Vector& cost, const std::vector<bool>& allowed) {
    std::vector<bool> is_basic(cols_, false);
    while (true) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (auto b : basis_) is_basic[b] = true;
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_ && !enter; ++j) {
        if (!allowed[j] || is_basic[j]) continue;
        Rational d = cost[j];
        for (std::size_t r = 0; r < t_.size(); ++r)
          if (sgn(t_[r][j]) != 0 && sgn(cost[basis_[r]]) != 0) d -= cost[basis_[r]] * t_[r][j];
        if (sgn(d) > 0) enter = j;
      }
      if (!enter) break;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (sgn(t_[r][*enter]) <= 0) continue;
        const Rational ratio = t_[r][cols_] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) throw std::logic_error("simplex: unbounded objective");
      pivot(*leave, *enter);
    }
    Rational value = 0;
    for (std::size_t r = 0; r < t_.size(); ++r) value += cost[basis_[r]] * t_[r][cols_];
    return value;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational value_of(std::size_t col) const {
    for (std::size_t r = 0; r < t_.size(); ++r)
      if (basis_[r] == col) return t_[r][cols_];
    return 0;
  }

 private:
  std::vector<Vector> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

std::optional<Vector> strict_feasible_point(const std::vector<LinConstraint>& rows, std::size_t dim) {
  // Only variables that occur get columns.
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < dim; ++v)
    for (const auto& r : rows)
      if (sgn(r.coeffs()[v]) != 0) {
        vars.push_back(v);
        break;
      }
  bool any_strict = false;
  std::size_t ineqs = 0;
  for (const auto& r : rows) {
    if (r.is_false()) return std::nullopt;
    any_strict = any_strict || r.is_strict();
    if (r.relation() != Relation::EQ) ++ineqs;
  }

  // Columns: p (k), q (k), e, slacks (ineqs + 1 for e <= 1), artificials.
  const std::size_t k = vars.size();
  const std::size_t e_col = 2 * k;
  const std::size_t slack0 = e_col + 1;
  const std::size_t m = rows.size() + 1;
  const std::size_t art0 = slack0 + ineqs + 1;
  const std::size_t cols = art0 + m;
  Tableau t(m, cols);
  std::vector<bool> needs_art(m, false);
  std::size_t slack = slack0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const bool flip = sgn(r.constant()) < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      t.at(i, j) = sign * r.coeffs()[vars[j]];
      t.at(i, k + j) = -sign * r.coeffs()[vars[j]];
    }
    t.rhs(i) = sign * r.constant();
    if (r.relation() == Relation::EQ) {
      needs_art[i] = true;
    } else {
      if (r.is_strict()) t.at(i, e_col) = sign;
      t.at(i, slack) = sign;
      if (flip) {
        needs_art[i] = true;
      } else {
        t.basic(i) = slack;
      }
      ++slack;
    }
  }
  const std::size_t cap = rows.size();
  t.at(cap, e_col) = 1;
  t.at(cap, slack) = 1;
  t.rhs(cap) = 1;
  t.basic(cap) = slack;

  std::vector<bool> allowed(cols, true);
  bool has_art = false;
  Vector phase1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (!needs_art[i]) continue;
    has_art = true;
    t.at(i, art0 + i) = 1;
    t.basic(i) = art0 + i;
    phase1[art0 + i] = -1;
  }
  if (has_art) {
    if (sgn(t.maximize(phase1, allowed)) < 0) return std::nullopt;
    for (std::size_t c = art0; c < cols; ++c) allowed[c] = false;
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basic(r) < art0) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art0 && !col; ++j)
        if (sgn(t.at(r, j)) != 0) col = j;
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
  }
  if (any_strict) {
    Vector phase2(cols, Rational(0));
    phase2[e_col] = 1;
    if (sgn(t.maximize(phase2, allowed)) <= 0) return std::nullopt;
  }
  Vector x = exact::zero_vector(dim);
  for (std::size_t j = 0; j < k; ++j) x[vars[j]] = t.value_of(j) - t.value_of(k + j);
  return x;
}

std::vector<LinConstraint> drop_redundant(std::vector<LinConstraint> rows, std::size_t dim) {
  std::size_t i = 0;
  while (i < rows.size()) {
    bool redundant = true;
    for (const auto& piece : rows[i].negation()) {
      std::vector<LinConstraint> probe;
      probe.reserve(rows.size());
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (j != i) probe.push_back(rows[j]);
      probe.push_back(piece);
      if (strict_feasible_point(probe, dim)) {
        redundant = false;
        break;
      }
    }
    if (redundant) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return rows;
}

}  // namespace povswb::semilin::detail
