#include "povswb/semilin/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace povswb::semilin {

LinExpr LinExpr::var(std::size_t index) {
  LinExpr e;
  e.coeffs.assign(index + 1, Rational(0));
  e.coeffs[index] = 1;
  e.constant = 0;
  return e;
}

LinExpr LinExpr::constant_of(const Rational& c) { return LinExpr{{}, c}; }

LinExpr operator+(const LinExpr& a, const LinExpr& b) {
  LinExpr r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeff(i) + b.coeff(i);
  r.constant = a.constant + b.constant;
  return r;
}

LinExpr operator-(const LinExpr& a) { return Rational(-1) * a; }
LinExpr operator-(const LinExpr& a, const LinExpr& b) { return a + (-b); }

LinExpr operator*(const Rational& s, const LinExpr& a) {
  LinExpr r = a;
  for (auto& c : r.coeffs) c *= s;
  r.constant *= s;
  return r;
}

LinPoint var_point(std::size_t first, std::size_t n) {
  LinPoint p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(LinExpr::var(first + i));
  return p;
}

LinPoint const_point(const Vector& v) {
  LinPoint p;
  for (const auto& x : v) p.push_back(LinExpr::constant_of(x));
  return p;
}

LinPoint operator+(const LinPoint& a, const LinPoint& b) {
  if (a.size() != b.size()) throw exact::dimension_error("adding points of different dimension");
  LinPoint r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

LinPoint operator-(const LinPoint& a, const LinPoint& b) {
  if (a.size() != b.size()) throw exact::dimension_error("subtracting points of different dimension");
  LinPoint r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

LinPoint operator*(const LinExpr& scalar_var, const Vector& direction) {
  LinPoint r;
  for (const auto& d : direction) r.push_back(d * scalar_var);
  return r;
}

struct Formula::Node {
  Kind kind;
  std::optional<LinConstraint> atom;
  std::vector<Formula> children;
  std::vector<std::size_t> bound;
};

Formula Formula::truth() { return Formula(std::make_shared<const Node>(Node{Kind::True, {}, {}, {}})); }
Formula Formula::falsity() { return Formula(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}})); }

Formula Formula::atom(LinConstraint c) {
  if (c.is_true()) return truth();
  if (c.is_false()) return falsity();
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(c), {}, {}}));
}

Formula Formula::compare(const LinExpr& lhs, Relation rel, const LinExpr& rhs) {
  const LinExpr d = lhs - rhs;
  return atom(LinConstraint(d.coeffs, rel, -d.constant));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}, {}}));
}

Formula Formula::conj(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  if (parts.size() == 1) return parts.front();
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(parts), {}}));
}

Formula Formula::disj(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  if (parts.size() == 1) return parts.front();
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(parts), {}}));
}

Formula Formula::implies(Formula a, Formula b) { return disj({negation(std::move(a)), std::move(b)}); }

Formula Formula::exists(std::vector<std::size_t> vars, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, {std::move(body)}, std::move(vars)}));
}

Formula Formula::forall(std::vector<std::size_t> vars, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Forall, {}, {std::move(body)}, std::move(vars)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const LinConstraint& Formula::constraint() const { return *node_->atom; }
const std::vector<Formula>& Formula::children() const { return node_->children; }
const std::vector<std::size_t>& Formula::bound() const { return node_->bound; }

std::size_t Formula::width() const {
  std::size_t w = 0;
  if (node_->atom) {
    const auto& c = node_->atom->coeffs();
    for (std::size_t i = c.size(); i > 0; --i)
      if (sgn(c[i - 1]) != 0) {
        w = i;
        break;
      }
  }
  for (auto v : node_->bound) w = std::max(w, v + 1);
  for (const auto& ch : node_->children) w = std::max(w, ch.width());
  return w;
}

bool Formula::evaluate_quantifier_free(const Vector& assignment) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: {
      const auto& c = constraint();
      if (c.dim() > assignment.size()) throw exact::dimension_error("assignment too short for atom");
      Vector x(assignment.begin(), assignment.begin() + static_cast<std::ptrdiff_t>(c.dim()));
      return c.satisfied_by(x);
    }
    case Kind::Not: return !children()[0].evaluate_quantifier_free(assignment);
    case Kind::And:
      return std::all_of(children().begin(), children().end(),
                         [&](const Formula& f) { return f.evaluate_quantifier_free(assignment); });
    case Kind::Or:
      return std::any_of(children().begin(), children().end(),
                         [&](const Formula& f) { return f.evaluate_quantifier_free(assignment); });
    case Kind::Exists:
    case Kind::Forall: throw std::invalid_argument("quantified formula passed to the quantifier-free evaluator");
  }
  return false;
}

Formula member(const SemiLinearSet& s, const LinPoint& x) {
  if (x.size() != s.dim())
    throw exact::dimension_error("membership point has " + std::to_string(x.size()) + " coordinates, set lives in Q^" +
                                 std::to_string(s.dim()));
  std::vector<Formula> cells;
  for (const auto& cell : s.cells()) {
    std::vector<Formula> atoms;
    for (const auto& k : cell.constraints()) {
      LinExpr lhs = LinExpr::constant_of(0);
      for (std::size_t i = 0; i < s.dim(); ++i)
        if (sgn(k.coeffs()[i]) != 0) lhs = lhs + k.coeffs()[i] * x[i];
      atoms.push_back(Formula::compare(lhs, k.relation(), LinExpr::constant_of(k.constant())));
    }
    cells.push_back(Formula::conj(std::move(atoms)));
  }
  return Formula::disj(std::move(cells));
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(std::size_t width) : width_(width) {}

  // Set of assignments satisfying f (or its negation), in Q^width.
  SemiLinearSet eval(const Formula& f, bool negated) {
    using Kind = Formula::Kind;
    switch (f.kind()) {
      case Kind::True: return negated ? SemiLinearSet::empty(width_) : SemiLinearSet::universe(width_);
      case Kind::False: return negated ? SemiLinearSet::universe(width_) : SemiLinearSet::empty(width_);
      case Kind::Atom: {
        const LinConstraint c = f.constraint().padded(width_);
        if (!negated) return SemiLinearSet::from_cell(Cell(width_, {c}));
        std::vector<Cell> pieces;
        for (const auto& p : c.negation()) pieces.emplace_back(width_, std::vector<LinConstraint>{p});
        return SemiLinearSet(width_, std::move(pieces));
      }
      case Kind::Not: return eval(f.children()[0], !negated);
      case Kind::And:
      case Kind::Or: {
        const bool as_and = (f.kind() == Kind::And) != negated;
        std::optional<SemiLinearSet> acc;
        for (const auto& ch : f.children()) {
          SemiLinearSet part = eval(ch, negated);
          if (!acc) {
            acc = std::move(part);
          } else {
            acc = as_and ? intersect(*acc, part) : unite(*acc, part);
          }
          if (as_and && acc->cells().empty()) break;
        }
        return *acc;
      }
      case Kind::Exists:
      case Kind::Forall: {
        const bool existential = (f.kind() == Kind::Exists) != negated;
        // exists v. g      -> project(g)          negated: complement(project(g))
        // forall v. g      -> complement(project(not g))   negated: project(not g)
        const bool body_negated = f.kind() == Kind::Forall;
        SemiLinearSet inner = project_out(eval(f.children()[0], body_negated), f.bound());
        return existential ? inner : complement(inner);
      }
    }
    throw std::logic_error("unknown formula kind");
  }

 private:
  std::size_t width_;
};

void collect_bound(const Formula& f, std::vector<std::size_t>& out) {
  for (auto v : f.bound()) out.push_back(v);
  for (const auto& ch : f.children()) collect_bound(ch, out);
}

}  // namespace

SemiLinearSet qe(const Formula& f, std::size_t free_dim) {
  std::vector<std::size_t> bound;
  collect_bound(f, bound);
  std::sort(bound.begin(), bound.end());
  if (std::adjacent_find(bound.begin(), bound.end()) != bound.end())
    throw std::invalid_argument("a variable is quantified more than once");
  for (auto v : bound)
    if (v < free_dim) throw std::invalid_argument("free variable x" + std::to_string(v + 1) + " is quantified");
  const std::size_t width = std::max(free_dim, f.width());
  Evaluator ev(width);
  return normalize(truncate(ev.eval(f, false), free_dim));
}

bool qe_holds(const Formula& sentence) { return !qe(sentence, 0).cells().empty(); }

}  // namespace povswb::semilin
