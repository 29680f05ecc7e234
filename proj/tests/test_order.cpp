#include <doctest.h>

#include "povswb/order/analysis.hpp"
#include "povswb/order/quotient.hpp"
#include "povswb/semilin/formula.hpp"
#include "support/generators.hpp"
#include "support/order_oracles.hpp"

using namespace povswb;
using namespace povswb::order;
using semilin::Cell;
using semilin::Formula;
using semilin::LinConstraint;
using semilin::LinExpr;
using semilin::Relation;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Vector qvec(std::initializer_list<Rational> xs) { return Vector(xs); }

LinConstraint eq0(std::initializer_list<long> c) { return LinConstraint(vec(c), Relation::EQ, 0); }
LinConstraint gt0(std::initializer_list<long> c) { return LinConstraint(exact::negate(vec(c)), Relation::LT, 0); }
LinConstraint ge0(std::initializer_list<long> c) { return LinConstraint(exact::negate(vec(c)), Relation::LE, 0); }

SemiLinearSet cells(std::size_t dim, std::vector<std::vector<LinConstraint>> cs) {
  std::vector<Cell> out;
  for (auto& c : cs) out.emplace_back(dim, std::move(c));
  return SemiLinearSet(dim, std::move(out));
}

PreOrderedSpace space(std::size_t dim, std::vector<std::vector<LinConstraint>> cs) {
  return PreOrderedSpace(cells(dim, std::move(cs)));
}

PreOrderedSpace quadrant() { return orthant(2); }
PreOrderedSpace lex() { return lexicographic(2); }
PreOrderedSpace open_half() { return space(2, {{gt0({0, 1})}, {eq0({1, 0}), eq0({0, 1})}}); }
PreOrderedSpace upper_half() { return space(2, {{ge0({0, 1})}}); }
PreOrderedSpace origin2() { return space(2, {{eq0({1, 0}), eq0({0, 1})}}); }

SemiLinearSet closed_right() { return cells(2, {{ge0({1, 0})}}); }

Subspace line(std::initializer_list<long> v) { return Subspace::span(v.size(), {vec(v)}); }

std::vector<Vector> box(std::size_t dim, long range, long den) {
  std::vector<Vector> pts{{}};
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<Vector> next;
    for (const auto& p : pts)
      for (long k = -range * den; k <= range * den; ++k) {
        Vector q = p;
        q.push_back(Rational(k, den));
        q.back().canonicalize();
        next.push_back(q);
      }
    pts = std::move(next);
  }
  return pts;
}

struct Sample {
  PreOrderedSpace space;
  AnalysisReport report;
};

// The shared generated population: 200 valid wedges cycling through
// dimensions 1, 2, 3.
const std::vector<Sample>& population() {
  static const std::vector<Sample> pop = [] {
    std::vector<Sample> out;
    WedgeGenerator g(2024);
    for (int i = 0; i < 200; ++i) {
      PreOrderedSpace s = g.next(1 + static_cast<std::size_t>(i) % 3);
      AnalysisReport r = analyze(s);
      out.push_back({std::move(s), std::move(r)});
    }
    return out;
  }();
  return pop;
}

// Points worth probing near a set: samples of the set, of its closure and of
// the complement, plus a few small-denominator lattice points.
std::vector<Vector> probe_points(const SemiLinearSet& s, gen::Rng& rng) {
  std::vector<Vector> pts;
  for (const auto& part : {s, topo_closure(s), complement(s)})
    for (const auto& c : part.cells())
      if (auto p = semilin::sample_point(c)) pts.push_back(*p);
  for (int i = 0; i < 6; ++i) {
    const long den = 1L << gen::integer(rng, 0, 4);
    Vector p;
    for (std::size_t k = 0; k < s.dim(); ++k) p.emplace_back(gen::integer(rng, -2 * den, 2 * den), den);
    for (auto& x : p) x.canonicalize();
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

TEST_CASE("PreOrderedSpace rejects inhomogeneous constraints") {
  CHECK_THROWS_AS(PreOrderedSpace(cells(1, {{LinConstraint(vec({1}), Relation::LE, 1)}})), std::invalid_argument);
  CHECK(exact::is_zero(origin2().regulator()));
  CHECK(quadrant().regulator() == vec({1, 1}));
}

TEST_CASE("validate_wedge") {
  CHECK(validate_wedge(lex()).valid);
  CHECK(validate_wedge(origin2()).valid);

  const auto rays = space(2, {{ge0({1, 0}), eq0({0, 1})}, {eq0({1, 0}), ge0({0, 1})}});
  const auto check = validate_wedge(rays);
  CHECK_FALSE(check.valid);
  CHECK(check.contains_zero);
  REQUIRE(check.additivity_witness);
  const auto& [x, y] = *check.additivity_witness;
  CHECK(rays.positive().contains(x));
  CHECK(rays.positive().contains(y));
  CHECK_FALSE(rays.positive().contains(exact::add(x, y)));

  CHECK_FALSE(validate_wedge(space(1, {{gt0({1})}})).contains_zero);
}

TEST_CASE("the lexicographic wedge is closed under addition on random pairs") {
  const auto w = lex();
  gen::Rng rng(5);
  int pairs = 0;
  while (pairs < 1000) {
    const Vector x = gen::point(rng, 2, 4, 4), y = gen::point(rng, 2, 4, 4);
    if (!w.positive().contains(x) || !w.positive().contains(y)) continue;
    ++pairs;
    CHECK(w.positive().contains(exact::add(x, y)));
  }
}

TEST_CASE("order_interval") {
  const auto sq = order_interval(quadrant(), vec({0, 0}), vec({1, 1}));
  CHECK(semilin::set_equal(sq, cells(2, {{ge0({1, 0}), ge0({0, 1}), LinConstraint(vec({1, 0}), Relation::LE, 1),
                                          LinConstraint(vec({0, 1}), Relation::LE, 1)}})));
  CHECK(order_interval(quadrant(), vec({1, 1}), vec({0, 0})).is_empty());
  CHECK_THROWS_AS(order_interval(quadrant(), vec({0}), vec({1, 1})), exact::dimension_error);

  const auto w = lex();
  const Vector a = vec({-1, 0}), b = vec({1, 0});
  const auto strip = order_interval(w, a, b);
  for (const auto& p : box(2, 3, 2)) CHECK(strip.contains(p) == (oracle::leq(w, a, p) && oracle::leq(w, p, b)));
  CHECK(strip.contains(vec({1, -7})));
  CHECK_FALSE(strip.contains(vec({1, 7})));
}

TEST_CASE("lineality and is_cone") {
  CHECK(lineality(quadrant()).is_trivial());
  CHECK(is_cone(quadrant()));
  CHECK_FALSE(is_cone(upper_half()));
  CHECK(lineality(upper_half()) == line({1, 0}));
  CHECK(is_cone(lex()));

  // W ∩ -W holds no point off the origin: every cell pair meets every
  // half-space x_k < 0 or x_k > 0 emptily, by plain elimination.
  const auto w = lex().positive();
  const auto minus = semilin::reflect(w);
  for (const auto& a : w.cells())
    for (const auto& b : minus.cells())
      for (std::size_t k = 0; k < 2; ++k)
        for (const auto rel : {-1, 1}) {
          Vector c = exact::unit_vector(2, k);
          if (rel < 0) c = exact::negate(c);
          CHECK(semilin::fm_is_empty(a.conjoin(b).with(LinConstraint(c, Relation::LT, 0))));
        }
}

TEST_CASE("is_majorizing") {
  CHECK(is_majorizing(quadrant()));
  CHECK_FALSE(is_majorizing(space(2, {{ge0({1, 0}), eq0({0, 1})}})));
  CHECK(is_majorizing(lex()));
  CHECK_FALSE(is_majorizing(origin2()));

  // x = (x1 + 1 + |x1|, x2) - (1 + |x1|, 0) with both parts lexicographically positive.
  const auto w = lex();
  gen::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Vector x = gen::point(rng, 2, 10, 7);
    const Rational shift = 1 + abs(x[0]);
    const Vector w2 = qvec({shift, Rational(0)});
    const Vector w1 = exact::add(x, w2);
    CHECK(w.positive().contains(w1));
    CHECK(w.positive().contains(w2));
  }
}

TEST_CASE("is_almost_archimedean uses the interval definition") {
  CHECK_FALSE(is_almost_archimedean(upper_half()));
  CHECK(is_almost_archimedean(quadrant()));
  // Both wedges below hold no line, yet ±x <= u/n for every n on a whole axis.
  CHECK_FALSE(is_almost_archimedean(lex()));
  CHECK(is_cone(lex()));
  CHECK_FALSE(is_almost_archimedean(open_half()));
  CHECK(is_cone(open_half()));
  for (long n = 1; n <= 1024; n *= 2) {
    CHECK(oracle::within(lex(), vec({0, 1}), vec({0, 0}), qvec({Rational(1, n), 0})));
    CHECK(oracle::within(open_half(), vec({1, 0}), vec({0, 0}), qvec({0, Rational(1, n)})));
  }
}

TEST_CASE("is_archimedean") {
  CHECK(is_archimedean(quadrant()));
  CHECK(is_archimedean(orthant(3)));
  CHECK(is_archimedean(origin2()));

  const auto w = lex();
  CHECK_FALSE(is_archimedean(w));
  const auto y = archimedean_witness(w);
  REQUIRE(y);
  for (long k = 0; k <= 10; ++k) {
    const Vector u = qvec({Rational(1, 1L << k), 0});
    CHECK(oracle::leq(w, vec({0, 1}), u));
    CHECK(oracle::leq(w, *y, exact::scale(Rational(1, 1L << k), w.regulator())));
  }
  CHECK_FALSE(w.positive().contains(vec({0, -1})));
  CHECK_FALSE(w.positive().contains(exact::negate(*y)));

  const auto h = open_half();
  CHECK_FALSE(is_archimedean(h));
  for (long k = 0; k <= 10; ++k) CHECK(oracle::leq(h, vec({1, 0}), qvec({0, Rational(1, 1L << k)})));
  CHECK_FALSE(h.positive().contains(vec({-1, 0})));
}

TEST_CASE("derived_set examples") {
  const auto w = lex();
  const auto d = derived_set(w, w.positive());
  CHECK(semilin::set_equal(d, closed_right()));

  // (0,-5) is the limit of (1/n, -5) with regulator (2,0).
  const Vector x = vec({0, -5});
  for (long n = 1; n <= 64; ++n) {
    const Vector s = qvec({Rational(1, n), -5});
    CHECK(w.positive().contains(s));
    CHECK(oracle::within(w, s, x, qvec({Rational(2, n), 0})));
  }
  CHECK_FALSE(oracle::searched_limit(w, w.positive(), vec({-1, 0}), 2, 4));
  CHECK(oracle::searched_limit(w, w.positive(), x, 2, 4));

  const auto zero = cells(2, {{eq0({1, 0}), eq0({0, 1})}});
  CHECK(semilin::set_equal(derived_set(quadrant(), zero), zero));
  const auto axis = derived_set(upper_half(), zero);
  CHECK(semilin::set_equal(axis, cells(2, {{eq0({0, 1})}})));
  for (long a = -3; a <= 3; ++a)
    for (long k = 0; k <= 10; ++k)
      CHECK(oracle::within(upper_half(), vec({0, 0}), vec({a, 0}), qvec({0, Rational(1, 1L << k)})));

  CHECK_THROWS_AS(derived_set(w, semilin::SemiLinearSet(3)), exact::dimension_error);
}

TEST_CASE("derived sets under the zero wedge leave sets unchanged") {
  const auto z = origin2();
  gen::Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    const auto s = gen::set(rng, 2, 2, 2, 2, false);
    CHECK(semilin::set_equal(derived_set(z, s), s));
  }
}

TEST_CASE("ru_witness") {
  const auto w = lex();
  const Vector x = vec({0, -5});
  const auto wit = ru_witness(w, w.positive(), x);
  REQUIRE(wit);
  CHECK(wit->approximants.size() == 64);
  CHECK(oracle::witness_verifies(w, w.positive(), x, *wit));
  CHECK_FALSE(ru_witness(w, w.positive(), vec({-1, 0})));
}

TEST_CASE("ru_closure and is_ru_closed") {
  const auto q = ru_closure(quadrant(), quadrant().positive());
  CHECK(q.steps == 0);
  CHECK(semilin::set_equal(q.closure, quadrant().positive()));

  const auto l = ru_closure(lex(), lex().positive());
  CHECK(l.steps == 1);
  CHECK(semilin::set_equal(l.closure, closed_right()));
  CHECK(l.iterates.size() == 2);
  CHECK(semilin::set_equal(derived_set(lex(), l.closure), l.closure));

  const auto h = ru_closure(open_half(), open_half().positive());
  CHECK(h.steps == 1);
  CHECK(semilin::set_equal(h.closure, upper_half().positive()));

  CHECK(is_ru_closed(quadrant(), quadrant().positive()));
  CHECK_FALSE(is_ru_closed(lex(), lex().positive()));
  CHECK(is_ru_closed(lex(), closed_right()));

  CHECK_THROWS_AS(ru_closure(lex(), lex().positive(), 0), cap_exceeded);
}

TEST_CASE("archimedeanization") {
  const auto l = archimedeanization(lex());
  CHECK(l.kernel == line({0, 1}));
  CHECK(l.projection.rows() == 1);
  CHECK(l.projection.row(0) == vec({1, 0}));
  CHECK(l.quotient.dim() == 1);
  CHECK(semilin::set_equal(l.quotient.positive(), cells(1, {{ge0({1})}})));

  const auto h = archimedeanization(open_half());
  CHECK(h.kernel == line({1, 0}));
  CHECK(h.quotient.dim() == 1);
  CHECK(semilin::set_equal(h.quotient.positive(), cells(1, {{ge0({1})}})));

  const auto q = archimedeanization(quadrant());
  CHECK(q.kernel.is_trivial());
  CHECK(q.projection == exact::Matrix::identity(2));
  CHECK(semilin::set_equal(q.quotient.positive(), quadrant().positive()));

  const auto f = archimedeanization(space(2, {{}}));
  CHECK(f.quotient.dim() == 0);
}

TEST_CASE("infinitesimal_ideal") {
  CHECK(infinitesimal_ideal(lex()) == line({0, 1}));
  CHECK(infinitesimal_ideal(quadrant()).is_trivial());
  CHECK(infinitesimal_ideal(upper_half()) == line({1, 0}));
  CHECK(infinitesimal_ideal(open_half()) == line({1, 0}));

  // ±(0,1) <= (1,0)/n because (1/n, ∓1) is lexicographically positive.
  for (long n = 1; n <= 64; ++n) {
    CHECK(lex().positive().contains(qvec({Rational(1, n), -1})));
    CHECK(lex().positive().contains(qvec({Rational(1, n), 1})));
  }
  // (1,0) is not infinitesimal: no small regulator bounds it at every scale.
  const auto w = lex();
  for (const auto& u : oracle::sign_vectors(2)) {
    if (!w.positive().contains(u)) continue;
    bool bounded = true;
    for (long n = 1; n <= 64 && bounded; ++n)
      bounded = oracle::within(w, vec({0, 0}), vec({n, 0}), u);
    CHECK_FALSE(bounded);
  }
}

TEST_CASE("ideal_tower and alpha_type") {
  const auto q = ideal_tower(quadrant());
  CHECK(q.lambda == 0);
  REQUIRE(q.ideals.size() == 2);
  CHECK(q.ideals[0].is_trivial());
  CHECK(q.ideals[1].is_trivial());

  const auto l = ideal_tower(lex());
  CHECK(l.lambda == 1);
  REQUIRE(l.ideals.size() == 3);
  CHECK(l.ideals[1] == line({0, 1}));
  CHECK(l.ideals[2] == l.ideals[1]);

  const auto h = ideal_tower(upper_half());
  CHECK(h.lambda == 1);
  CHECK(h.ideals[1] == line({1, 0}));

  const auto l3 = ideal_tower(lexicographic(3));
  CHECK(l3.lambda == 1);
  CHECK(l3.ideals[1] == Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})}));

  CHECK(alpha_type(quadrant()) == 0);
  CHECK(alpha_type(lex()) == 1);
  CHECK(alpha_type(open_half()) == 1);
  CHECK(alpha_type(upper_half()) == 0);
}

TEST_CASE("has_order_unit") {
  CHECK(has_order_unit(quadrant(), vec({1, 1})));
  CHECK_FALSE(has_order_unit(quadrant(), vec({1, 0})));
  CHECK(has_order_unit(lex(), vec({1, 0})));
  CHECK_FALSE(has_order_unit(lex(), vec({0, 1})));
  CHECK_THROWS_AS(has_order_unit(quadrant(), vec({-1, 0})), std::invalid_argument);

  // t > |x1| works for the lexicographic order.
  gen::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Vector x = gen::point(rng, 2, 9, 5);
    const Vector tu = qvec({abs(x[0]) + 1, 0});
    CHECK(oracle::leq(lex(), x, tu));
    CHECK(oracle::leq(lex(), exact::negate(tu), x));
  }
}

TEST_CASE("is_order_ideal") {
  CHECK(is_order_ideal(lex(), line({0, 1})));
  CHECK_FALSE(is_order_ideal(quadrant(), line({1, 1})));
  CHECK(oracle::leq(quadrant(), vec({0, 0}), vec({1, 0})));
  CHECK(oracle::leq(quadrant(), vec({1, 0}), vec({1, 1})));
  CHECK_FALSE(line({1, 1}).contains(vec({1, 0})));
  for (const auto& s : {quadrant(), lex(), open_half()}) CHECK(is_order_ideal(s, Subspace(2)));
  // Without a cone, [0,0] is the whole lineality space.
  CHECK_FALSE(is_order_ideal(upper_half(), Subspace(2)));
  CHECK(is_order_ideal(upper_half(), line({1, 0})));
  CHECK(is_order_ideal(origin2(), Subspace(2)));
}

TEST_CASE("analyze summarizes the named examples") {
  const auto l = analyze(lex());
  CHECK(l.is_wedge);
  CHECK(l.is_cone);
  CHECK(l.is_majorizing);
  CHECK_FALSE(l.is_almost_archimedean);
  CHECK_FALSE(l.is_archimedean);
  CHECK_FALSE(l.is_ru_closed);
  CHECK(l.alpha_type == std::optional<std::size_t>(1));
  CHECK(l.lambda_type == std::optional<std::size_t>(1));
  CHECK(l.closure_steps.size() == 2);

  const auto bad = analyze(space(2, {{ge0({1, 0}), eq0({0, 1})}, {eq0({1, 0}), ge0({0, 1})}}));
  CHECK_FALSE(bad.is_wedge);
  CHECK(bad.additivity_witness);
}

TEST_CASE("generated wedges are valid and mix both kinds") {
  std::size_t archimedean = 0;
  for (const auto& [s, r] : population()) {
    CHECK(r.is_wedge);
    CHECK(s.positive().is_homogeneous());
    if (r.is_archimedean) ++archimedean;
  }
  CHECK(archimedean > 20);
  CHECK(population().size() - archimedean > 20);
}

TEST_CASE("Archimedean exactly when X+ is ru-closed") {
  for (const auto& [s, r] : population()) {
    INFO(s.positive().to_string());
    CHECK(r.is_archimedean == r.is_ru_closed);
    CHECK(r.alpha_type.has_value());
    CHECK((r.alpha_type == std::optional<std::size_t>(0)) == r.is_ru_closed);
  }
}

TEST_CASE("every derived iterate of X+ is a wedge") {
  for (const auto& [s, r] : population()) {
    INFO(s.positive().to_string());
    REQUIRE_FALSE(r.closure_steps.empty());
    for (std::size_t k = 1; k < r.closure_steps.size(); ++k)
      CHECK(validate_wedge(PreOrderedSpace(r.closure_steps[k])).valid);
  }
}

TEST_CASE("the Archimedeanization is an Archimedean cone, majorizing exactly when X+ is") {
  for (const auto& [s, r] : population()) {
    INFO(s.positive().to_string());
    const auto q = archimedeanization(s);
    CHECK(is_cone(q.quotient));
    CHECK(is_archimedean(q.quotient));
    CHECK(is_majorizing(q.quotient) == r.is_majorizing);
    CHECK(q.projection * q.section == exact::Matrix::identity(q.quotient.dim()));
  }
}

TEST_CASE("topologically closed wedges are Archimedean") {
  for (const auto& [s, r] : population()) {
    if (!semilin::set_equal(semilin::topo_closure(s.positive()), s.positive())) continue;
    INFO(s.positive().to_string());
    CHECK(r.is_archimedean);
  }
}

TEST_CASE("almost Archimedean spaces close in at most one derivation") {
  for (const auto& [s, r] : population()) {
    if (!r.is_almost_archimedean) continue;
    INFO(s.positive().to_string());
    REQUIRE(r.alpha_type);
    CHECK(*r.alpha_type <= 1);
  }
}

TEST_CASE("infinitesimals are trivial exactly for almost Archimedean spaces") {
  for (const auto& [s, r] : population()) {
    INFO(s.positive().to_string());
    REQUIRE(r.ideals.size() >= 2);
    CHECK(r.ideals[1].is_trivial() == r.is_almost_archimedean);
    CHECK((r.lambda_type == std::optional<std::size_t>(0)) == r.is_almost_archimedean);
    if (r.is_archimedean && r.is_cone) CHECK(r.is_almost_archimedean);
    if (r.is_almost_archimedean) CHECK(r.is_cone);
  }
}

TEST_CASE("order units are never infinitesimal") {
  gen::Rng rng(41);
  for (const auto& [s, r] : population()) {
    INFO(s.positive().to_string());
    std::vector<Vector> units{s.regulator()};
    for (const auto& c : s.positive().cells())
      if (auto p = semilin::sample_point(c)) units.push_back(*p);
    const Subspace infinitesimals = r.ideals[1];
    for (const auto& u : units) {
      if (exact::is_zero(u)) continue;
      if (has_order_unit(s, u)) CHECK_FALSE(infinitesimals.contains(u));
    }
    if (r.is_majorizing) CHECK(has_order_unit(s, s.regulator()));
  }
}

TEST_CASE("the real-parameter reduction matches integer enumeration") {
  gen::Rng rng(17);
  for (std::size_t i = 0; i < population().size(); i += 4) {
    const auto& s = population()[i].space;
    INFO(s.positive().to_string());
    const std::size_t d = s.dim();
    const Vector& u = s.regulator();
    const auto y = semilin::var_point(0, d);
    const auto tu = LinExpr::var(d) * u;
    const Formula f = Formula::forall(
        {d}, Formula::implies(Formula::compare(LinExpr::constant_of(0), Relation::LT, LinExpr::var(d)),
                              s.nonneg(tu - y)));
    const auto bounded = semilin::qe(f, d);
    for (const auto& p : probe_points(bounded, rng)) {
      bool all = true;
      for (long n = 1; n <= 256 && all; ++n) all = oracle::leq(s, exact::scale(Rational(n), p), u);
      CHECK(bounded.contains(p) == all);
    }
  }
}

TEST_CASE("derived sets agree with witness sequences and regulator search") {
  gen::Rng rng(23);
  for (std::size_t i = 0; i < population().size(); i += 4) {
    const auto& s = population()[i].space;
    INFO(s.positive().to_string());
    const auto derived = derived_set(s, s.positive());
    for (const auto& x : probe_points(derived, rng)) {
      INFO(exact::to_string(x));
      if (derived.contains(x)) {
        const auto w = ru_witness(s, s.positive(), x);
        REQUIRE(w);
        CHECK(oracle::witness_verifies(s, s.positive(), x, *w));
      } else {
        CHECK_FALSE(oracle::searched_limit(s, s.positive(), x, 2, s.dim() == 3 ? 2 : 4));
      }
    }
  }
}
