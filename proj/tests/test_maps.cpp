#include <doctest.h>

#include "povswb/maps/linear_map.hpp"
#include "povswb/order/analysis.hpp"
#include "support/map_generators.hpp"
#include "support/order_oracles.hpp"

using namespace povswb;
using namespace povswb::maps;
using order::PreOrderedSpace;
using semilin::Cell;
using semilin::LinConstraint;
using semilin::Relation;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

PreOrderedSpace ray() { return order::orthant(1); }
PreOrderedSpace lex() { return order::lexicographic(2); }
PreOrderedSpace open_half() {
  return PreOrderedSpace(SemiLinearSet(2, {Cell(2, {LinConstraint(vec({0, -1}), Relation::LT, 0)}),
                                           Cell(2, {LinConstraint(vec({1, 0}), Relation::EQ, 0),
                                                    LinConstraint(vec({0, 1}), Relation::EQ, 0)})}));
}

SemiLinearSet ray_set() { return ray().positive(); }

// Nonzero positive maps from generated wedges into Archimedean codomains.
const std::vector<LinearMap>& positive_maps() {
  static const std::vector<LinearMap> maps = gen::positive_maps(20, 606, 31);
  return maps;
}

}  // namespace

TEST_CASE("LinearMap checks its shape") {
  CHECK_THROWS_AS(LinearMap(Matrix{{1, 0}}, ray(), ray()), exact::dimension_error);
  CHECK_NOTHROW(LinearMap(Matrix{{1, 0}}, lex(), ray()));
}

TEST_CASE("is_positive") {
  CHECK(is_positive(LinearMap(Matrix::identity(2), order::orthant(2), order::orthant(2))));
  CHECK_FALSE(is_positive(LinearMap(Matrix{{-1}}, ray(), ray())));
  CHECK(is_positive(LinearMap(Matrix{{1, 0}}, lex(), ray())));
  CHECK(semilin::set_equal(semilin::linear_image(lex().positive(), Matrix{{1, 0}}), ray_set()));
  CHECK_FALSE(is_positive(LinearMap(Matrix{{0, 1}}, lex(), ray())));
}

TEST_CASE("is_order_bounded") {
  CHECK(is_order_bounded(LinearMap(Matrix{{1, 0}}, lex(), ray())));
  CHECK(is_order_bounded(LinearMap(Matrix::identity(2), order::orthant(2), order::orthant(2))));
  CHECK(is_order_bounded(LinearMap(Matrix(1, 2), lex(), ray())));

  const LinearMap second(Matrix{{0, 1}}, lex(), ray());
  CHECK_FALSE(is_order_bounded(second));
  // (0,k) lies in [-(1,0),(1,0)] for every k while its image k is unbounded.
  for (long k = -1000; k <= 1000; k += 37) {
    CHECK(oracle::leq(lex(), vec({-1, 0}), vec({0, k})));
    CHECK(oracle::leq(lex(), vec({0, k}), vec({1, 0})));
    CHECK(second.apply(vec({0, k})) == vec({k}));
  }

  CHECK_THROWS_AS(is_order_bounded(LinearMap(Matrix(1, 4), order::orthant(4), ray())), size_cap_refused);
}

TEST_CASE("check_ru_continuity") {
  CHECK(check_ru_continuity(LinearMap(Matrix::identity(2), order::orthant(2), order::orthant(2)),
                            order::orthant(2).positive()));
  CHECK(check_ru_continuity(LinearMap(Matrix{{1, 0}}, lex(), ray()), ray_set()));
  CHECK_THROWS_AS(check_ru_continuity(LinearMap(Matrix::identity(2), lex(), lex()), lex().positive()),
                  std::invalid_argument);
}

TEST_CASE("factor_through_archimedeanization") {
  const auto f = factor_through_archimedeanization(LinearMap(Matrix{{1, 0}}, lex(), ray()));
  CHECK(f.presentation.projection == Matrix{{1, 0}});
  CHECK(f.presentation.section == Matrix::from_columns(2, {vec({1, 0})}));
  CHECK(f.factor.matrix() == Matrix{{1}});
  CHECK(f.factor.matrix() * f.quotient_map.matrix() == Matrix{{1, 0}});

  const auto z = factor_through_archimedeanization(LinearMap(Matrix(1, 2), lex(), ray()));
  CHECK(z.factor.matrix() == Matrix(1, 1));

  const LinearMap bad(Matrix{{1, 0}}, open_half(), ray());
  CHECK_FALSE(open_half().positive().contains(vec({-1, 0})));
  CHECK(open_half().positive().contains(vec({-1, 1})));
  CHECK(bad.apply(vec({-1, 1})) == vec({-1}));
  CHECK_THROWS_AS(factor_through_archimedeanization(bad), std::invalid_argument);

  CHECK_THROWS_AS(factor_through_archimedeanization(LinearMap(Matrix::identity(2), lex(), lex())),
                  std::invalid_argument);
}

TEST_CASE("positive maps are ru-continuous on ru-closed sets") {
  gen::Rng rng(9);
  std::size_t checked = 0;
  for (const auto& t : positive_maps()) {
    INFO(t.domain().positive().to_string());
    std::vector<SemiLinearSet> tests{t.codomain().positive(), semilin::SemiLinearSet::universe(t.codomain().dim())};
    for (int i = 0; i < 3; ++i)
      tests.push_back(semilin::topo_closure(gen::set(rng, t.codomain().dim(), 2, 2, 2, true)));
    for (const auto& s : tests) {
      if (!order::is_ru_closed(t.codomain(), s)) continue;
      CHECK(check_ru_continuity(t, s));
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("order-bounded maps into majorizing spaces are ru-continuous") {
  for (const auto& t : positive_maps()) {
    if (!is_order_bounded(t) || !order::is_majorizing(t.codomain())) continue;
    const auto s = t.codomain().positive();
    if (order::is_ru_closed(t.codomain(), s)) CHECK(check_ru_continuity(t, s));
  }
}

TEST_CASE("positive maps factor uniquely through the Archimedeanization") {
  for (const auto& phi : positive_maps()) {
    INFO(phi.domain().positive().to_string());
    const auto f = factor_through_archimedeanization(phi);
    CHECK(f.factor.matrix() * f.quotient_map.matrix() == phi.matrix());
    CHECK(is_positive(f.factor));
    CHECK(exact::rank(f.quotient_map.matrix()) == f.quotient_map.matrix().rows());
    CHECK(order::is_archimedean(f.factor.domain()));
  }
}

TEST_CASE("positive maps are order bounded") {
  for (const auto& t : positive_maps()) {
    INFO(t.domain().positive().to_string());
    CHECK(is_order_bounded(t));
  }
}
