#include <doctest.h>

#include "fintop/census.hpp"
#include "fintop/lifting.hpp"
#include "fintop/notation.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

ContinuousMap to_point(const FiniteSpace& x) { return constant_map(share(x), share(point_space()), 0); }

bool oracle_lifts(const ContinuousMap& f, const ContinuousMap& g) {
  return oracle::has_lifting(f.domain(), f.codomain(), {f.image().begin(), f.image().end()}, g.domain(),
                             g.codomain(), {g.image().begin(), g.image().end()});
}

}  // namespace

TEST_CASE("T0 and T1 of the Sierpinski space as lifting properties") {
  const auto g = to_point(sierpinski_space());
  CHECK(has_lifting({parse_map("{x<->y} -> {x=y}"), g}).lifts);
  const auto t1 = has_lifting({parse_map("{x>y} -> {x=y}"), g});
  CHECK_FALSE(t1.lifts);
  REQUIRE(t1.counterexample.has_value());
  CHECK(square_commutes({parse_map("{x>y} -> {x=y}"), g}, *t1.counterexample));
  // The failing square sends x to the open point and y to the closed one.
  CHECK(t1.counterexample->top.image()[0] == 0);
  CHECK(t1.counterexample->top.image()[1] == 1);

  const auto anti = to_point(antidiscrete_space(2));
  CHECK_FALSE(has_lifting({parse_map("{x<->y} -> {x=y}"), anti}).lifts);
}

TEST_CASE("identities lift against everything") {
  const auto id = parse_map("{a} -> {a}");
  CHECK(has_lifting({id, id}).lifts);
  CHECK(has_lifting({id, to_point(sierpinski_space())}).lifts);
  CHECK(has_lifting({parse_map("{x>y} -> {x=y}"), identity_map(share(sierpinski_space()))}).lifts);
}

TEST_CASE("empty domains and codomains") {
  // The empty map into X lifts against g exactly when every map X -> Y factors through g.
  const auto empty_to_point = ContinuousMap(share(FiniteSpace()), share(point_space()), {});
  CHECK(has_lifting({empty_to_point, to_point(sierpinski_space())}).lifts);
  const auto empty_space = ContinuousMap(share(FiniteSpace()), share(FiniteSpace()), {});
  CHECK_FALSE(has_lifting({empty_to_point, empty_to_point}).lifts);
  CHECK(has_lifting({empty_space, to_point(sierpinski_space())}).lifts);
}

TEST_CASE("find_diagonal") {
  const LiftingProblem problem{parse_map("{x<->y} -> {x=y}"), to_point(sierpinski_space())};
  const auto squares = enumerate_commuting_squares(problem);
  CHECK(squares.size() == 2);  // tops constant at a or at b
  for (const auto& sq : squares) {
    const auto d = find_diagonal(problem, sq);
    REQUIRE(d.has_value());
    CHECK(compose(*d, problem.left) == sq.top);
    CHECK(compose(problem.right, *d) == sq.bottom);
  }
  const auto s = share(sierpinski_space());
  const Square constant_top{ContinuousMap(problem.left.domain_ref(), s, {0, 0}),
                   ContinuousMap(problem.left.codomain_ref(), problem.right.codomain_ref(), {0})};
  CHECK(square_commutes(problem, constant_top));
  const LiftingProblem other{problem.left, identity_map(s)};
  const Square not_commuting{ContinuousMap(problem.left.domain_ref(), s, {0, 0}),
                             ContinuousMap(problem.left.codomain_ref(), s, {1})};
  CHECK_FALSE(square_commutes(other, not_commuting));
  CHECK_THROWS_AS(find_diagonal(other, not_commuting), TopologyError);
}

TEST_CASE("has_lifting agrees with the oracle on all maps between spaces of at most two points") {
  std::vector<SpaceRef> spaces;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (auto& s : enumerate_topologies(n, EnumerationMode::labeled)) spaces.push_back(share(std::move(s)));
  }
  std::vector<ContinuousMap> maps;
  for (const auto& a : spaces) {
    for (const auto& b : spaces) {
      for (auto& m : enumerate_continuous_maps(a, b)) maps.push_back(std::move(m));
    }
  }
  std::size_t checked = 0;
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      const auto result = has_lifting({f, g});
      CHECK(result.lifts == oracle_lifts(f, g));
      CHECK(result.counterexample.has_value() != result.lifts);
      ++checked;
    }
  }
  CHECK(checked == maps.size() * maps.size());
}
