#include <doctest.h>

#include "fintop/space.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

const std::vector<Arrow> kSierpinskiArrows = {{0, 1}};

FiniteSpace from_rows(const std::vector<std::uint64_t>& rows) { return space_from_closures(rows); }

}  // namespace

TEST_CASE("subset masks") {
  const auto a = SubsetMask::of(4, {0, 2});
  const auto b = SubsetMask::of(4, {2, 3});
  CHECK((a | b) == SubsetMask::of(4, {0, 2, 3}));
  CHECK((a & b) == SubsetMask::of(4, {2}));
  CHECK((a - b) == SubsetMask::of(4, {0}));
  CHECK(a.complement() == SubsetMask::of(4, {1, 3}));
  CHECK(a.intersects(b));
  CHECK(SubsetMask::of(4, {2}).subset_of(a));
  CHECK(a.count() == 2);
  CHECK(a.points() == std::vector<PointIndex>{0, 2});
  CHECK(SubsetMask::full(3).bits() == 7);
  CHECK_THROWS_AS((void)(a | SubsetMask(3)), std::invalid_argument);
}

TEST_CASE("sierpinski space") {
  const auto s = sierpinski_space();
  REQUIRE(s.size() == 2);
  CHECK(s.leq(0, 1));
  CHECK_FALSE(s.leq(1, 0));
  CHECK(s.label(0) == "a");
  // a is open, b is closed.
  CHECK(is_open(s, s.point(0)));
  CHECK(is_closed(s, s.point(1)));
  CHECK_FALSE(is_open(s, s.point(1)));
  CHECK(closure(s, s.point(0)) == s.all());
  CHECK(interior(s, s.point(1)).empty());
  CHECK(open_hull(s, s.point(1)) == s.all());
}

TEST_CASE("build_space takes the reflexive transitive closure") {
  const std::vector<Arrow> chain = {{0, 1}, {1, 2}};
  const auto s = build_space(3, chain);
  CHECK(s.leq(0, 2));
  CHECK_FALSE(s.leq(2, 0));
  for (PointIndex x = 0; x < 3; ++x) CHECK(s.leq(x, x));
  CHECK(s.closure_bits(0) == 0b111);
  CHECK(s.neighbourhood_bits(2) == 0b111);
}

TEST_CASE("build_space rejects bad input") {
  const std::vector<Arrow> bad = {{0, 3}};
  CHECK_THROWS_AS(build_space(3, bad), TopologyError);
  CHECK_THROWS_AS(build_space(2, kSierpinskiArrows, {"a"}), TopologyError);
  CHECK_THROWS_AS(build_space(2, kSierpinskiArrows, {"a", "a"}), TopologyError);
  CHECK_THROWS_AS(build_space(kMaxPoints + 1, {}), TopologyError);
  CHECK_THROWS_AS(from_rows({0b01, 0b00}), TopologyError);         // not reflexive
  CHECK_THROWS_AS(from_rows({0b011, 0b110, 0b100}), TopologyError);  // not transitive
}

TEST_CASE("empty and one-point spaces") {
  const FiniteSpace empty;
  CHECK(empty.size() == 0);
  CHECK(connected_components(empty).empty());
  const auto p = point_space();
  CHECK(p.size() == 1);
  CHECK(p.label(0) == "*");
  CHECK(are_homeomorphic(p, discrete_space(1)));
}

TEST_CASE("closed and open sets agree with the open-set oracle") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& rows : oracle::preorders(n)) {
      const auto s = from_rows(rows);
      const oracle::Topology t(s);
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        const SubsetMask m(n, u);
        CHECK(is_open(s, m) == t.is_open(u));
        CHECK(is_closed(s, m) == t.is_closed(u));
        CHECK(closure(s, m).bits() == t.closure(u));
      }
    }
  }
}

TEST_CASE("connected components") {
  const std::vector<Arrow> arrows = {{0, 2}, {3, 2}};
  const auto s = build_space(5, arrows);
  const auto comps = connected_components(s);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == SubsetMask::of(5, {0, 2, 3}));
  CHECK(comps[1] == SubsetMask::of(5, {1}));
  CHECK(comps[2] == SubsetMask::of(5, {4}));
  CHECK(component_ids(s) == std::vector<std::size_t>{0, 1, 0, 0, 2});
}

TEST_CASE("generating arrows regenerate the space") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& rows : oracle::preorders(n)) {
      const auto s = from_rows(rows);
      const auto arrows = generating_arrows(s);
      CHECK(build_space(n, arrows) == s);
    }
  }
  const std::vector<Arrow> arrows = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(generating_arrows(build_space(3, arrows)) == std::vector<Arrow>{{0, 1}, {1, 2}});
}

TEST_CASE("homeomorphism search agrees with the permutation oracle") {
  const auto spaces = oracle::preorders(3);
  for (const auto& a : spaces) {
    for (const auto& b : spaces) {
      const auto sa = from_rows(a);
      const auto sb = from_rows(b);
      const bool expected = oracle::isomorphic_rows(a, b);
      CHECK(are_homeomorphic(sa, sb) == expected);
      if (expected) {
        CHECK(homeomorphism_invariant(sa) == homeomorphism_invariant(sb));
        const auto h = find_homeomorphism(sa, sb);
        REQUIRE(h.has_value());
        for (PointIndex x = 0; x < 3; ++x) {
          for (PointIndex y = 0; y < 3; ++y) CHECK(sa.leq(x, y) == sb.leq((*h)[x], (*h)[y]));
        }
      }
    }
  }
  CHECK_FALSE(are_homeomorphic(discrete_space(2), discrete_space(3)));
}

TEST_CASE("labels") {
  const auto s = build_space(2, kSierpinskiArrows, {"open", "closed"});
  CHECK(s.find_label("closed") == PointIndex{1});
  CHECK_FALSE(s.find_label("nope").has_value());
  CHECK(s.display_name(0) == "open");
  const auto bare = s.relabeled({});
  CHECK_FALSE(bare.has_labels());
  CHECK(bare.display_name(1) == "1");
  CHECK(are_homeomorphic(s, bare));
}
