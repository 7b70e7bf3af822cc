#include "doctest.h"

#include "alcove/errors.hpp"
#include "alcove/polytope.hpp"

#include <algorithm>
#include <random>

using namespace alcove;

namespace {

RationalPoint pt(std::vector<long long> c) { return to_rational(c); }

LatticePolytope hull(std::vector<std::vector<long long>> pts)
{
  std::vector<RationalPoint> r;
  for (auto& p : pts) r.push_back(pt(p));
  return convex_hull(r);
}

} // namespace

TEST_CASE("convex hulls drop interior and repeated points")
{
  const LatticePolytope sq = hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(sq.dim() == 2);
  CHECK(sq.ambient_rank() == 2);
  CHECK(sq.vertices() == std::vector<RationalPoint>{pt({0, 0}), pt({0, 2}), pt({2, 0}), pt({2, 2})});
  CHECK(sq.boundary().size() == 4);
  CHECK(area(sq) == 4);

  const LatticePolytope seg = hull({{0, 0}, {1, 1}, {3, 3}, {2, 2}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices() == std::vector<RationalPoint>{pt({0, 0}), pt({3, 3})});
  CHECK(area(seg) == 0);

  const LatticePolytope dot = hull({{1, 2}, {1, 2}});
  CHECK(dot.dim() == 0);
  CHECK(dot.vertices().size() == 1);

  CHECK_THROWS_AS(convex_hull({}), InvalidInput);
  CHECK_THROWS_AS(convex_hull({pt({0, 0}), pt({1})}), InvalidInput);
  CHECK(hull({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}).dim() == 4);
}

TEST_CASE("three-dimensional hulls")
{
  std::vector<std::vector<long long>> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, m >> 1 & 1, m >> 2 & 1});
  cube.push_back({0, 0, 0});
  const LatticePolytope c = hull(cube);
  CHECK(c.dim() == 3);
  CHECK(c.vertices().size() == 8);
  CHECK(contains(c, {Rational(1, 2), Rational(1, 3), Rational(1)}));
  CHECK_FALSE(contains(c, {Rational(1, 2), Rational(1, 3), Rational(4, 3)}));

  // a planar polygon sitting in rank 3
  const LatticePolytope tri = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 0}});
  CHECK(tri.dim() == 2);
  CHECK(tri.ambient_rank() == 3);
  CHECK(contains(tri, {Rational(1, 2), Rational(1, 2), Rational(0)}));
  CHECK_FALSE(contains(tri, {Rational(1, 2), Rational(1, 2), Rational(1, 9)}));

  // random points in the cube never leave the cube
  std::mt19937 rng(2);
  std::uniform_int_distribution<long long> d(0, 6);
  std::vector<RationalPoint> pts;
  for (int k = 0; k < 40; ++k) pts.push_back({Rational(d(rng), 6), Rational(d(rng), 6), Rational(d(rng), 6)});
  const LatticePolytope inner = convex_hull(pts);
  for (const auto& v : inner.vertices()) CHECK(contains(c, v));
  for (const auto& p : pts) CHECK(contains(inner, p));
}

TEST_CASE("hulls above dimension three")
{
  std::vector<std::vector<long long>> cube;
  for (int m = 0; m < 16; ++m) cube.push_back({2 * (m & 1), 2 * (m >> 1 & 1), 2 * (m >> 2 & 1), 2 * (m >> 3 & 1)});
  cube.push_back({1, 1, 1, 1});
  cube.push_back({2, 1, 0, 1});
  const LatticePolytope c = hull(cube);
  CHECK(c.dim() == 4);
  CHECK(c.vertices().size() == 16);
  CHECK(contains(c, pt({1, 2, 0, 1})));
  CHECK_FALSE(contains(c, pt({1, 2, 3, 1})));
  CHECK_FALSE(contains(c, {Rational(1), Rational(1), Rational(1), Rational(-1, 5)}));

  // A prism over a random 3D polytope: the LP path must agree with the facet path.
  std::mt19937 rng(4);
  std::uniform_int_distribution<long long> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalPoint> base;
    for (int k = 0; k < 12; ++k) base.push_back(pt({d(rng), d(rng), d(rng)}));
    const LatticePolytope b = convex_hull(base);
    if (b.dim() != 3) continue;
    std::vector<RationalPoint> prism, expected;
    for (const auto& v : base)
      for (long long h : {0, 1}) prism.push_back({v[0], v[1], v[2], Rational(h)});
    for (const auto& v : b.vertices())
      for (long long h : {0, 1}) expected.push_back({v[0], v[1], v[2], Rational(h)});
    std::sort(expected.begin(), expected.end());
    const LatticePolytope p = convex_hull(prism);
    CHECK(p.dim() == 4);
    CHECK(p.vertices() == expected);
  }
}

TEST_CASE("containment")
{
  const LatticePolytope tri = hull({{0, 0}, {2, 0}, {0, 2}});
  CHECK(contains(tri, pt({1, 1})));
  CHECK(contains(tri, pt({0, 0})));
  CHECK(contains(tri, {Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(contains(tri, {Rational(3, 2), Rational(3, 4)}));
  const LatticePolytope seg = hull({{0, 0}, {2, 2}});
  CHECK(contains(seg, pt({1, 1})));
  CHECK_FALSE(contains(seg, pt({1, 0})));
  CHECK_FALSE(contains(seg, pt({3, 3})));
  CHECK_THROWS_AS(contains(tri, pt({1})), InvalidInput);
}

TEST_CASE("Minkowski sums")
{
  const auto prim = primitive_a2();
  const LatticePolytope hex = minkowski_sum(prim.at("beta1"), prim.at("beta2"));
  CHECK(hex.vertices().size() == 6);
  CHECK(area(hex) == 3);
  const LatticePolytope par = minkowski_sum(prim.at("alpha1"), prim.at("alpha2"));
  CHECK(par == hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  // the origin is the identity
  const LatticePolytope origin = hull({{0, 0}});
  CHECK(minkowski_sum(hex, origin) == hex);
  CHECK(minkowski_sum(origin, hex) == hex);
  // commutative, and P + P = 2P for convex P
  CHECK(minkowski_sum(prim.at("beta1"), prim.at("alpha2")) == minkowski_sum(prim.at("alpha2"), prim.at("beta1")));
  CHECK(minkowski_sum(hex, hex) == scale(hex, 2));
  CHECK_THROWS_AS(minkowski_sum(hex, hull({{0, 0, 0}})), InvalidInput);
}

TEST_CASE("unions")
{
  const auto prim = primitive_a2();
  const LatticePolytope sum = minkowski_sum(prim.at("alpha1"), prim.at("alpha2"));
  CHECK(union_equals({prim.at("beta1"), prim.at("beta2")}, sum));
  CHECK_FALSE(union_equals({prim.at("beta1")}, sum));
  CHECK_FALSE(union_equals({prim.at("beta1"), prim.at("alpha2")}, sum));
  CHECK_FALSE(union_equals({}, sum));
  // a part poking out of the whole
  CHECK_FALSE(union_equals({prim.at("beta1"), prim.at("beta2"), hull({{0, 0}, {2, 0}})}, sum));
  // overlapping parts still cover exactly
  CHECK(union_equals({sum, prim.at("beta1")}, sum));
  CHECK(union_equals({prim.at("beta1"), prim.at("beta2"), sum}, sum));
  // segments
  const LatticePolytope seg = hull({{0, 0}, {3, 0}});
  CHECK(union_equals({hull({{0, 0}, {1, 0}}), hull({{1, 0}, {3, 0}})}, seg));
  CHECK_FALSE(union_equals({hull({{0, 0}, {1, 0}}), hull({{2, 0}, {3, 0}})}, seg));
  CHECK_THROWS_AS(union_equals({sum, sum, sum, sum}, sum), InvalidInput);
  CHECK_THROWS_AS(union_equals({hull({{0, 0, 0}})}, hull({{0, 0, 0}})), InvalidInput);
}

TEST_CASE("primitive A2 polytopes")
{
  const auto prim = primitive_a2();
  REQUIRE(prim.size() == 4);
  CHECK(prim.at("alpha1").vertices() == std::vector<RationalPoint>{pt({0, 0}), pt({1, 0})});
  CHECK(prim.at("alpha2").vertices() == std::vector<RationalPoint>{pt({0, 0}), pt({0, 1})});
  CHECK(prim.at("beta1").dim() == 2);
  CHECK(area(prim.at("beta1")) == Rational(1, 2));
  CHECK(area(prim.at("beta2")) == Rational(1, 2));
}
