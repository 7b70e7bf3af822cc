#include "doctest.h"

#include "alcove/affine_complex.hpp"
#include "alcove/errors.hpp"
#include "alcove/gallery.hpp"

#include <random>
#include <set>

using namespace alcove;

namespace {

RationalPoint pt(std::vector<long long> c) { return to_rational(c); }

RationalPoint random_point(std::mt19937& rng, int r)
{
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 12);
  RationalPoint x(r);
  for (auto& c : x) c = Rational(num(rng), den(rng));
  return x;
}

/// Random strictly positive convex combination of the vertices of f.
RationalPoint random_interior(const AffineComplex& ac, const Face& f, std::mt19937& rng)
{
  const auto verts = ac.vertices(f);
  std::uniform_int_distribution<long long> w(1, 9);
  std::vector<long long> weights(verts.size());
  long long total = 0;
  for (auto& x : weights) total += (x = w(rng));
  RationalPoint p(ac.rank(), Rational(0));
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (int k = 0; k < ac.rank(); ++k) p[k] += verts[v][k] * Rational(weights[v], total);
  return p;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST_CASE("affine reflection examples")
{
  const AffineComplex a1(RootSystem::type_a(1));
  CHECK(a1.affine_reflection({0, 0}, pt({1})) == pt({-1}));
  CHECK(a1.affine_reflection({0, 1}, pt({0})) == pt({1}));
  const AffineComplex a2(RootSystem::type_a(2));
  const int a1r = a2.roots().simple_root(0);
  CHECK(a2.affine_reflection({a1r, 0}, pt({1, 1})) == pt({0, 1}));
}

TEST_CASE("affine reflection is an involution fixing its hyperplane")
{
  std::mt19937 rng(7);
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    const int roots = ac.roots().num_positive_roots();
    std::uniform_int_distribution<int> pick(0, roots - 1), lvl(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
      const AffineRoot b{pick(rng), lvl(rng)};
      const RationalPoint x = random_point(rng, r);
      const RationalPoint y = ac.affine_reflection(b, x);
      CHECK(ac.affine_reflection(b, y) == x);
      // midpoint lies on H_b
      RationalPoint mid(r);
      for (int k = 0; k < r; ++k) mid[k] = (x[k] + y[k]) / 2;
      CHECK(ac.roots().pairing(b.root, mid) == b.level);
    }
  }
}

TEST_CASE("carrier face examples")
{
  const AffineComplex ac(RootSystem::type_a(2));
  const RootSystem& rs = ac.roots();
  const Face o = ac.carrier_face(pt({0, 0}));
  CHECK(o.dim() == 0);
  CHECK(o == ac.origin());
  for (int a = 0; a < 3; ++a) {
    CHECK(o.is_on(a));
    CHECK(o.level(a) == 0);
  }

  const Face& fund = ac.fundamental_alcove();
  CHECK(fund.dim() == 2);
  CHECK(ac.carrier_face(fund.witness()) == fund);
  for (int a = 0; a < 3; ++a) CHECK_FALSE(fund.is_on(a));
  CHECK(fund.witness() == RationalPoint{Rational(1, 3), Rational(1, 3)});

  const Face half = ac.carrier_face({Rational(1, 2), Rational(1, 2)});
  CHECK(half.dim() == 1);
  CHECK(half.is_on(rs.highest_root()));
  CHECK(half.level(rs.highest_root()) == 1);
  CHECK_FALSE(half.is_on(rs.simple_root(0)));
  CHECK(half.level(rs.simple_root(0)) == 0);
}

TEST_CASE("faces are keyed by sign vector and witnessed by the barycenter")
{
  std::mt19937 rng(11);
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    for (int trial = 0; trial < 40; ++trial) {
      const Face f = ac.carrier_face(random_point(rng, r));
      // the witness realizes the sign vector
      CHECK(ac.make_face(f.code(), f.witness()) == f);
      for (int s = 0; s < 100 / 40 + 3; ++s) CHECK(ac.carrier_face(random_interior(ac, f, rng)) == f);
    }
  }
  const AffineComplex ac(RootSystem::type_a(2));
  CHECK_THROWS_AS(ac.make_face(ac.origin().code(), pt({1, 0})), InvalidInput);
}

TEST_CASE("witness independence over 100 interior points")
{
  std::mt19937 rng(3);
  const AffineComplex ac(RootSystem::type_a(3));
  const Face f = ac.carrier_face({Rational(5, 7), Rational(-2, 9), Rational(4, 5)});
  for (int s = 0; s < 100; ++s) {
    const Face g = ac.carrier_face(random_interior(ac, f, rng));
    CHECK(g == f);
    CHECK(g.witness() == f.witness());
  }
}

TEST_CASE("face types")
{
  const AffineComplex ac(RootSystem::type_a(2));
  const Face theta = ac.carrier_face(pt({1, 1}));
  CHECK(ac.face_type(theta).face == ac.origin());
  CHECK(ac.face_type(ac.fundamental_alcove()).face == ac.fundamental_alcove());

  std::mt19937 rng(5);
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex c(RootSystem::type_a(r));
    for (int trial = 0; trial < 60; ++trial) {
      const Face f = c.carrier_face(random_point(rng, r));
      const FaceType t = c.face_type(f);
      CHECK(c.in_closure(t.face, c.fundamental_alcove()));
      CHECK(t.face.dim() == f.dim());
      CHECK(c.face_type(t.face) == t);
      if (f.dim() == r) CHECK(t.face == c.fundamental_alcove());
      // every entry of a type is On(0), Between(0) or On(1)
      for (long long code : t.face.code()) CHECK((code == 0 || code == 1 || code == 2));
    }
  }
}

TEST_CASE("alcoves containing a face")
{
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    CHECK(static_cast<long long>(ac.alcoves_containing(ac.origin()).size()) == factorial(r + 1));
    const auto fund = ac.alcoves_containing(ac.fundamental_alcove());
    REQUIRE(fund.size() == 1);
    CHECK(fund[0] == ac.fundamental_alcove());
  }
  std::mt19937 rng(9);
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    for (int trial = 0; trial < 30; ++trial) {
      const Face a = ac.carrier_face(random_point(rng, r));
      if (a.dim() != r) continue;
      for (int t = 0; t <= r; ++t) {
        const Face facet = ac.face_of_type_in_alcove(a, wall_type(ac, t));
        CHECK(facet.dim() == r - 1);
        const auto around = ac.alcoves_containing(facet);
        REQUIRE(around.size() == 2);
        CHECK((around[0] == a || around[1] == a));
        for (const Face& b : around) CHECK(ac.in_closure(facet, b));
      }
    }
  }
}

TEST_CASE("faces of a given type in an alcove")
{
  const AffineComplex ac(RootSystem::type_a(2));
  const FaceType zero = ac.face_type(ac.origin());
  const FaceType alc = ac.face_type(ac.fundamental_alcove());
  CHECK(ac.face_of_type_in_alcove(ac.fundamental_alcove(), zero) == ac.origin());
  CHECK(ac.face_of_type_in_alcove(ac.fundamental_alcove(), alc) == ac.fundamental_alcove());

  const Gallery g = minimal_gallery(ac, LatticeVector::coweight({1, 1}));
  REQUIRE(g.alcoves.size() == 2);
  CHECK(ac.face_of_type_in_alcove(g.alcoves[1], zero) == ac.carrier_face(pt({1, 1})));

  // f ⊂ closure(a) implies face_of_type_in_alcove(a, type(f)) = f
  std::mt19937 rng(13);
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex c(RootSystem::type_a(r));
    for (int trial = 0; trial < 40; ++trial) {
      const Face f = c.carrier_face(random_point(rng, r));
      for (const Face& a : c.alcoves_containing(f)) CHECK(c.face_of_type_in_alcove(a, c.face_type(f)) == f);
    }
  }
}

TEST_CASE("translation and reflection of faces")
{
  const AffineComplex ac(RootSystem::type_a(2));
  const RootSystem& rs = ac.roots();
  CHECK(ac.translate_face(ac.origin(), LatticeVector::coroot({1, 0})) == ac.carrier_face(pt({1, 0})));
  CHECK(ac.translate_face(ac.fundamental_alcove(), LatticeVector::coroot({0, 0})) == ac.fundamental_alcove());
  CHECK(ac.translate_face(ac.carrier_face(pt({1, 1})), LatticeVector::coroot({0, -1})) == ac.carrier_face(pt({1, 0})));

  const int a1 = rs.simple_root(0);
  const Face across = ac.reflect_face(ac.fundamental_alcove(), {a1, 0});
  CHECK(across.dim() == 2);
  CHECK(across != ac.fundamental_alcove());
  CHECK(across.level(a1) == -1);
  CHECK(ac.reflect_face(across, {a1, 0}) == ac.fundamental_alcove());

  const Face on_wall = ac.carrier_face({Rational(1, 2), Rational(1)});
  REQUIRE(on_wall.is_on(a1));
  CHECK(ac.reflect_face(on_wall, {a1, 0}) == on_wall);
  CHECK(ac.reflect_face(ac.carrier_face(pt({1, 0})), {a1, 1}) == ac.origin());
}

TEST_CASE("walls, vertices and distances")
{
  const AffineComplex ac(RootSystem::type_a(2));
  CHECK(ac.walls(ac.fundamental_alcove()).empty());
  CHECK(ac.walls(ac.origin()).size() == 3);
  CHECK(ac.vertices(ac.fundamental_alcove()).size() == 3);
  CHECK(ac.alcove_distance(ac.fundamental_alcove()) == 0);
  for (const Face& a : ac.alcoves_containing(ac.origin())) {
    long long negative = 0;
    for (auto c : a.code()) negative += c == -1;
    CHECK(ac.alcove_distance(a) == negative);
  }
  const auto lp = ac.lattice_point(ac.carrier_face(pt({1, 1})));
  REQUIRE(lp);
  CHECK(lp->coords == std::vector<long long>{1, 1});
  CHECK_FALSE(ac.lattice_point(ac.fundamental_alcove()));
}
