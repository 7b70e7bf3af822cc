#include "doctest.h"

#include "alcove/errors.hpp"
#include "alcove/gallery.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace alcove;

namespace {

LatticeVector cw(std::vector<long long> c) { return LatticeVector::coweight(std::move(c)); }

long long order_of(const AffineComplex& ac) { return static_cast<long long>(ac.weyl().order()); }

std::vector<Gallery> of_weight(const AffineComplex& ac, const std::vector<Gallery>& all, const std::vector<long long>& w)
{
  std::vector<Gallery> out;
  for (const Gallery& g : all)
    if (ac.roots().to_coweight(weight(ac, g)) == w) out.push_back(g);
  return out;
}

/// The six weight-0 galleries of type γ_{θ∨} in A2, keyed by the distance of
/// their (only) alcove from A_fund. Distance 0 and 1 fold on the wall H_{uθ,1}
/// with uθ > 0; distance 2 and 3 fold on H_{β,-1} and are positively folded.
std::multimap<long long, Gallery> weight_zero_by_distance(const AffineComplex& ac, const Gallery& gamma)
{
  std::multimap<long long, Gallery> out;
  for (const Gallery& g : of_weight(ac, enumerate_same_type(ac, gamma), {0, 0}))
    out.emplace(ac.alcove_distance(g.alcoves[0]), g);
  return out;
}

} // namespace

TEST_CASE("minimal galleries")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery g = minimal_gallery(a2, cw({1, 1}));
  CHECK(g.length() == 1);
  CHECK(g.alcoves[0] == a2.fundamental_alcove());
  CHECK_FALSE(g.is_fold(1));
  const auto walls = a2.walls(g.smalls[1]);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0] == AffineRoot{a2.roots().highest_root(), 1});
  CHECK(g.smalls[0] == a2.origin());
  CHECK(weight(a2, g).coords == std::vector<long long>{1, 1});

  const Gallery zero = minimal_gallery(a2, cw({0, 0}));
  CHECK(zero.length() == 0);
  CHECK(zero.smalls == std::vector<Face>{a2.origin(), a2.origin()});
  CHECK(zero.alcoves == std::vector<Face>{a2.fundamental_alcove()});

  const AffineComplex a1(RootSystem::type_a(1));
  const Gallery h = minimal_gallery(a1, LatticeVector::coroot({1}));
  CHECK(h.length() == 1);
  CHECK(a1.walls(h.smalls[1]) == std::vector<AffineRoot>{{0, 1}});

  CHECK_THROWS_AS(minimal_gallery(a2, cw({1, -1})), InvalidInput);
  CHECK_THROWS_AS(minimal_gallery(a2, cw({1})), InvalidInput);
}

TEST_CASE("based galleries are reduced, end at lambda and are LS")
{
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    for (const LatticeVector& lam : dominant_box(ac.roots(), r == 3 ? 2 : 4)) {
      const Gallery g = minimal_gallery(ac, lam);
      CHECK(weight(ac, g).coords == lam.coords);
      for (int j = 1; j <= g.length(); ++j) CHECK_FALSE(g.is_fold(j));
      CHECK(ac.alcove_distance(g.alcoves.back()) == g.length());
      CHECK(is_positively_folded(ac, g));
      CHECK(is_ls(ac, g, g));
      for (const Face& a : g.alcoves) CHECK(a.dim() == r);
      for (int j = 1; j <= g.length(); ++j) {
        CHECK(ac.in_closure(g.smalls[j], g.alcoves[j - 1]));
        CHECK(ac.in_closure(g.smalls[j], g.alcoves[j]));
      }
    }
  }
}

TEST_CASE("galleries from words")
{
  const AffineComplex a2(RootSystem::type_a(2));
  CHECK(gallery_from_word(a2, cw({1, 1}), {0}) == minimal_gallery(a2, cw({1, 1})));
  CHECK_THROWS_AS(gallery_from_word(a2, cw({1, 1}), {0, 0}), InvalidInput);
  CHECK_THROWS_AS(gallery_from_word(a2, cw({2, 2}), {0}), InvalidInput);
  CHECK_THROWS_AS(gallery_from_word(a2, cw({1, 1}), {3}), InvalidInput);
  const AffineComplex a1(RootSystem::type_a(1));
  CHECK(gallery_from_word(a1, cw({2}), {0}) == minimal_gallery(a1, cw({2})));
  CHECK(gallery_from_word(a1, cw({0}), {}) == minimal_gallery(a1, cw({0})));
}

TEST_CASE("gallery types")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery g = minimal_gallery(a2, cw({1, 1}));
  const GalleryType t = gallery_type(a2, g);
  REQUIRE(t.entries.size() == 5);
  const FaceType zero = a2.face_type(a2.origin());
  const FaceType alc = a2.face_type(a2.fundamental_alcove());
  CHECK(t.entries[0] == zero);
  CHECK(t.entries[1] == alc);
  CHECK(t.entries[2] == wall_type(a2, 0));
  CHECK(t.entries[3] == alc);
  CHECK(t.entries[4] == zero);

  // translating by a coroot keeps the type
  Gallery moved = g;
  for (auto& f : moved.smalls) f = a2.translate_face(f, LatticeVector::coroot({1, -2}));
  for (auto& f : moved.alcoves) f = a2.translate_face(f, LatticeVector::coroot({1, -2}));
  CHECK(gallery_type(a2, moved) == t);
}

TEST_CASE("Γ(γ_θ∨) in A2")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery gamma = minimal_gallery(a2, cw({1, 1}));
  const auto all = enumerate_same_type(a2, gamma);
  CHECK(all.size() == 12);
  CHECK(of_weight(a2, all, {0, 0}).size() == 6);
  // the other six end at the six roots, one each
  std::set<std::vector<long long>> roots;
  for (const Gallery& g : all) {
    const auto w = a2.roots().to_coweight(weight(a2, g));
    if (w != std::vector<long long>{0, 0}) CHECK(roots.insert(w).second);
  }
  CHECK(roots == std::set<std::vector<long long>>{{1, 1}, {-1, -1}, {2, -1}, {-2, 1}, {-1, 2}, {1, -2}});

  const auto zero = enumerate_same_type(a2, minimal_gallery(a2, cw({0, 0})));
  CHECK(zero.size() == 6);
}

TEST_CASE("|Γ(γ_λ)| = |W| 2^p, checked against every start and crossing pattern")
{
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    for (const LatticeVector& lam : dominant_box(ac.roots(), r == 1 ? 7 : 2)) {
      const Gallery gamma = minimal_gallery(ac, lam);
      if (gamma.length() > 6) continue;
      const GalleryType t = gallery_type(ac, gamma);
      const auto all = enumerate_same_type(ac, gamma);
      CHECK(static_cast<long long>(all.size()) == order_of(ac) << gamma.length());
      std::set<Gallery> brute;
      for (int s = 0; s < order_of(ac); ++s)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << gamma.length()); ++bits) {
          const Gallery g = gallery_from_path(ac, t, s, bits);
          CHECK(gallery_type(ac, g) == t);
          brute.insert(g);
        }
      CHECK(brute == std::set<Gallery>(all.begin(), all.end()));
      // type preservation: endpoints are lattice points of the same type as λ
      for (const Gallery& g : all) CHECK(ac.face_type(g.smalls.back()) == ac.face_type(gamma.smalls.back()));
    }
  }
}

TEST_CASE("load-bearing walls")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery gamma = minimal_gallery(a2, cw({1, 1}));
  CHECK(load_bearing_walls(a2, gamma, 0).size() == 3);
  // the crossing at j = 1 moves to the positive side of H_{θ,1}
  CHECK(load_bearing_walls(a2, gamma, 1) == std::vector<AffineRoot>{{a2.roots().highest_root(), 1}});
  const auto zeros = weight_zero_by_distance(a2, gamma);
  const Gallery& opposite = zeros.find(3)->second;
  CHECK(load_bearing_walls(a2, opposite, 0).empty());
  CHECK_THROWS_AS(load_bearing_walls(a2, gamma, 2), InvalidInput);
  CHECK_THROWS_AS(load_bearing_walls(a2, gamma, -1), InvalidInput);
}

TEST_CASE("the weight-0 worked example")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery gamma = minimal_gallery(a2, cw({1, 1}));
  CHECK(gallery_dim(a2, gamma) == 4);
  const auto zeros = weight_zero_by_distance(a2, gamma);
  REQUIRE(zeros.size() == 6);
  CHECK(zeros.count(0) == 1);
  CHECK(zeros.count(1) == 2);
  CHECK(zeros.count(2) == 2);
  CHECK(zeros.count(3) == 1);
  for (const auto& [d, g] : zeros) {
    CHECK(g.is_fold(1));
    CHECK(is_positively_folded(a2, g) == (d >= 2));
    CHECK(is_ls(a2, g, gamma) == (d == 2));
  }
  // Gallery 4 (alcove -A_fund): no wall through 0 is load-bearing and the fold on
  // H_{θ,-1} contributes one, so d = 1 and the deficit 3 differs from ht(θ∨) = 2.
  CHECK(gallery_dim(a2, zeros.find(3)->second) == 1);
  CHECK(gallery_dim(a2, zeros.find(2)->second) == 2);
  CHECK(gallery_dim(a2, zeros.find(0)->second) == 3);
}

TEST_CASE("crossing-only galleries are positively folded")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery gamma = minimal_gallery(a2, cw({2, 1}));
  const GalleryType t = gallery_type(a2, gamma);
  for (int s = 0; s < 6; ++s)
    CHECK(is_positively_folded(a2, gallery_from_path(a2, t, s, (std::uint64_t{1} << gamma.length()) - 1)));
}

TEST_CASE("is_ls rejects galleries of another type")
{
  const AffineComplex a2(RootSystem::type_a(2));
  CHECK_THROWS_AS(is_ls(a2, minimal_gallery(a2, cw({1, 0})), minimal_gallery(a2, cw({1, 1}))), InvalidInput);
}

TEST_CASE("LS galleries of γ_θ∨")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery gamma = minimal_gallery(a2, cw({1, 1}));
  const auto ls = enumerate_ls(a2, gamma);
  CHECK(ls.size() == 8);
  CHECK(of_weight(a2, ls, {0, 0}).size() == 2);
  const auto hist = ls_histogram(a2, gamma);
  CHECK(hist.size() == 7);
  for (const WeightCount& w : hist) CHECK(w.count == (w.weight == std::vector<long long>{0, 0} ? 2 : 1));

  const auto split = type_histogram(a2, gamma);
  long long total = 0, ls_total = 0;
  for (const WeightCount& w : split) {
    total += w.count;
    if (w.ls) ls_total += w.count;
  }
  CHECK(total == 12);
  CHECK(ls_total == 8);
}

TEST_CASE("enumerate_ls equals the LS filter of Γ in canonical order")
{
  for (int r = 1; r <= 3; ++r) {
    const AffineComplex ac(RootSystem::type_a(r));
    for (const LatticeVector& lam : dominant_box(ac.roots(), r == 3 ? 1 : 3)) {
      const Gallery gamma = minimal_gallery(ac, lam);
      std::vector<Gallery> filtered;
      for (const Gallery& g : enumerate_same_type(ac, gamma))
        if (is_ls(ac, g, gamma)) filtered.push_back(g);
      CHECK(enumerate_ls(ac, gamma, 1000000, 1) == filtered);
      CHECK(enumerate_ls(ac, gamma, 1000000, 4) == filtered);
    }
  }
}

TEST_CASE("enumeration budgets")
{
  const AffineComplex a2(RootSystem::type_a(2));
  const Gallery gamma = minimal_gallery(a2, cw({2, 2}));
  CHECK_THROWS_AS(enumerate_same_type(a2, gamma, 10), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_ls(a2, gamma, 5), BudgetExceeded);
  CHECK_THROWS_AS(type_histogram(a2, gamma, 10), BudgetExceeded);
}
