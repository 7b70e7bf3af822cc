#include "alcove/gallery.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace alcove {

namespace {

RationalPoint apply_word_reversed(const AffineComplex& ac, const std::vector<AffineRoot>& word, RationalPoint x)
{
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = ac.affine_reflection(*it, x);
  return x;
}

std::vector<long long> next_primes(long long above, int count)
{
  std::vector<long long> out;
  for (long long n = above + 1; static_cast<int>(out.size()) < count; ++n) {
    bool prime = n > 1;
    for (long long d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

struct Crossing {
  Rational at;
  AffineRoot wall;
};

void check_coweight(const AffineComplex& ac, const LatticeVector& lambda)
{
  if (static_cast<int>(lambda.coords.size()) != ac.rank()) throw InvalidInput("coweight has wrong rank");
  if (!is_dominant(ac.roots(), lambda)) throw InvalidInput("coweight is not dominant");
}

AffineRoot single_wall(const AffineComplex& ac, const Face& facet)
{
  const auto w = ac.walls(facet);
  if (w.size() != 1 || facet.dim() != ac.rank() - 1) throw InvalidInput("gallery step is not a facet");
  return w.front();
}

FaceType vertex_type(const AffineComplex& ac, int t)
{
  return FaceType{ac.carrier_face(ac.fundamental_vertices().at(t))};
}

Gallery walk(const AffineComplex& ac, const GalleryType& type, const Face& first, std::uint64_t crossings)
{
  Gallery g;
  const int p = static_cast<int>(type.entries.size()) / 2 - 1;
  g.smalls.push_back(ac.face_of_type_in_alcove(first, type.entries[0]));
  g.alcoves.push_back(first);
  for (int j = 1; j <= p; ++j) {
    const Face& prev = g.alcoves.back();
    Face small = ac.face_of_type_in_alcove(prev, type.entries[2 * j]);
    Face next = (crossings >> (j - 1)) & 1 ? ac.reflect_face(prev, single_wall(ac, small)) : prev;
    g.smalls.push_back(std::move(small));
    g.alcoves.push_back(std::move(next));
  }
  g.smalls.push_back(ac.face_of_type_in_alcove(g.alcoves.back(), type.entries[2 * p + 2]));
  return g;
}

void enumerate_from(const AffineComplex& ac, const GalleryType& type, Gallery& g, std::vector<Gallery>& out)
{
  const int p = static_cast<int>(type.entries.size()) / 2 - 1;
  const int j = static_cast<int>(g.alcoves.size());
  if (j == p + 1) {
    g.smalls.push_back(ac.face_of_type_in_alcove(g.alcoves.back(), type.entries[2 * p + 2]));
    out.push_back(g);
    g.smalls.pop_back();
    return;
  }
  const Face prev = g.alcoves.back();
  g.smalls.push_back(ac.face_of_type_in_alcove(prev, type.entries[2 * j]));
  const AffineRoot wall = single_wall(ac, g.smalls.back());
  g.alcoves.push_back(prev);
  enumerate_from(ac, type, g, out);
  g.alcoves.back() = ac.reflect_face(prev, wall);
  enumerate_from(ac, type, g, out);
  g.alcoves.pop_back();
  g.smalls.pop_back();
}

} // namespace

FaceType wall_type(const AffineComplex& ac, int t)
{
  const auto& verts = ac.fundamental_vertices();
  if (t < 0 || t >= static_cast<int>(verts.size())) throw InvalidInput("wall index out of range");
  RationalPoint bary(ac.rank(), Rational(0));
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    if (v == t) continue;
    for (int i = 0; i < ac.rank(); ++i) bary[i] += verts[v][i];
  }
  for (auto& x : bary) x /= ac.rank();
  return FaceType{ac.carrier_face(bary)};
}

Gallery minimal_gallery(const AffineComplex& ac, const LatticeVector& lambda)
{
  check_coweight(ac, lambda);
  const RootSystem& rs = ac.roots();
  const RationalPoint x = rs.to_coroot(lambda);
  const Face end = ac.carrier_face(x);
  if (end == ac.origin()) return Gallery{{ac.origin(), ac.origin()}, {ac.fundamental_alcove()}};

  const auto around = ac.alcoves_containing(end);
  const Face target = *std::min_element(around.begin(), around.end(), [&](const Face& a, const Face& b) {
    return ac.alcove_distance(a) < ac.alcove_distance(b);
  });
  const long long p = ac.alcove_distance(target);
  RationalPoint folded = target.witness();
  const auto word = ac.folding_word(folded);

  const int r = ac.rank();
  // The walk runs from b to w(b') for two generic points b, b' of A_fund built
  // from disjoint primes. Aiming at w(b) itself can tie structurally: when w
  // contains commuting reflections the midpoint lies on both of their walls.
  auto primes = next_primes(2 * r, 2 * r + 64);
  auto generic_point = [&](int first) {
    RationalPoint y(r);
    for (int i = 0; i < r; ++i) y[i] = Rational(1, primes[first + i]);
    return rs.from_coweight_coords(y);
  };
  for (int attempt = 0; attempt + 2 * r <= static_cast<int>(primes.size()); ++attempt) {
    const RationalPoint base = generic_point(attempt);
    const RationalPoint aim = generic_point(attempt + r);
    if (ac.carrier_face(base) != ac.fundamental_alcove() || ac.carrier_face(aim) != ac.fundamental_alcove()) continue;
    const RationalPoint goal = apply_word_reversed(ac, word, aim);

    std::vector<Crossing> crossings;
    for (int a = 0; a < rs.num_positive_roots(); ++a) {
      const Rational v0 = rs.pairing(a, base);
      const Rational v1 = rs.pairing(a, goal);
      const long long lo = std::min(floor(v0), floor(v1)) + 1;
      const long long hi = std::max(floor(v0), floor(v1));
      for (long long n = lo; n <= hi; ++n) crossings.push_back({(Rational(n) - v0) / (v1 - v0), {a, n}});
    }
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) { return a.at < b.at; });
    const bool generic = std::adjacent_find(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
                           return a.at == b.at;
                         }) == crossings.end();
    if (!generic) continue;
    if (static_cast<long long>(crossings.size()) != p) throw std::logic_error("straight walk is not minimal");

    Gallery g;
    g.smalls.push_back(ac.origin());
    g.alcoves.push_back(ac.fundamental_alcove());
    for (const Crossing& c : crossings) {
      RationalPoint y = base;
      for (int i = 0; i < r; ++i) y[i] += c.at * (goal[i] - base[i]);
      g.smalls.push_back(ac.carrier_face(y));
      g.alcoves.push_back(ac.reflect_face(g.alcoves.back(), c.wall));
    }
    if (g.alcoves.back() != target) throw std::logic_error("straight walk missed its target alcove");
    g.smalls.push_back(end);
    return g;
  }
  throw std::logic_error("no generic base point found");
}

Gallery gallery_from_word(const AffineComplex& ac, const LatticeVector& lambda, const std::vector<int>& word)
{
  check_coweight(ac, lambda);
  const Face end = ac.carrier_face(ac.roots().to_coroot(lambda));
  Gallery g;
  g.smalls.push_back(ac.origin());
  g.alcoves.push_back(ac.fundamental_alcove());
  for (int letter : word) {
    if (letter < 0 || letter > ac.rank()) throw InvalidInput("word letter out of range");
    const Face& prev = g.alcoves.back();
    Face small = ac.face_of_type_in_alcove(prev, wall_type(ac, letter));
    Face next = ac.reflect_face(prev, single_wall(ac, small));
    g.smalls.push_back(std::move(small));
    g.alcoves.push_back(std::move(next));
  }
  if (ac.alcove_distance(g.alcoves.back()) != static_cast<long long>(word.size()))
    throw InvalidInput("word is not reduced");
  if (!ac.in_closure(end, g.alcoves.back())) throw InvalidInput("word does not end at the coweight");
  g.smalls.push_back(end);
  return g;
}

GalleryType gallery_type(const AffineComplex& ac, const Gallery& g)
{
  if (g.smalls.size() != g.alcoves.size() + 1 || g.alcoves.empty()) throw InvalidInput("malformed gallery");
  GalleryType t;
  for (std::size_t j = 0; j < g.alcoves.size(); ++j) {
    t.entries.push_back(ac.face_type(g.smalls[j]));
    t.entries.push_back(ac.face_type(g.alcoves[j]));
  }
  t.entries.push_back(ac.face_type(g.smalls.back()));
  return t;
}

Gallery gallery_from_path(const AffineComplex& ac, const GalleryType& type, int start, std::uint64_t crossings)
{
  const auto starts = ac.alcoves_containing(ac.origin());
  if (start < 0 || start >= static_cast<int>(starts.size())) throw InvalidInput("start alcove out of range");
  return walk(ac, type, starts[start], crossings);
}

std::vector<Gallery> enumerate_same_type(const AffineComplex& ac, const Gallery& gamma, std::size_t budget)
{
  const GalleryType type = gallery_type(ac, gamma);
  const int p = gamma.length();
  const auto starts = ac.alcoves_containing(ac.origin());
  if (p > 62 || static_cast<double>(starts.size()) * static_cast<double>(1ULL << p) > static_cast<double>(budget))
    throw BudgetExceeded("gallery enumeration exceeded the budget");
  std::vector<Gallery> out;
  for (const Face& first : starts) {
    Gallery g;
    g.smalls.push_back(ac.face_of_type_in_alcove(first, type.entries[0]));
    g.alcoves.push_back(first);
    enumerate_from(ac, type, g, out);
  }
  return out;
}

LatticeVector weight(const AffineComplex& ac, const Gallery& g)
{
  if (g.smalls.empty()) throw InvalidInput("empty gallery");
  auto v = ac.lattice_point(g.smalls.back());
  if (!v) throw InvalidInput("gallery does not end at a lattice point");
  return *v;
}

std::vector<AffineRoot> load_bearing_walls(const AffineComplex& ac, const Gallery& g, int j)
{
  if (j < 0 || j > g.length()) throw InvalidInput("gallery index out of range");
  std::vector<AffineRoot> out;
  for (const AffineRoot& w : ac.walls(g.smalls[j]))
    if (g.alcoves[j].level(w.root) == w.level) out.push_back(w);
  return out;
}

long long gallery_dim(const AffineComplex& ac, const Gallery& g)
{
  long long d = 0;
  for (int j = 0; j <= g.length(); ++j) d += static_cast<long long>(load_bearing_walls(ac, g, j).size());
  return d;
}

bool is_positively_folded(const AffineComplex& ac, const Gallery& g)
{
  for (int j = 1; j <= g.length(); ++j)
    if (g.is_fold(j) && load_bearing_walls(ac, g, j).empty()) return false;
  return true;
}

bool is_ls(const AffineComplex& ac, const Gallery& g, const Gallery& gamma)
{
  if (!(gallery_type(ac, g) == gallery_type(ac, gamma))) throw InvalidInput("gallery types differ");
  if (!is_positively_folded(ac, g)) return false;
  const RootSystem& rs = ac.roots();
  const RationalPoint lam = rs.to_coroot(weight(ac, gamma));
  const RationalPoint mu = rs.to_coroot(weight(ac, g));
  long long ht = 0;
  for (int i = 0; i < ac.rank(); ++i) {
    const Rational d = lam[i] - mu[i];
    if (d.denominator() != 1 || d.numerator() < 0) return false;
    ht += d.numerator();
  }
  return gallery_dim(ac, gamma) - gallery_dim(ac, g) == ht;
}

WalkSpec walk_spec(const AffineComplex& ac, const Gallery& gamma, bool ls_only, std::size_t budget)
{
  const GalleryType type = gallery_type(ac, gamma);
  const int p = gamma.length();
  if (p > 63) throw BudgetExceeded("gallery too long for the walk kernel");
  WalkSpec spec;
  std::vector<FaceType> walls;
  for (int t = 0; t <= ac.rank(); ++t) walls.push_back(wall_type(ac, t));
  for (int j = 1; j <= p; ++j) {
    const auto it = std::find(walls.begin(), walls.end(), type.entries[2 * j]);
    if (it == walls.end()) throw InvalidInput("gallery step is not a facet");
    spec.steps.push_back(static_cast<int>(it - walls.begin()));
  }
  spec.end_vertex = -1;
  for (int t = 0; t <= ac.rank(); ++t)
    if (vertex_type(ac, t) == type.entries.back()) spec.end_vertex = t;
  if (spec.end_vertex < 0) throw InvalidInput("gallery does not end at a vertex");
  spec.ls_only = ls_only;
  spec.lambda = ac.roots().to_coroot(weight(ac, gamma));
  spec.based_dim = gallery_dim(ac, gamma);
  spec.budget = budget;
  return spec;
}

namespace {

std::vector<WalkLeaf> run_kernel(const WalkTables& tables, const WalkSpec& spec, int jobs)
{
  return jobs == 1 ? walk_serial(tables, spec) : walk_parallel(tables, spec, jobs);
}

} // namespace

std::vector<Gallery> enumerate_ls(const AffineComplex& ac, const Gallery& gamma, std::size_t budget, int jobs)
{
  const WalkTables tables(ac);
  const WalkSpec spec = walk_spec(ac, gamma, true, budget);
  const GalleryType type = gallery_type(ac, gamma);
  const auto starts = ac.alcoves_containing(ac.origin());
  std::vector<Gallery> out;
  for (const WalkLeaf& leaf : run_kernel(tables, spec, jobs)) out.push_back(walk(ac, type, starts[leaf.start], leaf.crossings));
  return out;
}

std::vector<WeightCount> ls_histogram(const AffineComplex& ac, const Gallery& gamma, std::size_t budget, int jobs)
{
  const WalkTables tables(ac);
  const WalkSpec spec = walk_spec(ac, gamma, true, budget);
  std::map<std::vector<long long>, long long> counts;
  for (const WalkLeaf& leaf : run_kernel(tables, spec, jobs)) {
    const RationalPoint y = ac.roots().coweight_coords(leaf_endpoint(tables, spec, leaf));
    std::vector<long long> w;
    for (const Rational& c : y) w.push_back(c.numerator());
    ++counts[w];
  }
  std::vector<WeightCount> out;
  for (auto& [w, n] : counts) out.push_back({w, n, true});
  return out;
}

std::vector<WeightCount> type_histogram(const AffineComplex& ac, const Gallery& gamma, std::size_t budget, int jobs)
{
  const WalkTables tables(ac);
  const WalkSpec spec = walk_spec(ac, gamma, false, budget);
  if (static_cast<double>(tables.start_elements.size()) * std::ldexp(1.0, static_cast<int>(spec.steps.size())) >
      static_cast<double>(budget))
    throw BudgetExceeded("gallery enumeration exceeded the budget");
  std::map<std::pair<std::vector<long long>, bool>, long long> counts;
  for (const WalkLeaf& leaf : run_kernel(tables, spec, jobs)) {
    const RationalPoint end = leaf_endpoint(tables, spec, leaf);
    bool ls = leaf.positively_folded;
    long long ht = 0;
    for (int i = 0; i < ac.rank() && ls; ++i) {
      const Rational d = spec.lambda[i] - end[i];
      ls = d.denominator() == 1 && d.numerator() >= 0;
      ht += d.numerator();
    }
    ls = ls && leaf.dim == spec.based_dim - ht;
    const RationalPoint y = ac.roots().coweight_coords(end);
    std::vector<long long> w;
    for (const Rational& c : y) w.push_back(c.numerator());
    ++counts[{w, ls}];
  }
  std::vector<WeightCount> out;
  for (auto& [key, n] : counts) out.push_back({key.first, n, key.second});
  return out;
}

} // namespace alcove
