#include "alcove/crystal.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace alcove {

namespace {

int simple_index(const AffineComplex& ac, int i)
{
  if (i < 1 || i > ac.rank()) throw InvalidInput("simple root index out of range");
  return ac.roots().simple_root(i - 1);
}

struct Level {
  long long m;
  long long at_end; // <alpha, mu>
};

Level min_level(const Gallery& g, int root)
{
  if (g.smalls.size() != g.alcoves.size() + 1 || g.alcoves.empty()) throw InvalidInput("malformed gallery");
  long long m = 0;
  bool any = false;
  for (const Face& f : g.smalls) {
    if (!f.is_on(root)) continue;
    m = any ? std::min(m, f.level(root)) : f.level(root);
    any = true;
  }
  if (!any || !g.smalls.back().is_on(root)) throw InvalidInput("gallery does not end at a vertex");
  return {m, g.smalls.back().level(root)};
}

bool on(const Face& f, int root, long long n) { return f.is_on(root) && f.level(root) == n; }

LatticeVector simple_coroot(const AffineComplex& ac, int i, long long sign)
{
  std::vector<long long> c(ac.rank(), 0);
  c[i - 1] = sign;
  return LatticeVector::coroot(std::move(c));
}

/// Reflect Δ_j..Δ_{k-1} and G_{j+1}..G_{k-1} by `wall`, translate G_k onward by `shift`.
Gallery reflect_and_translate(const AffineComplex& ac, const Gallery& g, int j, int k, const AffineRoot& wall,
                              const LatticeVector& shift)
{
  Gallery out = g;
  for (int l = j; l < k; ++l) out.alcoves[l] = ac.reflect_face(g.alcoves[l], wall);
  for (int l = j + 1; l < k; ++l) out.smalls[l] = ac.reflect_face(g.smalls[l], wall);
  for (int l = k; l < static_cast<int>(g.smalls.size()); ++l) out.smalls[l] = ac.translate_face(g.smalls[l], shift);
  for (int l = k; l < static_cast<int>(g.alcoves.size()); ++l)
    out.alcoves[l] = ac.translate_face(g.alcoves[l], shift);
  return out;
}

std::string ext_string(const ExtInt& v) { return v ? std::to_string(*v) : "-inf"; }

std::string weight_string(const std::vector<long long>& w)
{
  std::ostringstream s;
  for (std::size_t i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
  return s.str();
}

std::vector<long long> coroot_in_coweight(const RootSystem& rs, int i, long long scale)
{
  std::vector<long long> v(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) v[j] = scale * rs.cartan()[i - 1][j];
  return v;
}

std::vector<long long> add(std::vector<long long> a, const std::vector<long long>& b)
{
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

} // namespace

long long epsilon(const AffineComplex& ac, const Gallery& g, int i)
{
  return -min_level(g, simple_index(ac, i)).m;
}

long long phi(const AffineComplex& ac, const Gallery& g, int i)
{
  const Level l = min_level(g, simple_index(ac, i));
  return l.at_end - l.m;
}

std::optional<Gallery> e_op(const AffineComplex& ac, const Gallery& g, int i)
{
  const int root = simple_index(ac, i);
  const Level l = min_level(g, root);
  if (l.m == 0) return std::nullopt;
  const int last = static_cast<int>(g.smalls.size()) - 1;
  int k = 1;
  while (k <= last && !on(g.smalls[k], root, l.m)) ++k;
  if (k > last) throw InvalidInput("malformed gallery");
  int j = k - 1;
  while (j >= 0 && !on(g.smalls[j], root, l.m + 1)) --j;
  if (j < 0) throw InvalidInput("malformed gallery");
  return reflect_and_translate(ac, g, j, k, {root, l.m + 1}, simple_coroot(ac, i, 1));
}

std::optional<Gallery> f_op(const AffineComplex& ac, const Gallery& g, int i)
{
  const int root = simple_index(ac, i);
  const Level l = min_level(g, root);
  if (l.m == l.at_end) return std::nullopt;
  const int last = static_cast<int>(g.smalls.size()) - 1;
  int j = last - 1;
  while (j >= 0 && !on(g.smalls[j], root, l.m)) --j;
  if (j < 0) throw InvalidInput("malformed gallery");
  int k = j + 1;
  while (k <= last && !on(g.smalls[k], root, l.m + 1)) ++k;
  if (k > last) throw InvalidInput("malformed gallery");
  return reflect_and_translate(ac, g, j, k, {root, l.m}, simple_coroot(ac, i, -1));
}

CrystalElement gallery_element(const AffineComplex& ac, const Gallery& g)
{
  CrystalElement e;
  e.payload = g;
  e.weight = ac.roots().to_coweight(weight(ac, g));
  for (int i = 1; i <= ac.rank(); ++i) {
    e.eps.push_back(epsilon(ac, g, i));
    e.phi.push_back(phi(ac, g, i));
  }
  return e;
}

CrystalGraph generate_crystal(const AffineComplex& ac, const Gallery& seed, std::size_t node_cap)
{
  std::map<Gallery, int> index;
  std::vector<Gallery> found;
  std::deque<int> queue;
  struct RawEdge {
    int from, to, i;
    bool f;
  };
  std::vector<RawEdge> raw;
  auto visit = [&](const Gallery& g) {
    auto [it, inserted] = index.emplace(g, static_cast<int>(found.size()));
    if (inserted) {
      if (found.size() >= node_cap) throw BudgetExceeded("crystal generation exceeded the node cap");
      found.push_back(g);
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(seed);
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int i = 1; i <= ac.rank(); ++i) {
      if (auto b = f_op(ac, found[a], i)) raw.push_back({a, visit(*b), i, true});
      if (auto b = e_op(ac, found[a], i)) raw.push_back({a, visit(*b), i, false});
    }
  }

  std::vector<CrystalElement> elems;
  std::vector<Rational> heights;
  for (const Gallery& g : found) {
    elems.push_back(gallery_element(ac, g));
    const RationalPoint c = ac.roots().to_coroot(weight(ac, g));
    heights.push_back(std::accumulate(c.begin(), c.end(), Rational(0)));
  }
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (heights[x] != heights[y]) return heights[x] > heights[y];
    if (elems[x].weight != elems[y].weight) return elems[x].weight > elems[y].weight;
    return found[x] < found[y];
  });
  std::vector<int> rank_of(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = static_cast<int>(r);

  CrystalGraph graph;
  graph.rank = ac.rank();
  for (int o : order) graph.nodes.push_back(std::move(elems[o]));
  for (const RawEdge& e : raw) {
    CrystalEdge ce{rank_of[e.from], rank_of[e.to], e.i};
    (e.f ? graph.f_edges : graph.e_edges).push_back(ce);
  }
  auto by_source = [](const CrystalEdge& x, const CrystalEdge& y) {
    return std::tie(x.from, x.i, x.to) < std::tie(y.from, y.i, y.to);
  };
  std::sort(graph.f_edges.begin(), graph.f_edges.end(), by_source);
  std::sort(graph.e_edges.begin(), graph.e_edges.end(), by_source);
  return graph;
}

AxiomReport verify_axioms(const CrystalGraph& graph, const RootSystem& rs)
{
  AxiomReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.failures.push_back(std::move(what));
  };
  const int n = static_cast<int>(graph.nodes.size());
  auto node_name = [&](int v) { return "node " + std::to_string(v) + " (wt " + weight_string(graph.nodes[v].weight) + ")"; };

  for (int v = 0; v < n; ++v) {
    const CrystalElement& b = graph.nodes[v];
    if (static_cast<int>(b.eps.size()) != graph.rank || static_cast<int>(b.phi.size()) != graph.rank ||
        static_cast<int>(b.weight.size()) != graph.rank) {
      fail(node_name(v) + ": wrong number of components");
      continue;
    }
    for (int i = 1; i <= graph.rank; ++i) {
      const ExtInt& e = b.eps[i - 1];
      const ExtInt& p = b.phi[i - 1];
      const bool consistent = (!e && !p) || (e && p && *p == *e + b.weight[i - 1]);
      if (!consistent)
        fail(node_name(v) + ", i=" + std::to_string(i) + ": phi " + ext_string(p) + " != eps " + ext_string(e) +
             " + <h_i, wt>");
    }
  }

  auto check_edges = [&](const std::vector<CrystalEdge>& edges, const std::vector<CrystalEdge>& dual, int sign,
                         const char* op) {
    std::set<std::pair<int, int>> seen;
    for (const CrystalEdge& e : edges) {
      const std::string where = std::string(op) + "_" + std::to_string(e.i) + " at " + node_name(e.from);
      if (e.from < 0 || e.from >= n || e.to < -1 || e.to >= n || e.i < 1 || e.i > graph.rank) {
        fail(where + ": edge out of range");
        continue;
      }
      if (!seen.insert({e.from, e.i}).second) fail(where + ": operator is not single-valued");
      const CrystalElement& a = graph.nodes[e.from];
      if (!a.phi[e.i - 1]) fail(where + ": operator defined although phi = -inf");
      if (e.to < 0) continue;
      const CrystalElement& b = graph.nodes[e.to];
      if (b.weight != add(a.weight, coroot_in_coweight(rs, e.i, sign))) fail(where + ": weight not shifted by the simple root");
      const ExtInt& ea = a.eps[e.i - 1];
      const ExtInt& eb = b.eps[e.i - 1];
      const ExtInt& pa = a.phi[e.i - 1];
      const ExtInt& pb = b.phi[e.i - 1];
      if (!ea || !eb || *eb != *ea - sign) fail(where + ": eps not " + (sign < 0 ? "incremented" : "decremented"));
      if (!pa || !pb || *pb != *pa + sign) fail(where + ": phi not " + (sign < 0 ? "decremented" : "incremented"));
      const CrystalEdge back{e.to, e.from, e.i};
      if (std::find(dual.begin(), dual.end(), back) == dual.end()) fail(where + ": no inverse edge");
    }
  };
  check_edges(graph.f_edges, graph.e_edges, -1, "f");
  check_edges(graph.e_edges, graph.f_edges, 1, "e");
  return report;
}

CrystalGraph elementary_t(const RootSystem& rs, const LatticeVector& lambda)
{
  CrystalGraph g;
  g.rank = rs.rank();
  CrystalElement e;
  e.payload = TLambdaPoint{lambda};
  e.weight = rs.to_coweight(lambda);
  e.eps.assign(rs.rank(), std::nullopt);
  e.phi.assign(rs.rank(), std::nullopt);
  g.nodes.push_back(std::move(e));
  return g;
}

CrystalGraph elementary_b(const RootSystem& rs, int i, long long lo, long long hi)
{
  if (i < 1 || i > rs.rank()) throw InvalidInput("simple root index out of range");
  if (lo > hi) throw InvalidInput("empty window");
  CrystalGraph g;
  g.rank = rs.rank();
  // Nodes run from b_i(hi) down to b_i(lo), so the highest weight comes first.
  for (long long n = hi; n >= lo; --n) {
    CrystalElement e;
    e.payload = BiPoint{i, n};
    e.weight = coroot_in_coweight(rs, i, n);
    e.eps.assign(rs.rank(), std::nullopt);
    e.phi.assign(rs.rank(), std::nullopt);
    e.eps[i - 1] = -n;
    e.phi[i - 1] = n;
    g.nodes.push_back(std::move(e));
  }
  const int count = static_cast<int>(hi - lo + 1);
  for (int v = 0; v < count; ++v) {
    g.f_edges.push_back({v, v + 1 < count ? v + 1 : -1, i});
    g.e_edges.push_back({v, v > 0 ? v - 1 : -1, i});
  }
  return g;
}

std::vector<int> highest_weight_nodes(const CrystalGraph& graph)
{
  std::vector<bool> has_e(graph.nodes.size(), false);
  for (const CrystalEdge& e : graph.e_edges) has_e[e.from] = true;
  std::vector<int> out;
  for (std::size_t v = 0; v < graph.nodes.size(); ++v)
    if (!has_e[v]) out.push_back(static_cast<int>(v));
  return out;
}

} // namespace alcove
