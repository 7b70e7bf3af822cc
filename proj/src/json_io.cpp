#include "alcove/json_io.hpp"

#include "alcove/errors.hpp"

#include <sstream>

namespace alcove {

namespace {

Rational rational_from_json(const Json& j)
{
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidInput("expected a rational string");
}

Json ext_to_json(const ExtInt& v) { return v ? Json(*v) : Json("-inf"); }

ExtInt ext_from_json(const Json& j)
{
  if (j.is_string() && j.get<std::string>() == "-inf") return std::nullopt;
  if (j.is_number_integer()) return j.get<long long>();
  throw InvalidInput("expected an integer or \"-inf\"");
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace

Json to_json(const RationalPoint& x)
{
  Json j = Json::array();
  for (const Rational& c : x) j.push_back(to_string(c));
  return j;
}

RationalPoint point_from_json(const Json& j)
{
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  RationalPoint x;
  for (const Json& c : j) x.push_back(rational_from_json(c));
  return x;
}

Json to_json(const Face& f)
{
  Json signs = Json::array();
  for (std::size_t a = 0; a < f.code().size(); ++a) {
    const int root = static_cast<int>(a);
    signs.push_back({{"root", root}, {f.is_on(root) ? "on" : "between", f.level(root)}});
  }
  return {{"point", to_json(f.witness())}, {"signs", signs}};
}

Face face_from_json(const AffineComplex& ac, const Json& j)
{
  return guarded([&] {
    const RationalPoint x = point_from_json(j.at("point"));
    std::vector<long long> code(ac.roots().num_positive_roots(), 0);
    std::vector<bool> seen(code.size(), false);
    for (const Json& s : j.at("signs")) {
      const int root = s.at("root").get<int>();
      if (root < 0 || root >= static_cast<int>(code.size()) || seen[root]) throw InvalidInput("bad root index in signs");
      seen[root] = true;
      if (s.contains("on")) code[root] = 2 * s.at("on").get<long long>();
      else code[root] = 2 * s.at("between").get<long long>() + 1;
    }
    for (bool b : seen)
      if (!b) throw InvalidInput("signs must cover every positive root");
    return ac.make_face(code, x);
  });
}

Json to_json(const Gallery& g)
{
  Json smalls = Json::array(), alcoves = Json::array(), folds = Json::array();
  for (const Face& f : g.smalls) smalls.push_back(to_json(f));
  for (const Face& f : g.alcoves) alcoves.push_back(to_json(f));
  for (int j = 1; j <= g.length(); ++j) folds.push_back(g.is_fold(j));
  return {{"smalls", smalls}, {"alcoves", alcoves}, {"folds", folds}};
}

Gallery gallery_from_json(const AffineComplex& ac, const Json& j)
{
  return guarded([&] {
    Gallery g;
    for (const Json& f : j.at("smalls")) g.smalls.push_back(face_from_json(ac, f));
    for (const Json& f : j.at("alcoves")) g.alcoves.push_back(face_from_json(ac, f));
    if (g.alcoves.empty() || g.smalls.size() != g.alcoves.size() + 1) throw InvalidInput("malformed gallery");
    for (const Face& a : g.alcoves)
      if (a.dim() != ac.rank()) throw InvalidInput("gallery alcove is not an alcove");
    for (std::size_t k = 0; k < g.alcoves.size(); ++k)
      if (!ac.in_closure(g.smalls[k], g.alcoves[k]) || !ac.in_closure(g.smalls[k + 1], g.alcoves[k]))
        throw InvalidInput("gallery faces are not incident");
    return g;
  });
}

Json to_json(const LatticePolytope& p)
{
  Json v = Json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return {{"vertices", v}};
}

LatticePolytope polytope_from_json(const Json& j)
{
  return guarded([&] {
    std::vector<RationalPoint> pts;
    for (const Json& v : j.at("vertices")) pts.push_back(point_from_json(v));
    return convex_hull(pts);
  });
}

Json to_json(const QuiverModule& m)
{
  Json arrows = Json::array();
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    Json mat = Json::array();
    for (const auto& row : m.maps[a]) {
      Json r = Json::array();
      for (const Rational& x : row) r.push_back(to_string(x));
      mat.push_back(r);
    }
    arrows.push_back({{"from", m.quiver.arrows[a].source + 1}, {"to", m.quiver.arrows[a].target + 1}, {"matrix", mat}});
  }
  Json j = {{"dims", m.dims}, {"arrows", arrows}};
  if (!m.basis_labels.empty()) j["basis"] = m.basis_labels;
  return j;
}

QuiverModule module_from_json(const Json& j)
{
  return guarded([&] {
    if (j.contains("maya")) {
      const Json& y = j.at("maya");
      return maya_module(y.at("n").get<int>(), y.at("set").get<std::vector<int>>());
    }
    const auto dims = j.at("dims").get<std::vector<int>>();
    if (dims.empty()) throw InvalidInput("module needs at least one vertex");
    QuiverModule m = zero_module(linear_quiver(static_cast<int>(dims.size())));
    m.dims = dims;
    for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
      const Arrow& arr = m.quiver.arrows[a];
      m.maps[a] = RationalMatrix(dims[arr.target], std::vector<Rational>(dims[arr.source], Rational(0)));
    }
    for (const Json& arrow : j.value("arrows", Json::array())) {
      const int from = arrow.at("from").get<int>() - 1;
      const int to = arrow.at("to").get<int>() - 1;
      std::size_t a = 0;
      while (a < m.quiver.arrows.size() && !(m.quiver.arrows[a].source == from && m.quiver.arrows[a].target == to)) ++a;
      if (a == m.quiver.arrows.size()) throw InvalidInput("arrow is not in the doubled type A quiver");
      RationalMatrix mat;
      for (const Json& row : arrow.at("matrix")) {
        std::vector<Rational> r;
        for (const Json& x : row) r.push_back(rational_from_json(x));
        mat.push_back(std::move(r));
      }
      // A matrix with zero columns serializes as rows of empty arrays or as [].
      if (mat.empty() && dims[to] > 0 && dims[from] == 0) mat.assign(dims[to], {});
      m.maps[a] = std::move(mat);
    }
    if (j.contains("basis")) m.basis_labels = j.at("basis").get<std::vector<std::string>>();
    check_module(m);
    return m;
  });
}

Json to_json(const CrystalGraph& g)
{
  Json nodes = Json::array(), edges = Json::array();
  for (const CrystalElement& e : g.nodes) {
    Json eps = Json::array(), phi = Json::array();
    for (const auto& v : e.eps) eps.push_back(ext_to_json(v));
    for (const auto& v : e.phi) phi.push_back(ext_to_json(v));
    Json n = {{"weight", e.weight}, {"eps", eps}, {"phi", phi}};
    if (const auto* gal = std::get_if<Gallery>(&e.payload)) n["gallery"] = to_json(*gal);
    if (const auto* t = std::get_if<TLambdaPoint>(&e.payload)) n["t"] = t->lambda.coords;
    if (const auto* b = std::get_if<BiPoint>(&e.payload)) n["b"] = {{"i", b->i}, {"n", b->n}};
    nodes.push_back(n);
  }
  for (const CrystalEdge& e : g.f_edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}});
  Json j = {{"rank", g.rank}, {"nodes", nodes}, {"edges", edges}};
  Json e_edges = Json::array();
  for (const CrystalEdge& e : g.e_edges) e_edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}});
  j["e_edges"] = e_edges;
  return j;
}

CrystalGraph crystal_from_json(const AffineComplex& ac, const Json& j)
{
  return guarded([&] {
    CrystalGraph g;
    g.rank = j.at("rank").get<int>();
    for (const Json& n : j.at("nodes")) {
      CrystalElement e;
      e.weight = n.at("weight").get<std::vector<long long>>();
      for (const Json& v : n.at("eps")) e.eps.push_back(ext_from_json(v));
      for (const Json& v : n.at("phi")) e.phi.push_back(ext_from_json(v));
      if (n.contains("gallery")) e.payload = gallery_from_json(ac, n.at("gallery"));
      else if (n.contains("t")) e.payload = TLambdaPoint{LatticeVector::coweight(n.at("t").get<std::vector<long long>>())};
      else if (n.contains("b")) e.payload = BiPoint{n.at("b").at("i").get<int>(), n.at("b").at("n").get<long long>()};
      else throw InvalidInput("crystal node without payload");
      g.nodes.push_back(std::move(e));
    }
    auto edges = [](const Json& list) {
      std::vector<CrystalEdge> out;
      for (const Json& e : list) out.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("i").get<int>()});
      return out;
    };
    g.f_edges = edges(j.at("edges"));
    g.e_edges = edges(j.value("e_edges", Json::array()));
    return g;
  });
}

std::string to_dot(const CrystalGraph& g)
{
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out << "  n" << v << " [label=\"(";
    for (std::size_t i = 0; i < g.nodes[v].weight.size(); ++i) out << (i ? "," : "") << g.nodes[v].weight[i];
    out << ")\"];\n";
  }
  for (const CrystalEdge& e : g.f_edges)
    if (e.to >= 0) out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.i << "\"];\n";
  out << "}\n";
  return out.str();
}

Json to_json(const std::vector<WeightCount>& histogram)
{
  Json rows = Json::array();
  Json by_weight = Json::object();
  long long total = 0;
  for (const WeightCount& w : histogram) {
    rows.push_back({{"weight", w.weight}, {"count", w.count}, {"ls", w.ls}});
    std::string key;
    for (std::size_t i = 0; i < w.weight.size(); ++i) key += (i ? "," : "") + std::to_string(w.weight[i]);
    by_weight[key] = by_weight.value(key, 0LL) + w.count;
    total += w.count;
  }
  return {{"total", total}, {"by_weight", by_weight}, {"histogram", rows}};
}

} // namespace alcove
