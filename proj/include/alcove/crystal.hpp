#pragma once

#include "alcove/gallery.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace alcove {

/// Integer or -infinity (nullopt).
using ExtInt = std::optional<long long>;

struct TLambdaPoint {
  LatticeVector lambda;
  bool operator==(const TLambdaPoint& o) const { return lambda.coords == o.lambda.coords; }
};

/// b_i(n).
struct BiPoint {
  int i = 1;
  long long n = 0;
  bool operator==(const BiPoint&) const = default;
};

using CrystalPayload = std::variant<Gallery, TLambdaPoint, BiPoint>;

struct CrystalElement {
  CrystalPayload payload;
  std::vector<long long> weight; // fundamental-coweight coordinates
  std::vector<ExtInt> eps;       // indexed by i - 1
  std::vector<ExtInt> phi;
};

/// edge (from, to, i): f~_i(from) = to for f-edges, e~_i(from) = to for e-edges.
/// to = -1 marks an edge leaving a materialized window.
struct CrystalEdge {
  int from = 0;
  int to = 0;
  int i = 1;
  bool operator==(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  int rank = 0;
  std::vector<CrystalElement> nodes;
  std::vector<CrystalEdge> f_edges;
  std::vector<CrystalEdge> e_edges;
};

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Gallery root operators; i runs over 1..rank.
long long epsilon(const AffineComplex& ac, const Gallery& g, int i);
long long phi(const AffineComplex& ac, const Gallery& g, int i);
std::optional<Gallery> e_op(const AffineComplex& ac, const Gallery& g, int i);
std::optional<Gallery> f_op(const AffineComplex& ac, const Gallery& g, int i);

CrystalElement gallery_element(const AffineComplex& ac, const Gallery& g);

/// Closure of seed under all e~_i, f~_i. Nodes are ordered by decreasing
/// height of the weight, then weight, then gallery.
CrystalGraph generate_crystal(const AffineComplex& ac, const Gallery& seed, std::size_t node_cap = 100000);

AxiomReport verify_axioms(const CrystalGraph& graph, const RootSystem& rs);

/// T(lambda).
CrystalGraph elementary_t(const RootSystem& rs, const LatticeVector& lambda);

/// B_i restricted to lo <= n <= hi, with wt(b_i(n)) = n alpha_i^vee.
CrystalGraph elementary_b(const RootSystem& rs, int i, long long lo, long long hi);

/// Indices of nodes on which every e~_i is undefined.
std::vector<int> highest_weight_nodes(const CrystalGraph& graph);

} // namespace alcove
