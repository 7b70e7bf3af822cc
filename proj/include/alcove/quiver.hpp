#pragma once

#include "alcove/polytope.hpp"
#include "alcove/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace alcove {

/// Vertices are 0-based here; labels and JSON use 1-based numbering.
struct Arrow {
  int source = 0;
  int target = 0;
  std::string label;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;
  bool doubled = false;
  /// For a doubled quiver, arrows [0, half) are the original arrows and
  /// arrows [half, 2 half) their stars, in the same order.
  bool operator==(const Quiver&) const = default;
};

/// Type A_n with alpha_i: i -> i-1; doubling adds alpha_i^*: i-1 -> i.
Quiver linear_quiver(int n, bool doubled = true);

using RationalMatrix = std::vector<std::vector<Rational>>;

struct QuiverModule {
  Quiver quiver;
  std::vector<int> dims;
  /// One dims[target] x dims[source] matrix per arrow.
  std::vector<RationalMatrix> maps;
  std::vector<std::string> basis_labels;
};

/// Validates shapes; throws InvalidInput.
void check_module(const QuiverModule& m);

QuiverModule zero_module(const Quiver& q);

/// Maya module N(A) on the doubled A_n quiver.
QuiverModule maya_module(int n, const std::vector<int>& a_set);

bool verify_preprojective(const QuiverModule& m);

/// Relation map at vertex v (0-based): sum of alpha alpha^* over arrows ending
/// at v minus alpha^* alpha over arrows leaving v.
RationalMatrix preprojective_relation(const QuiverModule& m, int v);

QuiverModule direct_sum(const QuiverModule& a, const QuiverModule& b);

/// The four A_2 modules: 'A' dims (1,0), 'B' dims (0,1), 'C' with alpha_2 nonzero,
/// 'D' with alpha_2^* nonzero.
QuiverModule a2_module(char name);

enum class SubmoduleMethod { coordinate, exhaustive };

using DimVectorSet = std::set<std::vector<int>>;

struct SubmoduleOptions {
  SubmoduleMethod method = SubmoduleMethod::coordinate;
  int prime = 2;
  std::size_t budget = 1000000;
  int jobs = 0;
};

/// Every arrow sends each basis vector to a basis vector or to 0, and no two
/// basis vectors to the same one.
bool is_combinatorial(const QuiverModule& m);

DimVectorSet submodule_dim_vectors(const QuiverModule& m, const SubmoduleOptions& opt = {});

/// Hull of the submodule dimension vectors, vertex i placed at alpha_i^vee.
LatticePolytope pol(const QuiverModule& m, const SubmoduleOptions& opt = {});

namespace detail {

/// Subspaces of F_p^d, each given as membership bitmap over the p^d vectors
/// (vectors encoded base p, coordinate 0 least significant) and its dimension.
struct SubspaceList {
  int p = 2;
  int d = 0;
  std::vector<std::vector<bool>> members;
  std::vector<int> dims;
  std::vector<std::vector<std::vector<int>>> bases;
};

SubspaceList all_subspaces(int p, int d);

/// Module maps reduced mod p; throws MethodPrecondition if a denominator vanishes.
std::vector<std::vector<std::vector<int>>> reduce_mod(const QuiverModule& m, int p);

struct ExhaustiveProblem {
  const QuiverModule* module = nullptr;
  int p = 2;
  std::vector<SubspaceList> spaces; // per vertex
  std::vector<std::vector<std::vector<int>>> maps;
  unsigned long long combinations = 0;
};

ExhaustiveProblem exhaustive_problem(const QuiverModule& m, const SubmoduleOptions& opt);

/// Dimension vector of combination `index`, or nullopt if it is not a submodule.
std::optional<std::vector<int>> exhaustive_candidate(const ExhaustiveProblem& prob, unsigned long long index);

DimVectorSet exhaustive_serial(const ExhaustiveProblem& prob);
DimVectorSet exhaustive_parallel(const ExhaustiveProblem& prob, int jobs);

} // namespace detail

} // namespace alcove
