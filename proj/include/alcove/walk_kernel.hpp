#pragma once

#include "alcove/affine_complex.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace alcove {

/// Integer tables for walking galleries of a fixed type without building faces.
///
/// An alcove is w(A_fund) with w = t_c u, u a finite Weyl element and c an
/// integral coroot translation.
struct WalkTables {
  explicit WalkTables(const AffineComplex& ac);

  int rank = 0;
  int num_roots = 0;
  int order = 0;
  const WeylGroup* weyl = nullptr;
  /// Weyl element of each alcove at the origin, in sorted alcove order.
  std::vector<int> start_elements;
  /// Facet of type t of A_fund lies on H_{wall_root[t], wall_level[t]}; A_fund
  /// is on the side given by wall_side[t].
  std::vector<int> wall_root;
  std::vector<int> wall_level;
  std::vector<int> wall_side;
  std::vector<std::vector<int>> pairing_rows;
  std::vector<std::vector<int>> coroots;
  /// u(v_t) for vertex t of A_fund, indexed [u * (rank + 1) + t].
  std::vector<RationalPoint> vertex_images;
};

struct WalkSpec {
  std::vector<int> steps; // facet type of G_j, j = 1..p
  int end_vertex = 0;     // vertex type of G_{p+1}
  bool ls_only = true;    // prune non-positively-folded branches, keep LS leaves
  RationalPoint lambda;   // endpoint of the based gallery (coroot coordinates)
  long long based_dim = 0;
  std::size_t budget = 1000000;
};

struct WalkLeaf {
  int start = 0;
  std::uint64_t crossings = 0;
  int element = 0;                 // u of the last alcove
  std::vector<long long> shift;    // c of the last alcove
  long long dim = 0;
  bool positively_folded = true;
};

/// Endpoint G_{p+1} of a leaf, in coroot coordinates.
RationalPoint leaf_endpoint(const WalkTables& t, const WalkSpec& spec, const WalkLeaf& leaf);

/// Reference depth-first walk.
std::vector<WalkLeaf> walk_serial(const WalkTables& t, const WalkSpec& spec);

/// Same leaves in the same order; work split over start alcoves and step prefixes.
std::vector<WalkLeaf> walk_parallel(const WalkTables& t, const WalkSpec& spec, int jobs = 0);

namespace detail {

inline constexpr int max_walk_rank = 8;

struct WalkState {
  int element = 0;
  std::array<long long, max_walk_rank> shift{};
  long long dim = 0;
  bool positively_folded = true;
};

WalkState initial_state(const WalkTables& t, int start);

/// Advances one step; returns false if the branch is pruned.
bool advance(const WalkTables& t, const WalkSpec& spec, int step, bool cross, WalkState& s);

/// Leaf acceptance (LS test in ls_only mode).
bool accept(const WalkTables& t, const WalkSpec& spec, const WalkState& s);

/// Depth-first walk from `depth`, appending accepted leaves. `found` counts
/// leaves across all callers; BudgetExceeded is thrown past spec.budget.
void walk_from(const WalkTables& t, const WalkSpec& spec, int start, std::uint64_t bits, int depth,
               const WalkState& s, std::vector<WalkLeaf>& out, std::atomic<std::size_t>& found);

} // namespace detail

} // namespace alcove
