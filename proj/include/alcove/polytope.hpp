#pragma once

#include "alcove/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace alcove {

/// Convex hull of finitely many rational points, kept as its sorted vertex list.
class LatticePolytope {
public:
  LatticePolytope() = default;

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  /// Dimension of the affine span.
  int dim() const { return dim_; }
  int ambient_rank() const { return rank_; }
  /// Boundary in counterclockwise order (2-dimensional polytopes in the plane only).
  const std::vector<RationalPoint>& boundary() const { return boundary_; }

  bool operator==(const LatticePolytope& other) const { return vertices_ == other.vertices_; }

private:
  friend LatticePolytope convex_hull(const std::vector<RationalPoint>& points);
  std::vector<RationalPoint> vertices_;
  std::vector<RationalPoint> boundary_;
  int dim_ = 0;
  int rank_ = 0;
};

/// Vertices come from exact facet enumeration up to dimension 3 and from an
/// exact LP membership test above that.
LatticePolytope convex_hull(const std::vector<RationalPoint>& points);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
bool contains(const LatticePolytope& p, const RationalPoint& x);
/// Area of a polytope in the plane (0 unless dim 2).
Rational area(const LatticePolytope& p);
/// The union of at most three parts equals `whole` (plane only).
bool union_equals(const std::vector<LatticePolytope>& parts, const LatticePolytope& whole);
/// Integer dilation.
LatticePolytope scale(const LatticePolytope& p, long long factor);

/// "alpha1", "alpha2", "beta1", "beta2" in simple-coroot coordinates of A2.
std::map<std::string, LatticePolytope> primitive_a2();

} // namespace alcove
