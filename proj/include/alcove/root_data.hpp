#pragma once

#include "alcove/rational.hpp"

#include <map>
#include <vector>

namespace alcove {

using IntMatrix = std::vector<std::vector<int>>;

/// Which basis the integer coordinates of a LatticeVector refer to.
enum class Basis { coroot, coweight };

/// Integer vector in simple-coroot (alpha_i^vee) or fundamental-coweight
/// (omega_i^vee) coordinates. Plays the role of coweights and crystal weights.
struct LatticeVector {
  std::vector<long long> coords;
  Basis basis = Basis::coweight;

  static LatticeVector coweight(std::vector<long long> c) { return {std::move(c), Basis::coweight}; }
  static LatticeVector coroot(std::vector<long long> c) { return {std::move(c), Basis::coroot}; }
};

/// Root datum of a simply-laced finite type, built from its Cartan matrix.
///
/// Roots are stored in simple-root coordinates. Because the type is
/// simply laced, the coroot of a root has the same coordinates in the
/// simple-coroot basis, and points of the coweight space are kept in
/// simple-coroot coordinates throughout the library.
class RootSystem {
public:
  explicit RootSystem(IntMatrix cartan);

  /// Cartan matrix of A_r.
  static RootSystem type_a(int rank);

  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  int highest_root() const { return highest_; }
  /// Index of the simple root alpha_i (0-based i) in positive_roots().
  int simple_root(int i) const { return simple_index_.at(i); }
  /// Index of a root given in simple-root coordinates, or -1.
  int find_root(const std::vector<int>& coords) const;
  /// Height of a positive root (sum of its simple-root coefficients).
  int root_height(int root) const;

  /// <alpha_root, alpha_i^vee> for each i.
  const std::vector<int>& pairing_row(int root) const { return pairing_rows_.at(root); }

  /// <alpha, x> for x in simple-coroot coordinates.
  Rational pairing(int root, const RationalPoint& x) const;
  long long pairing(int root, const std::vector<long long>& coroot_coords) const;

  long long determinant() const { return det_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_; }
  /// Coefficients of the highest root; the vertices of the fundamental alcove
  /// are 0 and omega_i^vee / c_i.
  const std::vector<int>& highest_root_coefficients() const { return positive_.at(highest_); }

  /// Coordinates of v in the simple-coroot basis (rational in general).
  RationalPoint to_coroot(const LatticeVector& v) const;
  /// Fundamental-coweight coordinates of v; integral for every lattice vector.
  std::vector<long long> to_coweight(const LatticeVector& v) const;
  /// Fundamental-coweight coordinates of a rational point.
  RationalPoint coweight_coords(const RationalPoint& x) const;
  /// Inverse of coweight_coords.
  RationalPoint from_coweight_coords(const RationalPoint& y) const;

  bool operator==(const RootSystem& other) const { return cartan_ == other.cartan_; }

private:
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<std::vector<int>> positive_;
  std::vector<int> simple_index_;
  std::vector<std::vector<int>> pairing_rows_;
  std::map<std::vector<int>, int> lookup_;
  int highest_ = -1;
  long long det_ = 1;
  std::vector<std::vector<Rational>> inverse_;
};

/// Sum of simple-coroot coefficients. Throws InvalidInput if a coefficient
/// is negative or non-integral (the pair is not dominance-ordered).
long long height(const RootSystem& rs, const LatticeVector& v);

bool is_dominant(const RootSystem& rs, const LatticeVector& v);

/// <2 rho, mu> = sum over positive roots of <alpha, mu>; mu dominant.
long long schubert_cell_dim(const LatticeVector& mu, const RootSystem& rs);

/// rhs - lhs is a non-negative integer combination of simple coroots.
bool dominance_leq(const LatticeVector& lhs, const LatticeVector& rhs, const RootSystem& rs);

/// Weyl dimension formula for the irreducible module of highest weight lambda.
long long weyl_dim(const LatticeVector& lambda, const RootSystem& rs);

/// Multiplicity of nu in the irreducible module V_lambda (Freudenthal recursion).
long long freudenthal_multiplicity(const LatticeVector& lambda, const LatticeVector& nu,
                                   const RootSystem& rs);

/// All weights of V_lambda with their multiplicities, keyed by
/// fundamental-coweight coordinates.
std::map<std::vector<long long>, long long> weight_multiplicities(const LatticeVector& lambda,
                                                                  const RootSystem& rs);

/// All dominant coweights (fundamental-coweight coordinates) with every
/// coordinate in [0, max_coord].
std::vector<LatticeVector> dominant_box(const RootSystem& rs, int max_coord);

} // namespace alcove
