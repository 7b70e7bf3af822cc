#pragma once

#include "alcove/root_data.hpp"
#include "alcove/weyl_group.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace alcove {

/// Affine root (alpha, n) with alpha positive; denotes the hyperplane
/// H_{alpha,n} = {x : <alpha, x> = n}. Negative roots are normalized away
/// since H_{-alpha,-n} = H_{alpha,n}.
struct AffineRoot {
  int root = 0;
  long long level = 0;

  auto operator<=>(const AffineRoot&) const = default;
};

/// Cell of the affine Coxeter complex.
///
/// The face is identified by its sign vector: for every positive root the
/// face lies either on a hyperplane H_{alpha,n} or strictly between
/// H_{alpha,n} and H_{alpha,n+1}. The sign vector is packed as code 2n
/// (on) or 2n+1 (between). The witness is the barycenter of the face's
/// vertices and takes no part in equality.
class Face {
public:
  Face() = default;

  const std::vector<long long>& code() const { return code_; }
  const RationalPoint& witness() const { return witness_; }
  int dim() const { return dim_; }

  bool is_on(int root) const { return (code_[root] & 1) == 0; }
  /// n such that the face lies on H_{alpha,n} or between H_{alpha,n} and H_{alpha,n+1}.
  long long level(int root) const { return code_[root] >> 1; }

  bool operator==(const Face& other) const { return code_ == other.code_; }
  std::strong_ordering operator<=>(const Face& other) const { return code_ <=> other.code_; }

private:
  friend class AffineComplex;
  std::vector<long long> code_;
  RationalPoint witness_;
  int dim_ = 0;
};

/// Canonical representative of a W^aff-orbit of faces: a face of the
/// closed fundamental alcove.
struct FaceType {
  Face face;

  bool operator==(const FaceType& other) const { return face == other.face; }
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Exact model of the affine Coxeter complex of a root system.
class AffineComplex {
public:
  explicit AffineComplex(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& weyl() const { return weyl_; }
  int rank() const { return rs_.rank(); }

  /// x - (<alpha, x> - n) alpha^vee.
  RationalPoint affine_reflection(const AffineRoot& beta, const RationalPoint& x) const;

  /// The open face containing x, with its witness normalized to the barycenter.
  Face carrier_face(const RationalPoint& x) const;
  FaceType face_type(const Face& f) const;
  /// All alcoves whose closure contains f, sorted by sign vector.
  std::vector<Face> alcoves_containing(const Face& f) const;
  /// The unique face of the closed alcove having type t.
  Face face_of_type_in_alcove(const Face& alcove, const FaceType& t) const;
  Face translate_face(const Face& f, const LatticeVector& v) const;
  Face reflect_face(const Face& f, const AffineRoot& beta) const;

  const Face& fundamental_alcove() const { return fundamental_; }
  const Face& origin() const { return origin_; }
  /// Vertices of the closed fundamental alcove: 0 followed by omega_i^vee / c_i.
  const std::vector<RationalPoint>& fundamental_vertices() const { return fund_vertices_; }

  /// small lies in the closure of big.
  bool in_closure(const Face& small, const Face& big) const;
  /// Hyperplanes containing f.
  std::vector<AffineRoot> walls(const Face& f) const;
  /// Vertices of the closure of f, sorted.
  std::vector<RationalPoint> vertices(const Face& f) const;
  /// Number of hyperplanes separating an alcove from the fundamental alcove.
  long long alcove_distance(const Face& alcove) const;

  /// Point of a vertex face as a coweight; nullopt if f is not a lattice vertex.
  std::optional<LatticeVector> lattice_point(const Face& f) const;
  /// Face built from an explicit sign vector and witness (used by deserialization);
  /// throws InvalidInput if the witness does not realize the sign vector.
  Face make_face(const std::vector<long long>& code, const RationalPoint& witness) const;

  /// Reflections (in application order) that fold x into the closed fundamental alcove.
  std::vector<AffineRoot> folding_word(RationalPoint& x) const;

private:
  std::vector<long long> code_of(const RationalPoint& x) const;
  int dim_of(const std::vector<long long>& code) const;
  Face face_at(const RationalPoint& barycenter) const;
  RationalPoint unfold(const std::vector<AffineRoot>& word, RationalPoint x) const;

  RootSystem rs_;
  WeylGroup weyl_;
  std::vector<RationalPoint> fund_vertices_;
  Face fundamental_;
  Face origin_;
  std::vector<RationalPoint> regular_directions_;
};

} // namespace alcove
