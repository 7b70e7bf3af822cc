#pragma once

#include "alcove/root_data.hpp"

#include <vector>

namespace alcove {

/// The finite Weyl group of a root system, materialized as integer matrices
/// acting on simple-coroot coordinates, with lookup tables for the action on
/// positive roots and left multiplication by root reflections.
class WeylGroup {
public:
  explicit WeylGroup(const RootSystem& rs, std::size_t max_order = 50000);

  std::size_t order() const { return elements_.size(); }
  /// Element 0 is the identity.
  const IntMatrix& matrix(int w) const { return elements_.at(w); }

  /// w(alpha_root) as a signed root: +(index+1) for a positive root,
  /// -(index+1) for a negative one.
  int root_image(int w, int root) const { return root_image_[w * num_roots_ + root]; }
  /// Index of s_alpha * w.
  int reflect_left(int root, int w) const { return reflect_left_[root * order() + w]; }
  /// Number of positive roots sent to negative roots by w.
  int length(int w) const { return length_.at(w); }

  std::vector<long long> apply(int w, const std::vector<long long>& x) const;
  RationalPoint apply(int w, const RationalPoint& x) const;

private:
  int rank_;
  int num_roots_;
  std::vector<IntMatrix> elements_;
  std::vector<int> root_image_;
  std::vector<int> reflect_left_;
  std::vector<int> length_;
};

} // namespace alcove
