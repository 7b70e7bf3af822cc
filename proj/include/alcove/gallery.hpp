#pragma once

#include "alcove/affine_complex.hpp"
#include "alcove/walk_kernel.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace alcove {

/// G_0 ⊂ closure(Δ_0) ⊃ G_1 ⊂ ... ⊃ G_{p+1}.
struct Gallery {
  std::vector<Face> smalls;
  std::vector<Face> alcoves;

  /// p: number of steps after Δ_0.
  int length() const { return static_cast<int>(alcoves.size()) - 1; }
  bool is_fold(int j) const { return alcoves.at(j) == alcoves.at(j - 1); }
  bool operator==(const Gallery&) const = default;
  auto operator<=>(const Gallery& other) const
  {
    if (auto c = smalls <=> other.smalls; c != 0) return c;
    return alcoves <=> other.alcoves;
  }
};

struct GalleryType {
  /// type(G_0), type(Δ_0), type(G_1), ..., type(G_{p+1}).
  std::vector<FaceType> entries;
  bool operator==(const GalleryType&) const = default;
};

struct WeightCount {
  std::vector<long long> weight; // fundamental-coweight coordinates
  long long count = 0;
  bool ls = true;
};

/// Facet of the fundamental alcove opposite its t-th vertex (t = 0 is the origin).
FaceType wall_type(const AffineComplex& ac, int t);

Gallery minimal_gallery(const AffineComplex& ac, const LatticeVector& lambda);

/// Gallery for a word in the walls of the fundamental alcove; letter 0 is the
/// affine wall H_{θ,1}, letter i the wall H_{α_i,0}. The word must be reduced
/// and the walk must end at lambda.
Gallery gallery_from_word(const AffineComplex& ac, const LatticeVector& lambda, const std::vector<int>& word);

GalleryType gallery_type(const AffineComplex& ac, const Gallery& g);

/// Gallery of type `type` starting in the start-th alcove around the origin
/// (sorted order); bit j-1 of `crossings` set means step j crosses its wall.
Gallery gallery_from_path(const AffineComplex& ac, const GalleryType& type, int start, std::uint64_t crossings);

/// Γ(γ) in canonical order: start alcove, then fold-before-cross at each step.
std::vector<Gallery> enumerate_same_type(const AffineComplex& ac, const Gallery& gamma,
                                         std::size_t budget = 1000000);

LatticeVector weight(const AffineComplex& ac, const Gallery& g);

std::vector<AffineRoot> load_bearing_walls(const AffineComplex& ac, const Gallery& g, int j);
long long gallery_dim(const AffineComplex& ac, const Gallery& g);
bool is_positively_folded(const AffineComplex& ac, const Gallery& g);
bool is_ls(const AffineComplex& ac, const Gallery& g, const Gallery& gamma);

/// Kernel input describing Γ(γ).
WalkSpec walk_spec(const AffineComplex& ac, const Gallery& gamma, bool ls_only, std::size_t budget = 1000000);

/// LS galleries of Γ(γ) in canonical order, found with the parallel walk kernel.
std::vector<Gallery> enumerate_ls(const AffineComplex& ac, const Gallery& gamma, std::size_t budget = 1000000,
                                  int jobs = 0);

/// Weight histogram of the LS galleries of Γ(γ), sorted by weight.
std::vector<WeightCount> ls_histogram(const AffineComplex& ac, const Gallery& gamma, std::size_t budget = 1000000,
                                      int jobs = 0);

/// Weight histogram of all of Γ(γ), split by whether the galleries are LS.
std::vector<WeightCount> type_histogram(const AffineComplex& ac, const Gallery& gamma, std::size_t budget = 1000000,
                                        int jobs = 0);

} // namespace alcove
