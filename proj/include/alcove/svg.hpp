#pragma once

#include "alcove/gallery.hpp"
#include "alcove/polytope.hpp"

#include <string>
#include <vector>

namespace alcove {

/// Rank-2 pictures. Coroot coordinates are drawn in the plane through the
/// Cartan form, so A2 appears with its hexagonal symmetry.

std::string polytopes_svg(const RootSystem& rs, const std::vector<LatticePolytope>& polys);

/// Hyperplanes near the gallery dashed, its alcoves shaded, the path through
/// the barycenters drawn on top.
std::string gallery_svg(const AffineComplex& ac, const Gallery& g);

} // namespace alcove
