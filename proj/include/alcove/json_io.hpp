#pragma once

#include "alcove/crystal.hpp"
#include "alcove/gallery.hpp"
#include "alcove/polytope.hpp"
#include "alcove/quiver.hpp"

#include "json.hpp"

#include <string>

namespace alcove {

using Json = nlohmann::json;

// Rationals are lowest-term strings ("p" or "p/q"); -infinity is "-inf".
// Parsing failures throw InvalidInput.

Json to_json(const RationalPoint& x);
RationalPoint point_from_json(const Json& j);

Json to_json(const Face& f);
Face face_from_json(const AffineComplex& ac, const Json& j);

Json to_json(const Gallery& g);
Gallery gallery_from_json(const AffineComplex& ac, const Json& j);

Json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

/// Arrows use 1-based vertices.
Json to_json(const QuiverModule& m);
/// Accepts the explicit form or {"maya": {"n": n, "set": [...]}}.
QuiverModule module_from_json(const Json& j);

Json to_json(const CrystalGraph& g);
CrystalGraph crystal_from_json(const AffineComplex& ac, const Json& j);
std::string to_dot(const CrystalGraph& g);

Json to_json(const std::vector<WeightCount>& histogram);

} // namespace alcove
