#pragma once

#include "rps/realization.hpp"
#include "rps/surface_graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace rps {

// Unit edges, equal circumradius 1/(2 sin(pi/k)) about the centroid, and
// planarity against the best-fit plane, all within eps. On failure, why
// receives a short description.
bool is_regular_polygon(std::span<const Vec3> pts, double eps = kEpsCoord, std::string* why = nullptr);

// True when both point lists describe the same set of positions.
bool same_point_set(std::span<const Vec3> a, std::span<const Vec3> b, double eps = kEpsCoord);

// Violation kinds: NonUnitEdge, NonRegularFace, AdjacentOverlap, DanglingPair.
ValidationReport validate_realization(const SurfaceGraph& s, const Realization& r, double eps = kEpsCoord);
inline ValidationReport validate_realization(const RealizedSurface& rs, double eps = kEpsCoord) {
  return validate_realization(rs.graph, rs.coords, eps);
}

// Global embedding test: pairs of faces whose images meet outside what their
// combinatorial intersection allows, including pairs with nothing in common
// (kind Collision). When `only` is non-empty, just pairs involving those faces.
ValidationReport find_collisions(const RealizedSurface& rs, std::span<const FaceId> only = {},
                                 double eps = kEpsCoord);

}  // namespace rps
