#pragma once

#include "rps/surface_graph.hpp"

#include <optional>
#include <vector>

namespace rps {

struct Correspondence {
  std::vector<VertexId> vertex;      // S1 vertex -> S2 vertex
  std::vector<FaceId> face;          // S1 face -> S2 face
  std::vector<HalfedgeId> halfedge;  // S1 halfedge -> S2 halfedge (or its reversal)
  bool orientation_reversing = false;
};

// Incidence-preserving bijection, orientation-preserving if one exists,
// otherwise orientation-reversing. In the reversing case halfedge[h] is the
// S2 halfedge running opposite to the image of h.
std::optional<Correspondence> is_isomorphic(const SurfaceGraph& s1, const SurfaceGraph& s2);

}  // namespace rps
