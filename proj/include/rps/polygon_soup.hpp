#pragma once

#include "rps/realization.hpp"

#include <vector>

namespace rps {

// Positions plus face cycles with no topological checks. Intermediate results
// of surgery live here until they are rebuilt into a SurfaceGraph.
struct PolygonSoup {
  std::vector<Vec3> points;
  std::vector<std::vector<int>> faces;

  static PolygonSoup from(const RealizedSurface& rs);
  // Drops unused points (keeping order) and builds. Throws BuildError.
  RealizedSurface to_surface() const;
};

// Deletes adjacent face pairs whose images coincide and identifies their
// vertices, until none remain. Returns the number of pairs removed. When
// given, face_tags runs parallel to soup.faces and is filtered along with it.
int remove_dangling_pairs(PolygonSoup& soup, double eps = kEpsCoord, std::vector<int>* face_tags = nullptr);

struct DanglingCleanup {
  RealizedSurface surface;
  int count = 0;
};

DanglingCleanup remove_dangling_pairs(const RealizedSurface& rs, double eps = kEpsCoord);

}  // namespace rps
