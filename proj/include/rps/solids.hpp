#pragma once

#include "rps/polygon_soup.hpp"
#include "rps/realization.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rps {

enum class SolidKind {
  Cube,
  Dodecahedron,
  OctagonalPrism,
  HexagonalPrism,
  TruncatedOctahedron,
  TruncatedCuboctahedron,
};

const char* to_string(SolidKind k);
std::optional<SolidKind> solid_kind_from_string(std::string_view s);

// Unit-edge solid in its canonical position. Faces are counter-clockwise seen
// from outside, each starting at its smallest vertex index.
struct CanonicalSolid {
  std::vector<Vec3> points;
  std::vector<std::vector<int>> faces;
  std::vector<Vec3> normals;    // outward, per face
  std::vector<Vec3> edge_dirs;  // one unit vector per edge direction class
};

// Cube on {0,1}^3; the others centred at the origin. The octagonal prism has
// axis z and side normals along the coordinate axes and diagonals.
const CanonicalSolid& canonical_solid(SolidKind k);

RealizedSurface make_solid(SolidKind k);

// A canonical solid moved into place.
struct Brick {
  SolidKind kind = SolidKind::Cube;
  RigidMotion placement;

  std::vector<Vec3> points() const;
  std::vector<Vec3> facet(int i) const;
  int num_facets() const;
  Vec3 center() const;
};

// The brick of the given kind having `target` (counter-clockwise seen from the
// brick's outside) as a facet. `offset` selects among the cyclic alignments;
// nullopt when no facet has the right degree or the polygon does not fit.
std::optional<Brick> place_brick(SolidKind kind, std::span<const Vec3> target, int offset = 0,
                                 double eps = kEpsCoord);

// All geometrically distinct bricks of `kind` with `target` as a facet.
std::vector<Brick> bricks_on_polygon(SolidKind kind, std::span<const Vec3> target, double eps = kEpsCoord);

bool same_brick(const Brick& a, const Brick& b, double eps = kEpsCoord);

// Interiors overlap (face contact does not count).
bool bricks_overlap(const Brick& a, const Brick& b, double eps = kEpsCoord);

// Boundary of a union of bricks: every facet, with coincident pairs of
// opposite orientation cancelled. Throws Error on a coincident pair with equal
// orientation or a facet shared by more than two bricks.
PolygonSoup brick_union_boundary(std::span<const Brick> bricks, double eps = kEpsCoord,
                                 std::vector<std::array<int, 4>>* gluings = nullptr);

}  // namespace rps
