#pragma once

#include "rps/bands.hpp"
#include "rps/polygon_soup.hpp"
#include "rps/solids.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rps {

enum class SurgeryErrc {
  NonSeparating,
  BoundaryMismatch,
  NoIsometry,
  BandHasOctagon,
  OverReduction,
  NotPrismStructured,
  WrongKind,
  SingleBrick,
  NoBridgingFace,
  NotCubeCorner,
  NotPrismHalf,
  NotBrickCap,
  InvalidResult,
};

class SurgeryError : public CodedError<SurgeryErrc> {
 public:
  using CodedError::CodedError;
};

const char* to_string(SurgeryErrc c);

enum class SurgeryKind {
  Polyhedral,
  Band,
  OctagonRemoval,
  PrismRemoval,
  CubeRemoval,
  CubeFlip,
  PrismFlip,
  DanglingCleanup,
};

const char* to_string(SurgeryKind k);

struct SurgeryRecord {
  SurgeryKind kind = SurgeryKind::Polyhedral;
  std::optional<Brick> brick;
  bool brick_removed = true;      // false: the brick was added on the outside
  Cycle cycle;                    // cut cycle on the input surface (may be empty)
  RigidMotion isometry;
  std::vector<FaceId> replaced;   // input faces taken out
  int added = 0;                  // faces put in before cleanup
  int dangling_pairs = 0;
  int faces_before = 0;
  int faces_after = 0;
  std::string rule;               // which driver rule chose this step
};

struct SurgeryResult {
  RealizedSurface surface;
  SurgeryRecord record;
};

// One side of a cut. boundary[i] -> boundary[i+1] (cyclically) is a halfedge
// of one of the faces. Indices are local to the hemisphere.
struct Hemisphere {
  std::vector<Vec3> points;
  std::vector<std::vector<int>> faces;
  std::vector<int> boundary;
  std::vector<FaceId> source_faces;
};

// First hemisphere: faces left of the cycle (those using the halfedges
// vertices[i] -> vertices[i+1]); second: the rest.
std::pair<Hemisphere, Hemisphere> cut_along_cycle(const RealizedSurface& rs, const Cycle& c);

// Glues h1, moved by the fitted isometry, to h2. Boundary vertex j of h2 is
// identified with vertex (alignment - j) mod k of h1; without an alignment
// the first one that admits an isometry is used. Dangling pairs are removed.
SurgeryResult polyhedral_surgery(const Hemisphere& h1, const Hemisphere& h2, std::optional<int> alignment = std::nullopt,
                                 double eps = kEpsCoord);

// Faces of rs that coincide with facets of the brick, in index order. With
// same_orientation, only those whose outward side agrees with the brick's.
std::vector<FaceId> faces_on_brick(const RealizedSurface& rs, const Brick& brick, bool same_orientation,
                                   double eps = kEpsCoord);

// Replaces the cap faces (all facets of the brick, with one common
// orientation) by the brick's other facets. Cap faces oriented like the
// brick mean the brick lies inside and is removed; opposite orientation means
// it is added. Dangling pairs are then removed and the result is validated
// (build, genus, properness, realization, collisions of the new faces).
SurgeryResult toggle_brick(const RealizedSurface& rs, const Brick& brick, const std::vector<FaceId>& cap,
                           SurgeryKind kind, double eps = kEpsCoord, bool allow_genus_change = false,
                           bool check_collisions = true);

// Bricks of the given kind having face f as a facet, on the inner side
// (the face's orientation agrees with the brick's) or the outer side.
std::vector<Brick> bricks_at_face(const RealizedSurface& rs, FaceId f, SolidKind kind, bool inner,
                                  double eps = kEpsCoord);

// True when the surface is exactly the boundary of one brick of that kind.
bool is_single_brick(const RealizedSurface& rs, SolidKind kind, double eps = kEpsCoord);

// Deletes an all-square band and closes the gap by translating the hemisphere
// on the far side of the crossed edges back by their common vector.
SurgeryResult band_surgery(const RealizedSurface& rs, const Band& band, double eps = kEpsCoord);

SurgeryResult octagon_removal_surgery(const RealizedSurface& rs, const std::vector<Band>& bands, const Bigon& bigon,
                                      double eps = kEpsCoord);

// The bigon must have an arc consisting of a single face (the bridge).
SurgeryResult brick_removal_surgery(const RealizedSurface& rs, const Bigon& bigon, double eps = kEpsCoord);

SurgeryResult cube_flip(const RealizedSurface& rs, FaceId f, FaceId g, FaceId h, double eps = kEpsCoord);
SurgeryResult prism_flip(const RealizedSurface& rs, const std::vector<FaceId>& faces, double eps = kEpsCoord);

// The faces a flip put in, as indices of the result (for flipping back).
std::vector<FaceId> flipped_faces(const SurgeryResult& r, double eps = kEpsCoord);

// Undoes a brick surgery by toggling the recorded brick back.
SurgeryResult reapply(const RealizedSurface& rs, const SurgeryRecord& rec, double eps = kEpsCoord);

}  // namespace rps
