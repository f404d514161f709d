#pragma once

#include "rps/angle.hpp"
#include "rps/surgery.hpp"

#include <array>
#include <string>
#include <vector>

namespace rps {

enum class DecomposeErrc {
  NotPentagonal,
  NotSquareOct,
  GenusOutOfRange,
  NoReducibleRegion,
  FlipStuck,
  VerificationFailed,
  UnsupportedDegrees,
};

class DecomposeError : public CodedError<DecomposeErrc> {
 public:
  using CodedError::CodedError;
};

const char* to_string(DecomposeErrc c);

// Placed bricks whose union's boundary is the surface. Gluings are
// (brick, facet, brick, facet) for every cancelled facet pair; provenance
// lists the surgeries in the order they were applied.
struct Certificate {
  std::vector<Brick> bricks;
  std::vector<std::array<int, 4>> gluings;
  std::vector<SurgeryRecord> provenance;
};

struct VerificationReport {
  bool pass = false;
  std::string witness;  // first mismatch, empty on success
  int cancelled_pairs = 0;
  std::vector<std::array<int, 4>> gluings;
};

// Cancels coincident facet pairs of opposite orientation over all bricks and
// matches the survivors one-to-one with the faces of rs (same positions, same
// orientation, same edge adjacency).
VerificationReport verify_certificate(const Certificate& cert, const RealizedSurface& rs, double eps = kEpsCoord);

struct DecomposeOptions {
  double eps = kEpsCoord;
  int max_steps = 100000;
};

// Genus 0 or 1 surfaces with pentagonal faces: repeatedly swaps a seven-face
// dodecahedral cap for the complementary five faces and records the
// dodecahedron, down to a single dodecahedron.
Certificate decompose_pent(const RealizedSurface& rs, const DecomposeOptions& opt = {});

// Genus 0 surfaces with faces of degree 4 and 8: removes prisms at octagon
// bigons and cubes or prisms at square bigons (after cube and prism flips),
// down to a single cube or prism.
Certificate decompose_square_oct(const RealizedSurface& rs, const DecomposeOptions& opt = {});

struct FaceAudit {
  FaceId face = kNone;
  int degree = 0;
  AnglePi curvature;
  std::vector<std::string> vertex_types;  // in face cycle order
};

struct AuditViolation {
  std::string kind;
  std::vector<FaceId> faces;
  std::vector<VertexId> vertices;
  std::string detail;
};

// Facial curvature of a positive face plus its first generation, with the
// largest value a realizable configuration allows.
struct RegionalSum {
  FaceId face = kNone;
  int n = 0;  // degree governing the bound
  AnglePi sum;
  AnglePi bound;
};

struct AuditReport {
  std::vector<FaceAudit> faces;
  std::vector<AuditViolation> violations;
  std::vector<RegionalSum> regions;
  AnglePi total;
  int genus = 0;
  int positive_faces = 0, zero_faces = 0, negative_faces = 0;
  bool has_high_degree = false;       // a face of degree 7..10
  bool has_positive_pentagon = false;
  bool genus0_infeasible = false;     // genus 0 with a face of degree >= 7
};

// Throws DecomposeError(UnsupportedDegrees) for degrees outside {5,7,8,9,10}.
// Violation kinds: VertsNFace, MixedDegree3Neighbours, RegionalBound,
// NoPositivePentagon.
AuditReport curvature_audit_5n(const SurfaceGraph& s);

}  // namespace rps
