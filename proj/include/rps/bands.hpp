#pragma once

#include "rps/realization.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rps {

enum class BandErrc {
  NotIncident,
  NoParallelEdge,        // odd-degree face on the path
  NotClosed,
  NonParallelTransport,
  NotGenusZero,
  NoBigon,
  MixedBigon,
  LemmaViolation,
};

class BandError : public CodedError<BandErrc> {
 public:
  using CodedError::CodedError;
};

const char* to_string(BandErrc c);

struct BandStep {
  FaceId face;
  EdgeId entry;
  EdgeId exit;
};

// Closed strip of faces crossing a chain of parallel edges. steps[i].exit ==
// steps[i+1].entry (cyclically).
struct Band {
  std::vector<BandStep> steps;
  Vec3 direction = Vec3::Zero();  // the crossed edges are parallel to this

  int length() const { return static_cast<int>(steps.size()); }
  std::vector<FaceId> faces() const;
  std::vector<EdgeId> crossed_edges() const;  // exit edges in order
  int position(FaceId f) const;               // index in steps, or kNone
};

Band trace_band(const RealizedSurface& rs, EdgeId e, FaceId f, double eps = kEpsCoord);

// One band per parallel class of edges, discovered from the least uncovered
// edge, each in canonical form (least rotation/reversal of its face sequence).
std::vector<Band> all_bands(const RealizedSurface& rs, double eps = kEpsCoord);

// Faces of a closed dual cycle whose entry and exit edges are not parallel.
std::vector<FaceId> turning_points(const RealizedSurface& rs, const std::vector<FaceId>& dual_cycle,
                                   double eps = kEpsCoord);

// Faces left and right of a closed dual cycle, by flood fill. Throws
// BandError(NotGenusZero) when the two sides meet.
struct CycleSides {
  std::vector<FaceId> left, right;
};
CycleSides cycle_sides(const SurfaceGraph& s, const std::vector<FaceId>& dual_cycle);

enum class BigonKind { Square, Octagon, Mixed };
const char* to_string(BigonKind k);

struct Bigon {
  int band_a = kNone, band_b = kNone;  // indices into the band list
  FaceId t1 = kNone, t2 = kNone;       // turning points
  std::vector<FaceId> arc_a;           // faces of band a strictly between t1 and t2
  std::vector<FaceId> arc_b;           // faces of band b strictly between t2 and t1
  std::vector<FaceId> cycle;           // t1, arc_a, t2, arc_b
  std::array<std::vector<FaceId>, 2> sides;
  int inner_side = 0;                  // the side taken as the strict interior
  BigonKind kind = BigonKind::Square;

  const std::vector<FaceId>& strict_interior() const { return sides[inner_side]; }
  std::vector<FaceId> interior() const;  // cycle plus strict interior, sorted
};

// Every bigon formed by two bands, with both sides computed. For each, the
// strict interior is the smaller side (ties: the one with the smaller least face).
std::vector<Bigon> enumerate_bigons(const RealizedSurface& rs, const std::vector<Band>& bands,
                                    double eps = kEpsCoord);

// True when no other bigon's cycle lies in the given side of b together
// with b's own cycle.
bool side_is_bigon_free(const Bigon& b, int side, const std::vector<Bigon>& all);

// Minimal bigon with the fewest interior faces (ties: least sorted interior).
// Throws NotGenusZero, NoBigon, MixedBigon.
Bigon find_minimal_bigon(const RealizedSurface& rs, double eps = kEpsCoord);
// Same, reusing already computed bands and bigons.
Bigon find_minimal_bigon(const std::vector<Bigon>& bigons);

// Dual cycles with exactly one turning point: (face, exit edge) pairs whose
// straight walk re-enters the face through a non-parallel edge.
std::vector<std::pair<FaceId, EdgeId>> find_monogons(const RealizedSurface& rs, double eps = kEpsCoord);

struct BoundaryOctagon {
  FaceId face = kNone;
  int band = kNone;                   // band of the bigon passing through it
  std::array<Vec3, 3> crossing_dirs;  // a, b, c in the bigon frame, in cyclic order
  bool matches_lemma = false;
};

struct StructureReport {
  BigonKind kind = BigonKind::Square;
  bool prism_structured = false;          // octagon bigons
  bool directions_ok = false;             // square bigons
  Mat3 frame = Mat3::Identity();          // rows: h, v, h x v
  std::vector<BoundaryOctagon> octagons;  // square bigons
};

// Throws BandError(LemmaViolation) with a witness when the interior does not
// have the structure the lemmas predict.
StructureReport check_interior_structure(const RealizedSurface& rs, const std::vector<Band>& bands, const Bigon& b,
                                         double eps = kEpsCoord);

}  // namespace rps
