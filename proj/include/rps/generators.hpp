#pragma once

#include "rps/realization.hpp"
#include "rps/solids.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rps {

enum class GenErrc {
  DegreeMismatch,
  CollisionDetected,
  AmbiguousFit,
  NoFit,
  RingDoesNotClose,
  InvalidPairing,
  InvalidCompound,
};

class GeneratorError : public CodedError<GenErrc> {
 public:
  using CodedError::CodedError;
};

const char* to_string(GenErrc c);

// Removes f_p from P and f_q from Q and identifies their boundaries, moving Q
// rigidly so that its face lands on P's with opposite orientation. Vertex
// f_q[j] is identified with f_p[(alignment - j) mod k]; without an alignment,
// 0 is used, or AmbiguousFit is raised in strict mode.
RealizedSurface glue(const RealizedSurface& p, FaceId fp, const RealizedSurface& q, FaceId fq,
                     std::optional<int> alignment = std::nullopt, bool strict = false, double eps = kEpsCoord);

// A union of bricks, its facet gluings (brick, facet, brick, facet) and its boundary.
struct Compound {
  std::vector<Brick> bricks;
  std::vector<std::array<int, 4>> gluings;
  RealizedSurface surface;
};

// Boundary of the union, rebuilt and checked: closed manifold, proper,
// valid realization, embedded. Throws GeneratorError(InvalidCompound).
Compound compound_from_bricks(std::vector<Brick> bricks, bool require_embedded = true, double eps = kEpsCoord);

// Unit cubes at integer cells.
Compound polycube(const std::vector<std::array<int, 3>>& cells);

// Random tree of k dodecahedra glued on facets, collision-checked.
Compound random_pent_compound(int k, std::uint64_t seed);

// Random tree of cubes and octagonal prisms glued on matching facets.
Compound random_square_oct_compound(int cubes, int prisms, std::uint64_t seed);

// The brick of `kind` glued onto facet `facet` of `base` from outside
// (`alignment` picks among inequivalent placements, e.g. prism axis on a square).
std::optional<Brick> brick_on_facet(const Brick& base, int facet, SolidKind kind, int alignment = 0,
                                    double eps = kEpsCoord);

// Ring of n dodecahedra glued face to face, closing up to a torus.
// Throws RingDoesNotClose when no ring of length n exists (searched for n <= 10).
Compound dodecahedral_torus_compound(int n);
RealizedSurface dodecahedral_torus(int n);

// Icosahedron vertices scaled to unit pentagon edges; each face is the
// pentagon of a vertex's five neighbours.
RealizedSurface great_dodecahedron();

enum class CounterexampleKind { TO4, TCO4, TCO3 };
const char* to_string(CounterexampleKind k);
std::optional<CounterexampleKind> counterexample_kind_from_string(const std::string& s);

// A tube joins face face_a of node node_a to face face_b of node node_b.
// Faces index the node solid's canonical face list; segments = 0 picks the
// rounded distance between the faces.
struct TubeSpec {
  int node_a = 0, face_a = 0, node_b = 0, face_b = 0;
  int segments = 0;
};

struct PairingScheme {
  std::vector<TubeSpec> tubes;
};

PairingScheme default_pairing(CounterexampleKind k);
// Lines "tube node_a face_a node_b face_b [segments]"; '#' starts a comment.
PairingScheme parse_pairing(const std::string& text);
std::string serialize_pairing(const PairingScheme& p);

// Node solids at the corners of a 3-cube (TCO3) or of two nested 3-cubes
// (TO4, TCO4) with the hexagons (or octagons) removed and joined by tubes.
// Throws InvalidPairing when the tubes do not consume every removed face
// exactly once or the result is not a closed surface.
RealizedSurface counterexample(CounterexampleKind k, const std::optional<PairingScheme>& pairing = std::nullopt);

}  // namespace rps
