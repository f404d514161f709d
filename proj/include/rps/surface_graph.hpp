#pragma once

#include "rps/common.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rps {

enum class BuildErrc {
  InvalidFace,       // fewer than 3 vertices or a repeated vertex
  IndexOutOfRange,
  OpenEdge,          // an edge used by one face only
  OverusedEdge,      // an edge used by more than two faces
  NonOrientable,     // an edge traversed twice in the same direction
  NonManifold,       // the faces around a vertex form more than one fan
  LowDegreeVertex,   // vertex of degree < 3, or unused vertex
  Disconnected,
};

class BuildError : public CodedError<BuildErrc> {
 public:
  using CodedError::CodedError;
};

const char* to_string(BuildErrc c);

// Closed, connected, oriented surface graph stored as half-edges.
// Face f's halfedges run along the input cycle order; halfedge h goes from
// origin(h) to origin(next(h)).
class SurfaceGraph {
 public:
  SurfaceGraph() = default;

  static SurfaceGraph build(int num_vertices, const std::vector<std::vector<VertexId>>& faces);

  int num_vertices() const { return static_cast<int>(vertex_halfedge_.size()); }
  int num_edges() const { return static_cast<int>(edge_halfedge_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_halfedges() const { return static_cast<int>(origin_.size()); }

  VertexId origin(HalfedgeId h) const { return origin_[h]; }
  VertexId target(HalfedgeId h) const { return origin_[next_[h]]; }
  HalfedgeId twin(HalfedgeId h) const { return twin_[h]; }
  HalfedgeId next(HalfedgeId h) const { return next_[h]; }
  HalfedgeId prev(HalfedgeId h) const { return prev_[h]; }
  FaceId face(HalfedgeId h) const { return face_[h]; }
  EdgeId edge(HalfedgeId h) const { return edge_[h]; }

  HalfedgeId face_halfedge(FaceId f) const { return face_halfedge_[f]; }
  HalfedgeId vertex_halfedge(VertexId v) const { return vertex_halfedge_[v]; }  // outgoing
  HalfedgeId edge_halfedge(EdgeId e) const { return edge_halfedge_[e]; }

  int degree(FaceId f) const { return static_cast<int>(faces_[f].size()); }
  int vertex_degree(VertexId v) const { return vertex_degree_[v]; }

  // The face's vertex cycle as given at build time.
  const std::vector<VertexId>& face_vertices(FaceId f) const { return faces_[f]; }
  const std::vector<std::vector<VertexId>>& faces() const { return faces_; }

  // Halfedges of f in cycle order, starting at face_halfedge(f).
  std::vector<HalfedgeId> face_halfedges(FaceId f) const;
  // Edges of f in cycle order.
  std::vector<EdgeId> face_edges(FaceId f) const;
  // Faces across each edge of f, in cycle order (may repeat on improper input).
  std::vector<FaceId> face_neighbors(FaceId f) const;
  // Outgoing halfedges around v in rotation order.
  std::vector<HalfedgeId> vertex_outgoing(VertexId v) const;
  // Faces around v in rotation order.
  std::vector<FaceId> vertex_faces(VertexId v) const;

  std::array<VertexId, 2> edge_vertices(EdgeId e) const;
  std::array<FaceId, 2> edge_faces(EdgeId e) const;

  std::optional<HalfedgeId> find_halfedge(VertexId from, VertexId to) const;
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  // Edge shared by two faces, if any (the first one in f's cycle order).
  std::optional<EdgeId> shared_edge(FaceId f, FaceId g) const;
  // Halfedge of f lying on edge e.
  std::optional<HalfedgeId> face_halfedge_on_edge(FaceId f, EdgeId e) const;

  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }
  // Throws Error("OddEulerCharacteristic") if chi is odd.
  int genus() const;

 private:
  std::vector<std::vector<VertexId>> faces_;
  std::vector<VertexId> origin_;
  std::vector<HalfedgeId> twin_, next_, prev_;
  std::vector<FaceId> face_;
  std::vector<EdgeId> edge_;
  std::vector<HalfedgeId> face_halfedge_;
  std::vector<HalfedgeId> vertex_halfedge_;
  std::vector<HalfedgeId> edge_halfedge_;
  std::vector<int> vertex_degree_;
};

struct DualArc {
  FaceId a;
  FaceId b;
  EdgeId primal;
};

struct DualGraph {
  int num_nodes = 0;
  std::vector<DualArc> arcs;                  // arc i crosses primal edge i
  std::vector<std::vector<int>> node_arcs;    // arcs at each node, in face cycle order
};

DualGraph dual_graph(const SurfaceGraph& s);

// Closed edge path. vertices[i] and vertices[i+1] (cyclically) are the ends
// of edges[i]; the closing repetition of the first vertex is implicit.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Cycle through the given vertices in order; throws Error if consecutive
// vertices are not adjacent or an edge repeats.
Cycle cycle_from_vertices(const SurfaceGraph& s, const std::vector<VertexId>& vertices);
bool is_valid_cycle(const SurfaceGraph& s, const Cycle& c);
// Boundary of a face set, as a single cycle oriented along the faces' halfedges.
// Returns nullopt unless the boundary is one simple cycle.
std::optional<Cycle> boundary_cycle(const SurfaceGraph& s, const std::vector<FaceId>& faces);

struct Violation {
  std::string kind;
  std::vector<FaceId> faces;
  std::vector<VertexId> vertices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& kind) const;
};

// Face pairs whose closures meet in more than a single edge or a single vertex,
// and faces whose boundary revisits a vertex.
ValidationReport validate_proper(const SurfaceGraph& s);

// k = 1: edge neighbours of f; k = 2: edge neighbours of the first generation
// excluding f and the first generation. Sorted by index.
std::vector<FaceId> face_generations(const SurfaceGraph& s, FaceId f, int k);

// Connected components of a face subset under edge adjacency.
std::vector<std::vector<FaceId>> face_components(const SurfaceGraph& s, const std::vector<FaceId>& faces);

}  // namespace rps
