#include "rps/surface_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rps {

const char* to_string(BuildErrc c) {
  switch (c) {
    case BuildErrc::InvalidFace: return "InvalidFace";
    case BuildErrc::IndexOutOfRange: return "IndexOutOfRange";
    case BuildErrc::OpenEdge: return "OpenEdge";
    case BuildErrc::OverusedEdge: return "OverusedEdge";
    case BuildErrc::NonOrientable: return "NonOrientable";
    case BuildErrc::NonManifold: return "NonManifold";
    case BuildErrc::LowDegreeVertex: return "LowDegreeVertex";
    case BuildErrc::Disconnected: return "Disconnected";
  }
  return "?";
}

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

[[noreturn]] void fail(BuildErrc c, const std::string& detail) {
  throw BuildError(c, std::string(to_string(c)) + ": " + detail);
}

std::string edge_str(VertexId a, VertexId b) {
  return "edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

SurfaceGraph SurfaceGraph::build(int num_vertices, const std::vector<std::vector<VertexId>>& faces) {
  SurfaceGraph s;
  s.faces_ = faces;
  const int nf = static_cast<int>(faces.size());
  if (nf == 0) fail(BuildErrc::InvalidFace, "no faces");

  for (int f = 0; f < nf; ++f) {
    const auto& cyc = faces[f];
    if (cyc.size() < 3) fail(BuildErrc::InvalidFace, "face " + std::to_string(f) + " has fewer than 3 vertices");
    for (VertexId v : cyc) {
      if (v < 0 || v >= num_vertices)
        fail(BuildErrc::IndexOutOfRange, "face " + std::to_string(f) + " references vertex " + std::to_string(v));
    }
    std::vector<VertexId> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(BuildErrc::InvalidFace, "face " + std::to_string(f) + " repeats a vertex");
  }

  // Halfedges in face order.
  for (int f = 0; f < nf; ++f) {
    const int k = static_cast<int>(faces[f].size());
    const HalfedgeId base = static_cast<HalfedgeId>(s.origin_.size());
    s.face_halfedge_.push_back(base);
    for (int i = 0; i < k; ++i) {
      s.origin_.push_back(faces[f][i]);
      s.face_.push_back(f);
      s.next_.push_back(base + (i + 1) % k);
      s.prev_.push_back(base + (i + k - 1) % k);
    }
  }
  const int nh = static_cast<int>(s.origin_.size());

  // Group halfedges by undirected edge, edges numbered by first appearance.
  std::unordered_map<std::uint64_t, int> edge_of_pair;
  std::vector<std::vector<HalfedgeId>> uses;
  s.edge_.assign(nh, kNone);
  for (HalfedgeId h = 0; h < nh; ++h) {
    auto key = pair_key(s.origin_[h], s.origin_[s.next_[h]]);
    auto [it, inserted] = edge_of_pair.emplace(key, static_cast<int>(uses.size()));
    if (inserted) uses.emplace_back();
    uses[it->second].push_back(h);
    s.edge_[h] = it->second;
  }
  s.twin_.assign(nh, kNone);
  for (std::size_t e = 0; e < uses.size(); ++e) {
    const auto& u = uses[e];
    VertexId a = s.origin_[u[0]], b = s.origin_[s.next_[u[0]]];
    if (u.size() == 1) fail(BuildErrc::OpenEdge, edge_str(a, b) + " used by one face");
    if (u.size() > 2)
      fail(BuildErrc::OverusedEdge, edge_str(a, b) + " used by " + std::to_string(u.size()) + " faces");
    if (s.origin_[u[0]] == s.origin_[u[1]])
      fail(BuildErrc::NonOrientable, edge_str(a, b) + " traversed twice in the same direction");
    s.twin_[u[0]] = u[1];
    s.twin_[u[1]] = u[0];
    s.edge_halfedge_.push_back(u[0]);
  }

  // Vertex fans.
  s.vertex_halfedge_.assign(num_vertices, kNone);
  s.vertex_degree_.assign(num_vertices, 0);
  for (HalfedgeId h = 0; h < nh; ++h) {
    VertexId v = s.origin_[h];
    if (s.vertex_halfedge_[v] == kNone) s.vertex_halfedge_[v] = h;
    ++s.vertex_degree_[v];
  }
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (s.vertex_halfedge_[v] == kNone) fail(BuildErrc::LowDegreeVertex, "vertex " + std::to_string(v) + " is unused");
    int orbit = 0;
    HalfedgeId h = s.vertex_halfedge_[v];
    do {
      h = s.twin_[s.prev_[h]];
      ++orbit;
    } while (h != s.vertex_halfedge_[v] && orbit <= s.vertex_degree_[v]);
    if (orbit != s.vertex_degree_[v])
      fail(BuildErrc::NonManifold, "faces around vertex " + std::to_string(v) + " form more than one fan");
    if (s.vertex_degree_[v] < 3)
      fail(BuildErrc::LowDegreeVertex, "vertex " + std::to_string(v) + " has degree " + std::to_string(s.vertex_degree_[v]));
  }

  // Connectivity over faces.
  std::vector<char> seen(nf, 0);
  std::vector<FaceId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (FaceId g : s.face_neighbors(f)) {
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  if (reached != nf) fail(BuildErrc::Disconnected, std::to_string(nf - reached) + " faces unreachable from face 0");
  return s;
}

std::vector<HalfedgeId> SurfaceGraph::face_halfedges(FaceId f) const {
  std::vector<HalfedgeId> out;
  HalfedgeId h0 = face_halfedge_[f], h = h0;
  do {
    out.push_back(h);
    h = next_[h];
  } while (h != h0);
  return out;
}

std::vector<EdgeId> SurfaceGraph::face_edges(FaceId f) const {
  std::vector<EdgeId> out;
  for (HalfedgeId h : face_halfedges(f)) out.push_back(edge_[h]);
  return out;
}

std::vector<FaceId> SurfaceGraph::face_neighbors(FaceId f) const {
  std::vector<FaceId> out;
  for (HalfedgeId h : face_halfedges(f)) out.push_back(face_[twin_[h]]);
  return out;
}

std::vector<HalfedgeId> SurfaceGraph::vertex_outgoing(VertexId v) const {
  std::vector<HalfedgeId> out;
  HalfedgeId h0 = vertex_halfedge_[v], h = h0;
  do {
    out.push_back(h);
    h = twin_[prev_[h]];
  } while (h != h0);
  return out;
}

std::vector<FaceId> SurfaceGraph::vertex_faces(VertexId v) const {
  std::vector<FaceId> out;
  for (HalfedgeId h : vertex_outgoing(v)) out.push_back(face_[h]);
  return out;
}

std::array<VertexId, 2> SurfaceGraph::edge_vertices(EdgeId e) const {
  HalfedgeId h = edge_halfedge_[e];
  return {origin(h), target(h)};
}

std::array<FaceId, 2> SurfaceGraph::edge_faces(EdgeId e) const {
  HalfedgeId h = edge_halfedge_[e];
  return {face_[h], face_[twin_[h]]};
}

std::optional<HalfedgeId> SurfaceGraph::find_halfedge(VertexId from, VertexId to) const {
  if (from < 0 || from >= num_vertices()) return std::nullopt;
  for (HalfedgeId h : vertex_outgoing(from))
    if (target(h) == to) return h;
  return std::nullopt;
}

std::optional<EdgeId> SurfaceGraph::find_edge(VertexId a, VertexId b) const {
  if (auto h = find_halfedge(a, b)) return edge_[*h];
  return std::nullopt;
}

std::optional<EdgeId> SurfaceGraph::shared_edge(FaceId f, FaceId g) const {
  for (HalfedgeId h : face_halfedges(f))
    if (face_[twin_[h]] == g) return edge_[h];
  return std::nullopt;
}

std::optional<HalfedgeId> SurfaceGraph::face_halfedge_on_edge(FaceId f, EdgeId e) const {
  HalfedgeId h = edge_halfedge_[e];
  if (face_[h] == f) return h;
  if (face_[twin_[h]] == f) return twin_[h];
  return std::nullopt;
}

int SurfaceGraph::genus() const {
  int chi = euler_characteristic();
  if (chi % 2 != 0) throw Error("OddEulerCharacteristic: chi = " + std::to_string(chi));
  return (2 - chi) / 2;
}

DualGraph dual_graph(const SurfaceGraph& s) {
  DualGraph d;
  d.num_nodes = s.num_faces();
  d.arcs.reserve(s.num_edges());
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_faces(e);
    d.arcs.push_back({a, b, e});
  }
  d.node_arcs.resize(d.num_nodes);
  for (FaceId f = 0; f < s.num_faces(); ++f)
    for (EdgeId e : s.face_edges(f)) d.node_arcs[f].push_back(e);
  return d;
}

Cycle cycle_from_vertices(const SurfaceGraph& s, const std::vector<VertexId>& vertices) {
  Cycle c;
  c.vertices = vertices;
  const std::size_t n = vertices.size();
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = s.find_edge(vertices[i], vertices[(i + 1) % n]);
    if (!e) throw Error("cycle vertices " + std::to_string(vertices[i]) + " and " +
                        std::to_string(vertices[(i + 1) % n]) + " are not adjacent");
    if (!used.insert(*e).second) throw Error("cycle repeats edge " + std::to_string(*e));
    c.edges.push_back(*e);
  }
  return c;
}

bool is_valid_cycle(const SurfaceGraph& s, const Cycle& c) {
  const std::size_t n = c.vertices.size();
  if (n < 3 || c.edges.size() != n) return false;
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < n; ++i) {
    EdgeId e = c.edges[i];
    if (e < 0 || e >= s.num_edges() || !used.insert(e).second) return false;
    auto ev = s.edge_vertices(e);
    VertexId a = c.vertices[i], b = c.vertices[(i + 1) % n];
    if (!((ev[0] == a && ev[1] == b) || (ev[0] == b && ev[1] == a))) return false;
  }
  return true;
}

std::optional<Cycle> boundary_cycle(const SurfaceGraph& s, const std::vector<FaceId>& faces) {
  std::vector<char> in(s.num_faces(), 0);
  for (FaceId f : faces) in[f] = 1;
  std::map<VertexId, HalfedgeId> out_of;  // boundary halfedge leaving each vertex
  for (FaceId f : faces) {
    for (HalfedgeId h : s.face_halfedges(f)) {
      if (in[s.face(s.twin(h))]) continue;
      if (!out_of.emplace(s.origin(h), h).second) return std::nullopt;  // pinched
    }
  }
  if (out_of.empty()) return std::nullopt;
  Cycle c;
  HalfedgeId h0 = out_of.begin()->second, h = h0;
  do {
    c.vertices.push_back(s.origin(h));
    c.edges.push_back(s.edge(h));
    auto it = out_of.find(s.target(h));
    if (it == out_of.end()) return std::nullopt;
    h = it->second;
  } while (h != h0 && c.vertices.size() <= out_of.size());
  if (c.vertices.size() != out_of.size()) return std::nullopt;
  return c;
}

std::size_t ValidationReport::count(const std::string& kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate_proper(const SurfaceGraph& s) {
  ValidationReport rep;
  const int nf = s.num_faces();
  // Faces meeting themselves: an edge whose two sides lie on the same face.
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_faces(e);
    if (a == b) {
      auto ev = s.edge_vertices(e);
      rep.violations.push_back({"SelfAdjacentFace", {a}, {ev[0], ev[1]}, "face borders itself along an edge"});
    }
  }
  // For each face pair, count shared edges and shared vertices.
  std::vector<std::vector<FaceId>> faces_at(s.num_vertices());
  for (FaceId f = 0; f < nf; ++f)
    for (VertexId v : s.face_vertices(f)) faces_at[v].push_back(f);
  std::map<std::pair<FaceId, FaceId>, std::vector<VertexId>> shared_vertices;
  for (VertexId v = 0; v < s.num_vertices(); ++v) {
    auto& fs = faces_at[v];
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) shared_vertices[{fs[i], fs[j]}].push_back(v);
  }
  std::map<std::pair<FaceId, FaceId>, int> shared_edges;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_faces(e);
    if (a != b) ++shared_edges[{std::min(a, b), std::max(a, b)}];
  }
  for (const auto& [pr, verts] : shared_vertices) {
    auto it = shared_edges.find(pr);
    int ne = it == shared_edges.end() ? 0 : it->second;
    bool ok = (ne == 0 && verts.size() == 1) || (ne == 1 && verts.size() == 2);
    if (!ok) {
      rep.violations.push_back({"ImproperIntersection",
                                {pr.first, pr.second},
                                verts,
                                "closures share " + std::to_string(ne) + " edges and " +
                                    std::to_string(verts.size()) + " vertices"});
    }
  }
  return rep;
}

std::vector<FaceId> face_generations(const SurfaceGraph& s, FaceId f, int k) {
  if (k != 1 && k != 2) throw Error("face_generations: k must be 1 or 2");
  std::set<FaceId> first;
  for (FaceId g : s.face_neighbors(f))
    if (g != f) first.insert(g);
  if (k == 1) return {first.begin(), first.end()};
  std::set<FaceId> second;
  for (FaceId g : first)
    for (FaceId h : s.face_neighbors(g))
      if (h != f && !first.count(h)) second.insert(h);
  return {second.begin(), second.end()};
}

std::vector<std::vector<FaceId>> face_components(const SurfaceGraph& s, const std::vector<FaceId>& faces) {
  std::vector<char> in(s.num_faces(), 0), seen(s.num_faces(), 0);
  for (FaceId f : faces) in[f] = 1;
  std::vector<FaceId> sorted = faces;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<FaceId>> comps;
  for (FaceId f : sorted) {
    if (seen[f]) continue;
    std::vector<FaceId> comp, stack{f};
    seen[f] = 1;
    while (!stack.empty()) {
      FaceId g = stack.back();
      stack.pop_back();
      comp.push_back(g);
      for (FaceId h : s.face_neighbors(g))
        if (in[h] && !seen[h]) {
          seen[h] = 1;
          stack.push_back(h);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace rps
