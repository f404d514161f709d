#include "rps/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace rps {

namespace {

// (face degree, origin degree) signature used to pick a rare seed.
std::pair<int, int> signature(const SurfaceGraph& s, HalfedgeId h) {
  return {s.degree(s.face(h)), s.vertex_degree(s.origin(h))};
}

// Try the orientation-preserving map fixed by h1 -> h2. Returns the halfedge map.
std::optional<std::vector<HalfedgeId>> propagate(const SurfaceGraph& a, const SurfaceGraph& b, HalfedgeId h1,
                                                 HalfedgeId h2) {
  std::vector<HalfedgeId> map(a.num_halfedges(), kNone), inv(b.num_halfedges(), kNone);
  std::vector<HalfedgeId> stack{h1};
  map[h1] = h2;
  inv[h2] = h1;
  auto assign = [&](HalfedgeId x, HalfedgeId y) {
    if (map[x] == kNone && inv[y] == kNone) {
      map[x] = y;
      inv[y] = x;
      stack.push_back(x);
      return true;
    }
    return map[x] == y && inv[y] == x;
  };
  while (!stack.empty()) {
    HalfedgeId x = stack.back();
    stack.pop_back();
    HalfedgeId y = map[x];
    if (signature(a, x) != signature(b, y)) return std::nullopt;
    if (!assign(a.next(x), b.next(y))) return std::nullopt;
    if (!assign(a.prev(x), b.prev(y))) return std::nullopt;
    if (!assign(a.twin(x), b.twin(y))) return std::nullopt;
  }
  for (HalfedgeId x = 0; x < a.num_halfedges(); ++x)
    if (map[x] == kNone) return std::nullopt;
  return map;
}

std::optional<Correspondence> search(const SurfaceGraph& a, const SurfaceGraph& b) {
  std::map<std::pair<int, int>, int> freq;
  for (HalfedgeId h = 0; h < a.num_halfedges(); ++h) ++freq[signature(a, h)];
  HalfedgeId seed = 0;
  for (HalfedgeId h = 0; h < a.num_halfedges(); ++h)
    if (freq[signature(a, h)] < freq[signature(a, seed)]) seed = h;
  for (HalfedgeId cand = 0; cand < b.num_halfedges(); ++cand) {
    if (signature(b, cand) != signature(a, seed)) continue;
    auto map = propagate(a, b, seed, cand);
    if (!map) continue;
    Correspondence c;
    c.halfedge = *map;
    c.vertex.assign(a.num_vertices(), kNone);
    c.face.assign(a.num_faces(), kNone);
    for (HalfedgeId h = 0; h < a.num_halfedges(); ++h) {
      c.vertex[a.origin(h)] = b.origin((*map)[h]);
      c.face[a.face(h)] = b.face((*map)[h]);
    }
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Correspondence> is_isomorphic(const SurfaceGraph& s1, const SurfaceGraph& s2) {
  if (s1.num_vertices() != s2.num_vertices() || s1.num_edges() != s2.num_edges() ||
      s1.num_faces() != s2.num_faces())
    return std::nullopt;
  if (auto c = search(s1, s2)) return c;

  // Mirror image of s2: reverse every face cycle.
  std::vector<std::vector<VertexId>> rev = s2.faces();
  for (auto& f : rev) std::reverse(f.begin(), f.end());
  SurfaceGraph m = SurfaceGraph::build(s2.num_vertices(), rev);
  auto c = search(s1, m);
  if (!c) return std::nullopt;
  // Halfedges of m map back to s2 halfedges with swapped direction.
  for (HalfedgeId& h : c->halfedge) {
    VertexId from = m.origin(h), to = m.target(h);
    h = *s2.find_halfedge(to, from);
  }
  c->orientation_reversing = true;
  return c;
}

}  // namespace rps
