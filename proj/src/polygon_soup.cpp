#include "rps/polygon_soup.hpp"

#include "rps/validate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rps {

PolygonSoup PolygonSoup::from(const RealizedSurface& rs) {
  return {rs.coords, rs.graph.faces()};
}

RealizedSurface PolygonSoup::to_surface() const {
  std::vector<int> remap(points.size(), kNone);
  for (const auto& f : faces)
    for (int v : f) remap.at(v) = 0;
  RealizedSurface rs;
  int next = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (remap[i] == kNone) continue;
    remap[i] = next++;
    rs.coords.push_back(points[i]);
  }
  std::vector<std::vector<VertexId>> cycles;
  cycles.reserve(faces.size());
  for (const auto& f : faces) {
    std::vector<VertexId> c;
    for (int v : f) c.push_back(remap[v]);
    cycles.push_back(std::move(c));
  }
  rs.graph = SurfaceGraph::build(next, cycles);
  return rs;
}

namespace {

std::vector<Vec3> face_points(const PolygonSoup& soup, const std::vector<int>& f) {
  std::vector<Vec3> out;
  for (int v : f) out.push_back(soup.points[v]);
  return out;
}

// First (by index) pair of edge-sharing faces with identical images.
std::optional<std::pair<int, int>> find_dangling(const PolygonSoup& soup, double eps) {
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (int f = 0; f < static_cast<int>(soup.faces.size()); ++f) {
    const auto& c = soup.faces[f];
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      by_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  std::optional<std::pair<int, int>> best;
  for (const auto& [edge, fs] : by_edge) {
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        int f = std::min(fs[i], fs[j]), g = std::max(fs[i], fs[j]);
        if (f == g || soup.faces[f].size() != soup.faces[g].size()) continue;
        if (best && std::make_pair(f, g) >= *best) continue;
        if (same_point_set(face_points(soup, soup.faces[f]), face_points(soup, soup.faces[g]), eps)) best = {f, g};
      }
  }
  return best;
}

}  // namespace

int remove_dangling_pairs(PolygonSoup& soup, double eps, std::vector<int>* face_tags) {
  int count = 0;
  while (auto pr = find_dangling(soup, eps)) {
    auto [f, g] = *pr;
    std::vector<int> parent(soup.points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int a : soup.faces[f]) {
      for (int b : soup.faces[g]) {
        if ((soup.points[a] - soup.points[b]).norm() > eps) continue;
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
    std::vector<std::vector<int>> kept;
    std::vector<int> kept_tags;
    for (int h = 0; h < static_cast<int>(soup.faces.size()); ++h) {
      if (h == f || h == g) continue;
      if (face_tags) kept_tags.push_back((*face_tags)[h]);
      std::vector<int> c;
      for (int v : soup.faces[h]) c.push_back(find(v));
      kept.push_back(std::move(c));
    }
    soup.faces = std::move(kept);
    if (face_tags) *face_tags = std::move(kept_tags);
    ++count;
  }
  return count;
}

DanglingCleanup remove_dangling_pairs(const RealizedSurface& rs, double eps) {
  PolygonSoup soup = PolygonSoup::from(rs);
  int n = remove_dangling_pairs(soup, eps);
  if (n == 0) return {rs, 0};
  return {soup.to_surface(), n};
}

}  // namespace rps
