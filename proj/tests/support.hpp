#pragma once

// Fixtures and independent oracles shared by the unit tests.

#include "rps/generators.hpp"
#include "rps/isomorphism.hpp"
#include "rps/realization.hpp"
#include "rps/solids.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace rps::test {

inline RealizedSurface box() { return polycube({{0, 0, 0}, {1, 0, 0}}).surface; }

// Top n-gon, a zigzag ring of 2n pentagons, bottom n-gon. drum(5) is the
// dodecahedron graph; the top and bottom vertices have type (5^2,n).
inline SurfaceGraph drum(int n) {
  auto t = [&](int i) { return ((i % n) + n) % n; };
  auto m = [&](int i) { return n + ((i % (2 * n)) + 2 * n) % (2 * n); };
  auto b = [&](int i) { return 3 * n + ((i % n) + n) % n; };
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexId> top, bottom;
  for (int i = 0; i < n; ++i) top.push_back(t(i));
  for (int i = n - 1; i >= 0; --i) bottom.push_back(b(i));
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    faces.push_back({t(i + 1), t(i), m(2 * i), m(2 * i + 1), m(2 * i + 2)});
    faces.push_back({b(i - 1), b(i), m(2 * i + 1), m(2 * i), m(2 * i - 1)});
  }
  return SurfaceGraph::build(4 * n, faces);
}

// Minimal OBJ reader ("v x y z", "f i j k ..." with 1-based indices and
// optional /vt/vn suffixes).
inline RealizedSurface read_obj(const std::string& text) {
  std::istringstream in(text);
  RealizedSurface rs;
  std::vector<std::vector<VertexId>> faces;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      double x, y, z;
      ls >> x >> y >> z;
      rs.coords.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<VertexId> f;
      for (std::string tok; ls >> tok;) f.push_back(std::stoi(tok.substr(0, tok.find('/'))) - 1);
      faces.push_back(f);
    }
  }
  rs.graph = SurfaceGraph::build(static_cast<int>(rs.coords.size()), faces);
  return rs;
}

// Same surface up to isomorphism, with the isomorphism carrying positions
// onto positions.
inline bool congruent_copy(const RealizedSurface& a, const RealizedSurface& b, double eps = 1e-6) {
  if (a.graph.num_vertices() != b.graph.num_vertices() || a.graph.num_faces() != b.graph.num_faces()) return false;
  // Match vertices by position, then compare face cycles as vertex sets.
  std::vector<int> map(a.coords.size(), -1);
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = 0; j < b.coords.size(); ++j)
      if ((a.coords[i] - b.coords[j]).norm() <= eps) map[i] = static_cast<int>(j);
  if (std::count(map.begin(), map.end(), -1) != 0) return false;
  std::multiset<std::vector<int>> fa, fb;
  for (const auto& f : a.graph.faces()) {
    std::vector<int> c;
    for (int v : f) c.push_back(map[v]);
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    fa.insert(c);
  }
  for (auto c : b.graph.faces()) {
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    fb.insert(c);
  }
  return fa == fb;
}

inline bool isomorphic(const SurfaceGraph& a, const SurfaceGraph& b) { return is_isomorphic(a, b).has_value(); }

// Kinds of a brick list, counted.
inline std::map<SolidKind, int> kind_counts(const std::vector<Brick>& bricks) {
  std::map<SolidKind, int> out;
  for (const Brick& b : bricks) ++out[b.kind];
  return out;
}

// Two layers of the extruded (4,8) tiling: prism P with tiling neighbours on
// four consecutive sides (prism, cube, prism, cube), and the same five bricks
// again underneath. P's top octagon and other four sides are exposed, so
// they form a flippable prism half. bricks[0] is P.
inline Compound prism_half_patch() {
  Brick p{SolidKind::OctagonalPrism, {}};
  const Vec3 c0 = p.center();
  std::vector<std::pair<double, int>> sides;
  Vec3 down = Vec3::Zero();
  for (int i = 0; i < p.num_facets(); ++i) {
    Vec3 c = centroid(p.facet(i)) - c0;
    if (p.facet(i).size() == 4)
      sides.push_back({std::atan2(c.y(), c.x()), i});
    else if (c.z() < 0)
      down = 2 * c;
  }
  std::sort(sides.begin(), sides.end());
  std::vector<Brick> layer{p};
  for (int k = 0; k < 4; ++k) {
    const int i = sides[k].second;
    if (k % 2 == 0)
      layer.push_back({SolidKind::OctagonalPrism, RigidMotion::translate(2 * (centroid(p.facet(i)) - c0))});
    else
      layer.push_back(*brick_on_facet(p, i, SolidKind::Cube));
  }
  std::vector<Brick> bricks = layer;
  for (Brick b : layer) {
    b.placement.translation += down;
    bricks.push_back(b);
  }
  return compound_from_bricks(bricks);
}

// Every (surface, name) of the small corpora used by property tests.
struct Named {
  std::string name;
  RealizedSurface rs;
};

inline std::vector<Named> pent_corpus() {
  std::vector<Named> out;
  out.push_back({"dodecahedron", make_solid(SolidKind::Dodecahedron)});
  for (int k = 2; k <= 6; ++k) out.push_back({"pent" + std::to_string(k), random_pent_compound(k, 100 + k).surface});
  out.push_back({"torus8", dodecahedral_torus(8)});
  return out;
}

inline std::vector<Named> square_oct_corpus() {
  std::vector<Named> out;
  out.push_back({"cube", make_solid(SolidKind::Cube)});
  out.push_back({"prism", make_solid(SolidKind::OctagonalPrism)});
  out.push_back({"box", box()});
  out.push_back({"tromino", polycube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}).surface});
  out.push_back({"slab", polycube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}).surface});
  for (int i = 0; i < 4; ++i)
    out.push_back({"sq" + std::to_string(i), random_square_oct_compound(2 + i, i % 3, 200 + i).surface});
  return out;
}

}  // namespace rps::test
