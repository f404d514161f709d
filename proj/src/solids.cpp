#include "rps/solids.hpp"

#include "rps/polygon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace rps {

const char* to_string(SolidKind k) {
  switch (k) {
    case SolidKind::Cube: return "cube";
    case SolidKind::Dodecahedron: return "dodecahedron";
    case SolidKind::OctagonalPrism: return "octagonal-prism";
    case SolidKind::HexagonalPrism: return "hexagonal-prism";
    case SolidKind::TruncatedOctahedron: return "truncated-octahedron";
    case SolidKind::TruncatedCuboctahedron: return "truncated-cuboctahedron";
  }
  return "?";
}

std::optional<SolidKind> solid_kind_from_string(std::string_view s) {
  for (SolidKind k : {SolidKind::Cube, SolidKind::Dodecahedron, SolidKind::OctagonalPrism, SolidKind::HexagonalPrism,
                      SolidKind::TruncatedOctahedron, SolidKind::TruncatedCuboctahedron})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

namespace {

constexpr double kHullEps = 1e-9;

// Every permutation of (a, b, c) with every sign choice, deduplicated.
std::vector<Vec3> signed_permutations(double a, double b, double c) {
  std::vector<Vec3> out;
  PointIndex seen(1e-9);
  std::array<int, 3> idx{0, 1, 2};
  const double v[3] = {a, b, c};
  do {
    for (int s = 0; s < 8; ++s) {
      Vec3 p(v[idx[0]] * ((s & 1) ? -1 : 1), v[idx[1]] * ((s & 2) ? -1 : 1), v[idx[2]] * ((s & 4) ? -1 : 1));
      int before = static_cast<int>(seen.points().size());
      seen.find_or_insert(p);
      if (static_cast<int>(seen.points().size()) > before) out.push_back(p);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<Vec3> prism_points(int k) {
  const double pi = std::numbers::pi;
  const double r = 1.0 / (2.0 * std::sin(pi / k));
  const double start = k == 8 ? pi / 8 : 0.0;
  std::vector<Vec3> out;
  for (double z : {-0.5, 0.5})
    for (int i = 0; i < k; ++i) {
      double t = start + 2 * pi * i / k;
      out.emplace_back(r * std::cos(t), r * std::sin(t), z);
    }
  return out;
}

std::vector<Vec3> raw_points(SolidKind k) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  switch (k) {
    case SolidKind::Cube: {
      std::vector<Vec3> out;
      for (int i = 0; i < 8; ++i) out.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
      return out;
    }
    case SolidKind::Dodecahedron: {
      std::vector<Vec3> out;
      for (int i = 0; i < 8; ++i) out.emplace_back((i & 1) ? -1 : 1, (i & 2) ? -1 : 1, (i & 4) ? -1 : 1);
      for (int s = 0; s < 4; ++s) {
        double a = (s & 1) ? -1 / phi : 1 / phi, b = (s & 2) ? -phi : phi;
        out.emplace_back(0, a, b);
        out.emplace_back(a, b, 0);
        out.emplace_back(b, 0, a);
      }
      for (Vec3& p : out) p *= phi / 2;
      return out;
    }
    case SolidKind::OctagonalPrism: return prism_points(8);
    case SolidKind::HexagonalPrism: return prism_points(6);
    case SolidKind::TruncatedOctahedron: {
      auto out = signed_permutations(0, 1, 2);
      for (Vec3& p : out) p /= std::sqrt(2.0);
      return out;
    }
    case SolidKind::TruncatedCuboctahedron: {
      auto out = signed_permutations(1, 1 + std::sqrt(2.0), 1 + 2 * std::sqrt(2.0));
      for (Vec3& p : out) p /= 2;
      return out;
    }
  }
  return {};
}

// Faces of the convex hull of points in convex position, by plane search.
CanonicalSolid hull(std::vector<Vec3> pts) {
  CanonicalSolid s;
  s.points = pts;
  const int n = static_cast<int>(pts.size());
  Vec3 c = centroid(pts);
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, Vec3>> faces;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 nrm = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        if (nrm.norm() < 1e-9) continue;
        nrm.normalize();
        double d = nrm.dot(pts[i]);
        if (nrm.dot(c) > d) {
          nrm = -nrm;
          d = -d;
        }
        std::vector<int> on;
        bool supporting = true;
        for (int m = 0; m < n && supporting; ++m) {
          double s2 = nrm.dot(pts[m]) - d;
          if (s2 > kHullEps) supporting = false;
          else if (s2 > -kHullEps) on.push_back(m);
        }
        if (!supporting || !seen.insert(on).second) continue;
        faces.push_back({on, nrm});
      }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::set<std::array<long long, 3>> dirs;
  for (auto& [on, nrm] : faces) {
    std::vector<Vec3> fp;
    for (int v : on) fp.push_back(pts[v]);
    Vec3 fc = centroid(fp);
    Vec3 u = (pts[on[0]] - fc).normalized();
    Vec3 w = nrm.cross(u);
    std::sort(on.begin(), on.end(), [&](int a, int b) {
      Vec3 da = pts[a] - fc, db = pts[b] - fc;
      return std::atan2(da.dot(w), da.dot(u)) < std::atan2(db.dot(w), db.dot(u));
    });
    std::rotate(on.begin(), std::min_element(on.begin(), on.end()), on.end());
    s.faces.push_back(on);
    s.normals.push_back(nrm);
    for (std::size_t i = 0; i < on.size(); ++i) {
      Vec3 e = (pts[on[(i + 1) % on.size()]] - pts[on[i]]).normalized();
      // Canonical sign so that parallel edges share one representative.
      for (int a = 0; a < 3; ++a) {
        if (std::abs(e[a]) > 1e-9) {
          if (e[a] < 0) e = -e;
          break;
        }
      }
      std::array<long long, 3> key{std::llround(e.x() * 1e6), std::llround(e.y() * 1e6), std::llround(e.z() * 1e6)};
      if (dirs.insert(key).second) s.edge_dirs.push_back(e);
    }
  }
  return s;
}

}  // namespace

const CanonicalSolid& canonical_solid(SolidKind k) {
  static const std::array<CanonicalSolid, 6> table = [] {
    std::array<CanonicalSolid, 6> t;
    for (int i = 0; i < 6; ++i) t[i] = hull(raw_points(static_cast<SolidKind>(i)));
    return t;
  }();
  return table[static_cast<int>(k)];
}

RealizedSurface make_solid(SolidKind k) {
  const CanonicalSolid& c = canonical_solid(k);
  RealizedSurface rs;
  rs.coords = c.points;
  rs.graph = SurfaceGraph::build(static_cast<int>(c.points.size()), c.faces);
  return rs;
}

std::vector<Vec3> Brick::points() const {
  std::vector<Vec3> out;
  for (const Vec3& p : canonical_solid(kind).points) out.push_back(placement.apply(p));
  return out;
}

std::vector<Vec3> Brick::facet(int i) const {
  std::vector<Vec3> out;
  const auto& c = canonical_solid(kind);
  for (int v : c.faces[i]) out.push_back(placement.apply(c.points[v]));
  return out;
}

int Brick::num_facets() const { return static_cast<int>(canonical_solid(kind).faces.size()); }

Vec3 Brick::center() const {
  auto pts = points();
  return centroid(pts);
}

std::optional<Brick> place_brick(SolidKind kind, std::span<const Vec3> target, int offset, double eps) {
  const CanonicalSolid& c = canonical_solid(kind);
  const int k = static_cast<int>(target.size());
  for (const auto& f : c.faces) {
    if (static_cast<int>(f.size()) != k) continue;
    std::vector<Vec3> src, dst;
    for (int i = 0; i < k; ++i) {
      src.push_back(c.points[f[i]]);
      dst.push_back(target[((i + offset) % k + k) % k]);
    }
    try {
      RigidMotion m = isometry_from_correspondence(src, dst, eps);
      if (m.determinant() < 0) return std::nullopt;
      return Brick{kind, m};
    } catch (const GeometryError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool same_brick(const Brick& a, const Brick& b, double eps) {
  if (a.kind != b.kind) return false;
  auto pa = a.points(), pb = b.points();
  PointIndex idx(eps);
  for (std::size_t i = 0; i < pb.size(); ++i) idx.insert(pb[i], static_cast<int>(i));
  for (const Vec3& p : pa)
    if (idx.find(p) == kNone) return false;
  return true;
}

std::vector<Brick> bricks_on_polygon(SolidKind kind, std::span<const Vec3> target, double eps) {
  std::vector<Brick> out;
  for (int off = 0; off < static_cast<int>(target.size()); ++off) {
    auto b = place_brick(kind, target, off, eps);
    if (!b) continue;
    bool dup = false;
    for (const Brick& o : out) dup = dup || same_brick(o, *b, eps);
    if (!dup) out.push_back(*b);
  }
  return out;
}

bool bricks_overlap(const Brick& a, const Brick& b, double eps) {
  auto radius = [](const Brick& x) {
    const auto& pts = canonical_solid(x.kind).points;
    const Vec3 c = centroid(pts);
    double r = 0;
    for (const Vec3& p : pts) r = std::max(r, (p - c).norm());
    return r;
  };
  const double d = (a.center() - b.center()).norm();
  if (d < eps) return true;
  if (d > radius(a) + radius(b) + eps) return false;
  auto pa = a.points(), pb = b.points();
  std::vector<Vec3> na, nb, ea, eb;
  for (const Vec3& n : canonical_solid(a.kind).normals) na.push_back(a.placement.apply_linear(n));
  for (const Vec3& n : canonical_solid(b.kind).normals) nb.push_back(b.placement.apply_linear(n));
  for (const Vec3& e : canonical_solid(a.kind).edge_dirs) ea.push_back(a.placement.apply_linear(e));
  for (const Vec3& e : canonical_solid(b.kind).edge_dirs) eb.push_back(b.placement.apply_linear(e));
  return convex_polyhedra_overlap(pa, na, ea, pb, nb, eb, eps);
}

PolygonSoup brick_union_boundary(std::span<const Brick> bricks, double eps,
                                 std::vector<std::array<int, 4>>* gluings) {
  PointIndex idx(eps);
  struct Facet {
    std::vector<int> cycle;
    std::size_t brick;
    int index;
  };
  std::vector<Facet> facets;
  std::map<std::vector<int>, std::vector<std::size_t>> by_key;
  for (std::size_t b = 0; b < bricks.size(); ++b) {
    for (int i = 0; i < bricks[b].num_facets(); ++i) {
      Facet f{{}, b, i};
      for (const Vec3& p : bricks[b].facet(i)) f.cycle.push_back(idx.find_or_insert(p));
      std::vector<int> key = f.cycle;
      std::sort(key.begin(), key.end());
      by_key[key].push_back(facets.size());
      facets.push_back(std::move(f));
    }
  }
  std::vector<char> cancelled(facets.size(), 0);
  for (const auto& [key, list] : by_key) {
    if (list.size() == 1) continue;
    if (list.size() > 2) throw Error("facet shared by more than two bricks");
    const auto& a = facets[list[0]].cycle;
    const auto& b = facets[list[1]].cycle;
    // Opposite orientation: a's successor of a[0] is b's predecessor of a[0].
    auto pos = std::find(b.begin(), b.end(), a[0]) - b.begin();
    const std::size_t k = b.size();
    if (b[(pos + k - 1) % k] != a[1])
      throw Error("bricks " + std::to_string(facets[list[0]].brick) + " and " + std::to_string(facets[list[1]].brick) +
                  " share a facet with equal orientation");
    cancelled[list[0]] = cancelled[list[1]] = 1;
    if (gluings)
      gluings->push_back({static_cast<int>(facets[list[0]].brick), facets[list[0]].index,
                          static_cast<int>(facets[list[1]].brick), facets[list[1]].index});
  }
  PolygonSoup soup;
  soup.points = idx.points();
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (!cancelled[i]) soup.faces.push_back(facets[i].cycle);
  return soup;
}

}  // namespace rps
