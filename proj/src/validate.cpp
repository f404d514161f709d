#include "rps/validate.hpp"

#include "rps/polygon.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace rps {

namespace {

// Allowance for intersection points computed from nearly touching polygons.
constexpr double kContactSlack = 50.0;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

struct Box {
  Vec3 lo, hi;
  bool meets(const Box& o, double eps) const {
    return (lo.array() <= o.hi.array() + eps).all() && (o.lo.array() <= hi.array() + eps).all();
  }
};

Box box_of(std::span<const Vec3> pts) {
  Box b{pts[0], pts[0]};
  for (const Vec3& p : pts) {
    b.lo = b.lo.cwiseMin(p);
    b.hi = b.hi.cwiseMax(p);
  }
  return b;
}

// Do images of f and g meet outside their shared vertices/edge?
bool exceeds_shared(const RealizedSurface& rs, FaceId f, FaceId g, double eps, std::string* detail) {
  const SurfaceGraph& s = rs.graph;
  auto pf = rs.face_points(f), pg = rs.face_points(g);
  auto pts = convex_polygon_intersection(pf, pg, eps);
  if (pts.empty()) return false;
  std::vector<VertexId> shared;
  for (VertexId v : s.face_vertices(f)) {
    const auto& gv = s.face_vertices(g);
    if (std::find(gv.begin(), gv.end(), v) != gv.end()) shared.push_back(v);
  }
  const double tol = kContactSlack * eps;
  auto allowed = [&](const Vec3& x) {
    if (shared.empty()) return false;
    if (shared.size() == 1) return (x - rs.coords[shared[0]]).norm() <= tol;
    for (std::size_t i = 0; i < shared.size(); ++i)
      for (std::size_t j = i + 1; j < shared.size(); ++j)
        if (s.find_edge(shared[i], shared[j]) &&
            point_segment_distance(x, rs.coords[shared[i]], rs.coords[shared[j]]) <= tol)
          return true;
    for (VertexId v : shared)
      if ((x - rs.coords[v]).norm() <= tol) return true;
    return false;
  };
  for (const Vec3& x : pts) {
    if (!allowed(x)) {
      if (detail) *detail = "images meet at (" + fmt(x.x()) + ", " + fmt(x.y()) + ", " + fmt(x.z()) + ")";
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_regular_polygon(std::span<const Vec3> pts, double eps, std::string* why) {
  const std::size_t k = pts.size();
  if (k < 3) {
    if (why) *why = "fewer than 3 vertices";
    return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    double len = (pts[(i + 1) % k] - pts[i]).norm();
    if (std::abs(len - 1.0) > eps) {
      if (why) *why = "edge " + std::to_string(i) + " has length " + fmt(len);
      return false;
    }
  }
  Vec3 c = centroid(pts);
  const double circum = 1.0 / (2.0 * std::sin(std::numbers::pi / static_cast<double>(k)));
  for (std::size_t i = 0; i < k; ++i) {
    double r = (pts[i] - c).norm();
    if (std::abs(r - circum) > eps) {
      if (why) *why = "vertex " + std::to_string(i) + " at distance " + fmt(r) + " from centre, expected " + fmt(circum);
      return false;
    }
  }
  Mat3 cov = Mat3::Zero();
  for (const Vec3& p : pts) cov += (p - c) * (p - c).transpose();
  Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
  Vec3 n = es.eigenvectors().col(0);
  for (std::size_t i = 0; i < k; ++i) {
    double d = std::abs(n.dot(pts[i] - c));
    if (d > eps) {
      if (why) *why = "vertex " + std::to_string(i) + " off plane by " + fmt(d);
      return false;
    }
  }
  return true;
}

bool same_point_set(std::span<const Vec3> a, std::span<const Vec3> b, double eps) {
  if (a.size() != b.size()) return false;
  for (const Vec3& p : a) {
    bool found = false;
    for (const Vec3& q : b)
      if ((p - q).norm() <= eps) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  for (const Vec3& q : b) {
    bool found = false;
    for (const Vec3& p : a)
      if ((p - q).norm() <= eps) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

ValidationReport validate_realization(const SurfaceGraph& s, const Realization& r, double eps) {
  ValidationReport rep;
  if (static_cast<int>(r.size()) < s.num_vertices()) {
    rep.violations.push_back({"MissingCoordinates", {}, {}, "realization covers " + std::to_string(r.size()) +
                                                                " of " + std::to_string(s.num_vertices()) + " vertices"});
    return rep;
  }
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_vertices(e);
    double len = (r[a] - r[b]).norm();
    if (std::abs(len - 1.0) > eps)
      rep.violations.push_back({"NonUnitEdge", {}, {a, b}, "length " + fmt(len)});
  }
  RealizedSurface rs{s, r};
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    std::string why;
    auto pts = rs.face_points(f);
    if (!is_regular_polygon(pts, eps, &why)) rep.violations.push_back({"NonRegularFace", {f}, {}, why});
  }
  // Face pairs sharing at least one vertex.
  std::set<std::pair<FaceId, FaceId>> pairs;
  for (VertexId v = 0; v < s.num_vertices(); ++v) {
    auto fs = s.vertex_faces(v);
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (fs[i] != fs[j]) pairs.insert({std::min(fs[i], fs[j]), std::max(fs[i], fs[j])});
  }
  for (auto [f, g] : pairs) {
    auto pf = rs.face_points(f), pg = rs.face_points(g);
    if (s.shared_edge(f, g) && same_point_set(pf, pg, eps)) {
      rep.violations.push_back({"DanglingPair", {f, g}, {}, "adjacent faces have identical images"});
      continue;
    }
    std::string detail;
    if (exceeds_shared(rs, f, g, eps, &detail)) rep.violations.push_back({"AdjacentOverlap", {f, g}, {}, detail});
  }
  return rep;
}

ValidationReport find_collisions(const RealizedSurface& rs, std::span<const FaceId> only, double eps) {
  ValidationReport rep;
  const SurfaceGraph& s = rs.graph;
  const int nf = s.num_faces();
  std::vector<Box> boxes;
  for (FaceId f = 0; f < nf; ++f) boxes.push_back(box_of(rs.face_points(f)));
  std::vector<char> focus(nf, only.empty() ? 1 : 0);
  for (FaceId f : only) focus[f] = 1;
  for (FaceId f = 0; f < nf; ++f) {
    for (FaceId g = f + 1; g < nf; ++g) {
      if (!focus[f] && !focus[g]) continue;
      if (!boxes[f].meets(boxes[g], kContactSlack * eps)) continue;
      std::string detail;
      if (exceeds_shared(rs, f, g, eps, &detail)) rep.violations.push_back({"Collision", {f, g}, {}, detail});
    }
  }
  return rep;
}

}  // namespace rps
