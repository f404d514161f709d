#include "rps/decompose.hpp"

#include "rps/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace rps {

const char* to_string(DecomposeErrc c) {
  switch (c) {
    case DecomposeErrc::NotPentagonal: return "NotPentagonal";
    case DecomposeErrc::NotSquareOct: return "NotSquareOct";
    case DecomposeErrc::GenusOutOfRange: return "GenusOutOfRange";
    case DecomposeErrc::NoReducibleRegion: return "NoReducibleRegion";
    case DecomposeErrc::FlipStuck: return "FlipStuck";
    case DecomposeErrc::VerificationFailed: return "VerificationFailed";
    case DecomposeErrc::UnsupportedDegrees: return "UnsupportedDegrees";
  }
  return "?";
}

namespace {

struct Facet {
  int brick, index;
  std::vector<Vec3> pts;
  Vec3 center;
};

// +1 same cyclic order, -1 reversed, 0 different polygons.
int orientation(const std::vector<Vec3>& a, const std::vector<Vec3>& b, double eps) {
  const std::size_t k = a.size();
  if (b.size() != k) return 0;
  for (std::size_t s = 0; s < k; ++s) {
    if ((a[0] - b[s]).norm() > eps) continue;
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < k; ++i) {
      fwd = fwd && (a[i] - b[(s + i) % k]).norm() <= eps;
      bwd = bwd && (a[i] - b[(s + k - i) % k]).norm() <= eps;
    }
    return fwd ? 1 : bwd ? -1 : 0;
  }
  return 0;
}

bool has_segment(const std::vector<Vec3>& poly, const Vec3& p, const Vec3& q, double eps) {
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec3& a = poly[i];
    const Vec3& b = poly[(i + 1) % k];
    if (((a - p).norm() <= eps && (b - q).norm() <= eps) || ((a - q).norm() <= eps && (b - p).norm() <= eps))
      return true;
  }
  return false;
}

std::string name(const Facet& f) {
  return "brick " + std::to_string(f.brick) + " facet " + std::to_string(f.index);
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert, const RealizedSurface& rs, double eps) {
  VerificationReport rep;
  auto fail = [&](const std::string& w) {
    rep.pass = false;
    rep.witness = w;
    return rep;
  };

  std::vector<Facet> facets;
  for (int b = 0; b < static_cast<int>(cert.bricks.size()); ++b) {
    const Brick& br = cert.bricks[b];
    if (!br.placement.is_orthogonal(eps) || br.placement.determinant() < 0)
      return fail("brick " + std::to_string(b) + " has an improper placement");
    const CanonicalSolid& c = canonical_solid(br.kind);
    for (int i = 0; i < static_cast<int>(c.faces.size()); ++i) {
      Facet f{b, i, {}, Vec3::Zero()};
      for (int v : c.faces[i]) f.pts.push_back(br.placement.apply(c.points[v]));
      for (const Vec3& p : f.pts) f.center += p;
      f.center /= static_cast<double>(f.pts.size());
      facets.push_back(std::move(f));
    }
  }

  PointIndex centers(eps);
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) centers.insert(facets[i].center, i);
  std::vector<char> cancelled(facets.size(), 0);
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    std::vector<int> same;
    for (int j : centers.find_all(facets[i].center))
      if (j != i && orientation(facets[i].pts, facets[j].pts, eps) != 0) same.push_back(j);
    if (same.empty()) continue;
    if (same.size() > 1) return fail(name(facets[i]) + " coincides with more than one other facet");
    const int j = same[0];
    if (orientation(facets[i].pts, facets[j].pts, eps) > 0)
      return fail(name(facets[i]) + " and " + name(facets[j]) + " coincide with equal orientation");
    cancelled[i] = 1;
    if (i < j) {
      rep.gluings.push_back({facets[i].brick, facets[i].index, facets[j].brick, facets[j].index});
      ++rep.cancelled_pairs;
    }
  }

  const SurfaceGraph& s = rs.graph;
  std::vector<int> match(s.num_faces(), kNone);
  std::vector<char> used(facets.size(), 0);
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    auto pts = rs.face_points(f);
    Vec3 c = Vec3::Zero();
    for (const Vec3& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    for (int j : centers.find_all(c)) {
      if (cancelled[j] || used[j] || orientation(pts, facets[j].pts, eps) <= 0) continue;
      match[f] = j;
      used[j] = 1;
      break;
    }
    if (match[f] == kNone) return fail("face " + std::to_string(f) + " is not a surviving brick facet");
  }
  for (int j = 0; j < static_cast<int>(facets.size()); ++j)
    if (!cancelled[j] && !used[j]) return fail("extra face: " + name(facets[j]) + " is not a face of the surface");

  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_vertices(e);
    auto [f, g] = s.edge_faces(e);
    const Vec3& p = rs.coords[a];
    const Vec3& q = rs.coords[b];
    if (!has_segment(facets[match[f]].pts, p, q, eps) || !has_segment(facets[match[g]].pts, p, q, eps))
      return fail("edge " + std::to_string(e) + " between faces " + std::to_string(f) + " and " + std::to_string(g) +
                  " is not shared by the matching facets");
  }
  rep.pass = true;
  return rep;
}

}  // namespace rps
