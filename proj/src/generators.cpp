#include "rps/generators.hpp"

#include "rps/polygon.hpp"
#include "rps/polygon_soup.hpp"
#include "rps/validate.hpp"

#include <algorithm>
#include <cmath>

namespace rps {

const char* to_string(GenErrc c) {
  switch (c) {
    case GenErrc::DegreeMismatch: return "DegreeMismatch";
    case GenErrc::CollisionDetected: return "CollisionDetected";
    case GenErrc::AmbiguousFit: return "AmbiguousFit";
    case GenErrc::NoFit: return "NoFit";
    case GenErrc::RingDoesNotClose: return "RingDoesNotClose";
    case GenErrc::InvalidPairing: return "InvalidPairing";
    case GenErrc::InvalidCompound: return "InvalidCompound";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(GenErrc c, const std::string& detail) {
  throw GeneratorError(c, std::string(to_string(c)) + ": " + detail);
}

}  // namespace

RealizedSurface glue(const RealizedSurface& p, FaceId fp, const RealizedSurface& q, FaceId fq,
                     std::optional<int> alignment, bool strict, double eps) {
  const int k = p.graph.degree(fp);
  if (q.graph.degree(fq) != k)
    fail(GenErrc::DegreeMismatch, "faces of degree " + std::to_string(k) + " and " +
                                      std::to_string(q.graph.degree(fq)));
  if (!alignment && strict) fail(GenErrc::AmbiguousFit, "facet of degree " + std::to_string(k) +
                                                            " admits " + std::to_string(k) + " alignments");
  const int s = alignment.value_or(0);
  const auto& cp = p.graph.face_vertices(fp);
  const auto& cq = q.graph.face_vertices(fq);
  std::vector<Vec3> src, dst;
  for (int j = 0; j < k; ++j) {
    src.push_back(q.coords[cq[j]]);
    dst.push_back(p.coords[cp[((s - j) % k + k) % k]]);
  }
  RigidMotion m;
  try {
    m = isometry_from_correspondence(src, dst, eps);
  } catch (const GeometryError& e) {
    fail(GenErrc::NoFit, e.what());
  }
  if (m.determinant() < 0) fail(GenErrc::NoFit, "only a reflection maps the faces onto each other");

  PolygonSoup soup;
  soup.points = p.coords;
  std::vector<int> qmap(q.graph.num_vertices(), kNone);
  for (int j = 0; j < k; ++j) qmap[cq[j]] = cp[((s - j) % k + k) % k];
  for (VertexId v = 0; v < q.graph.num_vertices(); ++v) {
    if (qmap[v] != kNone) continue;
    qmap[v] = static_cast<int>(soup.points.size());
    soup.points.push_back(m.apply(q.coords[v]));
  }
  for (FaceId f = 0; f < p.graph.num_faces(); ++f)
    if (f != fp) soup.faces.push_back(p.graph.face_vertices(f));
  for (FaceId f = 0; f < q.graph.num_faces(); ++f) {
    if (f == fq) continue;
    std::vector<int> c;
    for (VertexId v : q.graph.face_vertices(f)) c.push_back(qmap[v]);
    soup.faces.push_back(std::move(c));
  }
  RealizedSurface out = soup.to_surface();
  auto rep = validate_realization(out, eps);
  for (const auto& v : rep.violations)
    if (v.kind == "AdjacentOverlap" || v.kind == "DanglingPair")
      fail(GenErrc::CollisionDetected, "faces " + std::to_string(v.faces[0]) + " and " + std::to_string(v.faces[1]) +
                                           ": " + v.detail);
  return out;
}

RealizedSurface great_dodecahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> pts;
  for (int s = 0; s < 4; ++s) {
    double a = (s & 1) ? -1 : 1, b = (s & 2) ? -phi : phi;
    pts.emplace_back(0, a, b);
    pts.emplace_back(a, b, 0);
    pts.emplace_back(b, 0, a);
  }
  for (Vec3& p : pts) p /= 2;
  std::vector<std::vector<VertexId>> faces;
  for (int v = 0; v < 12; ++v) {
    std::vector<int> nb;
    for (int w = 0; w < 12; ++w)
      if (w != v && std::abs((pts[w] - pts[v]).norm() - 1.0) < 1e-9) nb.push_back(w);
    Vec3 n = pts[v].normalized();
    Vec3 c = Vec3::Zero();
    for (int w : nb) c += pts[w];
    c /= static_cast<double>(nb.size());
    Vec3 u = (pts[nb[0]] - c).normalized(), w2 = n.cross(u);
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      Vec3 da = pts[a] - c, db = pts[b] - c;
      return std::atan2(da.dot(w2), da.dot(u)) < std::atan2(db.dot(w2), db.dot(u));
    });
    std::rotate(nb.begin(), std::min_element(nb.begin(), nb.end()), nb.end());
    faces.push_back(nb);
  }
  RealizedSurface rs;
  rs.coords = pts;
  rs.graph = SurfaceGraph::build(12, faces);
  return rs;
}

}  // namespace rps
