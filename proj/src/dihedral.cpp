#include "rps/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rps {

double dihedral_angle(const RealizedSurface& rs, FaceId f, FaceId g) {
  const SurfaceGraph& s = rs.graph;
  auto e = s.shared_edge(f, g);
  if (!e || f == g) throw GeometryError(GeometryErrc::NotAdjacent, "NotAdjacent: faces do not share an edge");
  HalfedgeId h = *s.face_halfedge_on_edge(f, *e);
  Vec3 nf = polygon_normal(rs.face_points(f));
  Vec3 ng = polygon_normal(rs.face_points(g));
  if (nf.isZero() || ng.isZero()) throw GeometryError(GeometryErrc::DegenerateNormal, "DegenerateNormal");
  Vec3 t = (rs.coords[s.target(h)] - rs.coords[s.origin(h)]).normalized();
  Vec3 uf = nf.cross(t);   // into f
  Vec3 ug = ng.cross(-t);  // into g
  double a = std::atan2(ug.dot(-nf), ug.dot(uf));
  if (a < 0) a += 2 * std::numbers::pi;
  return a * 180.0 / std::numbers::pi;
}

DihedralPair dihedral_table(int n) {
  if (n != 5 && n != 7 && n != 8 && n != 9 && n != 10)
    throw GeometryError(GeometryErrc::UnsupportedDegree, "UnsupportedDegree: n = " + std::to_string(n));
  const double pi = std::numbers::pi;
  const double a = 3 * pi / 5;
  const double b = (n - 2) * pi / n;
  double c55 = (std::cos(b) - std::cos(a) * std::cos(a)) / (std::sin(a) * std::sin(a));
  double c5n = std::cos(a) * (1 - std::cos(b)) / (std::sin(a) * std::sin(b));
  auto deg = [&](double c) { return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / pi; };
  return {deg(c55), deg(c5n)};
}

}  // namespace rps
