#include "rps/curvature.hpp"

#include "rps/realization.hpp"

namespace rps {

AnglePi interior_angle(int k) {
  if (k < 3) throw GeometryError(GeometryErrc::DegreeTooSmall, "DegreeTooSmall: face degree " + std::to_string(k));
  return AnglePi(k - 2, k);
}

AnglePi vertex_curvature(const SurfaceGraph& s, VertexId v) {
  AnglePi k(2);
  for (FaceId f : s.vertex_faces(v)) k -= interior_angle(s.degree(f));
  return k;
}

AnglePi facial_curvature(const SurfaceGraph& s, FaceId f) {
  AnglePi k;
  for (VertexId v : s.face_vertices(f)) k += vertex_curvature(s, v) / s.vertex_degree(v);
  return k;
}

GaussBonnet gauss_bonnet_check(const SurfaceGraph& s) {
  GaussBonnet gb;
  for (VertexId v = 0; v < s.num_vertices(); ++v) gb.total += vertex_curvature(s, v);
  gb.target = AnglePi(2 * s.euler_characteristic());
  gb.equal = gb.total == gb.target;
  return gb;
}

int VertexType::degree() const {
  int d = 0;
  for (auto [k, m] : count) d += m;
  return d;
}

std::string VertexType::to_string() const {
  std::string s = "(";
  bool first = true;
  for (auto [k, m] : count) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(k);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s + ")";
}

VertexType vertex_type(const SurfaceGraph& s, VertexId v) {
  VertexType t;
  for (FaceId f : s.vertex_faces(v)) ++t.count[s.degree(f)];
  return t;
}

}  // namespace rps
