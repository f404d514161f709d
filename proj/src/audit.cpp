#include "rps/decompose.hpp"

#include "rps/curvature.hpp"

#include <algorithm>

namespace rps {

AuditReport curvature_audit_5n(const SurfaceGraph& s) {
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    int d = s.degree(f);
    if (d != 5 && (d < 7 || d > 10))
      throw DecomposeError(DecomposeErrc::UnsupportedDegrees,
                           "UnsupportedDegrees: face " + std::to_string(f) + " has degree " + std::to_string(d));
  }
  AuditReport rep;
  try {
    rep.genus = s.genus();
  } catch (const Error&) {
    rep.genus = -1;
  }

  std::vector<VertexType> types;
  for (VertexId v = 0; v < s.num_vertices(); ++v) types.push_back(vertex_type(s, v));
  std::vector<AnglePi> kf;
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    FaceAudit fa;
    fa.face = f;
    fa.degree = s.degree(f);
    fa.curvature = facial_curvature(s, f);
    for (VertexId v : s.face_vertices(f)) fa.vertex_types.push_back(types[v].to_string());
    kf.push_back(fa.curvature);
    rep.total += fa.curvature;
    (fa.curvature.sign() > 0 ? rep.positive_faces : fa.curvature.is_zero() ? rep.zero_faces : rep.negative_faces)++;
    rep.has_high_degree = rep.has_high_degree || fa.degree >= 7;
    rep.has_positive_pentagon = rep.has_positive_pentagon || (fa.degree == 5 && fa.curvature.sign() > 0);
    rep.faces.push_back(std::move(fa));
  }

  // Positive faces of degree n >= 7 need every vertex of type (5^2,n).
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    const int n = s.degree(f);
    if (n < 7 || kf[f].sign() <= 0) continue;
    VertexType want;
    want.count = {{5, 2}, {n, 1}};
    for (VertexId v : s.face_vertices(f))
      if (!(types[v] == want))
        rep.violations.push_back({"VertsNFace", {f}, {v},
                                  "positive face of degree " + std::to_string(n) + " has a vertex of type " +
                                      types[v].to_string()});
  }

  // Adjacent degree-3 vertices must have equal type (their dihedral angles differ otherwise).
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_vertices(e);
    if (s.vertex_degree(a) == 3 && s.vertex_degree(b) == 3 && !(types[a] == types[b])) {
      auto fs = s.edge_faces(e);
      rep.violations.push_back({"MixedDegree3Neighbours", {fs[0], fs[1]}, {a, b},
                                "adjacent vertices of types " + types[a].to_string() + " and " + types[b].to_string()});
    }
  }

  // Regional sums: a positive face with its first generation.
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    if (kf[f].sign() <= 0) continue;
    const int deg = s.degree(f);
    int n = deg;
    if (deg == 5) {
      n = 0;
      for (FaceId g : face_generations(s, f, 2)) n = std::max(n, s.degree(g) > 5 ? s.degree(g) : 0);
      if (n == 0) continue;
    }
    RegionalSum r;
    r.face = f;
    r.n = n;
    r.sum = kf[f];
    for (FaceId g : face_generations(s, f, 1)) r.sum += kf[g];
    // 13pi/3 - 19 pi n/30 around a degree-n face; (5 - 2n) pi / 3n around a
    // pentagon with a degree-n face in its second generation.
    r.bound = deg >= 7 ? AnglePi(130 - 19 * n, 30) : AnglePi(5 - 2 * n, 3 * n);
    if (r.sum > r.bound)
      rep.violations.push_back({"RegionalBound", {f}, {},
                                "curvature " + r.sum.to_string() + " exceeds the realizable maximum " +
                                    r.bound.to_string()});
    rep.regions.push_back(r);
  }

  if (rep.genus == 0) {
    rep.genus0_infeasible = rep.has_high_degree;
    if (!rep.has_positive_pentagon)
      rep.violations.push_back({"NoPositivePentagon", {}, {}, "genus 0 with no pentagon of positive curvature"});
  }
  return rep;
}

}  // namespace rps
