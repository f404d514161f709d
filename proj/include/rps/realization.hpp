#pragma once

#include "rps/common.hpp"
#include "rps/surface_graph.hpp"

#include <span>
#include <vector>

namespace rps {

// Vertex coordinates, indexed by VertexId.
using Realization = std::vector<Vec3>;

struct RealizedSurface {
  SurfaceGraph graph;
  Realization coords;

  std::vector<Vec3> face_points(FaceId f) const;
};

struct RigidMotion {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 apply_linear(const Vec3& d) const { return rotation * d; }
  RigidMotion inverse() const;
  RigidMotion then(const RigidMotion& outer) const;  // outer ∘ this
  double determinant() const { return rotation.determinant(); }
  bool is_orthogonal(double eps = kEpsCoord) const;

  static RigidMotion translate(const Vec3& t);
};

enum class GeometryErrc {
  NoIsometry,
  DegenerateCorrespondence,
  DegreeTooSmall,
  DegenerateNormal,
  UnsupportedDegree,
  NotAdjacent,
};

class GeometryError : public CodedError<GeometryErrc> {
 public:
  using CodedError::CodedError;
};

// Rigid motion M with |M(a_i) - b_i| <= eps for all i. Proper rotations are
// preferred; a reflection is returned only when no rotation fits.
RigidMotion isometry_from_correspondence(std::span<const Vec3> a, std::span<const Vec3> b,
                                         double eps = kEpsCoord);

Vec3 centroid(std::span<const Vec3> pts);
// Unit normal of a polygon by Newell's method; zero vector when degenerate.
Vec3 polygon_normal(std::span<const Vec3> pts);

}  // namespace rps
