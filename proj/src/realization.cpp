#include "rps/realization.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace rps {

std::vector<Vec3> RealizedSurface::face_points(FaceId f) const {
  std::vector<Vec3> out;
  for (VertexId v : graph.face_vertices(f)) out.push_back(coords[v]);
  return out;
}

RigidMotion RigidMotion::inverse() const {
  RigidMotion m;
  m.rotation = rotation.transpose();
  m.translation = -(m.rotation * translation);
  return m;
}

RigidMotion RigidMotion::then(const RigidMotion& outer) const {
  RigidMotion m;
  m.rotation = outer.rotation * rotation;
  m.translation = outer.rotation * translation + outer.translation;
  return m;
}

bool RigidMotion::is_orthogonal(double eps) const {
  return (rotation.transpose() * rotation - Mat3::Identity()).cwiseAbs().maxCoeff() <= eps;
}

RigidMotion RigidMotion::translate(const Vec3& t) {
  RigidMotion m;
  m.translation = t;
  return m;
}

Vec3 centroid(std::span<const Vec3> pts) {
  Vec3 c = Vec3::Zero();
  for (const Vec3& p : pts) c += p;
  return pts.empty() ? c : Vec3(c / static_cast<double>(pts.size()));
}

Vec3 polygon_normal(std::span<const Vec3> pts) {
  Vec3 n = Vec3::Zero();
  const std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i) n += pts[i].cross(pts[(i + 1) % k]);
  double len = n.norm();
  return len < 1e-12 ? Vec3::Zero() : Vec3(n / len);
}

namespace {

double max_residual(const RigidMotion& m, std::span<const Vec3> a, std::span<const Vec3> b) {
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, (m.apply(a[i]) - b[i]).norm());
  return r;
}

}  // namespace

RigidMotion isometry_from_correspondence(std::span<const Vec3> a, std::span<const Vec3> b, double eps) {
  if (a.size() != b.size() || a.size() < 3)
    throw GeometryError(GeometryErrc::DegenerateCorrespondence, "DegenerateCorrespondence: need >= 3 paired points");
  const std::size_t n = a.size();
  Vec3 ca = centroid(a), cb = centroid(b);

  // Non-collinearity of A.
  Eigen::Matrix<double, 3, Eigen::Dynamic> pa(3, n), pb(3, n);
  for (std::size_t i = 0; i < n; ++i) {
    pa.col(i) = a[i] - ca;
    pb.col(i) = b[i] - cb;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, Eigen::Dynamic>> sa(pa);
  if (sa.singularValues()(1) < eps)
    throw GeometryError(GeometryErrc::DegenerateCorrespondence, "DegenerateCorrespondence: points are collinear");

  // Pairwise distances must agree before any fit is attempted.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs((a[i] - a[j]).norm() - (b[i] - b[j]).norm()) > 2 * eps)
        throw GeometryError(GeometryErrc::NoIsometry, "NoIsometry: distance between points " + std::to_string(i) +
                                                          " and " + std::to_string(j) + " differs");

  Mat3 h = pa * pb.transpose();
  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU(), v = svd.matrixV();
  Mat3 d = Mat3::Identity();
  if ((v * u.transpose()).determinant() < 0) d(2, 2) = -1;

  RigidMotion proper;
  proper.rotation = v * d * u.transpose();
  proper.translation = cb - proper.rotation * ca;
  if (max_residual(proper, a, b) <= eps) return proper;

  RigidMotion mirrored;
  Mat3 d2 = Mat3::Identity();
  d2(2, 2) = -d(2, 2);
  mirrored.rotation = v * d2 * u.transpose();
  mirrored.translation = cb - mirrored.rotation * ca;
  if (max_residual(mirrored, a, b) <= eps) return mirrored;

  throw GeometryError(GeometryErrc::NoIsometry, "NoIsometry: best fit residual exceeds tolerance");
}

}  // namespace rps
