#include "support.hpp"

#include "rps/curvature.hpp"
#include "rps/dihedral.hpp"
#include "rps/validate.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace rps;
using namespace rps::test;

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

// Dihedral angles at a vertex with face angles a (pentagon), a, b (n-gon),
// from explicit edge vectors rather than the spherical law of cosines.
std::pair<double, double> dihedral_oracle(int n) {
  const double a = 108.0 / kDeg, b = (180.0 - 360.0 / n) / kDeg;
  Vec3 e1(1, 0, 0), e2(std::cos(b), std::sin(b), 0);
  // e3 with e3.e1 = e3.e2 = cos a, on the unit sphere.
  double x = std::cos(a);
  double y = (std::cos(a) - x * std::cos(b)) / std::sin(b);
  double z2 = 1 - x * x - y * y;
  Vec3 e3(x, y, std::sqrt(std::max(0.0, z2)));
  auto angle_along = [](const Vec3& axis, const Vec3& p, const Vec3& q) {
    Vec3 u = (p - axis * axis.dot(p)).normalized();
    Vec3 w = (q - axis * axis.dot(q)).normalized();
    return std::acos(std::clamp(u.dot(w), -1.0, 1.0)) * kDeg;
  };
  return {angle_along(e3, e1, e2), angle_along(e1, e2, e3)};
}

RealizedSurface folded_box() {
  RealizedSurface rs = box();
  for (Vec3& p : rs.coords)
    if (p.x() > 1.5) p.x() = 0;
  return rs;
}

}  // namespace

TEST_CASE("validate_realization") {
  auto d = make_solid(SolidKind::Dodecahedron);
  CHECK(validate_realization(d).ok());

  auto moved = d;
  moved.coords[3] += Vec3(0.01, 0, 0);
  auto rep = validate_realization(moved);
  CHECK_FALSE(rep.ok());
  CHECK(rep.count("NonRegularFace") + rep.count("NonUnitEdge") > 0);
  // Hand check: some edge at vertex 3 is no longer of unit length.
  bool off = false;
  for (EdgeId e = 0; e < moved.graph.num_edges(); ++e) {
    auto [a, b] = moved.graph.edge_vertices(e);
    if (a == 3 || b == 3) off = off || std::abs((moved.coords[a] - moved.coords[b]).norm() - 1) > 1e-3;
  }
  CHECK(off);

  auto folded = validate_realization(folded_box());
  CHECK(folded.count("DanglingPair") > 0);

  for (SolidKind k : {SolidKind::Cube, SolidKind::OctagonalPrism, SolidKind::HexagonalPrism,
                      SolidKind::TruncatedOctahedron, SolidKind::TruncatedCuboctahedron})
    CHECK(validate_realization(make_solid(k)).ok());
}

TEST_CASE("interior angles") {
  CHECK(interior_angle(3) == AnglePi(1, 3));
  CHECK(interior_angle(4) == AnglePi(1, 2));
  CHECK(interior_angle(5) == AnglePi(3, 5));
  CHECK(interior_angle(8) == AnglePi(3, 4));
  CHECK_THROWS_AS(interior_angle(2), GeometryError);
}

TEST_CASE("vertex curvature") {
  auto d = make_solid(SolidKind::Dodecahedron).graph;
  for (VertexId v = 0; v < d.num_vertices(); ++v) CHECK(vertex_curvature(d, v) == AnglePi(1, 5));
  auto c = make_solid(SolidKind::Cube).graph;
  for (VertexId v = 0; v < c.num_vertices(); ++v) CHECK(vertex_curvature(c, v) == AnglePi(1, 2));
  auto drum7 = drum(7);
  CHECK(vertex_curvature(drum7, 0) == AnglePi(3, 35));
  CHECK(vertex_type(drum7, 0).to_string() == "(5^2,7)");
  auto gd = great_dodecahedron().graph;
  for (VertexId v = 0; v < gd.num_vertices(); ++v) CHECK(vertex_curvature(gd, v) == AnglePi(-1));
}

TEST_CASE("facial curvature") {
  auto d = make_solid(SolidKind::Dodecahedron).graph;
  for (FaceId f = 0; f < d.num_faces(); ++f) CHECK(facial_curvature(d, f) == AnglePi(1, 3));
  auto c = make_solid(SolidKind::Cube).graph;
  CHECK(facial_curvature(c, 0) == AnglePi(2, 3));

  // A pentagon with vertex degrees 3,3,3,4,4 has zero curvature.
  auto t = dodecahedral_torus(8).graph;
  int checked = 0;
  for (FaceId f = 0; f < t.num_faces(); ++f) {
    std::vector<int> deg;
    for (VertexId v : t.face_vertices(f)) deg.push_back(t.vertex_degree(v));
    std::sort(deg.begin(), deg.end());
    if (deg == std::vector<int>{3, 3, 3, 4, 4}) {
      CHECK(facial_curvature(t, f).is_zero());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("pentagon facial curvature equals -3pi + pi * sum 2/d") {
  for (const auto& [name, rs] : pent_corpus()) {
    CAPTURE(name);
    const auto& s = rs.graph;
    for (FaceId f = 0; f < s.num_faces(); ++f) {
      AnglePi formula(-3);
      for (VertexId v : s.face_vertices(f)) formula += AnglePi(2, s.vertex_degree(v));
      CHECK(facial_curvature(s, f) == formula);
    }
  }
}

TEST_CASE("facial curvature decreases as vertex degrees grow") {
  // Pentagon formula in the degrees, via the library's vertex curvature of
  // all-pentagon vertices: k_v = 2pi - d * 3pi/5, divided by d.
  auto face_value = [](const std::vector<int>& deg) {
    AnglePi sum;
    for (int d : deg) sum += (AnglePi(2) - interior_angle(5) * d) / d;
    return sum;
  };
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> deg(5);
    for (int& d : deg) d = 3 + static_cast<int>(rng() % 5);
    auto bumped = deg;
    ++bumped[rng() % 5];
    CHECK(face_value(bumped) < face_value(deg));
  }
}

TEST_CASE("Gauss-Bonnet") {
  auto d = gauss_bonnet_check(make_solid(SolidKind::Dodecahedron).graph);
  CHECK(d.total == AnglePi(4));
  CHECK(d.target == AnglePi(4));
  CHECK(d.equal);
  auto t = gauss_bonnet_check(dodecahedral_torus(8).graph);
  CHECK(t.total.is_zero());
  CHECK(t.equal);
  auto g = gauss_bonnet_check(counterexample(CounterexampleKind::TCO3).graph);
  CHECK(g.total == AnglePi(-64));
  CHECK(g.target == AnglePi(-64));
  CHECK(g.equal);
  auto gd = gauss_bonnet_check(great_dodecahedron().graph);
  CHECK(gd.total == AnglePi(-12));
  CHECK(gd.equal);
}

TEST_CASE("dihedral angles on realized surfaces") {
  auto d = make_solid(SolidKind::Dodecahedron);
  double first = -1;
  for (EdgeId e = 0; e < d.graph.num_edges(); ++e) {
    auto [f, g] = d.graph.edge_faces(e);
    double a = dihedral_angle(d, f, g);
    CHECK(std::abs(a - 116.57) <= 0.01);
    if (first < 0) first = a;
    CHECK(std::abs(a - first) <= 1e-9 * first);
  }
  auto c = make_solid(SolidKind::Cube);
  CHECK(dihedral_angle(c, 0, face_generations(c.graph, 0, 1)[0]) == doctest::Approx(90));

  // Coplanar squares across the seam of the 2x1x1 box.
  auto b = box();
  int flat = 0;
  for (EdgeId e = 0; e < b.graph.num_edges(); ++e) {
    auto [f, g] = b.graph.edge_faces(e);
    double a = dihedral_angle(b, f, g);
    CHECK(a >= 0);
    CHECK(a < 360);
    if (std::abs(a - 180) < 1e-9) ++flat;
  }
  CHECK(flat == 4);

  // Great dodecahedron: arccos(1/sqrt 5) at every edge.
  auto gd = great_dodecahedron();
  const double want = std::acos(1 / std::sqrt(5.0)) * 180 / std::numbers::pi;
  for (EdgeId e = 0; e < gd.graph.num_edges(); ++e) {
    auto [f, g] = gd.graph.edge_faces(e);
    CHECK(dihedral_angle(gd, f, g) == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("dihedral table") {
  const std::map<int, std::pair<double, double>> printed{
      {5, {116.57, 116.57}}, {7, {142.65, 132.43}}, {8, {152.54, 141.67}}, {9, {162.27, 153.22}}, {10, {180, 180}}};
  for (auto [n, want] : printed) {
    CAPTURE(n);
    auto t = dihedral_table(n);
    auto [o55, o5n] = dihedral_oracle(n);
    CHECK(std::abs(t.angle_55 - o55) < 1e-6);
    CHECK(std::abs(t.angle_5n - o5n) < 1e-6);
    CHECK(std::abs(t.angle_55 - want.first) <= 0.01);
    CHECK(std::abs(t.angle_5n - want.second) <= 0.01);
  }
  CHECK_THROWS_AS(dihedral_table(6), GeometryError);
}

TEST_CASE("isometry from correspondence") {
  auto pts = canonical_solid(SolidKind::Cube).points;
  auto id = isometry_from_correspondence(pts, pts);
  CHECK((id.rotation - Mat3::Identity()).norm() < 1e-9);
  CHECK(id.translation.norm() < 1e-9);

  Mat3 rz;
  rz << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  std::vector<Vec3> turned;
  for (const Vec3& p : pts) turned.push_back(rz * p + Vec3(3, 1, 2));
  auto m = isometry_from_correspondence(pts, turned);
  CHECK((m.rotation - rz).norm() < 1e-9);
  CHECK((m.translation - Vec3(3, 1, 2)).norm() < 1e-9);

  auto swapped = pts;
  std::swap(swapped[0], swapped[7]);
  CHECK_THROWS_AS(isometry_from_correspondence(pts, swapped), GeometryError);
}
