#include "support.hpp"

#include "rps/curvature.hpp"
#include "rps/decompose.hpp"

#include <doctest.h>

#include <random>

using namespace rps;
using namespace rps::test;

namespace {

DecomposeErrc pent_error(const RealizedSurface& rs) {
  try {
    decompose_pent(rs);
  } catch (const DecomposeError& e) {
    return e.code();
  }
  FAIL("decomposition succeeded");
  return DecomposeErrc::VerificationFailed;
}

DecomposeErrc square_oct_error(const RealizedSurface& rs) {
  try {
    decompose_square_oct(rs);
  } catch (const DecomposeError& e) {
    return e.code();
  }
  FAIL("decomposition succeeded");
  return DecomposeErrc::VerificationFailed;
}

// Every certificate brick coincides with a distinct generator brick.
bool same_multiset(const std::vector<Brick>& a, const std::vector<Brick>& b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const Brick& x : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size() && !hit; ++j)
      if (!used[j] && x.kind == b[j].kind && same_brick(x, b[j])) used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

Certificate cert_of(std::vector<Brick> bricks) { return {std::move(bricks), {}, {}}; }

}  // namespace

TEST_CASE("pentagonal decomposition") {
  auto d = make_solid(SolidKind::Dodecahedron);
  auto c1 = decompose_pent(d);
  CHECK(c1.bricks.size() == 1);
  CHECK(verify_certificate(c1, d).pass);

  auto pair = glue(d, 0, d, 0);
  CHECK(pair.graph.num_faces() == 22);
  auto c2 = decompose_pent(pair);
  CHECK(c2.bricks.size() == 2);
  CHECK(c2.gluings.size() == 1);
  CHECK(verify_certificate(c2, pair).pass);

  auto torus = dodecahedral_torus_compound(8);
  CHECK(torus.surface.graph.genus() == 1);
  auto ct = decompose_pent(torus.surface);
  CHECK(ct.bricks.size() == 8);
  CHECK(same_multiset(ct.bricks, torus.bricks));
}

TEST_CASE("pentagonal decomposition recovers generator bricks") {
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    auto c = random_pent_compound(k, 40 + k);
    auto cert = decompose_pent(c.surface);
    CHECK(same_multiset(cert.bricks, c.bricks));
    CHECK(static_cast<int>(cert.provenance.size()) == k - 1);
    for (const auto& r : cert.provenance) CHECK(r.faces_after <= r.faces_before - 2);
  }
}

TEST_CASE("(4,8) decomposition") {
  auto cube = make_solid(SolidKind::Cube);
  CHECK(decompose_square_oct(cube).bricks.size() == 1);

  auto slab = polycube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  auto cs = decompose_square_oct(slab.surface);
  CHECK(cs.bricks.size() == 4);
  CHECK(kind_counts(cs.bricks)[SolidKind::Cube] == 4);
  CHECK(same_multiset(cs.bricks, slab.bricks));

  Brick prism{SolidKind::OctagonalPrism, {}};
  std::vector<Brick> bricks{prism};
  for (int i = 0; i < prism.num_facets() && bricks.size() < 3; ++i) {
    auto f = prism.facet(i);
    if (f.size() != 4) continue;
    Vec3 c = centroid(f);
    bool opposite_taken = bricks.size() == 2 && c.normalized().dot(bricks[1].center().normalized()) < -0.99;
    if (bricks.size() == 1 || opposite_taken) bricks.push_back(*brick_on_facet(prism, i, SolidKind::Cube));
  }
  REQUIRE(bricks.size() == 3);
  auto pc = compound_from_bricks(bricks);
  auto cp = decompose_square_oct(pc.surface);
  CHECK(kind_counts(cp.bricks)[SolidKind::OctagonalPrism] == 1);
  CHECK(kind_counts(cp.bricks)[SolidKind::Cube] == 2);
  CHECK(same_multiset(cp.bricks, pc.bricks));
}

TEST_CASE("(4,8) decomposition recovers generator bricks") {
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i);
    auto c = random_square_oct_compound(2 + 2 * i, i % 4, 70 + i);
    auto cert = decompose_square_oct(c.surface);
    CHECK(same_multiset(cert.bricks, c.bricks));
    CHECK(verify_certificate(cert, c.surface).pass);
  }
}

TEST_CASE("drivers reject surfaces outside their scope") {
  CHECK(pent_error(great_dodecahedron()) == DecomposeErrc::GenusOutOfRange);
  CHECK(pent_error(make_solid(SolidKind::Cube)) == DecomposeErrc::NotPentagonal);
  CHECK(square_oct_error(make_solid(SolidKind::Dodecahedron)) == DecomposeErrc::NotSquareOct);
  CHECK(square_oct_error(make_solid(SolidKind::TruncatedCuboctahedron)) == DecomposeErrc::NotSquareOct);
  CHECK(square_oct_error(dodecahedral_torus(8)) == DecomposeErrc::GenusOutOfRange);
}

TEST_CASE("certificate verification") {
  auto cube = make_solid(SolidKind::Cube);
  Brick a{SolidKind::Cube, {}};
  Brick b{SolidKind::Cube, RigidMotion::translate(Vec3(1, 0, 0))};
  CHECK(verify_certificate(cert_of({a}), cube).pass);

  auto box2 = box();
  auto rep = verify_certificate(cert_of({a, b}), box2);
  CHECK(rep.pass);
  CHECK(rep.cancelled_pairs == 1);
  REQUIRE(rep.gluings.size() == 1);
  CHECK(rep.gluings[0][0] == 0);
  CHECK(rep.gluings[0][2] == 1);
  CHECK(verify_certificate(cert_of({b, a}), box2).pass);

  Brick far{SolidKind::Cube, RigidMotion::translate(Vec3(5, 0, 0))};
  auto extra = verify_certificate(cert_of({a, far}), cube);
  CHECK_FALSE(extra.pass);
  CHECK(extra.witness.find("extra face") != std::string::npos);

  CHECK_FALSE(verify_certificate(cert_of({a, a}), box2).pass);
  CHECK_FALSE(verify_certificate(cert_of({a}), box2).pass);

  Brick nudged = b;
  nudged.placement.translation += Vec3(1e-3, 0, 0);
  CHECK_FALSE(verify_certificate(cert_of({a, nudged}), box2).pass);

  Brick mirrored = a;
  mirrored.placement.rotation(0, 0) = -1;
  mirrored.placement.translation = Vec3(1, 0, 0);
  auto m = verify_certificate(cert_of({mirrored}), cube);
  CHECK_FALSE(m.pass);
  CHECK(m.witness.find("improper") != std::string::npos);
}

TEST_CASE("verification does not depend on brick order") {
  auto c = random_square_oct_compound(10, 2, 11);
  auto cert = decompose_square_oct(c.surface);
  std::mt19937 rng(5);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(cert.bricks.begin(), cert.bricks.end(), rng);
    CHECK(verify_certificate(cert, c.surface).pass);
  }
}

TEST_CASE("curvature audit") {
  auto d = curvature_audit_5n(make_solid(SolidKind::Dodecahedron).graph);
  CHECK(d.violations.empty());
  CHECK(d.positive_faces == 12);
  for (const auto& f : d.faces) CHECK(f.curvature == AnglePi(1, 3));
  CHECK(d.total == AnglePi(4));

  for (int n = 7; n <= 10; ++n) {
    CAPTURE(n);
    auto rep = curvature_audit_5n(drum(n));
    CHECK(rep.genus == 0);
    CHECK(rep.genus0_infeasible);
    CHECK_FALSE(rep.violations.empty());
    CHECK(rep.total == AnglePi(4));
    // Positive faces of degree n carry only (5^2,n) vertices.
    for (const auto& f : rep.faces)
      if (f.degree >= 7 && f.curvature.sign() > 0)
        for (const auto& t : f.vertex_types) CHECK(t == "(5^2," + std::to_string(n) + ")");
    for (const auto& v : rep.violations) CHECK(v.kind != "VertsNFace");
  }

  auto gd = curvature_audit_5n(great_dodecahedron().graph);
  CHECK(gd.genus == 4);
  CHECK_FALSE(gd.genus0_infeasible);
  for (const auto& f : gd.faces) CHECK(f.curvature == AnglePi(-1));
  for (const auto& v : gd.violations) CHECK(v.kind != "NoPositivePentagon");

  CHECK_THROWS_AS(curvature_audit_5n(make_solid(SolidKind::Cube).graph), DecomposeError);
}
