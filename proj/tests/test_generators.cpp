#include "support.hpp"

#include "rps/curvature.hpp"
#include "rps/validate.hpp"

#include <doctest.h>

using namespace rps;
using namespace rps::test;

namespace {

std::map<int, int> degree_histogram(const SurfaceGraph& s) {
  std::map<int, int> h;
  for (FaceId f = 0; f < s.num_faces(); ++f) ++h[s.degree(f)];
  return h;
}

GenErrc gen_error(auto&& fn) {
  try {
    fn();
  } catch (const GeneratorError& e) {
    return e.code();
  }
  FAIL("generator succeeded");
  return GenErrc::NoFit;
}

const std::vector<SolidKind> kSolids{SolidKind::Cube,           SolidKind::Dodecahedron,
                                     SolidKind::OctagonalPrism, SolidKind::HexagonalPrism,
                                     SolidKind::TruncatedOctahedron, SolidKind::TruncatedCuboctahedron};

}  // namespace

TEST_CASE("solids") {
  auto cube = make_solid(SolidKind::Cube);
  CHECK(cube.graph.euler_characteristic() == 2);
  for (VertexId v = 0; v < 8; ++v) CHECK(vertex_curvature(cube.graph, v) == AnglePi(1, 2));
  CHECK(gauss_bonnet_check(cube.graph).total == AnglePi(4));
  for (const Vec3& p : cube.coords)
    for (int i = 0; i < 3; ++i) CHECK((p[i] == 0.0 || p[i] == 1.0));

  auto d = make_solid(SolidKind::Dodecahedron);
  for (VertexId v = 0; v < 20; ++v) CHECK(vertex_curvature(d.graph, v) == AnglePi(1, 5));
  CHECK(gauss_bonnet_check(d.graph).total == AnglePi(4));

  auto t = make_solid(SolidKind::TruncatedCuboctahedron);
  CHECK(t.graph.num_faces() == 26);
  CHECK(degree_histogram(t.graph) == std::map<int, int>{{4, 12}, {6, 8}, {8, 6}});
  CHECK(t.graph.euler_characteristic() == 2);

  for (SolidKind k : kSolids) {
    CAPTURE(to_string(k));
    auto s = make_solid(k);
    CHECK(validate_proper(s.graph).ok());
    CHECK(validate_realization(s).ok());
    CHECK(find_collisions(s).ok());
    CHECK(solid_kind_from_string(to_string(k)) == k);
  }
}

TEST_CASE("glue") {
  auto cube = make_solid(SolidKind::Cube);
  auto b = glue(cube, 0, cube, 0);
  CHECK(b.graph.num_faces() == 10);
  CHECK(b.graph.genus() == 0);
  CHECK(validate_realization(b).ok());
  CHECK(isomorphic(b.graph, box().graph));

  auto d = make_solid(SolidKind::Dodecahedron);
  auto dd = glue(d, 0, d, 3);
  CHECK(dd.graph.num_faces() == 22);
  CHECK(dd.graph.genus() == 0);
  CHECK(find_collisions(dd).ok());

  CHECK(gen_error([&] { glue(cube, 0, d, 0); }) == GenErrc::DegreeMismatch);
  CHECK(gen_error([&] { glue(cube, 0, cube, 0, std::nullopt, true); }) == GenErrc::AmbiguousFit);
}

TEST_CASE("gluing adds Euler characteristics minus two") {
  for (SolidKind a : kSolids)
    for (SolidKind b : kSolids) {
      auto p = make_solid(a), q = make_solid(b);
      for (FaceId fp = 0; fp < p.graph.num_faces(); ++fp) {
        FaceId fq = kNone;
        for (FaceId f = 0; f < q.graph.num_faces() && fq == kNone; ++f)
          if (q.graph.degree(f) == p.graph.degree(fp)) fq = f;
        if (fq == kNone) continue;
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        try {
          auto g = glue(p, fp, q, fq);
          CHECK(g.graph.euler_characteristic() ==
                p.graph.euler_characteristic() + q.graph.euler_characteristic() - 2);
        } catch (const GeneratorError& e) {
          CHECK(e.code() == GenErrc::CollisionDetected);
        }
        break;
      }
    }
}

TEST_CASE("dodecahedral torus") {
  for (int n : {8, 10}) {
    CAPTURE(n);
    auto c = dodecahedral_torus_compound(n);
    CHECK(c.bricks.size() == static_cast<std::size_t>(n));
    const auto& s = c.surface.graph;
    CHECK(s.genus() == 1);
    CHECK(s.euler_characteristic() == 0);
    CHECK(gauss_bonnet_check(s).total.is_zero());
    CHECK(validate_realization(c.surface).ok());
    CHECK(s.num_faces() == 10 * n);
  }
  CHECK(gen_error([] { dodecahedral_torus(3); }) == GenErrc::RingDoesNotClose);
}

TEST_CASE("great dodecahedron") {
  auto g = great_dodecahedron();
  CHECK(g.graph.genus() == 4);
  for (VertexId v = 0; v < g.graph.num_vertices(); ++v) CHECK(vertex_curvature(g.graph, v) == AnglePi(-1));
  auto gb = gauss_bonnet_check(g.graph);
  CHECK(gb.total == AnglePi(-12));
  CHECK(gb.target == AnglePi(-12));
  CHECK(validate_realization(g).count("NonRegularFace") == 0);
}

TEST_CASE("high-genus constructions") {
  struct Want {
    CounterexampleKind kind;
    int chi, genus;
    std::set<int> degrees;
  };
  for (const Want& w : {Want{CounterexampleKind::TO4, -96, 49, {4}}, Want{CounterexampleKind::TCO4, -96, 49, {4, 8}},
                        Want{CounterexampleKind::TCO3, -32, 17, {4, 6}}}) {
    CAPTURE(to_string(w.kind));
    auto s = counterexample(w.kind).graph;
    CHECK(s.num_vertices() - s.num_edges() + s.num_faces() == w.chi);
    CHECK(s.genus() == w.genus);
    std::set<int> degs;
    for (FaceId f = 0; f < s.num_faces(); ++f) degs.insert(s.degree(f));
    CHECK(degs == w.degrees);
    CHECK(gauss_bonnet_check(s).equal);
    CHECK(counterexample_kind_from_string(to_string(w.kind)) == w.kind);
  }
  CHECK(default_pairing(CounterexampleKind::TO4).tubes.size() == 64);
  CHECK(default_pairing(CounterexampleKind::TCO4).tubes.size() == 64);
  CHECK(default_pairing(CounterexampleKind::TCO3).tubes.size() == 24);
}

TEST_CASE("pairing schemes") {
  auto p = default_pairing(CounterexampleKind::TO4);
  auto back = parse_pairing(serialize_pairing(p));
  REQUIRE(back.tubes.size() == p.tubes.size());
  for (std::size_t i = 0; i < p.tubes.size(); ++i) {
    CHECK(back.tubes[i].node_a == p.tubes[i].node_a);
    CHECK(back.tubes[i].face_b == p.tubes[i].face_b);
  }
  auto missing = p;
  missing.tubes.pop_back();
  CHECK(gen_error([&] { counterexample(CounterexampleKind::TO4, missing); }) == GenErrc::InvalidPairing);
  auto twice = p;
  twice.tubes.back() = twice.tubes.front();
  CHECK(gen_error([&] { counterexample(CounterexampleKind::TO4, twice); }) == GenErrc::InvalidPairing);
  CHECK(gen_error([] { parse_pairing("tube 0 1 x\n"); }) == GenErrc::InvalidPairing);
  CHECK(parse_pairing("# nothing\n\n").tubes.empty());
}

TEST_CASE("brick compounds") {
  for (int k = 1; k <= 10; ++k) {
    auto c = random_pent_compound(k, k);
    CHECK(c.bricks.size() == static_cast<std::size_t>(k));
    CHECK(c.surface.graph.genus() == 0);
    CHECK(c.surface.graph.num_faces() == 12 * k - 2 * (k - 1));
    CHECK(validate_proper(c.surface.graph).ok());
    CHECK(validate_realization(c.surface).ok());
    CHECK(find_collisions(c.surface).ok());
  }
  for (int k = 0; k < 6; ++k) {
    auto c = random_square_oct_compound(1 + 3 * k, k % 3, 50 + k);
    CHECK(kind_counts(c.bricks)[SolidKind::Cube] == 1 + 3 * k);
    CHECK(kind_counts(c.bricks)[SolidKind::OctagonalPrism] == k % 3);
    CHECK(c.surface.graph.genus() == 0);
    CHECK(validate_proper(c.surface.graph).ok());
    CHECK(validate_realization(c.surface).ok());
    CHECK(find_collisions(c.surface).ok());
  }
  // Same seed, same compound.
  auto a = random_pent_compound(6, 9), b = random_pent_compound(6, 9);
  CHECK(a.surface.coords == b.surface.coords);

  auto slab = polycube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(slab.surface.graph.num_faces() == 16);
  CHECK(slab.gluings.size() == 4);
  CHECK_THROWS_AS(polycube({{0, 0, 0}, {2, 0, 0}}), GeneratorError);
}
