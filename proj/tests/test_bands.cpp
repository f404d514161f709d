#include "support.hpp"

#include "rps/bands.hpp"
#include "rps/validate.hpp"

#include <doctest.h>

using namespace rps;
using namespace rps::test;

namespace {

std::vector<int> degrees(const SurfaceGraph& s, const std::vector<FaceId>& faces) {
  std::vector<int> out;
  for (FaceId f : faces) out.push_back(s.degree(f));
  std::sort(out.begin(), out.end());
  return out;
}

// An edge of face f whose direction is (anti)parallel to dir.
std::optional<EdgeId> edge_along(const RealizedSurface& rs, FaceId f, const Vec3& dir) {
  for (EdgeId e : rs.graph.face_edges(f)) {
    auto [a, b] = rs.graph.edge_vertices(e);
    Vec3 d = (rs.coords[b] - rs.coords[a]).normalized();
    if (std::abs(std::abs(d.dot(dir.normalized())) - 1) < 1e-9) return e;
  }
  return std::nullopt;
}

Compound cube_and_prism() {
  Brick cube{SolidKind::Cube, {}};
  for (int i = 0; i < cube.num_facets(); ++i)
    if (auto p = brick_on_facet(cube, i, SolidKind::OctagonalPrism)) return compound_from_bricks({cube, *p});
  FAIL("no prism fits on a cube facet");
  return {};
}

}  // namespace

TEST_CASE("trace_band on the cube and the prism") {
  auto cube = make_solid(SolidKind::Cube);
  for (EdgeId e = 0; e < cube.graph.num_edges(); ++e)
    for (FaceId f : cube.graph.edge_faces(e)) {
      auto b = trace_band(cube, e, f);
      CHECK(b.length() == 4);
      CHECK(degrees(cube.graph, b.faces()) == std::vector<int>{4, 4, 4, 4});
    }

  auto prism = make_solid(SolidKind::OctagonalPrism);
  const auto& s = prism.graph;
  int lateral = 0, rim = 0;
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    if (s.degree(f) != 4) continue;
    if (auto e = edge_along(prism, f, Vec3::UnitZ())) {
      auto b = trace_band(prism, *e, f);
      CHECK(degrees(s, b.faces()) == std::vector<int>(8, 4));
      ++lateral;
    }
    for (EdgeId e : s.face_edges(f)) {
      auto [x, y] = s.edge_faces(e);
      if (s.degree(x) == 8 || s.degree(y) == 8) {
        auto b = trace_band(prism, e, f);
        CHECK(degrees(s, b.faces()) == std::vector<int>{4, 4, 8, 8});
        ++rim;
      }
    }
  }
  CHECK(lateral == 8);
  CHECK(rim == 16);
}

TEST_CASE("band structure on the corpus") {
  for (const auto& [name, rs] : square_oct_corpus()) {
    CAPTURE(name);
    const auto& s = rs.graph;
    auto bands = all_bands(rs);
    int crossed = 0;
    std::vector<int> times(s.num_edges(), 0);
    for (const Band& b : bands) {
      crossed += b.length();
      for (EdgeId e : b.crossed_edges()) ++times[e];
      CHECK(turning_points(rs, b.faces()).empty());
      for (std::size_t i = 0; i < b.steps.size(); ++i) {
        const auto& st = b.steps[i];
        CHECK(st.exit == b.steps[(i + 1) % b.steps.size()].entry);
        auto [a0, a1] = s.edge_vertices(st.exit);
        Vec3 d = (rs.coords[a1] - rs.coords[a0]).normalized();
        CHECK(std::abs(std::abs(d.dot(b.direction.normalized())) - 1) < 1e-6);
      }
    }
    CHECK(crossed == s.num_edges());
    CHECK(std::all_of(times.begin(), times.end(), [](int t) { return t == 1; }));
    CHECK(find_monogons(rs).empty());
  }
}

TEST_CASE("box has four bands") {
  CHECK(all_bands(box()).size() == 4);
  CHECK(all_bands(make_solid(SolidKind::Cube)).size() == 3);
  CHECK(all_bands(make_solid(SolidKind::OctagonalPrism)).size() == 5);
}

TEST_CASE("turning points of bigon cycles") {
  auto cube = make_solid(SolidKind::Cube);
  auto bigons = enumerate_bigons(cube, all_bands(cube));
  REQUIRE_FALSE(bigons.empty());
  for (const Bigon& b : bigons) {
    auto tp = turning_points(cube, b.cycle);
    std::sort(tp.begin(), tp.end());
    std::vector<FaceId> want{std::min(b.t1, b.t2), std::max(b.t1, b.t2)};
    CHECK(tp == want);
    // The two crossing squares are opposite faces of the cube.
    CHECK(face_generations(cube.graph, b.t1, 2) == std::vector<FaceId>{b.t2});
  }
  auto prism = make_solid(SolidKind::OctagonalPrism);
  bool octagon_pair = false;
  for (const Bigon& b : enumerate_bigons(prism, all_bands(prism))) {
    auto tp = turning_points(prism, b.cycle);
    if (tp.size() == 2 && prism.graph.degree(tp[0]) == 8 && prism.graph.degree(tp[1]) == 8) octagon_pair = true;
  }
  CHECK(octagon_pair);
}

TEST_CASE("minimal bigons") {
  auto cube = make_solid(SolidKind::Cube);
  auto b = find_minimal_bigon(cube);
  CHECK(b.kind == BigonKind::Square);
  CHECK(b.strict_interior().empty());
  auto rep = check_interior_structure(cube, all_bands(cube), b);
  CHECK(rep.directions_ok);
  CHECK(rep.octagons.empty());

  auto prism = make_solid(SolidKind::OctagonalPrism);
  auto pb = find_minimal_bigon(prism);
  CHECK(pb.kind == BigonKind::Octagon);
  CHECK(prism.graph.degree(pb.t1) == 8);
  CHECK(prism.graph.degree(pb.t2) == 8);
  CHECK(check_interior_structure(prism, all_bands(prism), pb).prism_structured);

  auto cp = cube_and_prism();
  auto cb = find_minimal_bigon(cp.surface);
  CHECK(cb.kind == BigonKind::Square);
  CHECK(cb.strict_interior().empty());
  // The cube sticking out of the prism: its turning points are cube facets.
  const Brick& p = cp.bricks[0];
  for (FaceId t : {cb.t1, cb.t2}) {
    auto pts = cp.surface.face_points(t);
    bool on_cube = false;
    for (int i = 0; i < p.num_facets(); ++i) on_cube = on_cube || same_point_set(pts, p.facet(i));
    CHECK(on_cube);
  }
}

TEST_CASE("minimal bigon lemmas on random (4,8) compounds") {
  int square_with_octagon = 0;
  for (int seed = 0; seed < 30; ++seed) {
    auto c = random_square_oct_compound(3 + seed % 6, 1 + seed % 3, 900 + seed);
    const auto& rs = c.surface;
    auto bands = all_bands(rs);
    auto bigons = enumerate_bigons(rs, bands);
    CHECK(find_monogons(rs).empty());
    auto m = find_minimal_bigon(bigons);
    CHECK(m.kind != BigonKind::Mixed);
    CHECK(rs.graph.degree(m.t1) == rs.graph.degree(m.t2));
    auto rep = check_interior_structure(rs, bands, m);
    if (m.kind == BigonKind::Octagon) {
      for (FaceId f : m.interior())
        if (f != m.t1 && f != m.t2) CHECK(rs.graph.degree(f) == 4);
    } else {
      for (const auto& o : rep.octagons) CHECK(o.matches_lemma);
      square_with_octagon += rep.octagons.empty() ? 0 : 1;
    }
    // Band directions at turning points: |u.w| is 0 or 1/sqrt 2.
    for (const Bigon& b : bigons) {
      double d = std::abs(bands[b.band_a].direction.normalized().dot(bands[b.band_b].direction.normalized()));
      CHECK((d < 1e-6 || std::abs(d - 1 / std::sqrt(2.0)) < 1e-6));
    }
  }
  MESSAGE("square bigons bordered by octagons: " << square_with_octagon);
}

TEST_CASE("octagon bordering a minimal square bigon has the lemma's crossing directions") {
  // Band a runs along x, band b along y in the bigon frame.
  const double r = 1 / std::sqrt(2.0);
  // Random trees and the tiling patch never put an octagon on a minimal
  // square bigon, so this only checks whatever the corpus produces.
  int seen = 0, square = 0;
  std::vector<RealizedSurface> corpus{prism_half_patch().surface};
  for (int seed = 0; seed < 200; ++seed) corpus.push_back(random_square_oct_compound(4, 2, 5000 + seed).surface);
  for (const auto& rs : corpus) {
    auto bands = all_bands(rs);
    auto all = enumerate_bigons(rs, bands);
    auto m = find_minimal_bigon(all);
    if (m.kind != BigonKind::Square) continue;
    ++square;
    auto rep = check_interior_structure(rs, bands, m);
    for (const auto& o : rep.octagons) {
      const Vec3 axis = o.band == m.band_a ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
      const std::vector<Vec3> want{(axis + Vec3(0, 0, 1)) * r, (axis - Vec3(0, 0, 1)) * r, Vec3(0, 0, 1)};
      for (const Vec3& w : want) {
        bool hit = false;
        for (const Vec3& d : o.crossing_dirs) hit = hit || std::abs(std::abs(d.dot(w)) - 1) < 1e-6;
        CHECK(hit);
      }
      CHECK(o.matches_lemma);
      ++seen;
    }
  }
  CHECK(square > 0);
  MESSAGE("minimal square bigons: " << square << ", bordered by octagons: " << seen);
}

TEST_CASE("a minimal bigon's side is free of bigons including its own cycle") {
  // In the tiling patch, octagon bigons whose bands are not adjacent at the
  // turning points enclose another bigon sharing part of the cycle.
  auto rs = prism_half_patch().surface;
  auto bands = all_bands(rs);
  auto all = enumerate_bigons(rs, bands);
  int minimal = 0, rejected = 0;
  for (const Bigon& b : all) {
    if (b.kind != BigonKind::Octagon) continue;
    if (!side_is_bigon_free(b, b.inner_side, all)) {
      ++rejected;
      continue;
    }
    ++minimal;
    for (FaceId f : b.interior())
      if (f != b.t1 && f != b.t2) CHECK(rs.graph.degree(f) == 4);
  }
  CHECK(minimal > 0);
  CHECK(rejected > 0);
}
