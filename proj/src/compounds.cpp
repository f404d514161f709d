#include "rps/generators.hpp"

#include "rps/validate.hpp"

#include <cmath>
#include <map>
#include <random>

namespace rps {

namespace {

[[noreturn]] void fail(GenErrc c, const std::string& detail) {
  throw GeneratorError(c, std::string(to_string(c)) + ": " + detail);
}

bool overlaps_any(const Brick& b, const std::vector<Brick>& bricks, double eps) {
  for (const Brick& o : bricks)
    if (bricks_overlap(b, o, eps)) return true;
  return false;
}

std::optional<Compound> try_compound(std::vector<Brick> bricks, double eps) {
  try {
    return compound_from_bricks(std::move(bricks), true, eps);
  } catch (const GeneratorError&) {
    return std::nullopt;
  }
}

}  // namespace

Compound compound_from_bricks(std::vector<Brick> bricks, bool require_embedded, double eps) {
  Compound c;
  for (std::size_t i = 0; i < bricks.size(); ++i)
    for (std::size_t j = i + 1; j < bricks.size(); ++j)
      if (bricks_overlap(bricks[i], bricks[j], eps))
        fail(GenErrc::InvalidCompound, "bricks " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
  PolygonSoup soup;
  try {
    soup = brick_union_boundary(bricks, eps, &c.gluings);
    c.surface = soup.to_surface();
  } catch (const Error& e) {
    fail(GenErrc::InvalidCompound, e.what());
  }
  if (!validate_proper(c.surface.graph).ok()) fail(GenErrc::InvalidCompound, "boundary is not proper");
  auto rep = validate_realization(c.surface, eps);
  if (!rep.ok()) fail(GenErrc::InvalidCompound, rep.violations[0].kind + ": " + rep.violations[0].detail);
  if (require_embedded) {
    auto col = find_collisions(c.surface, {}, eps);
    if (!col.ok()) fail(GenErrc::InvalidCompound, "boundary self-intersects: " + col.violations[0].detail);
  }
  c.bricks = std::move(bricks);
  return c;
}

Compound polycube(const std::vector<std::array<int, 3>>& cells) {
  std::vector<Brick> bricks;
  for (const auto& c : cells)
    bricks.push_back({SolidKind::Cube, RigidMotion::translate(Vec3(c[0], c[1], c[2]))});
  return compound_from_bricks(std::move(bricks));
}

std::optional<Brick> brick_on_facet(const Brick& base, int facet, SolidKind kind, int alignment, double eps) {
  auto pts = base.facet(facet);
  std::reverse(pts.begin(), pts.end());
  auto options = bricks_on_polygon(kind, pts, eps);
  if (alignment < 0 || alignment >= static_cast<int>(options.size())) return std::nullopt;
  return options[alignment];
}

Compound random_pent_compound(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Brick> bricks{{SolidKind::Dodecahedron, RigidMotion{}}};
  Compound current = compound_from_bricks(bricks);
  int attempts = 0;
  while (static_cast<int>(current.bricks.size()) < k) {
    if (++attempts > 200 * k) fail(GenErrc::InvalidCompound, "could not grow the compound");
    std::uniform_int_distribution<int> pick_brick(0, static_cast<int>(bricks.size()) - 1), pick_facet(0, 11);
    auto nb = brick_on_facet(bricks[pick_brick(rng)], pick_facet(rng), SolidKind::Dodecahedron);
    if (!nb || overlaps_any(*nb, bricks, kEpsCoord)) continue;
    auto trial = bricks;
    trial.push_back(*nb);
    auto c = try_compound(trial, kEpsCoord);
    if (!c || c->gluings.size() + 1 != trial.size() || c->surface.graph.euler_characteristic() != 2) continue;
    bricks = std::move(trial);
    current = std::move(*c);
  }
  return current;
}

Compound random_square_oct_compound(int cubes, int prisms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int cubes_left = cubes, prisms_left = prisms;
  std::vector<Brick> bricks;
  if (prisms_left > 0 && (cubes_left == 0 || std::uniform_int_distribution<int>(0, cubes + prisms - 1)(rng) < prisms)) {
    bricks.push_back({SolidKind::OctagonalPrism, RigidMotion{}});
    --prisms_left;
  } else {
    bricks.push_back({SolidKind::Cube, RigidMotion{}});
    --cubes_left;
  }
  Compound current = compound_from_bricks(bricks);
  const int total = cubes + prisms;
  int attempts = 0;
  while (cubes_left + prisms_left > 0) {
    if (++attempts > 300 * total) fail(GenErrc::InvalidCompound, "could not grow the compound");
    SolidKind kind = std::uniform_int_distribution<int>(0, cubes_left + prisms_left - 1)(rng) < prisms_left
                         ? SolidKind::OctagonalPrism
                         : SolidKind::Cube;
    const Brick& base = bricks[std::uniform_int_distribution<int>(0, static_cast<int>(bricks.size()) - 1)(rng)];
    int facet = std::uniform_int_distribution<int>(0, base.num_facets() - 1)(rng);
    auto pts = base.facet(facet);
    std::reverse(pts.begin(), pts.end());
    auto options = bricks_on_polygon(kind, pts);
    if (options.empty()) continue;
    Brick nb = options[std::uniform_int_distribution<int>(0, static_cast<int>(options.size()) - 1)(rng)];
    if (overlaps_any(nb, bricks, kEpsCoord)) continue;
    auto trial = bricks;
    trial.push_back(nb);
    auto c = try_compound(trial, kEpsCoord);
    if (!c || c->gluings.size() + 1 != trial.size() || c->surface.graph.euler_characteristic() != 2) continue;
    bricks = std::move(trial);
    current = std::move(*c);
    (kind == SolidKind::Cube ? cubes_left : prisms_left)--;
  }
  return current;
}

namespace {

// Facet of b whose centre is at p.
int facet_at(const Brick& b, const Vec3& p) {
  for (int i = 0; i < b.num_facets(); ++i) {
    auto f = b.facet(i);
    if ((centroid(f) - p).norm() < 1e-6) return i;
  }
  return kNone;
}

// The dodecahedron glued on canonical facet f, as a motion of the canonical
// one, and the facet of the neighbour that is glued.
struct Neighbour {
  RigidMotion motion;
  int entry = kNone;
};

const std::array<Neighbour, 12>& dodecahedron_neighbours() {
  static const std::array<Neighbour, 12> table = [] {
    std::array<Neighbour, 12> t;
    Brick b{SolidKind::Dodecahedron, RigidMotion{}};
    for (int f = 0; f < 12; ++f) {
      auto nb = brick_on_facet(b, f, SolidKind::Dodecahedron);
      t[f].motion = nb->placement;
      t[f].entry = facet_at(*nb, centroid(b.facet(f)));
    }
    return t;
  }();
  return table;
}

struct RingSearch {
  int n;
  double step;
  std::vector<Brick> ring;
  std::vector<int> entry;  // facet through which each brick was entered
  std::optional<Compound> found;
  Vec3 axis;  // through the first gluing facet; rotations about it fix bricks 0 and 1

  bool least_in_orbit(const Vec3& p) const {
    const Vec3 c = ring[0].center();
    for (int j = 1; j < 5; ++j) {
      Vec3 q = c + Eigen::AngleAxisd(2 * M_PI * j / 5, axis) * (p - c);
      for (int d = 0; d < 3; ++d) {
        if (q[d] < p[d] - 1e-6) return false;
        if (q[d] > p[d] + 1e-6) break;
      }
    }
    return true;
  }

  void dfs() {
    if (found) return;
    const Brick last = ring.back();
    const int i = static_cast<int>(ring.size());  // index of the brick being placed
    const auto& table = dodecahedron_neighbours();
    for (int f = 0; f < 12 && !found; ++f) {
      if (f == entry.back() || (i == 1 && f != 0)) continue;
      std::optional<Brick> nb = Brick{SolidKind::Dodecahedron, table[f].motion.then(last.placement)};
      if (i == n) {
        if (!same_brick(*nb, ring[0])) continue;
        int back = facet_at(ring[0], centroid(last.facet(f)));
        if (back == kNone || back == 0) continue;
        auto c = try_compound(ring, kEpsCoord);
        if (c && static_cast<int>(c->gluings.size()) == n && c->surface.graph.genus() == 1) found = std::move(c);
        continue;
      }
      if ((nb->center() - ring[0].center()).norm() > (n - i) * step + 1e-6) continue;
      if (i == 2 && !least_in_orbit(nb->center())) continue;
      bool clash = false;
      for (std::size_t j = 0; j + 1 < ring.size() && !clash; ++j) clash = bricks_overlap(*nb, ring[j]);
      if (clash) continue;
      ring.push_back(*nb);
      entry.push_back(table[f].entry);
      dfs();
      ring.pop_back();
      entry.pop_back();
    }
  }
};

}  // namespace

Compound dodecahedral_torus_compound(int n) {
  static std::map<int, Compound> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 3 || n > 10)
    fail(GenErrc::RingDoesNotClose, "ring length " + std::to_string(n) + " outside the searched range 3..10");
  Brick b0{SolidKind::Dodecahedron, RigidMotion{}};
  RingSearch search{n, 0, {b0}, {kNone}, std::nullopt, Vec3::UnitZ()};
  auto b1 = brick_on_facet(b0, 0, SolidKind::Dodecahedron);
  search.step = (b1->center() - b0.center()).norm();
  search.axis = (b1->center() - b0.center()).normalized();
  search.dfs();
  if (!search.found) fail(GenErrc::RingDoesNotClose, "no closed ring of " + std::to_string(n) + " dodecahedra");
  cache[n] = *search.found;
  return *search.found;
}

RealizedSurface dodecahedral_torus(int n) { return dodecahedral_torus_compound(n).surface; }

}  // namespace rps
