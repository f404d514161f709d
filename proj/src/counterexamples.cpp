#include "rps/generators.hpp"

#include "rps/polygon_soup.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace rps {

const char* to_string(CounterexampleKind k) {
  switch (k) {
    case CounterexampleKind::TO4: return "to4";
    case CounterexampleKind::TCO4: return "tco4";
    case CounterexampleKind::TCO3: return "tco3";
  }
  return "?";
}

std::optional<CounterexampleKind> counterexample_kind_from_string(const std::string& s) {
  for (auto k : {CounterexampleKind::TO4, CounterexampleKind::TCO4, CounterexampleKind::TCO3})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(GenErrc c, const std::string& detail) {
  throw GeneratorError(c, std::string(to_string(c)) + ": " + detail);
}

struct Layout {
  SolidKind solid;
  int hole_degree;
  std::vector<Vec3> centers;
};

Vec3 sign_vector(int n) { return Vec3((n & 1) ? -1 : 1, (n & 2) ? -1 : 1, (n & 4) ? -1 : 1); }

// Distance from the centre of a node solid to its faces of the hole degree.
double face_distance(SolidKind solid, int degree) {
  const auto& c = canonical_solid(solid);
  for (std::size_t f = 0; f < c.faces.size(); ++f)
    if (static_cast<int>(c.faces[f].size()) == degree) return c.normals[f].dot(c.points[c.faces[f][0]]);
  return 0;
}

Layout layout(CounterexampleKind k) {
  Layout l;
  if (k == CounterexampleKind::TCO3) {
    l.solid = SolidKind::TruncatedCuboctahedron;
    l.hole_degree = 8;
    // Facing octagons two units apart.
    double s = face_distance(l.solid, 8) + 1.0;
    for (int n = 0; n < 8; ++n) l.centers.push_back(sign_vector(n) * s);
    return l;
  }
  l.solid = k == CounterexampleKind::TO4 ? SolidKind::TruncatedOctahedron : SolidKind::TruncatedCuboctahedron;
  l.hole_degree = 6;
  // Inner and outer cubes; the diagonal hexagons of matching corners one unit apart.
  double d = face_distance(l.solid, 6);
  double inner = k == CounterexampleKind::TO4 ? 3.0 : 4.0;
  double outer = inner + (2 * d + 1) / std::sqrt(3.0);
  for (int n = 0; n < 8; ++n) l.centers.push_back(sign_vector(n) * inner);
  for (int n = 0; n < 8; ++n) l.centers.push_back(sign_vector(n) * outer);
  return l;
}

// Canonical face of `solid` with the given outward direction.
int face_with_normal(SolidKind solid, const Vec3& dir) {
  const auto& c = canonical_solid(solid);
  Vec3 d = dir.normalized();
  for (std::size_t f = 0; f < c.faces.size(); ++f)
    if (c.normals[f].dot(d) > 1 - 1e-9) return static_cast<int>(f);
  throw Error("no face with the requested normal");
}

}  // namespace

PairingScheme default_pairing(CounterexampleKind k) {
  PairingScheme p;
  if (k == CounterexampleKind::TCO3) {
    const SolidKind solid = SolidKind::TruncatedCuboctahedron;
    for (int n = 0; n < 8; ++n) {
      Vec3 s = sign_vector(n);
      for (int i = 0; i < 3; ++i) {
        int m = n ^ (1 << i);
        if (m < n) continue;
        Vec3 axis = Vec3::Zero();
        axis[i] = s[i];
        // Straight tube between the facing octagons, and a second one between the outer octagons.
        p.tubes.push_back({n, face_with_normal(solid, -axis), m, face_with_normal(solid, axis), 0});
        p.tubes.push_back({n, face_with_normal(solid, axis), m, face_with_normal(solid, -axis), 0});
      }
    }
    return p;
  }
  const SolidKind solid = k == CounterexampleKind::TO4 ? SolidKind::TruncatedOctahedron : SolidKind::TruncatedCuboctahedron;
  for (int layer = 0; layer < 2; ++layer) {
    for (int n = 0; n < 8; ++n) {
      Vec3 s = sign_vector(n);
      for (int i = 0; i < 3; ++i) {
        int m = n ^ (1 << i);
        if (m < n) continue;
        Vec3 sm = sign_vector(m);
        int a = layer * 8 + n, b = layer * 8 + m;
        p.tubes.push_back({a, face_with_normal(solid, sm), b, face_with_normal(solid, s), 0});
        p.tubes.push_back({a, face_with_normal(solid, -sm), b, face_with_normal(solid, -s), 0});
      }
    }
  }
  for (int n = 0; n < 8; ++n) {
    Vec3 s = sign_vector(n);
    p.tubes.push_back({n, face_with_normal(solid, s), 8 + n, face_with_normal(solid, -s), 0});
    p.tubes.push_back({n, face_with_normal(solid, -s), 8 + n, face_with_normal(solid, s), 0});
  }
  return p;
}

PairingScheme parse_pairing(const std::string& text) {
  PairingScheme p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    TubeSpec t;
    if (word != "tube" || !(ls >> t.node_a >> t.face_a >> t.node_b >> t.face_b))
      fail(GenErrc::InvalidPairing, "line " + std::to_string(lineno) + ": expected 'tube a fa b fb [segments]'");
    if (!(ls >> t.segments)) t.segments = 0;
    p.tubes.push_back(t);
  }
  return p;
}

std::string serialize_pairing(const PairingScheme& p) {
  std::ostringstream out;
  for (const auto& t : p.tubes) {
    out << "tube " << t.node_a << ' ' << t.face_a << ' ' << t.node_b << ' ' << t.face_b;
    if (t.segments > 0) out << ' ' << t.segments;
    out << '\n';
  }
  return out.str();
}

RealizedSurface counterexample(CounterexampleKind k, const std::optional<PairingScheme>& pairing) {
  const Layout l = layout(k);
  const PairingScheme scheme = pairing ? *pairing : default_pairing(k);
  const CanonicalSolid& solid = canonical_solid(l.solid);
  const int nodes = static_cast<int>(l.centers.size());
  const int nv = static_cast<int>(solid.points.size());

  PolygonSoup soup;
  std::set<std::pair<int, int>> holes, used;
  for (int n = 0; n < nodes; ++n) {
    for (const Vec3& p : solid.points) soup.points.push_back(p + l.centers[n]);
    for (std::size_t f = 0; f < solid.faces.size(); ++f) {
      if (static_cast<int>(solid.faces[f].size()) == l.hole_degree) {
        holes.insert({n, static_cast<int>(f)});
        continue;
      }
      std::vector<int> c;
      for (int v : solid.faces[f]) c.push_back(n * nv + v);
      soup.faces.push_back(std::move(c));
    }
  }

  for (std::size_t t = 0; t < scheme.tubes.size(); ++t) {
    const TubeSpec& tube = scheme.tubes[t];
    for (auto [n, f] : {std::pair{tube.node_a, tube.face_a}, std::pair{tube.node_b, tube.face_b}}) {
      if (!holes.count({n, f}))
        fail(GenErrc::InvalidPairing, "tube " + std::to_string(t) + " uses node " + std::to_string(n) + " face " +
                                          std::to_string(f) + ", which is not a removed face");
      if (!used.insert({n, f}).second)
        fail(GenErrc::InvalidPairing, "node " + std::to_string(n) + " face " + std::to_string(f) + " used twice");
    }
    // Ring a follows the hole boundary of node_a; ring b is matched to it in
    // reverse cyclic order with the rotation giving the shortest links.
    std::vector<int> ra, rb;
    for (int v : solid.faces[tube.face_a]) ra.push_back(tube.node_a * nv + v);
    for (int v : solid.faces[tube.face_b]) rb.push_back(tube.node_b * nv + v);
    const int m = static_cast<int>(ra.size());
    int best_shift = 0;
    double best = 1e300;
    for (int sh = 0; sh < m; ++sh) {
      double cost = 0;
      for (int i = 0; i < m; ++i) cost += (soup.points[ra[i]] - soup.points[rb[((sh - i) % m + m) % m]]).squaredNorm();
      if (cost < best) {
        best = cost;
        best_shift = sh;
      }
    }
    std::vector<int> matched(m);
    for (int i = 0; i < m; ++i) matched[i] = rb[((best_shift - i) % m + m) % m];
    Vec3 ca = Vec3::Zero(), cb = Vec3::Zero();
    for (int i = 0; i < m; ++i) {
      ca += soup.points[ra[i]];
      cb += soup.points[matched[i]];
    }
    int segments = tube.segments > 0 ? tube.segments
                                      : std::max(1, static_cast<int>(std::lround((ca - cb).norm() / m)));
    std::vector<std::vector<int>> rings{ra};
    for (int j = 1; j < segments; ++j) {
      std::vector<int> ring;
      double t2 = static_cast<double>(j) / segments;
      for (int i = 0; i < m; ++i) {
        ring.push_back(static_cast<int>(soup.points.size()));
        soup.points.push_back((1 - t2) * soup.points[ra[i]] + t2 * soup.points[matched[i]]);
      }
      rings.push_back(std::move(ring));
    }
    rings.push_back(matched);
    for (std::size_t j = 0; j + 1 < rings.size(); ++j)
      for (int i = 0; i < m; ++i) {
        int i1 = (i + 1) % m;
        soup.faces.push_back({rings[j][i], rings[j][i1], rings[j + 1][i1], rings[j + 1][i]});
      }
  }
  if (used.size() != holes.size())
    fail(GenErrc::InvalidPairing, std::to_string(holes.size() - used.size()) + " removed faces are not joined by a tube");
  try {
    return soup.to_surface();
  } catch (const BuildError& e) {
    fail(GenErrc::InvalidPairing, e.what());
  }
}

}  // namespace rps
