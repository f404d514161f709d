#include "rps/bands.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rps {

const char* to_string(BandErrc c) {
  switch (c) {
    case BandErrc::NotIncident: return "NotIncident";
    case BandErrc::NoParallelEdge: return "NoParallelEdge";
    case BandErrc::NotClosed: return "NotClosed";
    case BandErrc::NonParallelTransport: return "NonParallelTransport";
    case BandErrc::NotGenusZero: return "NotGenusZero";
    case BandErrc::NoBigon: return "NoBigon";
    case BandErrc::MixedBigon: return "MixedBigon";
    case BandErrc::LemmaViolation: return "LemmaViolation";
  }
  return "?";
}

const char* to_string(BigonKind k) {
  switch (k) {
    case BigonKind::Square: return "square";
    case BigonKind::Octagon: return "octagon";
    case BigonKind::Mixed: return "mixed";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(BandErrc c, const std::string& detail) {
  throw BandError(c, std::string(to_string(c)) + ": " + detail);
}

Vec3 edge_dir(const RealizedSurface& rs, HalfedgeId h) {
  return (rs.coords[rs.graph.target(h)] - rs.coords[rs.graph.origin(h)]).normalized();
}

bool parallel(const Vec3& a, const Vec3& b, double eps) { return std::abs(a.dot(b)) >= 1.0 - eps; }

// Halfedge across the face from h (the opposite edge of an even-degree face).
std::optional<HalfedgeId> opposite(const SurfaceGraph& s, HalfedgeId h) {
  int k = s.degree(s.face(h));
  if (k % 2 != 0) return std::nullopt;
  for (int i = 0; i < k / 2; ++i) h = s.next(h);
  return h;
}

std::vector<FaceId> flood(const SurfaceGraph& s, const std::vector<FaceId>& seeds, const std::vector<char>& blocked) {
  std::vector<char> seen(s.num_faces(), 0);
  std::vector<FaceId> stack, out;
  for (FaceId f : seeds)
    if (!blocked[f] && !seen[f]) {
      seen[f] = 1;
      stack.push_back(f);
    }
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    out.push_back(f);
    for (FaceId g : s.face_neighbors(f))
      if (!blocked[g] && !seen[g]) {
        seen[g] = 1;
        stack.push_back(g);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void canonicalize(Band& b) {
  const int n = b.length();
  std::vector<FaceId> fs = b.faces();
  std::vector<FaceId> best;
  int best_start = 0;
  bool best_rev = false;
  for (int rev = 0; rev < 2; ++rev) {
    for (int st = 0; st < n; ++st) {
      std::vector<FaceId> seq(n);
      for (int i = 0; i < n; ++i) seq[i] = rev ? fs[((st - i) % n + n) % n] : fs[(st + i) % n];
      if (best.empty() || seq < best) {
        best = seq;
        best_start = st;
        best_rev = rev;
      }
    }
  }
  std::vector<BandStep> steps(n);
  for (int i = 0; i < n; ++i) {
    if (!best_rev) {
      steps[i] = b.steps[(best_start + i) % n];
    } else {
      const BandStep& o = b.steps[((best_start - i) % n + n) % n];
      steps[i] = {o.face, o.exit, o.entry};
    }
  }
  b.steps = std::move(steps);
}

}  // namespace

std::vector<FaceId> Band::faces() const {
  std::vector<FaceId> out;
  for (const auto& st : steps) out.push_back(st.face);
  return out;
}

std::vector<EdgeId> Band::crossed_edges() const {
  std::vector<EdgeId> out;
  for (const auto& st : steps) out.push_back(st.exit);
  return out;
}

int Band::position(FaceId f) const {
  for (int i = 0; i < length(); ++i)
    if (steps[i].face == f) return i;
  return kNone;
}

Band trace_band(const RealizedSurface& rs, EdgeId e, FaceId f, double eps) {
  const SurfaceGraph& s = rs.graph;
  auto h0 = s.face_halfedge_on_edge(f, e);
  if (!h0) fail(BandErrc::NotIncident, "edge " + std::to_string(e) + " is not on face " + std::to_string(f));
  Band band;
  band.direction = edge_dir(rs, *h0);
  std::vector<char> visited(s.num_faces(), 0);
  HalfedgeId entry = *h0;
  FaceId cur = f;
  for (;;) {
    if (visited[cur]) fail(BandErrc::NotClosed, "band revisits face " + std::to_string(cur));
    visited[cur] = 1;
    auto exit = opposite(s, entry);
    if (!exit) fail(BandErrc::NoParallelEdge, "face " + std::to_string(cur) + " has odd degree");
    if (!parallel(edge_dir(rs, *exit), band.direction, eps))
      fail(BandErrc::NonParallelTransport, "edge " + std::to_string(s.edge(*exit)) + " is not parallel to the band");
    band.steps.push_back({cur, s.edge(entry), s.edge(*exit)});
    entry = s.twin(*exit);
    cur = s.face(entry);
    if (cur == f) {
      if (s.edge(entry) != e) fail(BandErrc::NotClosed, "band re-enters its seed face through another edge");
      break;
    }
  }
  canonicalize(band);
  return band;
}

std::vector<Band> all_bands(const RealizedSurface& rs, double eps) {
  const SurfaceGraph& s = rs.graph;
  std::vector<char> covered(s.num_edges(), 0);
  std::vector<Band> out;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (covered[e]) continue;
    Band b = trace_band(rs, e, s.edge_faces(e)[0], eps);
    for (EdgeId x : b.crossed_edges()) covered[x] = 1;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<FaceId> turning_points(const RealizedSurface& rs, const std::vector<FaceId>& cyc, double eps) {
  const SurfaceGraph& s = rs.graph;
  const std::size_t n = cyc.size();
  std::vector<FaceId> out;
  for (std::size_t i = 0; i < n; ++i) {
    FaceId prev = cyc[(i + n - 1) % n], cur = cyc[i], next = cyc[(i + 1) % n];
    auto ein = s.shared_edge(cur, prev), eout = s.shared_edge(cur, next);
    if (!ein || !eout) throw Error("not a dual cycle: consecutive faces are not adjacent");
    HalfedgeId hin = *s.face_halfedge_on_edge(cur, *ein), hout = *s.face_halfedge_on_edge(cur, *eout);
    if (!parallel(edge_dir(rs, hin), edge_dir(rs, hout), eps)) out.push_back(cur);
  }
  return out;
}

CycleSides cycle_sides(const SurfaceGraph& s, const std::vector<FaceId>& cyc) {
  const std::size_t n = cyc.size();
  std::vector<char> blocked(s.num_faces(), 0);
  for (FaceId f : cyc) blocked[f] = 1;
  std::vector<FaceId> right_seeds, left_seeds;
  for (std::size_t i = 0; i < n; ++i) {
    FaceId prev = cyc[(i + n - 1) % n], cur = cyc[i], next = cyc[(i + 1) % n];
    HalfedgeId hin = *s.face_halfedge_on_edge(cur, *s.shared_edge(cur, prev));
    HalfedgeId hout = *s.face_halfedge_on_edge(cur, *s.shared_edge(cur, next));
    for (HalfedgeId h = s.next(hin); h != hout; h = s.next(h)) right_seeds.push_back(s.face(s.twin(h)));
    for (HalfedgeId h = s.next(hout); h != hin; h = s.next(h)) left_seeds.push_back(s.face(s.twin(h)));
  }
  CycleSides sides{flood(s, left_seeds, blocked), flood(s, right_seeds, blocked)};
  std::vector<FaceId> both;
  std::set_intersection(sides.left.begin(), sides.left.end(), sides.right.begin(), sides.right.end(),
                        std::back_inserter(both));
  if (!both.empty()) fail(BandErrc::NotGenusZero, "dual cycle does not separate the surface");
  return sides;
}

std::vector<FaceId> Bigon::interior() const {
  std::vector<FaceId> out = cycle;
  out.insert(out.end(), sides[inner_side].begin(), sides[inner_side].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bigon> enumerate_bigons(const RealizedSurface& rs, const std::vector<Band>& bands, double eps) {
  const SurfaceGraph& s = rs.graph;
  std::vector<Bigon> out;
  const int nb = static_cast<int>(bands.size());
  std::vector<std::vector<int>> pos(nb, std::vector<int>(s.num_faces(), kNone));
  for (int i = 0; i < nb; ++i)
    for (int p = 0; p < bands[i].length(); ++p) pos[i][bands[i].steps[p].face] = p;

  // Faces strictly between positions p and q walking in direction dir.
  auto arc = [](const Band& b, int p, int q, int dir) {
    std::vector<FaceId> faces;
    const int n = b.length();
    for (int i = ((p + dir) % n + n) % n; i != q; i = ((i + dir) % n + n) % n) faces.push_back(b.steps[i].face);
    return faces;
  };

  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      std::vector<FaceId> common;
      for (const auto& st : bands[a].steps)
        if (pos[b][st.face] != kNone) common.push_back(st.face);
      std::sort(common.begin(), common.end());
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          FaceId c1 = common[i], c2 = common[j];
          for (int da : {1, -1}) {
            for (int db : {1, -1}) {
              auto arc_a = arc(bands[a], pos[a][c1], pos[a][c2], da);
              auto arc_b = arc(bands[b], pos[b][c2], pos[b][c1], db);
              std::vector<FaceId> cyc{c1};
              cyc.insert(cyc.end(), arc_a.begin(), arc_a.end());
              cyc.push_back(c2);
              cyc.insert(cyc.end(), arc_b.begin(), arc_b.end());
              if (cyc.size() < 3) continue;
              std::vector<FaceId> sorted = cyc;
              std::sort(sorted.begin(), sorted.end());
              if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
              auto tp = turning_points(rs, cyc, eps);
              std::sort(tp.begin(), tp.end());
              if (tp != std::vector<FaceId>{c1, c2}) continue;
              Bigon g;
              g.band_a = a;
              g.band_b = b;
              g.t1 = c1;
              g.t2 = c2;
              g.arc_a = std::move(arc_a);
              g.arc_b = std::move(arc_b);
              g.cycle = std::move(cyc);
              CycleSides cs = cycle_sides(s, g.cycle);
              g.sides = {std::move(cs.right), std::move(cs.left)};
              const auto& s0 = g.sides[0];
              const auto& s1 = g.sides[1];
              if (s1.size() < s0.size() || (s1.size() == s0.size() && !s1.empty() && s1.front() < s0.front()))
                g.inner_side = 1;
              int d1 = s.degree(c1), d2 = s.degree(c2);
              g.kind = d1 != d2 ? BigonKind::Mixed : d1 == 4 ? BigonKind::Square : BigonKind::Octagon;
              if (d1 == d2 && d1 != 4 && d1 != 8) g.kind = BigonKind::Mixed;
              out.push_back(std::move(g));
            }
          }
        }
      }
    }
  }
  return out;
}

bool side_is_bigon_free(const Bigon& b, int side, const std::vector<Bigon>& all) {
  // The disk together with the bounding cycle: a band entering and leaving
  // through the same bounding band makes a bigon there too.
  std::set<FaceId> x(b.sides[side].begin(), b.sides[side].end());
  x.insert(b.cycle.begin(), b.cycle.end());
  for (const Bigon& o : all) {
    if (o.cycle == b.cycle) continue;
    bool inside = std::all_of(o.cycle.begin(), o.cycle.end(), [&](FaceId f) { return x.count(f) > 0; });
    if (inside) return false;
  }
  return true;
}

Bigon find_minimal_bigon(const std::vector<Bigon>& bigons) {
  if (bigons.empty()) fail(BandErrc::NoBigon, "the surface has no bigon");
  std::vector<std::size_t> order(bigons.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::vector<FaceId>> interiors;
  for (const Bigon& b : bigons) interiors.push_back(b.interior());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (interiors[i].size() != interiors[j].size()) return interiors[i].size() < interiors[j].size();
    return interiors[i] < interiors[j];
  });
  for (std::size_t i : order) {
    const Bigon& b = bigons[i];
    if (!side_is_bigon_free(b, b.inner_side, bigons)) continue;
    if (b.kind == BigonKind::Mixed)
      fail(BandErrc::MixedBigon, "minimal bigon with turning points " + std::to_string(b.t1) + " and " +
                                     std::to_string(b.t2) + " of different degrees");
    return b;
  }
  fail(BandErrc::NoBigon, "no bigon has a bigon-free side");
}

Bigon find_minimal_bigon(const RealizedSurface& rs, double eps) {
  if (rs.graph.euler_characteristic() != 2) fail(BandErrc::NotGenusZero, "surface genus is not 0");
  auto bands = all_bands(rs, eps);
  if (bands.size() < 2) fail(BandErrc::NoBigon, "fewer than two bands");
  return find_minimal_bigon(enumerate_bigons(rs, bands, eps));
}

std::vector<std::pair<FaceId, EdgeId>> find_monogons(const RealizedSurface& rs, double eps) {
  const SurfaceGraph& s = rs.graph;
  std::vector<std::pair<FaceId, EdgeId>> out;
  for (FaceId t = 0; t < s.num_faces(); ++t) {
    if (s.degree(t) % 2 != 0) continue;
    for (HalfedgeId hx : s.face_halfedges(t)) {
      std::vector<char> seen(s.num_faces(), 0);
      seen[t] = 1;
      HalfedgeId entry = s.twin(hx);
      for (;;) {
        FaceId cur = s.face(entry);
        if (cur == t) {
          if (!parallel(edge_dir(rs, entry), edge_dir(rs, hx), eps)) out.push_back({t, s.edge(hx)});
          break;
        }
        if (seen[cur]) break;
        seen[cur] = 1;
        auto ex = opposite(s, entry);
        if (!ex) break;
        entry = s.twin(*ex);
      }
    }
  }
  return out;
}

StructureReport check_interior_structure(const RealizedSurface& rs, const std::vector<Band>& bands, const Bigon& b,
                                         double eps) {
  const SurfaceGraph& s = rs.graph;
  StructureReport rep;
  rep.kind = b.kind;
  auto interior = b.interior();
  if (b.kind == BigonKind::Mixed)
    fail(BandErrc::LemmaViolation, "turning points " + std::to_string(b.t1) + " and " + std::to_string(b.t2) +
                                       " have different degrees");
  if (b.kind == BigonKind::Octagon) {
    for (FaceId f : interior) {
      if (f == b.t1 || f == b.t2) continue;
      if (s.degree(f) != 4)
        fail(BandErrc::LemmaViolation, "face " + std::to_string(f) + " inside an octagon bigon has degree " +
                                           std::to_string(s.degree(f)));
      if (bands[b.band_a].position(f) == kNone && bands[b.band_b].position(f) == kNone)
        fail(BandErrc::LemmaViolation, "face " + std::to_string(f) + " is on neither bounding band");
    }
    rep.prism_structured = true;
    return rep;
  }

  Vec3 h = bands[b.band_a].direction.normalized();
  Vec3 v = bands[b.band_b].direction.normalized();
  if (std::abs(h.dot(v)) > eps) fail(BandErrc::LemmaViolation, "bands at a square turning point are not perpendicular");
  Vec3 z = h.cross(v).normalized();
  v = z.cross(h);
  rep.frame.row(0) = h.transpose();
  rep.frame.row(1) = v.transpose();
  rep.frame.row(2) = z.transpose();
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Vec3> lines{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {r, r, 0}, {r, -r, 0},
                                {r, 0, r}, {r, 0, -r}, {0, r, r}, {0, r, -r}};
  for (FaceId f : interior) {
    for (HalfedgeId he : s.face_halfedges(f)) {
      Vec3 local = rep.frame * edge_dir(rs, he);
      bool ok = std::any_of(lines.begin(), lines.end(), [&](const Vec3& l) { return parallel(local, l, eps); });
      if (!ok)
        fail(BandErrc::LemmaViolation, "edge " + std::to_string(s.edge(he)) + " of face " + std::to_string(f) +
                                           " has a direction outside the eight allowed");
    }
  }
  rep.directions_ok = true;

  auto record_octagons = [&](const std::vector<FaceId>& arc, int band, const Vec3& axis) {
    for (FaceId f : arc) {
      if (s.degree(f) != 8) continue;
      BoundaryOctagon o;
      o.face = f;
      o.band = band;
      const Band& bd = bands[band];
      EdgeId entry = bd.steps[bd.position(f)].entry;
      HalfedgeId he = *s.face_halfedge_on_edge(f, entry);
      for (int i = 0; i < 3; ++i) {
        he = s.next(he);
        o.crossing_dirs[i] = rep.frame * edge_dir(rs, he);
      }
      std::vector<Vec3> expected{((axis + Vec3(0, 0, 1)) * r), ((axis - Vec3(0, 0, 1)) * r), Vec3(0, 0, 1)};
      std::vector<char> used(3, 0);
      int matched = 0;
      for (const Vec3& d : o.crossing_dirs)
        for (int k = 0; k < 3; ++k)
          if (!used[k] && parallel(d, expected[k], eps)) {
            used[k] = 1;
            ++matched;
            break;
          }
      o.matches_lemma = matched == 3;
      rep.octagons.push_back(o);
    }
  };
  record_octagons(b.arc_a, b.band_a, Vec3(1, 0, 0));
  record_octagons(b.arc_b, b.band_b, Vec3(0, 1, 0));
  return rep;
}

}  // namespace rps
