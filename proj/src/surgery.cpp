#include "rps/surgery.hpp"

#include "rps/polygon.hpp"
#include "rps/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rps {

const char* to_string(SurgeryErrc c) {
  switch (c) {
    case SurgeryErrc::NonSeparating: return "NonSeparating";
    case SurgeryErrc::BoundaryMismatch: return "BoundaryMismatch";
    case SurgeryErrc::NoIsometry: return "NoIsometry";
    case SurgeryErrc::BandHasOctagon: return "BandHasOctagon";
    case SurgeryErrc::OverReduction: return "OverReduction";
    case SurgeryErrc::NotPrismStructured: return "NotPrismStructured";
    case SurgeryErrc::WrongKind: return "WrongKind";
    case SurgeryErrc::SingleBrick: return "SingleBrick";
    case SurgeryErrc::NoBridgingFace: return "NoBridgingFace";
    case SurgeryErrc::NotCubeCorner: return "NotCubeCorner";
    case SurgeryErrc::NotPrismHalf: return "NotPrismHalf";
    case SurgeryErrc::NotBrickCap: return "NotBrickCap";
    case SurgeryErrc::InvalidResult: return "InvalidResult";
  }
  return "?";
}

const char* to_string(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::Polyhedral: return "polyhedral";
    case SurgeryKind::Band: return "band";
    case SurgeryKind::OctagonRemoval: return "octagon-removal";
    case SurgeryKind::PrismRemoval: return "prism-removal";
    case SurgeryKind::CubeRemoval: return "cube-removal";
    case SurgeryKind::CubeFlip: return "cube-flip";
    case SurgeryKind::PrismFlip: return "prism-flip";
    case SurgeryKind::DanglingCleanup: return "dangling-cleanup";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(SurgeryErrc c, const std::string& detail) {
  throw SurgeryError(c, std::string(to_string(c)) + ": " + detail);
}

// Orientation of a polygon relative to another with the same point set:
// +1 same cyclic order, -1 reversed, 0 neither.
int relative_orientation(std::span<const Vec3> a, std::span<const Vec3> b, double eps) {
  const int k = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != k) return 0;
  int s = -1;
  for (int j = 0; j < k && s < 0; ++j)
    if ((a[0] - b[j]).norm() <= eps) s = j;
  if (s < 0) return 0;
  bool fwd = true, bwd = true;
  for (int i = 0; i < k; ++i) {
    fwd = fwd && (a[i] - b[(s + i) % k]).norm() <= eps;
    bwd = bwd && (a[i] - b[((s - i) % k + k) % k]).norm() <= eps;
  }
  return fwd ? 1 : bwd ? -1 : 0;
}

// Build and check a soup produced by a surgery. new_tag marks faces that the
// surgery put in; only those are checked for collisions.
RealizedSurface finish(PolygonSoup soup, std::vector<int> tags, int genus_before, bool allow_genus_change,
                       bool check_collisions, double eps, int* dangling) {
  *dangling = remove_dangling_pairs(soup, eps, &tags);
  if (soup.faces.empty()) fail(SurgeryErrc::OverReduction, "no faces left after removing dangling pairs");
  RealizedSurface out;
  try {
    out = soup.to_surface();
  } catch (const BuildError& e) {
    fail(SurgeryErrc::InvalidResult, e.what());
  }
  int g = 0;
  try {
    g = out.graph.genus();
  } catch (const Error& e) {
    fail(SurgeryErrc::InvalidResult, e.what());
  }
  if (allow_genus_change ? g > genus_before : g != genus_before)
    fail(SurgeryErrc::InvalidResult, "genus changed from " + std::to_string(genus_before) + " to " + std::to_string(g));
  auto prop = validate_proper(out.graph);
  if (!prop.ok()) fail(SurgeryErrc::InvalidResult, prop.violations[0].kind + ": " + prop.violations[0].detail);
  auto real = validate_realization(out, eps);
  if (!real.ok()) fail(SurgeryErrc::InvalidResult, real.violations[0].kind + ": " + real.violations[0].detail);
  if (check_collisions) {
    std::vector<FaceId> fresh;
    for (int f = 0; f < static_cast<int>(tags.size()); ++f)
      if (tags[f]) fresh.push_back(f);
    if (!fresh.empty()) {
      auto col = find_collisions(out, fresh, eps);
      if (!col.ok()) fail(SurgeryErrc::InvalidResult, "Collision: " + col.violations[0].detail);
    }
  }
  return out;
}

int genus_of(const SurfaceGraph& s) {
  try {
    return s.genus();
  } catch (const Error&) {
    return 0;
  }
}

Hemisphere make_hemisphere(const RealizedSurface& rs, const std::vector<FaceId>& faces,
                           const std::vector<VertexId>& boundary) {
  Hemisphere h;
  std::vector<int> local(rs.graph.num_vertices(), kNone);
  auto id = [&](VertexId v) {
    if (local[v] == kNone) {
      local[v] = static_cast<int>(h.points.size());
      h.points.push_back(rs.coords[v]);
    }
    return local[v];
  };
  for (VertexId v : boundary) h.boundary.push_back(id(v));
  for (FaceId f : faces) {
    std::vector<int> c;
    for (VertexId v : rs.graph.face_vertices(f)) c.push_back(id(v));
    h.faces.push_back(std::move(c));
  }
  h.source_faces = faces;
  return h;
}

}  // namespace

std::pair<Hemisphere, Hemisphere> cut_along_cycle(const RealizedSurface& rs, const Cycle& c) {
  const SurfaceGraph& s = rs.graph;
  if (!is_valid_cycle(s, c)) fail(SurgeryErrc::NonSeparating, "not a simple cycle");
  const int k = static_cast<int>(c.vertices.size());
  std::set<EdgeId> cut(c.edges.begin(), c.edges.end());
  auto flood = [&](FaceId start) {
    std::vector<char> seen(s.num_faces(), 0);
    std::vector<FaceId> stack{start}, out;
    seen[start] = 1;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      out.push_back(f);
      for (HalfedgeId h : s.face_halfedges(f)) {
        if (cut.count(s.edge(h))) continue;
        FaceId g = s.face(s.twin(h));
        if (!seen[g]) {
          seen[g] = 1;
          stack.push_back(g);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto h0 = s.find_halfedge(c.vertices[0], c.vertices[1]);
  FaceId left = s.face(*h0), right = s.face(s.twin(*h0));
  auto a = flood(left);
  if (std::binary_search(a.begin(), a.end(), right))
    fail(SurgeryErrc::NonSeparating, "the cycle does not disconnect the surface");
  for (int i = 0; i < k; ++i) {
    auto h = s.find_halfedge(c.vertices[i], c.vertices[(i + 1) % k]);
    if (!std::binary_search(a.begin(), a.end(), s.face(*h)))
      fail(SurgeryErrc::NonSeparating, "the cycle does not bound a single side");
  }
  auto b = flood(right);
  std::vector<VertexId> rev{c.vertices[0]};
  for (int i = k - 1; i > 0; --i) rev.push_back(c.vertices[i]);
  return {make_hemisphere(rs, a, c.vertices), make_hemisphere(rs, b, rev)};
}

SurgeryResult polyhedral_surgery(const Hemisphere& h1, const Hemisphere& h2, std::optional<int> alignment, double eps) {
  const int k = static_cast<int>(h1.boundary.size());
  if (static_cast<int>(h2.boundary.size()) != k)
    fail(SurgeryErrc::BoundaryMismatch, "boundary lengths " + std::to_string(k) + " and " +
                                            std::to_string(h2.boundary.size()));
  auto partner = [&](int s, int j) { return h1.boundary[((s - j) % k + k) % k]; };
  std::optional<RigidMotion> g;
  int shift = 0;
  for (int s = alignment.value_or(0); s < (alignment ? *alignment + 1 : k) && !g; ++s) {
    std::vector<Vec3> src, dst;
    for (int j = 0; j < k; ++j) {
      src.push_back(h1.points[partner(s, j)]);
      dst.push_back(h2.points[h2.boundary[j]]);
    }
    try {
      g = isometry_from_correspondence(src, dst, eps);
      shift = s;
    } catch (const GeometryError&) {
    }
  }
  if (!g) fail(SurgeryErrc::NoIsometry, "the boundary cycles are not congruent");

  PolygonSoup soup;
  soup.points = h2.points;
  std::vector<int> map1(h1.points.size(), kNone);
  for (int j = 0; j < k; ++j) map1[partner(shift, j)] = h2.boundary[j];
  for (std::size_t v = 0; v < h1.points.size(); ++v) {
    if (map1[v] != kNone) continue;
    map1[v] = static_cast<int>(soup.points.size());
    soup.points.push_back(g->apply(h1.points[v]));
  }
  for (const auto& f : h2.faces) soup.faces.push_back(f);
  for (const auto& f : h1.faces) {
    std::vector<int> c;
    for (int v : f) c.push_back(map1[v]);
    soup.faces.push_back(std::move(c));
  }
  SurgeryResult r;
  r.record.kind = SurgeryKind::Polyhedral;
  r.record.isometry = *g;
  r.record.faces_before = static_cast<int>(h1.faces.size() + h2.faces.size());
  r.record.dangling_pairs = remove_dangling_pairs(soup, eps);
  if (soup.faces.empty()) fail(SurgeryErrc::OverReduction, "no faces left after removing dangling pairs");
  try {
    r.surface = soup.to_surface();
  } catch (const BuildError& e) {
    fail(SurgeryErrc::InvalidResult, e.what());
  }
  r.record.faces_after = r.surface.graph.num_faces();
  return r;
}

std::vector<FaceId> faces_on_brick(const RealizedSurface& rs, const Brick& brick, bool same_orientation, double eps) {
  std::vector<std::vector<Vec3>> facets;
  for (int i = 0; i < brick.num_facets(); ++i) facets.push_back(brick.facet(i));
  std::vector<FaceId> out;
  for (FaceId f = 0; f < rs.graph.num_faces(); ++f) {
    auto pts = rs.face_points(f);
    for (const auto& q : facets) {
      int o = relative_orientation(pts, q, eps);
      if (o == (same_orientation ? 1 : -1)) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

SurgeryResult toggle_brick(const RealizedSurface& rs, const Brick& brick, const std::vector<FaceId>& cap,
                           SurgeryKind kind, double eps, bool allow_genus_change, bool check_collisions) {
  const SurfaceGraph& s = rs.graph;
  if (cap.empty()) fail(SurgeryErrc::NotBrickCap, "empty cap");
  const int nf = brick.num_facets();
  std::vector<std::vector<Vec3>> facets;
  for (int i = 0; i < nf; ++i) facets.push_back(brick.facet(i));

  std::vector<char> used(nf, 0), in_cap(s.num_faces(), 0);
  int mode = 0;
  for (FaceId f : cap) {
    auto pts = rs.face_points(f);
    int hit = kNone, o = 0;
    for (int i = 0; i < nf && hit == kNone; ++i) {
      o = relative_orientation(pts, facets[i], eps);
      if (o != 0) hit = i;
    }
    if (hit == kNone) fail(SurgeryErrc::NotBrickCap, "face " + std::to_string(f) + " is not a facet of the brick");
    if (used[hit] || in_cap[f]) fail(SurgeryErrc::NotBrickCap, "facet used twice");
    if (mode != 0 && o != mode) fail(SurgeryErrc::NotBrickCap, "cap faces disagree on the side of the brick");
    mode = o;
    used[hit] = 1;
    in_cap[f] = 1;
  }
  const bool removal = mode > 0;

  // Vertices where the cap meets the rest of the surface keep their identity.
  PointIndex rim(eps);
  for (FaceId f : cap)
    for (HalfedgeId h : s.face_halfedges(f))
      if (!in_cap[s.face(s.twin(h))]) {
        rim.insert(rs.coords[s.origin(h)], s.origin(h));
        rim.insert(rs.coords[s.target(h)], s.target(h));
      }

  PolygonSoup soup;
  soup.points = rs.coords;
  std::vector<int> tags;
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    if (in_cap[f]) continue;
    soup.faces.push_back(s.face_vertices(f));
    tags.push_back(0);
  }
  PointIndex fresh(eps);
  std::vector<int> fresh_ids;
  int added = 0;
  for (int i = 0; i < nf; ++i) {
    if (used[i]) continue;
    std::vector<int> c;
    for (const Vec3& p : facets[i]) {
      int v = rim.find(p);
      if (v == kNone) {
        int slot = fresh.find_or_insert(p);
        if (slot == static_cast<int>(fresh_ids.size())) {
          fresh_ids.push_back(static_cast<int>(soup.points.size()));
          soup.points.push_back(p);
        }
        v = fresh_ids[slot];
      }
      c.push_back(v);
    }
    if (removal) std::reverse(c.begin(), c.end());
    soup.faces.push_back(std::move(c));
    tags.push_back(1);
    ++added;
  }

  SurgeryResult r;
  r.record.kind = kind;
  r.record.brick = brick;
  r.record.brick_removed = removal;
  if (auto cyc = boundary_cycle(s, cap)) r.record.cycle = *cyc;
  r.record.replaced = cap;
  std::sort(r.record.replaced.begin(), r.record.replaced.end());
  r.record.added = added;
  r.record.faces_before = s.num_faces();
  r.surface = finish(std::move(soup), std::move(tags), genus_of(s), allow_genus_change, check_collisions, eps,
                     &r.record.dangling_pairs);
  r.record.faces_after = r.surface.graph.num_faces();
  return r;
}

std::vector<Brick> bricks_at_face(const RealizedSurface& rs, FaceId f, SolidKind kind, bool inner, double eps) {
  auto pts = rs.face_points(f);
  if (!inner) std::reverse(pts.begin(), pts.end());
  return bricks_on_polygon(kind, pts, eps);
}

bool is_single_brick(const RealizedSurface& rs, SolidKind kind, double eps) {
  if (rs.graph.num_faces() != static_cast<int>(canonical_solid(kind).faces.size())) return false;
  for (const Brick& b : bricks_at_face(rs, 0, kind, true, eps))
    if (static_cast<int>(faces_on_brick(rs, b, true, eps).size()) == rs.graph.num_faces()) return true;
  return false;
}

SurgeryResult band_surgery(const RealizedSurface& rs, const Band& band, double eps) {
  const SurfaceGraph& s = rs.graph;
  auto faces = band.faces();
  for (FaceId f : faces)
    if (s.degree(f) != 4) fail(SurgeryErrc::BandHasOctagon, "face " + std::to_string(f) + " of the band has degree " +
                                                               std::to_string(s.degree(f)));
  CycleSides sides;
  try {
    sides = cycle_sides(s, faces);
  } catch (const BandError& e) {
    fail(SurgeryErrc::NonSeparating, e.what());
  }
  std::vector<char> in_band(s.num_faces(), 0), on_right(s.num_faces(), 0);
  for (FaceId f : faces) in_band[f] = 1;
  for (FaceId f : sides.right) on_right[f] = 1;

  // For each crossed edge, its endpoint on the left rail and on the right rail.
  std::vector<char> left_vertex(s.num_vertices(), 0);
  for (FaceId f : sides.left)
    for (VertexId v : s.face_vertices(f)) left_vertex[v] = 1;
  std::vector<int> to_left(s.num_vertices(), kNone);
  Vec3 shift = Vec3::Zero();
  bool have_shift = false;
  for (EdgeId e : band.crossed_edges()) {
    auto [a, b] = s.edge_vertices(e);
    if (left_vertex[b] && !left_vertex[a]) std::swap(a, b);
    if (!left_vertex[a] || left_vertex[b])
      fail(SurgeryErrc::InvalidResult, "crossed edge " + std::to_string(e) + " does not join the two sides");
    Vec3 d = rs.coords[b] - rs.coords[a];
    if (!have_shift) {
      shift = d;
      have_shift = true;
    } else if ((d - shift).norm() > eps) {
      fail(SurgeryErrc::InvalidResult, "crossed edges are not parallel translates");
    }
    to_left[b] = a;
  }

  PolygonSoup soup;
  soup.points = rs.coords;
  std::vector<int> moved(s.num_vertices(), kNone);
  auto right_id = [&](VertexId v) {
    if (to_left[v] != kNone) return to_left[v];
    if (moved[v] == kNone) {
      moved[v] = static_cast<int>(soup.points.size());
      soup.points.push_back(rs.coords[v] - shift);
    }
    return moved[v];
  };
  std::vector<int> tags;
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    if (in_band[f]) continue;
    std::vector<int> c;
    for (VertexId v : s.face_vertices(f)) c.push_back(on_right[f] ? right_id(v) : v);
    soup.faces.push_back(std::move(c));
    tags.push_back(on_right[f] ? 1 : 0);
  }
  SurgeryResult r;
  r.record.kind = SurgeryKind::Band;
  r.record.isometry = RigidMotion::translate(-shift);
  r.record.replaced = faces;
  std::sort(r.record.replaced.begin(), r.record.replaced.end());
  r.record.faces_before = s.num_faces();
  // The translated side may touch the fixed side only along the rail; collisions
  // are not checked since the translated faces are congruent copies.
  r.surface = finish(std::move(soup), std::move(tags), genus_of(s), false, false, eps, &r.record.dangling_pairs);
  r.record.faces_after = r.surface.graph.num_faces();
  return r;
}

SurgeryResult octagon_removal_surgery(const RealizedSurface& rs, const std::vector<Band>& bands, const Bigon& bigon,
                                      double eps) {
  if (bigon.kind != BigonKind::Octagon) fail(SurgeryErrc::WrongKind, "the bigon is not an octagon bigon");
  if (is_single_brick(rs, SolidKind::OctagonalPrism, eps)) fail(SurgeryErrc::SingleBrick, "the surface is one prism");
  try {
    auto rep = check_interior_structure(rs, bands, bigon, eps);
    if (!rep.prism_structured) fail(SurgeryErrc::NotPrismStructured, "interior is not part of a prism");
  } catch (const BandError& e) {
    fail(SurgeryErrc::NotPrismStructured, e.what());
  }
  auto interior = bigon.interior();
  for (bool inner : {true, false}) {
    for (const Brick& b : bricks_at_face(rs, bigon.t1, SolidKind::OctagonalPrism, inner, eps)) {
      auto on = faces_on_brick(rs, b, inner, eps);
      if (!std::includes(on.begin(), on.end(), interior.begin(), interior.end())) continue;
      return toggle_brick(rs, b, interior, SurgeryKind::OctagonRemoval, eps);
    }
  }
  fail(SurgeryErrc::NotPrismStructured, "the interior does not lie on a prism through the turning points");
}

SurgeryResult brick_removal_surgery(const RealizedSurface& rs, const Bigon& bigon, double eps) {
  if (bigon.kind != BigonKind::Square) fail(SurgeryErrc::WrongKind, "the bigon is not a square bigon");
  if (is_single_brick(rs, SolidKind::Cube, eps)) fail(SurgeryErrc::SingleBrick, "the surface is one cube");
  FaceId bridge = bigon.arc_a.size() == 1 ? bigon.arc_a[0] : bigon.arc_b.size() == 1 ? bigon.arc_b[0] : kNone;
  if (bridge == kNone) fail(SurgeryErrc::NoBridgingFace, "no single face joins the turning points");
  const SolidKind kind = rs.graph.degree(bridge) == 8 ? SolidKind::OctagonalPrism : SolidKind::Cube;
  auto interior = bigon.interior();
  for (bool inner : {true, false}) {
    for (const Brick& b : bricks_at_face(rs, bridge, kind, inner, eps)) {
      auto on = faces_on_brick(rs, b, inner, eps);
      std::vector<FaceId> cap;
      std::set_intersection(on.begin(), on.end(), interior.begin(), interior.end(), std::back_inserter(cap));
      if (!std::binary_search(cap.begin(), cap.end(), bigon.t1) || !std::binary_search(cap.begin(), cap.end(), bigon.t2))
        continue;
      return toggle_brick(rs, b, cap,
                          kind == SolidKind::Cube ? SurgeryKind::CubeRemoval : SurgeryKind::PrismRemoval, eps);
    }
  }
  fail(SurgeryErrc::NoBridgingFace, "no brick through the bridge contains both turning points");
}

SurgeryResult cube_flip(const RealizedSurface& rs, FaceId f, FaceId g, FaceId h, double eps) {
  const SurfaceGraph& s = rs.graph;
  for (FaceId x : {f, g, h})
    if (s.degree(x) != 4) fail(SurgeryErrc::NotCubeCorner, "face " + std::to_string(x) + " is not a square");
  if (!s.shared_edge(f, g) || !s.shared_edge(g, h) || !s.shared_edge(f, h))
    fail(SurgeryErrc::NotCubeCorner, "the faces are not pairwise adjacent");
  for (bool inner : {true, false}) {
    for (const Brick& b : bricks_at_face(rs, f, SolidKind::Cube, inner, eps)) {
      auto on = faces_on_brick(rs, b, inner, eps);
      if (std::binary_search(on.begin(), on.end(), g) && std::binary_search(on.begin(), on.end(), h))
        return toggle_brick(rs, b, {f, g, h}, SurgeryKind::CubeFlip, eps);
    }
  }
  fail(SurgeryErrc::NotCubeCorner, "the faces do not form a corner of a unit cube");
}

SurgeryResult prism_flip(const RealizedSurface& rs, const std::vector<FaceId>& faces, double eps) {
  if (faces.size() != 5) fail(SurgeryErrc::NotPrismHalf, "a prism half has five faces");
  std::vector<FaceId> sorted = faces;
  std::sort(sorted.begin(), sorted.end());
  for (FaceId base : sorted) {
    for (bool inner : {true, false}) {
      for (const Brick& b : bricks_at_face(rs, base, SolidKind::OctagonalPrism, inner, eps)) {
        auto on = faces_on_brick(rs, b, inner, eps);
        if (std::includes(on.begin(), on.end(), sorted.begin(), sorted.end()))
          return toggle_brick(rs, b, sorted, SurgeryKind::PrismFlip, eps);
      }
    }
  }
  fail(SurgeryErrc::NotPrismHalf, "the faces are not congruent to half of an octagonal prism");
}

std::vector<FaceId> flipped_faces(const SurgeryResult& r, double eps) {
  if (!r.record.brick) return {};
  return faces_on_brick(r.surface, *r.record.brick, !r.record.brick_removed, eps);
}

SurgeryResult reapply(const RealizedSurface& rs, const SurgeryRecord& rec, double eps) {
  if (!rec.brick) fail(SurgeryErrc::NotBrickCap, "the record carries no brick");
  auto cap = faces_on_brick(rs, *rec.brick, !rec.brick_removed, eps);
  return toggle_brick(rs, *rec.brick, cap, rec.kind, eps);
}

}  // namespace rps
