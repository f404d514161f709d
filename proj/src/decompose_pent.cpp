#include "rps/decompose.hpp"

#include "rps/curvature.hpp"

#include <algorithm>
#include <set>

namespace rps {

namespace {

[[noreturn]] void fail(DecomposeErrc c, const std::string& detail) {
  throw DecomposeError(c, std::string(to_string(c)) + ": " + detail);
}

// Faces of the brick present on the surface with the brick inside, connected
// through edges to f.
std::vector<FaceId> matched_component(const RealizedSurface& rs, const Brick& b, FaceId f, double eps) {
  auto on = faces_on_brick(rs, b, true, eps);
  if (!std::binary_search(on.begin(), on.end(), f)) return {};
  for (const auto& comp : face_components(rs.graph, on))
    if (std::find(comp.begin(), comp.end(), f) != comp.end()) {
      auto c = comp;
      std::sort(c.begin(), c.end());
      return c;
    }
  return {};
}

std::optional<SurgeryResult> try_cap(const RealizedSurface& rs, const Brick& b, const std::vector<FaceId>& cap,
                                     const char* rule, double eps) {
  try {
    auto r = toggle_brick(rs, b, cap, SurgeryKind::Polyhedral, eps, true);
    r.record.rule = rule;
    if (r.record.brick_removed && r.record.faces_after < r.record.faces_before) return r;
  } catch (const SurgeryError&) {
  }
  return std::nullopt;
}

// f with a positive neighbour, its first generation, and a second-generation
// face meeting two first-generation faces at a degree-3 vertex.
std::optional<SurgeryResult> seven_cap_step(const RealizedSurface& rs, const std::vector<AnglePi>& kf, double eps) {
  const SurfaceGraph& s = rs.graph;
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    if (kf[f].sign() <= 0) continue;
    auto first = face_generations(s, f, 1);
    if (first.size() != 5) continue;
    if (std::none_of(first.begin(), first.end(), [&](FaceId g) { return kf[g].sign() > 0; })) continue;
    auto bricks = bricks_at_face(rs, f, SolidKind::Dodecahedron, true, eps);
    if (bricks.empty()) continue;
    const Brick& b = bricks[0];
    auto on = faces_on_brick(rs, b, true, eps);
    std::set<FaceId> inner(first.begin(), first.end());
    inner.insert(f);
    for (FaceId g : face_generations(s, f, 2)) {
      bool corner = false;
      for (VertexId v : s.face_vertices(g)) {
        if (s.vertex_degree(v) != 3) continue;
        auto around = s.vertex_faces(v);
        corner = corner || std::count_if(around.begin(), around.end(), [&](FaceId x) {
                             return x != g && std::binary_search(first.begin(), first.end(), x);
                           }) == 2;
      }
      if (!corner) continue;
      std::vector<FaceId> cap(inner.begin(), inner.end());
      cap.push_back(g);
      std::sort(cap.begin(), cap.end());
      if (!std::includes(on.begin(), on.end(), cap.begin(), cap.end())) continue;
      if (auto r = try_cap(rs, b, cap, "seven-cap", eps)) return r;
    }
  }
  return std::nullopt;
}

// Degree pattern (3,3,3,4,4) with the two degree-4 vertices adjacent.
bool zero_pattern(const SurfaceGraph& s, FaceId f) {
  const auto& c = s.face_vertices(f);
  int threes = 0;
  std::vector<int> fours;
  for (int i = 0; i < 5; ++i) {
    int d = s.vertex_degree(c[i]);
    if (d == 3) ++threes;
    if (d == 4) fours.push_back(i);
  }
  if (threes != 3 || fours.size() != 2) return false;
  int gap = fours[1] - fours[0];
  return gap == 1 || gap == 4;
}

// Whole visible part of the dodecahedron behind a face, for faces in the
// given order.
std::optional<SurgeryResult> component_step(const RealizedSurface& rs, const std::vector<FaceId>& order,
                                            const char* rule, double eps) {
  for (FaceId f : order) {
    auto bricks = bricks_at_face(rs, f, SolidKind::Dodecahedron, true, eps);
    if (bricks.empty()) continue;
    auto cap = matched_component(rs, bricks[0], f, eps);
    if (cap.size() < 7) continue;
    if (auto r = try_cap(rs, bricks[0], cap, rule, eps)) return r;
  }
  return std::nullopt;
}

}  // namespace

Certificate decompose_pent(const RealizedSurface& input, const DecomposeOptions& opt) {
  const SurfaceGraph& s0 = input.graph;
  int genus = 0;
  try {
    genus = s0.genus();
  } catch (const Error& e) {
    fail(DecomposeErrc::GenusOutOfRange, e.what());
  }
  if (genus > 1) fail(DecomposeErrc::GenusOutOfRange, "genus " + std::to_string(genus) + " (only 0 and 1 are covered)");
  for (FaceId f = 0; f < s0.num_faces(); ++f)
    if (s0.degree(f) != 5)
      fail(DecomposeErrc::NotPentagonal, "face " + std::to_string(f) + " has degree " + std::to_string(s0.degree(f)));

  Certificate cert;
  std::vector<Brick> removed;
  RealizedSurface cur = input;
  for (int step = 0;; ++step) {
    if (step >= opt.max_steps) fail(DecomposeErrc::NoReducibleRegion, "step limit reached");
    if (is_single_brick(cur, SolidKind::Dodecahedron, opt.eps)) {
      cert.bricks.push_back(bricks_at_face(cur, 0, SolidKind::Dodecahedron, true, opt.eps)[0]);
      break;
    }
    const SurfaceGraph& s = cur.graph;
    std::vector<AnglePi> kf;
    bool all_zero = true;
    for (FaceId f = 0; f < s.num_faces(); ++f) {
      kf.push_back(facial_curvature(s, f));
      all_zero = all_zero && kf.back().is_zero();
    }
    std::optional<SurgeryResult> r = seven_cap_step(cur, kf, opt.eps);
    if (!r && all_zero && s.genus() == 1) {
      std::vector<FaceId> pattern;
      for (FaceId f = 0; f < s.num_faces(); ++f)
        if (zero_pattern(s, f)) pattern.push_back(f);
      r = component_step(cur, pattern, "zero-curvature-pattern", opt.eps);
    }
    if (!r) {
      std::vector<FaceId> all(s.num_faces());
      for (FaceId f = 0; f < s.num_faces(); ++f) all[f] = f;
      r = component_step(cur, all, "visible-brick", opt.eps);
    }
    if (!r) fail(DecomposeErrc::NoReducibleRegion, "no dodecahedral cap can be removed from a surface with " +
                                                       std::to_string(s.num_faces()) + " faces");
    removed.push_back(*r->record.brick);
    cert.provenance.push_back(std::move(r->record));
    cur = std::move(r->surface);
  }
  cert.bricks.insert(cert.bricks.end(), removed.rbegin(), removed.rend());
  auto rep = verify_certificate(cert, input, opt.eps);
  if (!rep.pass) fail(DecomposeErrc::VerificationFailed, rep.witness);
  cert.gluings = rep.gluings;
  return cert;
}

}  // namespace rps
