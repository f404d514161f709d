#include "rps/decompose.hpp"

#include <algorithm>

namespace rps {

namespace {

[[noreturn]] void fail(DecomposeErrc c, const std::string& detail) {
  throw DecomposeError(c, std::string(to_string(c)) + ": " + detail);
}

template <class F>
std::optional<SurgeryResult> attempt(const char* rule, F&& f) {
  try {
    SurgeryResult r = f();
    r.record.rule = rule;
    if (r.record.brick && r.record.brick_removed) return r;
  } catch (const SurgeryError&) {
  }
  return std::nullopt;
}

// Cube or prism flip at turning point t, whose neighbours on the bigon
// cycle are g and h.
std::optional<SurgeryResult> flip_at(const RealizedSurface& rs, const Bigon& bg, FaceId t, FaceId g, FaceId h,
                                     double eps) {
  const SurfaceGraph& s = rs.graph;
  if (s.degree(g) == 4 && s.degree(h) == 4) return attempt("minimal-bigon", [&] { return cube_flip(rs, t, g, h, eps); });
  FaceId oct = s.degree(g) == 8 ? g : h;
  auto interior = bg.interior();
  for (const Brick& b : bricks_at_face(rs, oct, SolidKind::OctagonalPrism, true, eps)) {
    auto on = faces_on_brick(rs, b, true, eps);
    std::vector<FaceId> half;
    std::set_intersection(on.begin(), on.end(), interior.begin(), interior.end(), std::back_inserter(half));
    if (half.size() != 5 || !std::binary_search(half.begin(), half.end(), t)) continue;
    if (auto r = attempt("minimal-bigon", [&] { return prism_flip(rs, half, eps); })) return r;
  }
  return std::nullopt;
}

// Any face whose inner brick, restricted to the faces it shares with the
// surface, can be removed with fewer faces left.
std::optional<SurgeryResult> component_step(const RealizedSurface& rs, double eps) {
  const SurfaceGraph& s = rs.graph;
  for (FaceId f = 0; f < s.num_faces(); ++f) {
    std::vector<SolidKind> kinds{SolidKind::OctagonalPrism};
    if (s.degree(f) == 4) kinds.insert(kinds.begin(), SolidKind::Cube);
    for (SolidKind kind : kinds) {
      for (const Brick& b : bricks_at_face(rs, f, kind, true, eps)) {
        auto on = faces_on_brick(rs, b, true, eps);
        std::vector<FaceId> cap;
        for (const auto& comp : face_components(s, on))
          if (std::find(comp.begin(), comp.end(), f) != comp.end()) cap = comp;
        std::sort(cap.begin(), cap.end());
        if (2 * static_cast<int>(cap.size()) <= b.num_facets()) continue;
        SurgeryKind sk = kind == SolidKind::Cube ? SurgeryKind::CubeRemoval : SurgeryKind::PrismRemoval;
        auto r = attempt("visible-brick", [&] { return toggle_brick(rs, b, cap, sk, eps); });
        if (r && r->record.faces_after < r->record.faces_before) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate decompose_square_oct(const RealizedSurface& input, const DecomposeOptions& opt) {
  const SurfaceGraph& s0 = input.graph;
  int genus = 0;
  try {
    genus = s0.genus();
  } catch (const Error& e) {
    fail(DecomposeErrc::GenusOutOfRange, e.what());
  }
  if (genus != 0) fail(DecomposeErrc::GenusOutOfRange, "genus " + std::to_string(genus) + " (only 0 is covered)");
  for (FaceId f = 0; f < s0.num_faces(); ++f)
    if (s0.degree(f) != 4 && s0.degree(f) != 8)
      fail(DecomposeErrc::NotSquareOct, "face " + std::to_string(f) + " has degree " + std::to_string(s0.degree(f)));

  const double eps = opt.eps;
  Certificate cert;
  std::vector<Brick> removed;
  RealizedSurface cur = input;
  for (int step = 0;; ++step) {
    if (step >= opt.max_steps) fail(DecomposeErrc::NoReducibleRegion, "step limit reached");
    bool done = false;
    for (SolidKind k : {SolidKind::Cube, SolidKind::OctagonalPrism}) {
      if (done || !is_single_brick(cur, k, eps)) continue;
      cert.bricks.push_back(bricks_at_face(cur, 0, k, true, eps)[0]);
      done = true;
    }
    if (done) break;

    std::optional<SurgeryResult> r;
    bool stuck_square = false;
    try {
      auto bands = all_bands(cur, eps);
      auto bigons = enumerate_bigons(cur, bands, eps);
      Bigon bg = find_minimal_bigon(bigons);
      if (bg.kind == BigonKind::Octagon) {
        r = attempt("minimal-bigon", [&] { return octagon_removal_surgery(cur, bands, bg, eps); });
      } else if (bg.arc_a.size() == 1 || bg.arc_b.size() == 1) {
        r = attempt("minimal-bigon", [&] { return brick_removal_surgery(cur, bg, eps); });
      } else if (!bg.arc_a.empty() && !bg.arc_b.empty()) {
        r = flip_at(cur, bg, bg.t1, bg.arc_a.front(), bg.arc_b.back(), eps);
        if (!r) r = flip_at(cur, bg, bg.t2, bg.arc_a.back(), bg.arc_b.front(), eps);
        stuck_square = !r;
      }
    } catch (const BandError&) {
    }
    if (!r) r = component_step(cur, eps);
    if (!r) {
      if (stuck_square) fail(DecomposeErrc::FlipStuck, "no legal cube or prism flip at the minimal square bigon");
      fail(DecomposeErrc::NoReducibleRegion, "no cube or prism can be removed from a surface with " +
                                                 std::to_string(cur.graph.num_faces()) + " faces");
    }
    removed.push_back(*r->record.brick);
    cert.provenance.push_back(std::move(r->record));
    cur = std::move(r->surface);
  }
  cert.bricks.insert(cert.bricks.end(), removed.rbegin(), removed.rend());
  auto rep = verify_certificate(cert, input, eps);
  if (!rep.pass) fail(DecomposeErrc::VerificationFailed, rep.witness);
  cert.gluings = rep.gluings;
  return cert;
}

}  // namespace rps
