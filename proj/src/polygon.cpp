#include "rps/polygon.hpp"

#include "rps/realization.hpp"

#include <algorithm>
#include <cmath>

namespace rps {

PointIndex::Key PointIndex::key_of(const Vec3& p) const {
  return {static_cast<long long>(std::floor(p.x() / cell_)), static_cast<long long>(std::floor(p.y() / cell_)),
          static_cast<long long>(std::floor(p.z() / cell_))};
}

void PointIndex::insert(const Vec3& p, int id) {
  grid_[key_of(p)].push_back(static_cast<int>(pts_.size()));
  pts_.push_back(p);
  ids_.push_back(id);
  next_id_ = std::max(next_id_, id + 1);
}

std::vector<int> PointIndex::find_all(const Vec3& p) const {
  std::vector<int> out;
  Key k = key_of(p);
  for (long long dx = -1; dx <= 1; ++dx)
    for (long long dy = -1; dy <= 1; ++dy)
      for (long long dz = -1; dz <= 1; ++dz) {
        auto it = grid_.find({k.x + dx, k.y + dy, k.z + dz});
        if (it == grid_.end()) continue;
        for (int slot : it->second)
          if ((pts_[slot] - p).norm() <= eps_) out.push_back(ids_[slot]);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int PointIndex::find(const Vec3& p) const {
  auto all = find_all(p);
  return all.empty() ? kNone : all.front();
}

int PointIndex::find_or_insert(const Vec3& p) {
  int id = find(p);
  if (id != kNone) return id;
  id = next_id_;
  insert(p, id);
  return id;
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  Vec3 d = b - a;
  double len2 = d.squaredNorm();
  if (len2 < 1e-30) return (p - a).norm();
  double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

namespace {

using Vec2 = Eigen::Vector2d;

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

std::vector<Vec3> coplanar_intersection(std::span<const Vec3> p, std::span<const Vec3> q, const Vec3& n,
                                        double eps) {
  Vec3 o = p[0];
  Vec3 u = (p[1] - p[0]).normalized();
  Vec3 w = n.cross(u);
  auto to2 = [&](const Vec3& x) { return Vec2((x - o).dot(u), (x - o).dot(w)); };
  std::vector<Vec2> subject, clip;
  for (const Vec3& x : p) subject.push_back(to2(x));
  for (const Vec3& x : q) clip.push_back(to2(x));
  // Orient the clip polygon counter-clockwise.
  double area = 0;
  for (std::size_t i = 0; i < clip.size(); ++i) area += cross2(clip[i], clip[(i + 1) % clip.size()]);
  if (area < 0) std::reverse(clip.begin(), clip.end());

  for (std::size_t i = 0; i < clip.size() && !subject.empty(); ++i) {
    Vec2 a = clip[i], b = clip[(i + 1) % clip.size()];
    Vec2 e = b - a;
    double len = e.norm();
    auto side = [&](const Vec2& x) { return cross2(e, x - a) / len + eps; };  // >= 0 inside
    std::vector<Vec2> out;
    for (std::size_t j = 0; j < subject.size(); ++j) {
      Vec2 c = subject[j], d = subject[(j + 1) % subject.size()];
      double sc = side(c), sd = side(d);
      if (sc >= 0) out.push_back(c);
      if ((sc >= 0) != (sd >= 0)) out.push_back(c + (d - c) * (sc / (sc - sd)));
    }
    subject = std::move(out);
  }
  std::vector<Vec3> res;
  for (const Vec2& x : subject) res.push_back(o + x.x() * u + x.y() * w);
  return res;
}

// Points where polygon p meets the plane (n, d): vertices on the plane and edge crossings.
std::vector<Vec3> plane_section(std::span<const Vec3> p, const Vec3& n, double d, double eps) {
  std::vector<Vec3> out;
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i) {
    double si = n.dot(p[i]) - d, sj = n.dot(p[(i + 1) % k]) - d;
    if (std::abs(si) <= eps) out.push_back(p[i]);
    if ((si > eps && sj < -eps) || (si < -eps && sj > eps)) {
      double t = si / (si - sj);
      out.push_back(p[i] + t * (p[(i + 1) % k] - p[i]));
    }
  }
  return out;
}

}  // namespace

std::vector<Vec3> convex_polygon_intersection(std::span<const Vec3> p, std::span<const Vec3> q, double eps) {
  Vec3 np = polygon_normal(p), nq = polygon_normal(q);
  double dp = np.dot(centroid(p)), dq = nq.dot(centroid(q));
  double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
  for (const Vec3& x : p) {
    double s = nq.dot(x) - dq;
    pmin = std::min(pmin, s);
    pmax = std::max(pmax, s);
  }
  for (const Vec3& x : q) {
    double s = np.dot(x) - dp;
    qmin = std::min(qmin, s);
    qmax = std::max(qmax, s);
  }
  if (pmin > eps || pmax < -eps || qmin > eps || qmax < -eps) return {};
  Vec3 line = np.cross(nq);
  bool coplanar = (std::max(std::abs(pmin), std::abs(pmax)) <= eps && std::max(std::abs(qmin), std::abs(qmax)) <= eps) ||
                  line.norm() < 1e-9;
  if (coplanar) return coplanar_intersection(p, q, np, eps);

  line.normalize();
  auto sp = plane_section(p, nq, dq, eps);
  auto sq = plane_section(q, np, dp, eps);
  if (sp.empty() || sq.empty()) return {};
  auto extent = [&](const std::vector<Vec3>& pts, Vec3& lo_pt, Vec3& hi_pt, double& lo, double& hi) {
    lo = 1e300;
    hi = -1e300;
    for (const Vec3& x : pts) {
      double t = line.dot(x);
      if (t < lo) { lo = t; lo_pt = x; }
      if (t > hi) { hi = t; hi_pt = x; }
    }
  };
  Vec3 pa, pb, qa, qb;
  double p0, p1, q0, q1;
  extent(sp, pa, pb, p0, p1);
  extent(sq, qa, qb, q0, q1);
  double lo = std::max(p0, q0), hi = std::min(p1, q1);
  if (lo > hi + eps) return {};
  if (hi < lo) hi = lo;
  auto at = [&](double t) -> Vec3 {
    if (p1 - p0 < 1e-15) return pa;
    return pa + (std::clamp(t, p0, p1) - p0) / (p1 - p0) * (pb - pa);
  };
  return {at(lo), at(hi)};
}

bool convex_polyhedra_overlap(std::span<const Vec3> a_pts, std::span<const Vec3> a_normals,
                              std::span<const Vec3> a_edge_dirs, std::span<const Vec3> b_pts,
                              std::span<const Vec3> b_normals, std::span<const Vec3> b_edge_dirs, double eps) {
  auto separated = [&](const Vec3& axis) {
    double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
    for (const Vec3& x : a_pts) {
      double t = axis.dot(x);
      amin = std::min(amin, t);
      amax = std::max(amax, t);
    }
    for (const Vec3& x : b_pts) {
      double t = axis.dot(x);
      bmin = std::min(bmin, t);
      bmax = std::max(bmax, t);
    }
    return amax <= bmin + eps || bmax <= amin + eps;
  };
  for (const Vec3& n : a_normals)
    if (separated(n)) return false;
  for (const Vec3& n : b_normals)
    if (separated(n)) return false;
  for (const Vec3& ea : a_edge_dirs)
    for (const Vec3& eb : b_edge_dirs) {
      Vec3 c = ea.cross(eb);
      if (c.norm() < 1e-9) continue;
      if (separated(c.normalized())) return false;
    }
  return true;
}

}  // namespace rps
