#pragma once

#include "rps/common.hpp"

#include <span>
#include <unordered_map>
#include <vector>

namespace rps {

// Spatial hash answering "which stored points lie within eps of p".
class PointIndex {
 public:
  explicit PointIndex(double eps = kEpsCoord) : eps_(eps), cell_(std::max(eps * 16, 1e-9)) {}

  // Returns the id of a stored point within eps of p, inserting p with a new
  // id when none exists.
  int find_or_insert(const Vec3& p);
  // Stores p under id without merging.
  void insert(const Vec3& p, int id);
  // All ids within eps of p, ascending.
  std::vector<int> find_all(const Vec3& p) const;
  int find(const Vec3& p) const;  // smallest id within eps, or kNone

  const std::vector<Vec3>& points() const { return pts_; }

 private:
  struct Key {
    long long x, y, z;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return static_cast<std::size_t>(k.x * 73856093LL ^ k.y * 19349663LL ^ k.z * 83492791LL);
    }
  };
  Key key_of(const Vec3& p) const;

  double eps_, cell_;
  std::vector<Vec3> pts_;
  std::vector<int> ids_;
  int next_id_ = 0;
  std::unordered_map<Key, std::vector<int>, KeyHash> grid_;  // cell -> slots in pts_
};

// Points of the intersection of two convex planar polygons, as the vertices
// of a convex set (empty when the polygons are apart by more than eps).
std::vector<Vec3> convex_polygon_intersection(std::span<const Vec3> p, std::span<const Vec3> q,
                                              double eps = kEpsCoord);

// True if the convex sets share interior points (touching within eps is not overlap).
bool convex_polyhedra_overlap(std::span<const Vec3> a_pts, std::span<const Vec3> a_normals,
                              std::span<const Vec3> a_edge_dirs, std::span<const Vec3> b_pts,
                              std::span<const Vec3> b_normals, std::span<const Vec3> b_edge_dirs,
                              double eps = kEpsCoord);

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

}  // namespace rps
