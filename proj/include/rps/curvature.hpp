#pragma once

#include "rps/angle.hpp"
#include "rps/surface_graph.hpp"

#include <map>
#include <string>

namespace rps {

// (k-2)/k pi. Throws GeometryError(DegreeTooSmall) for k < 3.
AnglePi interior_angle(int k);

// 2pi minus the interior angles of the faces around v.
AnglePi vertex_curvature(const SurfaceGraph& s, VertexId v);

// Sum over the vertices of f of k_v / d_v.
AnglePi facial_curvature(const SurfaceGraph& s, FaceId f);

struct GaussBonnet {
  AnglePi total;
  AnglePi target;
  bool equal = false;
};

GaussBonnet gauss_bonnet_check(const SurfaceGraph& s);

// Multiset of face degrees around a vertex.
struct VertexType {
  std::map<int, int> count;  // face degree -> multiplicity

  int degree() const;
  std::string to_string() const;  // e.g. "(5^2,8)"
  bool operator==(const VertexType&) const = default;
};

VertexType vertex_type(const SurfaceGraph& s, VertexId v);

}  // namespace rps
