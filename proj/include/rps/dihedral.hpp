#pragma once

#include "rps/realization.hpp"

namespace rps {

// Angle in degrees between adjacent faces f and g, measured through the side
// opposite to the faces' outward normals. 90 at a cube edge, 180 when flat,
// above 180 at reflex edges. Result lies in [0, 360).
double dihedral_angle(const RealizedSurface& rs, FaceId f, FaceId g);

struct DihedralPair {
  double angle_55;  // between the two pentagons
  double angle_5n;  // between a pentagon and the n-gon
};

// Dihedral angles at a vertex where two regular pentagons and a regular n-gon
// meet, from the spherical law of cosines on the vertex figure. n in {5,7,8,9,10}.
DihedralPair dihedral_table(int n);

}  // namespace rps
