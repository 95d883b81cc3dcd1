#pragma once

#include <vector>

#include "ballcells/polyhedron.hpp"

namespace ballcells {

/// One edge of the clipped surface bd(P ∩ C_L) \ bd C_L: vertex indices into
/// the clipped polyhedron, length, and inner dihedral angle.
struct InteriorEdge {
  int a{-1}, b{-1};
  double length{0.0};
  double beta{0.0};
};

struct CubeClipResult {
  ConvexPolyhedron poly;                   ///< P ∩ C_L
  double window_face_area{0.0};            ///< area of bd(P ∩ C_L) on bd C_L
  double interior_boundary_area{0.0};      ///< area of bd(P ∩ C_L) \ bd C_L
  std::vector<InteriorEdge> interior_edges;///< edges touching an interior face
  std::vector<bool> face_on_window;        ///< per clipped face
};

/// Intersect with the axis cube C_L = [-L/2, L/2]^3 centered at the origin.
///
/// A face counts as lying on bd C_L when its supporting plane coincides with
/// a cube face plane within tolerance, whether it came from the clip or from
/// the input polyhedron. interior_edges lists every edge incident to at least
/// one face off the window boundary, the edge set of the clipped-surface
/// inequality chain.
///
/// Throws EmptyIntersectionError when P ∩ C_L has no interior.
CubeClipResult clip_to_cube(const ConvexPolyhedron& p, double L);

}  // namespace ballcells
