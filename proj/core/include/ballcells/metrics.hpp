#pragma once

#include <vector>

#include "ballcells/polyhedron.hpp"

namespace ballcells {

/// The per-cell functionals: surface area, volume, edge curvature, total edge
/// length, inradius, diameter, and the inner dihedral angle per edge
/// (aligned with ConvexPolyhedron::edges()).
struct CellMetrics {
  double sarea{0.0};
  double vol{0.0};
  double ecurv{0.0};
  double total_edge_length{0.0};
  double inradius{0.0};
  double diameter{0.0};
  std::vector<double> dihedral_angles;
};

/// Compute every functional of a valid bounded polyhedron.
///
/// sarea sums triangulated face areas; vol sums signed tetrahedra against the
/// vertex centroid; ecurv is sum of L(e) * cot(beta_e / 2) over edges with
/// beta_e the inner dihedral; inradius comes from the Chebyshev linear
/// program; diameter is the max vertex-pair distance. All reductions run in
/// index order so results are bit-reproducible.
///
/// Throws DegenerateFaceError if a face's vertices are collinear beyond
/// tolerance.
CellMetrics metrics(const ConvexPolyhedron& p);

/// Surface area only (cheap path for optimizer objectives).
double surface_area(const ConvexPolyhedron& p);

/// Volume only.
double volume(const ConvexPolyhedron& p);

}  // namespace ballcells
