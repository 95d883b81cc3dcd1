#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ballcells/polyhedron.hpp"
#include "ballcells/vec3.hpp"

namespace ballcells {

/// Periodic packing of unit balls: centers are basis * n + motif[m] over all
/// integer vectors n and motif indices m. Invariants: the basis is
/// non-singular and the minimum pairwise center distance is >= 2 (balls do
/// not overlap).
struct PeriodicPacking {
  Mat3 basis;               ///< lattice vectors as columns
  std::vector<Vec3> motif;  ///< center positions in the fundamental cell
  std::string name;         ///< preset tag, or caller-chosen label
  /// Covering radius (largest distance from any point of space to the
  /// nearest center). Presets fill the exact value; 0 means unknown, in
  /// which case a conservative bound derived from the basis is used.
  double covering_radius{0.0};
};

/// A center of the packing, identified by motif index and lattice coordinates.
struct PackedCenter {
  Vec3 position;
  int motif_index{0};
};

/// Build one of the presets "SC", "FCC", "BCC", "HCP", scaled so the minimum
/// center distance is exactly 2. Throws UnknownPresetError otherwise.
PeriodicPacking preset_packing(std::string_view name);

/// Minimum pairwise center distance over the infinite packing.
double min_center_distance(const PeriodicPacking& p);

/// Covering radius to use for cell construction: the stored exact value, or a
/// conservative bound (half the fundamental-cell diameter plus motif spread).
double effective_covering_radius(const PeriodicPacking& p);

/// All centers within Euclidean distance R of x (closed ball), in
/// deterministic (motif-major, lattice-lexicographic) order.
std::vector<PackedCenter> centers_near(const PeriodicPacking& p, const Vec3& x,
                                       double R);

/// All centers c with max-norm |c|_inf <= half_extent + slack, deterministic
/// order as above.
std::vector<PackedCenter> centers_in_box(const PeriodicPacking& p,
                                         double half_extent, double slack = 0.0);

/// The Voronoi cell of the center motif[center_index], in centered
/// coordinates (the center sits at the origin). Built as the intersection of
/// the bisector half-spaces { x : x . u <= |u|^2 / 2 }, u = c - o, over all
/// neighboring centers c within distance 2 * cutoff_R.
///
/// cutoff_R <= 0 selects the default, the packing's covering radius; the
/// construction is then validated by recomputing at twice the cutoff and
/// requiring an identical cell. Throws CutoffTooSmallError when the cell is
/// unbounded at the given cutoff or changes under doubling.
ConvexPolyhedron voronoi_cell(const PeriodicPacking& p, int center_index,
                              double cutoff_R = 0.0);

}  // namespace ballcells
