#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ballcells/polyhedron.hpp"
#include "ballcells/vec3.hpp"

namespace ballcells {

/// A candidate cell circumscribed about the unit ball: the intersection of
/// { x . n_j <= 1 } over N unit normals. Every face plane is tangent to the
/// ball, so any bounded candidate has inradius exactly 1. Invariant: N >= 4
/// and the normals positively span 3-space, else the intersection is
/// unbounded.
struct TangentPolytopeParams {
  std::vector<Vec3> normals;
};

struct OptimizationResult {
  TangentPolytopeParams best_params;
  double best_area{0.0};
  /// (iteration, area) pairs recording each improvement of the best value
  /// within the winning restart.
  std::vector<std::pair<int, double>> history;
  int restarts_used{0};
};

/// Surface area of the tangent polytope, or +infinity when the normals do
/// not bound it (the penalty that steers the search back to feasibility).
double area_objective(const TangentPolytopeParams& params);

/// Build the tangent polytope itself. Throws NoBoundedCandidateError when the
/// intersection is unbounded.
ConvexPolyhedron tangent_polytope(const TangentPolytopeParams& params);

/// Known high-symmetry normal sets for a face count N, used as privileged
/// restart seeds; empty when none is catalogued for this N.
std::vector<std::vector<Vec3>> symmetric_seed_sets(int N);

/// Minimize area_objective over N-face tangent polytopes by Nelder-Mead
/// simplex search on the 2N spherical coordinates of the normals. Restarts
/// start from the catalogued symmetric seeds first, then seeded random unit
/// normals; they run concurrently and merge deterministically (min by area,
/// ties to the lower restart index). Each restart stops when the simplex
/// diameter drops below 1e-8 or after 1e4 iterations.
///
/// Requires N >= 4 and restarts >= 1. Throws NoBoundedCandidateError when
/// every restart ends infeasible.
OptimizationResult minimize_area(int N, int restarts, std::uint64_t seed);

}  // namespace ballcells
