#pragma once

#include <span>

#include "ballcells/halfspace.hpp"
#include "ballcells/vec3.hpp"

namespace ballcells {

struct InscribedBall {
  Vec3 center;
  double radius{0.0};
};

/// Chebyshev center of the intersection of half-spaces: the center and radius
/// of the largest inscribed ball, by maximizing the minimum half-space slack.
///
/// Solved exactly as the small linear program max r s.t. n_i.x + r <= b_i
/// with a dense primal simplex (Bland's rule, so ties break toward the first
/// optimal basis). `interior_hint` must be a point strictly inside; the
/// polytope's vertex centroid works.
InscribedBall chebyshev_center(std::span<const HalfSpace> hs, const Vec3& interior_hint);

}  // namespace ballcells
