#pragma once

#include <cmath>

#include "ballcells/errors.hpp"
#include "ballcells/tolerances.hpp"
#include "ballcells/vec3.hpp"

namespace ballcells {

/// The closed half-space { x : x.normal <= offset } with |normal| = 1.
struct HalfSpace {
  Vec3 normal;
  double offset{0.0};

  HalfSpace() = default;
  HalfSpace(const Vec3& n, double o) : normal(n), offset(o) {}

  double signed_distance(const Vec3& p) const { return dot(p, normal) - offset; }
  bool contains(const Vec3& p, double eps = 0.0) const {
    return signed_distance(p) <= eps;
  }

  bool has_unit_normal(double eps = kEpsUnit) const {
    return std::fabs(norm(normal) - 1.0) <= eps;
  }

  /// Rescale so the normal is unit length; the offset scales with it.
  /// Throws DegenerateInputError on a (near-)zero normal.
  static HalfSpace normalize(const Vec3& n, double o) {
    const double len = norm(n);
    if (!(len > 1e-300)) throw DegenerateInputError("half-space normal is zero");
    return HalfSpace(n / len, o / len);
  }
};

}  // namespace ballcells
