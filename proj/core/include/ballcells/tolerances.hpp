#pragma once

#include <algorithm>
#include <cmath>

namespace ballcells {

// Tolerance policy. All desk-scale instances handled by this kernel have
// condition numbers far from these thresholds.

/// Unit-normal check tolerance.
inline constexpr double kEpsUnit = 1e-9;

/// Point-on-plane and vertex-merge tolerance per unit of characteristic length.
inline constexpr double kEpsGeom = 1e-9;

/// Adjacent faces with dihedral angle within this of pi are merged.
inline constexpr double kEpsAngle = 1e-7;

/// Default certificate tolerance (absolute on slacks normalized by rhs).
inline constexpr double kCertTol = 1e-7;

/// Geometric tolerance scaled by a characteristic length.
inline double eps_geom(double characteristic_length) {
  return kEpsGeom * std::max(1.0, std::fabs(characteristic_length));
}

}  // namespace ballcells
