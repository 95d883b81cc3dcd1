#include "ballcells/chebyshev.hpp"

#include <cmath>
#include <vector>

#include "ballcells/errors.hpp"

namespace ballcells {

namespace {

constexpr double kPivotTol = 1e-12;
constexpr double kCostTol = 1e-10;

}  // namespace

InscribedBall chebyshev_center(std::span<const HalfSpace> hs, const Vec3& interior_hint) {
  const int m = static_cast<int>(hs.size());
  if (m < 4) throw GeometryError("Chebyshev center needs at least four half-spaces");

  // Shift coordinates so the hint is the origin; then every rhs is positive
  // and the all-slack basis is feasible.
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) {
    rhs[i] = hs[i].offset - dot(hs[i].normal, interior_hint);
    if (rhs[i] < 0.0)
      throw GeometryError("Chebyshev hint is not inside the polytope");
  }

  // Structural variables: u+ (3), u- (3), r. Constraint row i:
  //   n_i.(u+ - u-) + r + s_i = rhs_i.
  constexpr int kN = 7;
  const int cols = kN + m;
  std::vector<std::vector<double>> T(m, std::vector<double>(cols, 0.0));
  for (int i = 0; i < m; ++i) {
    const Vec3& n = hs[i].normal;
    T[i][0] = n.x;  T[i][1] = n.y;  T[i][2] = n.z;
    T[i][3] = -n.x; T[i][4] = -n.y; T[i][5] = -n.z;
    T[i][6] = 1.0;
    T[i][kN + i] = 1.0;
  }
  std::vector<double> cost(cols, 0.0);
  cost[6] = 1.0;  // maximize r
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = kN + i;

  const int max_iters = 200 * (m + kN);
  for (int iter = 0; iter <= max_iters; ++iter) {
    if (iter == max_iters)
      throw GeometryError("Chebyshev simplex failed to converge");

    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (cost[j] > kCostTol) { enter = j; break; }  // Bland: first improving column
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] > kPivotTol) {
        const double ratio = rhs[i] / T[i][enter];
        if (leave < 0 || ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0)
      throw GeometryError("Chebyshev LP is unbounded (input not a polytope)");

    // pivot on (leave, enter)
    const double piv = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
    rhs[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = T[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const double fc = cost[enter];
    for (int j = 0; j < cols; ++j) cost[j] -= fc * T[leave][j];
    basis[leave] = enter;
  }

  double x[kN] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < m; ++i) {
    if (basis[i] < kN) x[basis[i]] = rhs[i];
  }
  InscribedBall ball;
  ball.center = interior_hint + Vec3{x[0] - x[3], x[1] - x[4], x[2] - x[5]};
  ball.radius = x[6];
  return ball;
}

}  // namespace ballcells
