#pragma once

#include <span>
#include <string>
#include <vector>

#include "ballcells/certificates.hpp"
#include "ballcells/packing.hpp"

namespace ballcells {

/// Everything measured on one cube window C_L (axis-aligned, centered at the
/// origin, edge length L) of a periodic Voronoi tiling.
///
/// Cell bookkeeping. "Enumerated" cells are those whose interior meets C_L.
///  - n_contained counts centers whose unit ball lies in C_L (closed
///    condition: every center coordinate in [-L/2 + 1, L/2 - 1]).
///  - n_boundary counts enumerated cells that touch bd C_L.
///  - f_L = sum over enumerated cells of the off-window boundary area of the
///    clipped cell, plus, for boundary cells, the clipping deficit
///    delta_i = sarea(P_i) - off-window area (so f_L equals the sum of full
///    cell surface areas over enumerated cells).
///  - g_L = (1/sqrt 3) * sum over enumerated cells of the lengths of clipped-
///    cell edges that carry at least one off-window face.
///  - density = (4 pi / 3) * n_contained / sum of clipped cell volumes over
///    contained balls (the covered fraction of the region those cells span).
struct WindowReport {
  std::string packing;
  double L{0.0};
  long n_contained{0};
  long n_boundary{0};
  double sum_clipped_sarea{0.0};  ///< sum of sarea(P_i ∩ C_L), contained balls
  double average_sarea{0.0};      ///< sum_clipped_sarea / n_contained
  double f_L{0.0};
  double g_L{0.0};
  double delta_upper{0.0};      ///< 2 * sum of full sarea over boundary cells
  double delta_bar_upper{0.0};  ///< sum of full edge length over boundary cells
  double density{0.0};
};

/// Measure one window. Requires L >= 4 so every preset fits at least one
/// ball. Propagates kernel errors.
WindowReport window_report(const PeriodicPacking& p, double L);

/// The clipped cells P_i ∩ C_L of every enumerated cell, in the same
/// deterministic order the report uses (mesh export, visual checks).
std::vector<ConvexPolyhedron> window_cells(const PeriodicPacking& p, double L);

/// One report per L. Ls must be strictly increasing (PreconditionViolatedError
/// otherwise).
std::vector<WindowReport> average_sarea_series(const PeriodicPacking& p,
                                               std::span<const double> Ls);

/// Series summary: the minimum average (finite proxy for the limit inferior)
/// and the final window's average.
struct SeriesSummary {
  double min_average{0.0};
  double final_average{0.0};
};
SeriesSummary series_summary(std::span<const WindowReport> reports);

/// Certify density <= 4 pi / average_sarea for the window.
CertificateReport density_bound_check(const WindowReport& r,
                                      double rel_tol = kCertTol);

}  // namespace ballcells
