#include "ballcells/window.hpp"

#include <cmath>
#include <numbers>

#include "ballcells/clip.hpp"
#include "ballcells/errors.hpp"
#include "ballcells/metrics.hpp"
#include "ballcells/tolerances.hpp"

namespace ballcells {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct ClassData {
  ConvexPolyhedron cell;  // centered at the origin
  double sarea{0.0};
  double vol{0.0};
  double total_edge{0.0};
};

// Largest |coordinate| the translated cell reaches (max-norm circumradius
// about the translated position).
double cell_reach(const ConvexPolyhedron& cell, const Vec3& o) {
  double r = 0.0;
  for (const auto& v : cell.vertices()) r = std::fmax(r, max_abs_coord(o + v));
  return r;
}

}  // namespace

WindowReport window_report(const PeriodicPacking& p, double L) {
  if (!(L >= 4.0))
    throw PreconditionViolatedError("window edge must be at least 4, got " +
                                    std::to_string(L));
  const double half = L / 2.0;
  const double eps_b = eps_geom(half);

  std::vector<ClassData> classes;
  double max_circum = 0.0;
  for (std::size_t m = 0; m < p.motif.size(); ++m) {
    ClassData cd;
    cd.cell = voronoi_cell(p, static_cast<int>(m));
    cd.sarea = surface_area(cd.cell);
    cd.vol = volume(cd.cell);
    for (const auto& e : cd.cell.edges()) cd.total_edge += cd.cell.edge_length(e);
    max_circum = std::fmax(max_circum, cd.cell.coord_scale());
    classes.push_back(std::move(cd));
  }

  WindowReport r;
  r.packing = p.name;
  r.L = L;

  double sum_clipped_vol = 0.0;
  double off_window_area = 0.0;  // first summand of f_L
  double delta_sum = 0.0;        // boundary-cell deficits, second summand
  double interior_edge_total = 0.0;
  double bdry_sarea = 0.0, bdry_edge = 0.0;

  for (const auto& c : centers_in_box(p, half + max_circum, 1e-9)) {
    const ClassData& cd = classes[c.motif_index];
    const Vec3& o = c.position;
    const bool contained = std::fabs(o.x) <= half - 1.0 + 1e-9 &&
                           std::fabs(o.y) <= half - 1.0 + 1e-9 &&
                           std::fabs(o.z) <= half - 1.0 + 1e-9;

    if (cell_reach(cd.cell, o) < half - eps_b) {
      // Entirely inside the open window: nothing is clipped away.
      off_window_area += cd.sarea;
      interior_edge_total += cd.total_edge;
      if (contained) {
        ++r.n_contained;
        r.sum_clipped_sarea += cd.sarea;
        sum_clipped_vol += cd.vol;
      }
      continue;
    }

    CubeClipResult cc;
    try {
      cc = clip_to_cube(translated(cd.cell, o), L);
    } catch (const EmptyIntersectionError&) {
      continue;  // interior misses the window entirely
    }

    ++r.n_boundary;
    bdry_sarea += cd.sarea;
    bdry_edge += cd.total_edge;
    off_window_area += cc.interior_boundary_area;
    delta_sum += cd.sarea - cc.interior_boundary_area;
    for (const auto& e : cc.interior_edges) interior_edge_total += e.length;
    if (contained) {
      ++r.n_contained;
      r.sum_clipped_sarea += surface_area(cc.poly);
      sum_clipped_vol += volume(cc.poly);
    }
  }

  if (r.n_contained == 0)
    throw PreconditionViolatedError("window contains no ball; enlarge L");

  r.average_sarea = r.sum_clipped_sarea / static_cast<double>(r.n_contained);
  r.f_L = off_window_area + delta_sum;
  r.g_L = interior_edge_total / kSqrt3;
  r.delta_upper = 2.0 * bdry_sarea;
  r.delta_bar_upper = bdry_edge;
  r.density = (4.0 * std::numbers::pi / 3.0) *
              static_cast<double>(r.n_contained) / sum_clipped_vol;
  return r;
}

std::vector<ConvexPolyhedron> window_cells(const PeriodicPacking& p, double L) {
  if (!(L >= 4.0))
    throw PreconditionViolatedError("window edge must be at least 4, got " +
                                    std::to_string(L));
  const double half = L / 2.0;
  const double eps_b = eps_geom(half);

  std::vector<ConvexPolyhedron> classes;
  double max_circum = 0.0;
  for (std::size_t m = 0; m < p.motif.size(); ++m) {
    classes.push_back(voronoi_cell(p, static_cast<int>(m)));
    max_circum = std::fmax(max_circum, classes.back().coord_scale());
  }

  std::vector<ConvexPolyhedron> out;
  for (const auto& c : centers_in_box(p, half + max_circum, 1e-9)) {
    ConvexPolyhedron cell = translated(classes[c.motif_index], c.position);
    if (cell_reach(classes[c.motif_index], c.position) < half - eps_b) {
      out.push_back(std::move(cell));
      continue;
    }
    try {
      out.push_back(clip_to_cube(cell, L).poly);
    } catch (const EmptyIntersectionError&) {
    }
  }
  return out;
}

std::vector<WindowReport> average_sarea_series(const PeriodicPacking& p,
                                               std::span<const double> Ls) {
  for (std::size_t i = 1; i < Ls.size(); ++i)
    if (!(Ls[i] > Ls[i - 1]))
      throw PreconditionViolatedError("window series must be strictly increasing");
  std::vector<WindowReport> out;
  out.reserve(Ls.size());
  for (double L : Ls) out.push_back(window_report(p, L));
  return out;
}

SeriesSummary series_summary(std::span<const WindowReport> reports) {
  if (reports.empty())
    throw PreconditionViolatedError("empty window series");
  SeriesSummary s;
  s.min_average = reports[0].average_sarea;
  for (const auto& r : reports) s.min_average = std::fmin(s.min_average, r.average_sarea);
  s.final_average = reports.back().average_sarea;
  return s;
}

CertificateReport density_bound_check(const WindowReport& r, double rel_tol) {
  return make_report("density-chain", 4.0 * std::numbers::pi / r.average_sarea,
                     r.density, rel_tol);
}

}  // namespace ballcells
