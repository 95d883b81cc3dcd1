#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ballcells/certificates.hpp"
#include "ballcells/errors.hpp"
#include "ballcells/metrics.hpp"
#include "ballcells/packing.hpp"
#include "ballcells/window.hpp"
#include "doctest.h"
#include "support/shapes.hpp"

using namespace ballcells;
namespace ts = testsupport;

namespace {
const char* kPresets[] = {"SC", "FCC", "BCC", "HCP"};
}

TEST_SUITE("tilings") {

TEST_CASE("presets are unit-ball packings with minimum distance exactly 2") {
  for (const char* name : kPresets) {
    const PeriodicPacking p = preset_packing(name);
    CHECK(p.name == name);
    CHECK(min_center_distance(p) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.covering_radius > 1.0);
    CHECK(effective_covering_radius(p) == doctest::Approx(p.covering_radius));
  }
  CHECK(preset_packing("fcc").name == "FCC");  // case-insensitive lookup
  CHECK_THROWS_AS(preset_packing("XYZ"), UnknownPresetError);
}

TEST_CASE("known covering radii") {
  CHECK(preset_packing("SC").covering_radius == doctest::Approx(ts::kSqrt3).epsilon(1e-12));
  CHECK(preset_packing("FCC").covering_radius == doctest::Approx(ts::kSqrt2).epsilon(1e-12));
  CHECK(preset_packing("BCC").covering_radius ==
        doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
  CHECK(preset_packing("HCP").covering_radius == doctest::Approx(ts::kSqrt2).epsilon(1e-12));
}

TEST_CASE("SC cell is the side-2 cube") {
  const ConvexPolyhedron cell = voronoi_cell(preset_packing("SC"), 0);
  const CellMetrics m = metrics(cell);
  CHECK(cell.faces().size() == 6);
  CHECK(m.sarea == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(m.vol == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(m.inradius == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("FCC cell is the tangent rhombic dodecahedron") {
  const PeriodicPacking p = preset_packing("FCC");
  for (int motif = 0; motif < 4; ++motif) {
    const ConvexPolyhedron cell = voronoi_cell(p, motif);
    const CellMetrics m = metrics(cell);
    CHECK(cell.faces().size() == 12);
    CHECK(cell.edges().size() == 24);
    CHECK(cell.vertices().size() == 14);
    CHECK(m.sarea == doctest::Approx(ts::kRhombicDodecArea).epsilon(1e-12));
    CHECK(m.vol == doctest::Approx(ts::kRhombicDodecVol).epsilon(1e-12));
    CHECK(m.inradius == doctest::Approx(1.0).epsilon(1e-9));
    for (double b : m.dihedral_angles)
      CHECK(b == doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("BCC cell is the tangent truncated octahedron") {
  const ConvexPolyhedron cell = voronoi_cell(preset_packing("BCC"), 0);
  const CellMetrics m = metrics(cell);
  CHECK(cell.faces().size() == 14);
  CHECK(cell.edges().size() == 36);
  CHECK(cell.vertices().size() == 24);
  CHECK(m.sarea == doctest::Approx(ts::kTruncOctArea).epsilon(1e-12));
  CHECK(m.vol == doctest::Approx(ts::kTruncOctVol).epsilon(1e-12));
  CHECK(m.ecurv == doctest::Approx(ts::kTruncOctEcurv).epsilon(1e-12));
  CHECK(m.inradius == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("HCP cells are trapezo-rhombic dodecahedra") {
  // Same face/edge/vertex counts, area, volume, and total edge length as the
  // rhombic dodecahedron; only the diameter differs.
  const PeriodicPacking p = preset_packing("HCP");
  for (int motif = 0; motif < 2; ++motif) {
    const ConvexPolyhedron cell = voronoi_cell(p, motif);
    const CellMetrics m = metrics(cell);
    CHECK(cell.faces().size() == 12);
    CHECK(cell.edges().size() == 24);
    CHECK(cell.vertices().size() == 14);
    CHECK(m.sarea == doctest::Approx(ts::kRhombicDodecArea).epsilon(1e-12));
    CHECK(m.vol == doctest::Approx(ts::kRhombicDodecVol).epsilon(1e-12));
    CHECK(m.total_edge_length == doctest::Approx(ts::kRhombicDodecEdge).epsilon(1e-12));
    CHECK(m.inradius == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.diameter < 2.0 * ts::kSqrt2);  // flatter than the FCC cell
  }
}

TEST_CASE("motif cells fill the fundamental domain") {
  for (const char* name : kPresets) {
    const PeriodicPacking p = preset_packing(name);
    double sum = 0.0;
    for (std::size_t motif = 0; motif < p.motif.size(); ++motif)
      sum += volume(voronoi_cell(p, static_cast<int>(motif)));
    CHECK(sum == doctest::Approx(std::fabs(p.basis.det())).epsilon(1e-9));
  }
}

TEST_CASE("cutoff validation: too-small cutoffs are rejected") {
  // no neighbors at all -> unbounded
  CHECK_THROWS_AS(voronoi_cell(preset_packing("FCC"), 0, 0.9), CutoffTooSmallError);
  // bounded but wrong: the first BCC shell alone gives an octahedron, and the
  // doubling re-check sees the second shell truncate it
  CHECK_THROWS_AS(voronoi_cell(preset_packing("BCC"), 0, 1.05), CutoffTooSmallError);
  // small but sufficient cutoff is fine
  const ConvexPolyhedron cube = voronoi_cell(preset_packing("SC"), 0, 1.01);
  CHECK(cube.faces().size() == 6);
  CHECK(volume(cube) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("centers_near returns exactly the closed-ball neighbors") {
  const PeriodicPacking fcc = preset_packing("FCC");
  const auto near = centers_near(fcc, {0, 0, 0}, 2.1);
  CHECK(near.size() == 13);  // the center plus its 12 kissing neighbors
  int at_origin = 0;
  for (const auto& c : near) {
    const double d = norm(c.position);
    if (d < 1e-12)
      ++at_origin;
    else
      CHECK(d == doctest::Approx(2.0).epsilon(1e-12));
  }
  CHECK(at_origin == 1);
}

TEST_CASE("window report for SC at L = 10: every count and total in closed form") {
  const WindowReport r = window_report(preset_packing("SC"), 10.0);
  CHECK(r.packing == "SC");
  CHECK(r.n_contained == 125);
  CHECK(r.n_boundary == 98);
  CHECK(r.average_sarea == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(r.sum_clipped_sarea == doctest::Approx(3000.0).epsilon(1e-12));
  CHECK(r.f_L == doctest::Approx(3000.0).epsilon(1e-12));
  CHECK(r.g_L == doctest::Approx(2880.0 / ts::kSqrt3).epsilon(1e-12));
  CHECK(r.delta_upper == doctest::Approx(4704.0).epsilon(1e-12));
  CHECK(r.delta_bar_upper == doctest::Approx(2352.0).epsilon(1e-12));
  CHECK(r.density == doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-12));
}

TEST_CASE("window reports at L = 10: contained counts and exact densities") {
  struct Row {
    const char* name;
    long nc;
    double density;
    double avg;
  };
  const Row rows[] = {
      {"SC", 125, std::numbers::pi / 6.0, 24.0},
      {"FCC", 63, ts::kFccDensity, ts::kRhombicDodecArea},
      {"BCC", 91, std::numbers::pi * ts::kSqrt3 / 8.0, ts::kTruncOctArea},
      {"HCP", 105, ts::kFccDensity, ts::kRhombicDodecArea},
  };
  for (const Row& row : rows) {
    const WindowReport r = window_report(preset_packing(row.name), 10.0);
    CHECK(r.n_contained == row.nc);
    CHECK(r.density == doctest::Approx(row.density).epsilon(1e-12));
    CHECK(r.average_sarea == doctest::Approx(row.avg).epsilon(1e-12));
  }
}

TEST_CASE("window accounting inequalities hold for every preset") {
  for (const char* name : kPresets) {
    for (double L : {9.0, 10.0}) {
      const WindowReport r = window_report(preset_packing(name), L);
      CHECK(r.f_L >= r.g_L - 1e-9);                        // the area functional wins
      const double delta = r.f_L - r.sum_clipped_sarea;    // boundary surplus
      CHECK(delta >= -1e-9);
      CHECK(delta <= r.delta_upper + 1e-9);
      CHECK(r.average_sarea >= ts::kAreaBound - 1e-7);
      CHECK(r.n_contained >= 1);
      CHECK(r.n_boundary >= 1);
    }
  }
}

TEST_CASE("lower bound on the edge functional") {
  for (const char* name : kPresets) {
    const WindowReport r = window_report(preset_packing(name), 10.0);
    const double lower = -r.delta_bar_upper + r.n_contained * ts::kAreaBound;
    CHECK(r.g_L >= lower - 1e-9);
  }
}

TEST_CASE("window cells partition the window volume") {
  for (const char* name : kPresets) {
    const PeriodicPacking p = preset_packing(name);
    const std::vector<ConvexPolyhedron> cells = window_cells(p, 10.0);
    CHECK(cells.size() >= 125);
    double sum = 0.0;
    for (const ConvexPolyhedron& c : cells) sum += volume(c);
    CHECK(sum == doctest::Approx(1000.0).epsilon(1e-9));
  }
}

TEST_CASE("boundary fraction shrinks as the window grows") {
  // Compared across a 4x side scaling: boundary cells grow like L^2 while
  // contained cells grow like L^3. (Adjacent sizes can move the other way
  // when the window plane lands exactly on a layer of cell faces.)
  for (const char* name : kPresets) {
    const PeriodicPacking p = preset_packing(name);
    const WindowReport small = window_report(p, 10.0);
    const WindowReport large = window_report(p, 40.0);
    const double ratio_small =
        double(small.n_boundary) / double(small.n_contained);
    const double ratio_large =
        double(large.n_boundary) / double(large.n_contained);
    CHECK(ratio_large < ratio_small);
    CHECK(large.n_contained > small.n_contained);
  }
}

TEST_CASE("FCC window at L = 20: frozen counts") {
  const WindowReport r = window_report(preset_packing("FCC"), 20.0);
  CHECK(r.n_contained == 1099);
  CHECK(r.n_boundary == 1266);
  CHECK(r.density == doctest::Approx(ts::kFccDensity).epsilon(1e-12));
}

TEST_CASE("density never exceeds the bound from the average area") {
  for (const char* name : kPresets) {
    const WindowReport r = window_report(preset_packing(name), 10.0);
    const CertificateReport c = density_bound_check(r);
    CHECK(c.name == "density-chain");
    CHECK(c.pass);
    CHECK(c.lhs == doctest::Approx(4.0 * std::numbers::pi / r.average_sarea).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(r.density).epsilon(1e-12));
  }
  // SC attains the chain with equality: 4 pi / 24 = pi / 6
  const CertificateReport sc = density_bound_check(window_report(preset_packing("SC"), 10.0));
  CHECK(std::fabs(sc.slack) < 1e-12);
}

TEST_CASE("series runs and summarizes; bad inputs are rejected") {
  const PeriodicPacking p = preset_packing("SC");
  const std::vector<double> Ls = {10.0, 14.0, 20.0};
  const std::vector<WindowReport> reports = average_sarea_series(p, Ls);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].L == 10.0);
  CHECK(reports[2].L == 20.0);
  const SeriesSummary s = series_summary(reports);
  CHECK(s.min_average == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(s.final_average == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(s.min_average >= ts::kAreaBound);

  const std::vector<double> bad = {10.0, 10.0};
  CHECK_THROWS_AS(average_sarea_series(p, bad), PreconditionViolatedError);
  CHECK_THROWS_AS(window_report(p, 3.0), PreconditionViolatedError);
}

TEST_CASE("interior segments of the FCC complex meet three at an edge") {
  const PeriodicPacking fcc = preset_packing("FCC");
  std::vector<ConvexPolyhedron> cells;
  for (const PackedCenter& c : centers_near(fcc, {0, 0, 0}, 2.1))
    cells.push_back(translated(voronoi_cell(fcc, c.motif_index), c.position));
  REQUIRE(cells.size() == 13);
  const std::vector<MeetingSegment> segs = collect_interior_segments(cells);
  CHECK(segs.size() == 32);
  for (const MeetingSegment& s : segs) {
    CHECK(s.k == 3);
    for (double b : s.betas)
      CHECK(b == doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-9));
    CertificateReport sharper;
    const CertificateReport r = cot_sum_bound(s, &sharper);
    CHECK(r.pass);
    // the lattice meets the k/sqrt(3) bound with equality
    CHECK(std::fabs(r.slack) < 1e-7);
    CHECK(sharper.pass);
  }
}

}  // TEST_SUITE
