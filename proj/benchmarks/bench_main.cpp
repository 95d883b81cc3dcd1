#include <benchmark/benchmark.h>

#include <vector>

#include "ballcells/clip.hpp"
#include "ballcells/halfspace.hpp"
#include "ballcells/metrics.hpp"
#include "ballcells/optimizer.hpp"
#include "ballcells/packing.hpp"
#include "ballcells/polyhedron.hpp"
#include "ballcells/window.hpp"

using namespace ballcells;

namespace {

std::vector<HalfSpace> rhombic_halfspaces() {
  std::vector<HalfSpace> hs;
  const double s = 1.0 / std::sqrt(2.0);
  for (int sa : {-1, 1}) {
    for (int sb : {-1, 1}) {
      hs.push_back({{sa * s, sb * s, 0.0}, 1.0});
      hs.push_back({{0.0, sa * s, sb * s}, 1.0});
      hs.push_back({{sb * s, 0.0, sa * s}, 1.0});
    }
  }
  return hs;
}

void BM_IntersectHalfspaces(benchmark::State& state) {
  const std::vector<HalfSpace> hs = rhombic_halfspaces();
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect_halfspaces(hs, 10.0));
  }
}
BENCHMARK(BM_IntersectHalfspaces);

void BM_Metrics(benchmark::State& state) {
  const ConvexPolyhedron p = intersect_halfspaces(rhombic_halfspaces(), 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics(p));
  }
}
BENCHMARK(BM_Metrics);

void BM_VoronoiCell(benchmark::State& state) {
  const PeriodicPacking p = preset_packing("FCC");
  for (auto _ : state) {
    benchmark::DoNotOptimize(voronoi_cell(p, 0));
  }
}
BENCHMARK(BM_VoronoiCell);

void BM_ClipToCube(benchmark::State& state) {
  const ConvexPolyhedron cell =
      translated(intersect_halfspaces(rhombic_halfspaces(), 10.0), {0.9, 0.4, 0.2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(clip_to_cube(cell, 2.5));
  }
}
BENCHMARK(BM_ClipToCube);

void BM_WindowReport(benchmark::State& state) {
  const PeriodicPacking p = preset_packing("FCC");
  const double L = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_report(p, L));
  }
}
BENCHMARK(BM_WindowReport)->Arg(10)->Arg(20);

void BM_AreaObjective(benchmark::State& state) {
  TangentPolytopeParams params;
  for (const HalfSpace& h : rhombic_halfspaces()) params.normals.push_back(h.normal);
  for (auto _ : state) {
    benchmark::DoNotOptimize(area_objective(params));
  }
}
BENCHMARK(BM_AreaObjective);

}  // namespace

BENCHMARK_MAIN();
