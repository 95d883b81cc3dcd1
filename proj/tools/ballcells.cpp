// Command-line front end: cell metrics and certification, tiling window
// reports and series, and the minimum-area tangent-polytope search.
//
// Exit status: 0 when every certificate in the run passes, 2 when any fails
// (including a recorded precondition failure), 1 on input or geometry errors.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ballcells/certificates.hpp"
#include "ballcells/clip.hpp"
#include "ballcells/errors.hpp"
#include "ballcells/io.hpp"
#include "ballcells/metrics.hpp"
#include "ballcells/optimizer.hpp"
#include "ballcells/packing.hpp"
#include "ballcells/window.hpp"

namespace {

using namespace ballcells;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::fputs(text.c_str(), stdout);
  else
    write_text_file(out_path, text);
}

bool all_pass(const std::vector<CertificateReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

double default_tol() {
  if (const char* env = std::getenv("BALLCELLS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
    std::fprintf(stderr, "warning: ignoring unparsable BALLCELLS_TOL=%s\n", env);
  }
  return kCertTol;
}

int run_cell_metrics(const std::string& in, const std::string& out,
                     const std::string& off_out) {
  std::string warnings;
  ConvexPolyhedron p = parse_polyhedron(in, &warnings);
  if (!warnings.empty()) std::fputs(warnings.c_str(), stderr);
  emit(out, metrics_to_json(metrics(p)) + "\n");
  if (!off_out.empty()) write_off(off_out, p);
  return 0;
}

int run_cell_certify(const std::string& in, const std::string& out, double tol) {
  std::string warnings;
  ConvexPolyhedron p = parse_polyhedron(in, &warnings);
  if (!warnings.empty()) std::fputs(warnings.c_str(), stderr);
  const std::vector<CertificateReport> reports = certify_cell(metrics(p), tol);
  emit(out, reports_to_json_lines(reports));
  return all_pass(reports) ? 0 : 2;
}

int run_tiling_report(const std::string& preset, double L, const std::string& out,
                      const std::string& off_dir, double tol) {
  const PeriodicPacking p = preset_packing(preset);
  const WindowReport r = window_report(p, L);
  std::vector<CertificateReport> certs{density_bound_check(r, tol)};
  certs.push_back(make_report("window-corollary", r.f_L, r.g_L, tol));
  std::string text = "{\n  \"window\": " + window_report_to_json(r) +
                     ",\n  \"certificates\": [\n";
  for (std::size_t i = 0; i < certs.size(); ++i)
    text += "    " + report_to_json(certs[i]) +
            (i + 1 < certs.size() ? ",\n" : "\n");
  text += "  ]\n}\n";
  emit(out, text);

  if (!off_dir.empty()) {
    std::filesystem::create_directories(off_dir);
    int k = 0;
    for (const ConvexPolyhedron& cell : window_cells(p, L)) {
      char name[64];
      std::snprintf(name, sizeof name, "cell_%05d.off", k++);
      write_off((std::filesystem::path(off_dir) / name).string(), cell);
    }
  }
  return all_pass(certs) ? 0 : 2;
}

int run_tiling_series(const std::string& preset, std::vector<double> Ls,
                      const std::string& out, double tol) {
  const PeriodicPacking p = preset_packing(preset);
  const std::vector<WindowReport> reports = average_sarea_series(p, Ls);
  const SeriesSummary summary = series_summary(reports);
  std::vector<CertificateReport> certs;
  certs.push_back(
      make_report("series-lower-bound", summary.min_average, 24.0 / std::sqrt(3.0), tol));
  for (const auto& r : reports) certs.push_back(density_bound_check(r, tol));
  emit(out, series_to_json(reports, summary, certs));
  return all_pass(certs) ? 0 : 2;
}

int run_optimize(int faces, int restarts, std::uint64_t seed,
                 const std::string& out, const std::string& off_out, double tol) {
  const OptimizationResult res = minimize_area(faces, restarts, seed);
  const ConvexPolyhedron best = tangent_polytope(res.best_params);
  const std::vector<CertificateReport> certs = certify_cell(metrics(best), tol);
  emit(out, optimization_to_json(res, certs));
  if (!off_out.empty()) write_off(off_out, best);
  return all_pass(certs) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-cell geometry toolkit: metrics, certificates, Voronoi "
               "tiling windows, and tangent-polytope area search"};
  app.require_subcommand(1);

  double tol = default_tol();
  app.add_option("--tol", tol, "Relative certificate tolerance")
      ->capture_default_str();

  std::string in, out, off_out, preset = "FCC", off_dir;
  double L = 10.0;
  std::vector<double> Ls;
  int faces = 12, restarts = 16;
  std::uint64_t seed = 1;

  auto* cm = app.add_subcommand("cell-metrics", "Metrics of one polyhedron");
  cm->add_option("--in", in, "Polyhedron file (JSON or OFF)")->required();
  cm->add_option("--out", out, "Report path (default stdout)");
  cm->add_option("--off", off_out, "Also write the cell as an OFF mesh");

  auto* cc = app.add_subcommand("cell-certify", "Per-cell inequality certificates");
  cc->add_option("--in", in, "Polyhedron file (JSON or OFF)")->required();
  cc->add_option("--out", out, "JSON-lines report path (default stdout)");

  auto* tr = app.add_subcommand("tiling-report", "One cube-window report");
  tr->add_option("--preset", preset, "Packing preset: SC, FCC, BCC, HCP")
      ->required();
  tr->add_option("--L", L, "Window edge length (>= 4)")->required();
  tr->add_option("--out", out, "Report path (default stdout)");
  tr->add_option("--export-off", off_dir, "Directory for clipped-cell OFF meshes");

  auto* ts = app.add_subcommand("tiling-series", "Window reports over a series of L");
  ts->add_option("--preset", preset, "Packing preset: SC, FCC, BCC, HCP")
      ->required();
  ts->add_option("--Ls", Ls, "Strictly increasing window edges")
      ->required()
      ->delimiter(',');
  ts->add_option("--out", out, "Report path (default stdout)");

  auto* op = app.add_subcommand("optimize", "Minimum-area tangent polytope search");
  op->add_option("--faces", faces, "Number of faces (>= 4)")->required();
  op->add_option("--restarts", restarts, "Restart count")->capture_default_str();
  op->add_option("--seed", seed, "Random seed")->capture_default_str();
  op->add_option("--out", out, "Report path (default stdout)");
  op->add_option("--off", off_out, "Write the best polytope as an OFF mesh");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // normalize CLI11's per-error exit codes: 0 for --help, 1 for misuse
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cm->parsed()) return run_cell_metrics(in, out, off_out);
    if (cc->parsed()) return run_cell_certify(in, out, tol);
    if (tr->parsed()) return run_tiling_report(preset, L, out, off_dir, tol);
    if (ts->parsed()) return run_tiling_series(preset, Ls, out, tol);
    if (op->parsed()) return run_optimize(faces, restarts, seed, out, off_out, tol);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 1;
  }
  return 0;
}
