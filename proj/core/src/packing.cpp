#include "ballcells/packing.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "ballcells/errors.hpp"
#include "ballcells/tolerances.hpp"

namespace ballcells {

namespace {

void require_regular(const PeriodicPacking& p) {
  const double scale = std::fmax(
      1.0, std::fmax(norm(p.basis.col(0)),
                     std::fmax(norm(p.basis.col(1)), norm(p.basis.col(2)))));
  if (std::fabs(p.basis.det()) < 1e-12 * scale * scale * scale)
    throw DegenerateInputError("packing basis is singular");
  if (p.motif.empty()) throw DegenerateInputError("packing has an empty motif");
}

double max_motif_norm(const PeriodicPacking& p) {
  double r = 0.0;
  for (const auto& m : p.motif) r = std::fmax(r, norm(m));
  return r;
}

}  // namespace

PeriodicPacking preset_packing(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });

  PeriodicPacking p;
  p.name = key;
  const double s2 = std::sqrt(2.0);
  if (key == "SC") {
    p.basis = Mat3::from_columns({2, 0, 0}, {0, 2, 0}, {0, 0, 2});
    p.motif = {{0, 0, 0}};
    p.covering_radius = std::sqrt(3.0);
  } else if (key == "FCC") {
    const double a = 2.0 * s2;
    p.basis = Mat3::from_columns({a, 0, 0}, {0, a, 0}, {0, 0, a});
    p.motif = {{0, 0, 0}, {0, s2, s2}, {s2, 0, s2}, {s2, s2, 0}};
    p.covering_radius = s2;
  } else if (key == "BCC") {
    const double a = 4.0 / std::sqrt(3.0);
    p.basis = Mat3::from_columns({a, 0, 0}, {0, a, 0}, {0, 0, a});
    p.motif = {{0, 0, 0}, {a / 2.0, a / 2.0, a / 2.0}};
    p.covering_radius = std::sqrt(5.0 / 3.0);
  } else if (key == "HCP") {
    const double c = 2.0 * std::sqrt(8.0 / 3.0);
    p.basis = Mat3::from_columns({2, 0, 0}, {1, std::sqrt(3.0), 0}, {0, 0, c});
    p.motif = {{0, 0, 0}, {1.0, 1.0 / std::sqrt(3.0), c / 2.0}};
    p.covering_radius = s2;
  } else {
    throw UnknownPresetError("unknown packing preset \"" + std::string(name) +
                             "\" (expected SC, FCC, BCC, or HCP)");
  }

  const double dmin = min_center_distance(p);
  if (std::fabs(dmin - 2.0) > 1e-12)
    throw GeometryError("preset scaling is off: min center distance " +
                        std::to_string(dmin));
  return p;
}

double min_center_distance(const PeriodicPacking& p) {
  require_regular(p);
  double best = std::numeric_limits<double>::infinity();
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (int k = -3; k <= 3; ++k) {
        const Vec3 t = p.basis * Vec3{static_cast<double>(i),
                                      static_cast<double>(j),
                                      static_cast<double>(k)};
        for (std::size_t a = 0; a < p.motif.size(); ++a)
          for (std::size_t b = 0; b < p.motif.size(); ++b) {
            if (i == 0 && j == 0 && k == 0 && a == b) continue;
            best = std::fmin(best, dist(p.motif[a] + t, p.motif[b]));
          }
      }
  return best;
}

double effective_covering_radius(const PeriodicPacking& p) {
  if (p.covering_radius > 0.0) return p.covering_radius;
  return 0.5 * (norm(p.basis.col(0)) + norm(p.basis.col(1)) +
                norm(p.basis.col(2)));
}

namespace {

// Shared enumeration core: all centers whose distance to `x` is at most R.
std::vector<PackedCenter> enumerate_ball(const PeriodicPacking& p, const Vec3& x,
                                         double R) {
  require_regular(p);
  const Mat3 inv = p.basis.inverse();
  std::vector<PackedCenter> out;
  for (std::size_t m = 0; m < p.motif.size(); ++m) {
    const Vec3 center_n = inv * (x - p.motif[m]);
    int lo[3], hi[3];
    for (int i = 0; i < 3; ++i) {
      const double spread = norm(inv.row(i)) * R + 1.0;
      lo[i] = static_cast<int>(std::floor(center_n[i] - spread));
      hi[i] = static_cast<int>(std::ceil(center_n[i] + spread));
    }
    for (int i = lo[0]; i <= hi[0]; ++i)
      for (int j = lo[1]; j <= hi[1]; ++j)
        for (int k = lo[2]; k <= hi[2]; ++k) {
          const Vec3 c = p.basis * Vec3{static_cast<double>(i),
                                        static_cast<double>(j),
                                        static_cast<double>(k)} +
                         p.motif[m];
          if (dist(c, x) <= R + 1e-12)
            out.push_back({c, static_cast<int>(m)});
        }
  }
  return out;
}

}  // namespace

std::vector<PackedCenter> centers_near(const PeriodicPacking& p, const Vec3& x,
                                       double R) {
  return enumerate_ball(p, x, R);
}

std::vector<PackedCenter> centers_in_box(const PeriodicPacking& p,
                                         double half_extent, double slack) {
  const double H = half_extent + slack;
  // Enumerate a Euclidean ball covering the box, then filter on the max-norm.
  std::vector<PackedCenter> ball =
      enumerate_ball(p, {0, 0, 0}, std::sqrt(3.0) * H + 1e-9);
  std::vector<PackedCenter> out;
  for (const auto& c : ball)
    if (max_abs_coord(c.position) <= H + 1e-12) out.push_back(c);
  return out;
}

namespace {

ConvexPolyhedron cell_at_cutoff(const PeriodicPacking& p, const Vec3& o,
                                double cutoff) {
  std::vector<HalfSpace> hs;
  for (const auto& c : centers_near(p, o, 2.0 * cutoff)) {
    const Vec3 u = c.position - o;
    const double len2 = norm2(u);
    if (len2 < 1e-24) continue;  // the center itself
    hs.push_back(HalfSpace::normalize(u, len2 / 2.0));
  }
  if (hs.size() < 4)
    throw CutoffTooSmallError("cutoff " + std::to_string(cutoff) +
                              " captures too few neighbors");
  ConvexPolyhedron cell = intersect_halfspaces(hs, 4.0 * cutoff);
  if (!cell.intrinsically_bounded())
    throw CutoffTooSmallError("Voronoi cell unbounded at cutoff " +
                              std::to_string(cutoff));
  return cell;
}

bool same_cell(const ConvexPolyhedron& a, const ConvexPolyhedron& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  if (a.faces().size() != b.faces().size()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  const double tol = 64.0 * eps_geom(std::fmax(a.coord_scale(), b.coord_scale()));
  for (const auto& v : a.vertices()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : b.vertices()) best = std::fmin(best, dist(v, w));
    if (best > tol) return false;
  }
  return true;
}

}  // namespace

ConvexPolyhedron voronoi_cell(const PeriodicPacking& p, int center_index,
                              double cutoff_R) {
  require_regular(p);
  if (center_index < 0 || center_index >= static_cast<int>(p.motif.size()))
    throw PreconditionViolatedError("voronoi_cell: motif index out of range");
  const double R =
      cutoff_R > 0.0 ? cutoff_R : effective_covering_radius(p);

  const Vec3 o = p.motif[center_index];
  ConvexPolyhedron cell = cell_at_cutoff(p, o, R);
  ConvexPolyhedron check = cell_at_cutoff(p, o, 2.0 * R);
  if (!same_cell(cell, check))
    throw CutoffTooSmallError("Voronoi cell changed when doubling cutoff " +
                              std::to_string(R));
  return cell;
}

}  // namespace ballcells
