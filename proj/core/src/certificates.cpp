#include "ballcells/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <tuple>

#include "ballcells/errors.hpp"

namespace ballcells {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void require_unit_inradius(const CellMetrics& m, double rel_tol, const char* what) {
  if (!(m.inradius >= 1.0 - rel_tol)) {
    throw PreconditionViolatedError(std::string(what) +
                                    ": cell does not contain a unit ball (inradius " +
                                    std::to_string(m.inradius) + ")");
  }
}

}  // namespace

CertificateReport make_report(std::string name, double lhs, double rhs,
                              double rel_tol) {
  CertificateReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.tol = rel_tol * std::fmax(1.0, std::fabs(rhs));
  r.pass = r.slack >= -r.tol;
  return r;
}

double case_angle_sum(MeetingCase c) {
  switch (c) {
    case MeetingCase::A_cube_edge: return std::numbers::pi / 2.0;
    case MeetingCase::B_face_interior: return std::numbers::pi;
    case MeetingCase::C_interior: return 2.0 * std::numbers::pi;
  }
  throw Error("unknown meeting case");
}

int case_min_k(MeetingCase c) {
  switch (c) {
    case MeetingCase::A_cube_edge: return 1;
    case MeetingCase::B_face_interior: return 2;
    case MeetingCase::C_interior: return 3;
  }
  throw Error("unknown meeting case");
}

CertificateReport check_fejes_toth(const CellMetrics& m, double rel_tol) {
  return make_report("ineq-1", m.sarea * m.sarea, 3.0 * m.vol * m.ecurv, rel_tol);
}

CertificateReport check_containment_volume(const CellMetrics& m, double rel_tol) {
  require_unit_inradius(m, rel_tol, "ineq-3");
  return make_report("ineq-3", m.vol, m.sarea / 3.0, rel_tol);
}

CertificateReport check_area_dominates_ecurv(const CellMetrics& m, double rel_tol) {
  require_unit_inradius(m, rel_tol, "ineq-4");
  return make_report("ineq-4", m.sarea, m.ecurv, rel_tol);
}

CertificateReport check_besicovitch_eggleston(const CellMetrics& m, double rel_tol) {
  require_unit_inradius(m, rel_tol, "BE-edge-length");
  return make_report("BE-edge-length", m.total_edge_length, 24.0, rel_tol);
}

CertificateReport cot_sum_bound(const MeetingSegment& seg,
                                CertificateReport* sharper, double rel_tol) {
  const double pi = std::numbers::pi;
  const int k = seg.k;
  if (k < case_min_k(seg.case_tag))
    throw PreconditionViolatedError("cot-sum: too few cells for the case");
  if (static_cast<int>(seg.betas.size()) != k)
    throw PreconditionViolatedError("cot-sum: k does not match the angle count");
  double sum = 0.0;
  for (double b : seg.betas) {
    if (!(b > 0.0) || b > pi + kEpsAngle)
      throw PreconditionViolatedError("cot-sum: inner dihedral outside (0, pi]");
    sum += b;
  }
  const double target = case_angle_sum(seg.case_tag);
  if (std::fabs(sum - target) > kEpsAngle * std::fmax(1.0, static_cast<double>(k)))
    throw CaseSumMismatchError("cot-sum: angles sum to " + std::to_string(sum) +
                               ", expected " + std::to_string(target));

  double lhs = 0.0;
  for (double b : seg.betas) lhs += 1.0 / std::tan(b / 2.0);

  if (sharper != nullptr) {
    // Jensen bound at the equal-angle tuple: k * cot(target / (2k)).
    const double sharp_rhs = k / std::tan(target / (2.0 * k));
    *sharper = make_report("cot-sum-case", lhs, sharp_rhs, rel_tol);
  }
  return make_report("cot-sum", lhs, k / kSqrt3, rel_tol);
}

CertificateReport theorem2_certificate(std::span<const ConvexPolyhedron> cells,
                                       double cube_side,
                                       CertificateReport* intermediate,
                                       double rel_tol) {
  if (cells.empty()) throw PreconditionViolatedError("theorem-2: no cells");
  if (!(cube_side > 0.0)) throw PreconditionViolatedError("theorem-2: bad cube side");

  double sum_vol = 0.0, sum_sarea = 0.0, sum_edge = 0.0;
  for (const auto& cell : cells) {
    const CellMetrics m = metrics(cell);
    require_unit_inradius(m, rel_tol, "theorem-2");
    sum_vol += m.vol;
    sum_sarea += m.sarea;
    sum_edge += m.total_edge_length;
  }

  const double cube_vol = cube_side * cube_side * cube_side;
  if (std::fabs(sum_vol - cube_vol) > 1e-6 * cube_vol)
    throw NotAPartitionError("theorem-2: cell volumes sum to " +
                             std::to_string(sum_vol) + ", cube volume is " +
                             std::to_string(cube_vol));

  // Pairwise interior-disjointness on a fixed pseudorandom sample: no point of
  // the cube may lie strictly inside two cells.
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> coord(-cube_side / 2.0, cube_side / 2.0);
  constexpr int kSamples = 100000;
  for (int s = 0; s < kSamples; ++s) {
    const Vec3 x{coord(rng), coord(rng), coord(rng)};
    int hits = 0;
    for (const auto& cell : cells) {
      bool inside = true;
      for (const auto& hs : cell.halfspaces()) {
        if (hs.signed_distance(x) >= -kEpsGeom) {
          inside = false;
          break;
        }
      }
      if (inside && ++hits > 1)
        throw NotAPartitionError("theorem-2: cell interiors overlap");
    }
  }

  const double n = static_cast<double>(cells.size());
  if (intermediate != nullptr)
    *intermediate = make_report("theorem-2-intermediate", sum_sarea,
                                sum_edge / kSqrt3, rel_tol);
  return make_report("theorem-2", sum_sarea, 24.0 / kSqrt3 * n, rel_tol);
}

NormalityBounds normality_bounds(double D) {
  if (!(D >= 2.0))
    throw InvalidDiameterError("normality bounds need D >= 2, got " +
                               std::to_string(D));
  NormalityBounds b;
  b.area_bound = 1.5 * std::numbers::pi * D * D;
  b.face_count_bound = 8.0 * D * D * D - 1.0;
  b.edge_count_bound = 24.0 * D * D * D - 9.0;
  b.edge_length_bound = 24.0 * D * D * D * D - 9.0 * D;
  return b;
}

std::vector<MeetingSegment> collect_interior_segments(
    std::span<const ConvexPolyhedron> cells) {
  // Quantize endpoints so edges shared across cells (computed from different
  // half-space sets) land on the same key.
  constexpr double kQuantum = 1e-6;
  using Point = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  using Key = std::pair<Point, Point>;
  const auto quantize = [](const Vec3& v) -> Point {
    return {std::llround(v.x / kQuantum), std::llround(v.y / kQuantum),
            std::llround(v.z / kQuantum)};
  };

  std::map<Key, std::vector<double>> groups;
  for (const auto& cell : cells) {
    for (const auto& e : cell.edges()) {
      Point pa = quantize(cell.vertices()[e.a]);
      Point pb = quantize(cell.vertices()[e.b]);
      if (pb < pa) std::swap(pa, pb);
      groups[{pa, pb}].push_back(cell.inner_dihedral(e));
    }
  }

  std::vector<MeetingSegment> out;
  for (auto& [key, betas] : groups) {
    if (betas.size() < 3) continue;
    MeetingSegment seg;
    seg.case_tag = MeetingCase::C_interior;
    seg.k = static_cast<int>(betas.size());
    seg.betas = std::move(betas);
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<CertificateReport> certify_cell(const CellMetrics& m, double rel_tol) {
  std::vector<CertificateReport> out;
  out.push_back(check_fejes_toth(m, rel_tol));
  const auto guarded = [&](const char* name,
                           CertificateReport (*check)(const CellMetrics&, double)) {
    try {
      out.push_back(check(m, rel_tol));
    } catch (const PreconditionViolatedError&) {
      out.push_back(make_report(std::string(name) + "-precondition", m.inradius,
                                1.0, rel_tol));
    }
  };
  guarded("ineq-3", &check_containment_volume);
  guarded("ineq-4", &check_area_dominates_ecurv);
  guarded("BE-edge-length", &check_besicovitch_eggleston);
  return out;
}

}  // namespace ballcells
