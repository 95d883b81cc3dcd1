#pragma once

#include <span>
#include <string>
#include <vector>

#include "ballcells/metrics.hpp"
#include "ballcells/polyhedron.hpp"
#include "ballcells/tolerances.hpp"

namespace ballcells {

/// One numeric certificate: the claim lhs >= rhs evaluated on concrete data.
/// Invariant: pass == (slack >= -tol), slack = lhs - rhs. The stored tol is
/// absolute, already scaled by max(1, |rhs|) from the caller's relative
/// tolerance, so the invariant is exact as written.
struct CertificateReport {
  std::string name;
  double lhs{0.0};
  double rhs{0.0};
  double slack{0.0};
  bool pass{false};
  double tol{0.0};
};

/// Build a report for the claim lhs >= rhs with relative tolerance rel_tol.
CertificateReport make_report(std::string name, double lhs, double rhs,
                              double rel_tol = kCertTol);

/// Where a one-dimensional meeting segment of a cell complex sits relative to
/// the window cube: on a cube edge (angles fill a quarter turn), in the
/// relative interior of a cube facet (half turn), or in the interior of space
/// (full turn).
enum class MeetingCase { A_cube_edge, B_face_interior, C_interior };

/// Total inner angle around a segment for each case: pi/2, pi, 2*pi.
double case_angle_sum(MeetingCase c);
/// Minimum number of meeting cells for each case: 1, 2, 3.
int case_min_k(MeetingCase c);

/// k convex cells meeting along a common segment, with their inner dihedral
/// angles along it. Valid segments satisfy sum(betas) == case_angle_sum and
/// k >= case_min_k, each beta in (0, pi).
struct MeetingSegment {
  MeetingCase case_tag{MeetingCase::C_interior};
  int k{0};
  std::vector<double> betas;
};

/// sarea^2 >= 3 * vol * ecurv.
CertificateReport check_fejes_toth(const CellMetrics& m, double rel_tol = kCertTol);

/// vol >= sarea / 3, valid for cells containing a unit ball.
/// Throws PreconditionViolatedError when inradius < 1 - rel_tol.
CertificateReport check_containment_volume(const CellMetrics& m,
                                           double rel_tol = kCertTol);

/// sarea >= ecurv, valid for cells containing a unit ball.
/// Throws PreconditionViolatedError when inradius < 1 - rel_tol.
CertificateReport check_area_dominates_ecurv(const CellMetrics& m,
                                             double rel_tol = kCertTol);

/// total edge length >= 24, valid for cells containing a unit ball.
/// Throws PreconditionViolatedError when inradius < 1 - rel_tol.
CertificateReport check_besicovitch_eggleston(const CellMetrics& m,
                                              double rel_tol = kCertTol);

/// sum cot(beta_i/2) >= k/sqrt(3) for a valid meeting segment. When `sharper`
/// is non-null it receives the case-specific bound report: rhs k*cot(pi/(4k)),
/// k*cot(pi/(2k)), or k*cot(pi/k) for cases A, B, C. Throws
/// CaseSumMismatchError when the angles do not sum to the case total, and
/// PreconditionViolatedError on malformed k or out-of-range angles.
CertificateReport cot_sum_bound(const MeetingSegment& seg,
                                CertificateReport* sharper = nullptr,
                                double rel_tol = kCertTol);

/// For cells tiling the cube of side cube_side: sum sarea >= (24/sqrt(3)) * n.
/// When `intermediate` is non-null it receives the aggregate edge-length step
/// sum sarea >= (1/sqrt(3)) * sum total_edge_length.
///
/// Preconditions checked here: the cell volumes sum to cube_side^3 within
/// 1e-6 relative and the cell interiors are pairwise disjoint on a fixed
/// 1e5-point sample (else NotAPartitionError); every cell has inradius
/// >= 1 - rel_tol (else PreconditionViolatedError).
CertificateReport theorem2_certificate(std::span<const ConvexPolyhedron> cells,
                                       double cube_side,
                                       CertificateReport* intermediate = nullptr,
                                       double rel_tol = kCertTol);

/// A priori bounds for a normal tiling with cell diameters <= D:
/// surface area, face count, edge count, and total edge length per cell.
struct NormalityBounds {
  double area_bound;         ///< (3/2) pi D^2
  double face_count_bound;   ///< 8 D^3 - 1
  double edge_count_bound;   ///< 24 D^3 - 9
  double edge_length_bound;  ///< 24 D^4 - 9 D
};

/// Throws InvalidDiameterError when D < 2 (a cell containing a unit ball has
/// diameter at least 2).
NormalityBounds normality_bounds(double D);

/// Detect interior meeting segments shared by >= 3 of the given cells: edges
/// are matched by endpoint coincidence (quantized at the geometric epsilon)
/// and grouped into case-C segments carrying each incident cell's inner
/// dihedral. Face-to-face complexes only; partially overlapping edges are
/// reported as separate segments.
std::vector<MeetingSegment> collect_interior_segments(
    std::span<const ConvexPolyhedron> cells);

/// Run the four per-cell certificates. Precondition failures (inradius < 1)
/// are reported as failing records named "<name>-precondition" with
/// lhs = inradius, rhs = 1, instead of throwing.
std::vector<CertificateReport> certify_cell(const CellMetrics& m,
                                            double rel_tol = kCertTol);

}  // namespace ballcells
