#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ballcells/certificates.hpp"
#include "ballcells/errors.hpp"
#include "ballcells/metrics.hpp"
#include "ballcells/polyhedron.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/shapes.hpp"

using namespace ballcells;
namespace ts = testsupport;

TEST_SUITE("certificates") {

TEST_CASE("make_report fixes the slack and pass semantics") {
  const CertificateReport fail = make_report("demo", 1.0, 2.0);
  CHECK_FALSE(fail.pass);
  CHECK(fail.slack == doctest::Approx(-1.0));
  CHECK(fail.lhs == 1.0);
  CHECK(fail.rhs == 2.0);

  // a hair below the bound still passes within the relative tolerance
  const CertificateReport close = make_report("demo", 1.0, 1.0 + 1e-12, 1e-9);
  CHECK(close.pass);
  CHECK(close.tol == doctest::Approx(1e-9));

  // tolerance scales with |rhs| once the bound exceeds 1
  const CertificateReport scaled = make_report("demo", 100.0, 100.0 + 1e-8, 1e-9);
  CHECK(scaled.pass);
  CHECK(scaled.tol == doctest::Approx(1e-7));

  const CertificateReport exact = make_report("demo", 5.0, 5.0, 0.0);
  CHECK(exact.pass);
  CHECK(exact.slack == 0.0);
}

TEST_CASE("quadratic area inequality: cube attains equality") {
  const CertificateReport r = check_fejes_toth(metrics(ts::tangent_cube()));
  CHECK(r.name == "ineq-1");
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(576.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(576.0).epsilon(1e-12));
  CHECK(std::fabs(r.slack) < 1e-9);
}

TEST_CASE("quadratic area inequality: truncated octahedron, frozen values") {
  const CertificateReport r = check_fejes_toth(metrics(ts::bcc_truncated_octahedron()));
  CHECK(r.pass);
  // (4 + 8 sqrt 3)^2 = 208 + 64 sqrt 3
  CHECK(r.lhs == doctest::Approx(318.85125168440811).epsilon(1e-12));
  // 3 * (32 / (3 sqrt 3)) * (24 - 4 sqrt 3)
  CHECK(r.rhs == doctest::Approx(315.40500673763268).epsilon(1e-12));
  CHECK(r.slack > 3.0);
}

TEST_CASE("quadratic area inequality is strict for a non-tangent box") {
  const CellMetrics m = metrics(ts::box(1.0, 1.5, 2.0));
  const CertificateReport r = check_fejes_toth(m);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(2704.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(2592.0).epsilon(1e-12));
}

TEST_CASE("unit-ball certificates on the cube: two equalities and a bound") {
  const CellMetrics m = metrics(ts::tangent_cube());
  const CertificateReport v = check_containment_volume(m);
  CHECK(v.name == "ineq-3");
  CHECK(v.pass);
  CHECK(v.lhs == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(v.rhs == doctest::Approx(8.0).epsilon(1e-12));

  const CertificateReport a = check_area_dominates_ecurv(m);
  CHECK(a.name == "ineq-4");
  CHECK(a.pass);
  CHECK(std::fabs(a.slack) < 1e-9);

  const CertificateReport e = check_besicovitch_eggleston(m);
  CHECK(e.name == "BE-edge-length");
  CHECK(e.pass);
  CHECK(e.lhs == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(e.rhs == 24.0);
  CHECK(std::fabs(e.slack) < 1e-9);
}

TEST_CASE("unit-ball certificates reject cells that cannot hold the ball") {
  const CellMetrics flat = metrics(ts::box(2.0, 2.0, 0.5));  // inradius 1/2
  CHECK_THROWS_AS(check_containment_volume(flat), PreconditionViolatedError);
  CHECK_THROWS_AS(check_area_dominates_ecurv(flat), PreconditionViolatedError);
  CHECK_THROWS_AS(check_besicovitch_eggleston(flat), PreconditionViolatedError);
}

TEST_CASE("certify_cell: four named passing records for a valid cell") {
  const std::vector<CertificateReport> rs = certify_cell(metrics(ts::rhombic_dodecahedron()));
  REQUIRE(rs.size() == 4);
  std::set<std::string> names;
  for (const auto& r : rs) {
    CHECK(r.pass);
    names.insert(r.name);
  }
  CHECK(names == std::set<std::string>{"ineq-1", "ineq-3", "ineq-4", "BE-edge-length"});
}

TEST_CASE("certify_cell: precondition failures become failing records") {
  const std::vector<CertificateReport> rs = certify_cell(metrics(ts::box(2.0, 2.0, 0.5)));
  REQUIRE(rs.size() == 4);
  int precondition_records = 0;
  for (const auto& r : rs) {
    if (r.name.ends_with("-precondition")) {
      ++precondition_records;
      CHECK_FALSE(r.pass);
      CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-9));
      CHECK(r.rhs == 1.0);
    }
  }
  CHECK(precondition_records == 3);  // the quadratic inequality needs no ball
}

TEST_CASE("random tangent cells pass every per-cell certificate") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 30; ++i) {
    const CellMetrics m = metrics(ts::random_tangent_cell(rng, 10));
    for (const CertificateReport& r : certify_cell(m)) CHECK(r.pass);
  }
}

TEST_CASE("cot-sum bound: the three cases at their equal-angle optima") {
  // Case A: one cell filling the quarter turn along a cube edge.
  MeetingSegment a{MeetingCase::A_cube_edge, 1, {std::numbers::pi / 2.0}};
  CertificateReport sharper;
  CertificateReport r = cot_sum_bound(a, &sharper);
  CHECK(r.name == "cot-sum");
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));  // cot(pi/4)
  CHECK(r.rhs == doctest::Approx(1.0 / ts::kSqrt3).epsilon(1e-12));
  CHECK(sharper.name == "cot-sum-case");
  CHECK(sharper.pass);
  CHECK(sharper.rhs == doctest::Approx(1.0).epsilon(1e-12));  // equality
  CHECK(std::fabs(sharper.slack) < 1e-9);

  // Case B: two cells sharing a half turn on a window facet.
  MeetingSegment b{MeetingCase::B_face_interior, 2,
                   {std::numbers::pi / 2.0, std::numbers::pi / 2.0}};
  r = cot_sum_bound(b, &sharper);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sharper.rhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::fabs(sharper.slack) < 1e-9);

  // Case C: three cells around a full turn -- the lattice equality case.
  MeetingSegment c{MeetingCase::C_interior, 3,
                   {2.0 * std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0,
                    2.0 * std::numbers::pi / 3.0}};
  r = cot_sum_bound(c, &sharper);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(ts::kSqrt3).epsilon(1e-12));  // 3 cot(pi/3)
  CHECK(r.rhs == doctest::Approx(3.0 / ts::kSqrt3).epsilon(1e-12));
  CHECK(std::fabs(r.slack) < 1e-9);  // k/sqrt(3) is attained here
  CHECK(std::fabs(sharper.slack) < 1e-9);
}

TEST_CASE("cot-sum bound: unequal angles sit strictly above the case bound") {
  MeetingSegment c{MeetingCase::C_interior, 4,
                   {1.0, 2.0, 1.5, 2.0 * std::numbers::pi - 4.5}};
  CertificateReport sharper;
  const CertificateReport r = cot_sum_bound(c, &sharper);
  CHECK(r.pass);
  CHECK(sharper.pass);
  CHECK(sharper.slack > 1e-6);
  // sharper bound for k = 4 in case C: 4 cot(pi/4) = 4
  CHECK(sharper.rhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.lhs == doctest::Approx(sharper.lhs).epsilon(1e-12));
}

TEST_CASE("cot-sum bound: malformed segments are rejected") {
  // angles do not reach the case total
  MeetingSegment wrong_sum{MeetingCase::C_interior, 3,
                           {1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(cot_sum_bound(wrong_sum), CaseSumMismatchError);

  // too few cells for an interior segment
  MeetingSegment too_few{MeetingCase::C_interior, 2,
                         {std::numbers::pi, std::numbers::pi}};
  CHECK_THROWS_AS(cot_sum_bound(too_few), PreconditionViolatedError);

  // an angle outside (0, pi) breaks convexity
  MeetingSegment bad_angle{MeetingCase::C_interior, 3,
                           {3.5, 1.4, 2.0 * std::numbers::pi - 4.9}};
  CHECK_THROWS_AS(cot_sum_bound(bad_angle), PreconditionViolatedError);

  // k disagrees with the angle list
  MeetingSegment k_mismatch{MeetingCase::B_face_interior, 3,
                            {std::numbers::pi / 2.0, std::numbers::pi / 2.0}};
  CHECK_THROWS_AS(cot_sum_bound(k_mismatch), PreconditionViolatedError);
}

TEST_CASE("random valid segments always pass the k/sqrt(3) bound") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> pick_k(3, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = pick_k(rng);
    // random positive angles in (0, pi) summing to 2 pi
    std::vector<double> betas;
    for (;;) {
      betas.clear();
      std::vector<double> cuts{0.0, 2.0 * std::numbers::pi};
      std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
      for (int i = 0; i < k - 1; ++i) cuts.push_back(u(rng));
      std::sort(cuts.begin(), cuts.end());
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        const double beta = cuts[i + 1] - cuts[i];
        if (beta <= 1e-3 || beta >= std::numbers::pi - 1e-9) ok = false;
        betas.push_back(beta);
      }
      if (ok) break;
    }
    MeetingSegment seg{MeetingCase::C_interior, k, betas};
    CertificateReport sharper;
    const CertificateReport r = cot_sum_bound(seg, &sharper);
    CHECK(r.pass);
    CHECK(sharper.pass);
  }
}

TEST_CASE("grid partition certificate: frozen aggregate values") {
  std::vector<ConvexPolyhedron> cells;
  for (int ix : {-1, 1})
    for (int iy : {-1, 1})
      for (int iz : {-1, 1})
        cells.push_back(
            translated(ts::tangent_cube(), {double(ix), double(iy), double(iz)}));
  CertificateReport intermediate;
  const CertificateReport r = theorem2_certificate(cells, 4.0, &intermediate);
  CHECK(r.name == "theorem-2");
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(192.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(110.851251684).epsilon(1e-9));
  CHECK(intermediate.name == "theorem-2-intermediate");
  CHECK(intermediate.pass);
  CHECK(intermediate.lhs == doctest::Approx(192.0).epsilon(1e-12));
  CHECK(intermediate.rhs == doctest::Approx(192.0 / ts::kSqrt3).epsilon(1e-12));
}

TEST_CASE("grid partition certificate scales with the grid") {
  std::vector<ConvexPolyhedron> cells;
  for (int ix = 0; ix < 3; ++ix)
    for (int iy = 0; iy < 3; ++iy)
      for (int iz = 0; iz < 3; ++iz)
        cells.push_back(translated(
            ts::tangent_cube(),
            {2.0 * ix - 2.0, 2.0 * iy - 2.0, 2.0 * iz - 2.0}));
  const CertificateReport r = theorem2_certificate(cells, 6.0);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(27.0 * 24.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(27.0 * ts::kAreaBound).epsilon(1e-12));
}

TEST_CASE("partition certificate rejects bad volume or overlap") {
  std::vector<ConvexPolyhedron> cells;
  for (int ix : {-1, 1})
    for (int iy : {-1, 1})
      for (int iz : {-1, 1})
        cells.push_back(
            translated(ts::tangent_cube(), {double(ix), double(iy), double(iz)}));
  // wrong cube side: volumes cannot sum to side^3
  CHECK_THROWS_AS(theorem2_certificate(cells, 5.0), NotAPartitionError);

  // overlapping cells with a matching volume total
  std::vector<ConvexPolyhedron> overlap{ts::tangent_cube(), ts::tangent_cube()};
  const double side = std::cbrt(16.0);
  CHECK_THROWS_AS(theorem2_certificate(overlap, side), NotAPartitionError);

  // a cell that cannot contain the unit ball
  std::vector<ConvexPolyhedron> thin;
  for (int i = 0; i < 4; ++i)
    thin.push_back(translated(ts::box(2.0, 2.0, 0.5), {0.0, 0.0, 1.0 * i - 1.5}));
  CHECK_THROWS_AS(theorem2_certificate(thin, 4.0), PreconditionViolatedError);
}

TEST_CASE("normality bounds at the smallest admissible diameter") {
  const NormalityBounds b = normality_bounds(2.0);
  CHECK(b.area_bound == doctest::Approx(6.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(b.face_count_bound == doctest::Approx(63.0).epsilon(1e-12));
  CHECK(b.edge_count_bound == doctest::Approx(183.0).epsilon(1e-12));
  CHECK(b.edge_length_bound == doctest::Approx(366.0).epsilon(1e-12));
}

TEST_CASE("normality bounds grow with the diameter") {
  const NormalityBounds b = normality_bounds(4.0);
  CHECK(b.area_bound == doctest::Approx(24.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(b.face_count_bound == doctest::Approx(511.0).epsilon(1e-12));
  CHECK(b.edge_count_bound == doctest::Approx(1527.0).epsilon(1e-12));
  CHECK(b.edge_length_bound == doctest::Approx(6108.0).epsilon(1e-12));
  CHECK_THROWS_AS(normality_bounds(1.5), InvalidDiameterError);
}

TEST_CASE("interior segments of four boxes around a shared edge") {
  std::vector<ConvexPolyhedron> cells;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      cells.push_back(translated(ts::tangent_cube(), {double(sx), double(sy), 0.0}));
  const std::vector<MeetingSegment> segs = collect_interior_segments(cells);
  REQUIRE(segs.size() == 1);
  const MeetingSegment& s = segs.front();
  CHECK(s.case_tag == MeetingCase::C_interior);
  CHECK(s.k == 4);
  REQUIRE(s.betas.size() == 4);
  for (double beta : s.betas)
    CHECK(beta == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-9));
  CertificateReport sharper;
  const CertificateReport r = cot_sum_bound(s, &sharper);
  CHECK(r.pass);
  CHECK(sharper.pass);
  CHECK(std::fabs(sharper.slack) < 1e-9);  // equal angles attain the case bound
}

}  // TEST_SUITE
