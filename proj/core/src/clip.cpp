#include "ballcells/clip.hpp"

#include <cmath>

#include "ballcells/errors.hpp"
#include "ballcells/tolerances.hpp"
#include "poly_build.hpp"

namespace ballcells {

namespace {

bool plane_on_window(const HalfSpace& hs, double L, double tol) {
  const double half = L / 2.0;
  for (int axis = 0; axis < 3; ++axis) {
    const double comp = hs.normal[axis];
    if (std::fabs(std::fabs(comp) - 1.0) < kEpsUnit * 8.0 &&
        std::fabs(hs.offset - half) < tol) {
      return true;
    }
  }
  return false;
}

}  // namespace

CubeClipResult clip_to_cube(const ConvexPolyhedron& p, double L) {
  if (!(L > 0.0)) throw Error("window edge length must be positive");
  const double half = L / 2.0;

  detail::MutablePoly mp = detail::MutablePoly::from(p);
  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 6; ++k) {
    const Vec3 n = axes[k / 2] * ((k % 2 == 0) ? 1.0 : -1.0);
    if (mp.clip(HalfSpace(n, half), detail::kWindowSrc - k) ==
        detail::ClipOutcome::Empty) {
      throw EmptyIntersectionError("cell does not intersect the cube window");
    }
  }

  detail::FinalizeResult fin;
  try {
    fin = detail::finalize(std::move(mp), p.halfspaces());
  } catch (const EmptyInteriorError&) {
    throw EmptyIntersectionError("cell-window intersection has no interior");
  }

  CubeClipResult res;
  res.poly = std::move(fin.poly);
  const double tol = 64.0 * eps_geom(std::fmax(1.0, half));

  const int nf = static_cast<int>(res.poly.faces().size());
  res.face_on_window.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const HalfSpace& hs = res.poly.halfspaces()[res.poly.faces()[f].plane];
    res.face_on_window[f] = plane_on_window(hs, L, tol);
    const double area = res.poly.face_area(f);
    if (res.face_on_window[f])
      res.window_face_area += area;
    else
      res.interior_boundary_area += area;
  }

  for (const auto& e : res.poly.edges()) {
    if (res.face_on_window[e.fa] && res.face_on_window[e.fb]) continue;
    res.interior_edges.push_back(
        {e.a, e.b, res.poly.edge_length(e), res.poly.inner_dihedral(e)});
  }
  return res;
}

}  // namespace ballcells
