#include "ballcells/metrics.hpp"

#include <cmath>

#include "ballcells/chebyshev.hpp"
#include "ballcells/errors.hpp"
#include "ballcells/tolerances.hpp"

namespace ballcells {

namespace {

double face_area_checked(const ConvexPolyhedron& p, int f, double eps) {
  const auto& cyc = p.faces()[f].cycle;
  const auto& verts = p.vertices();
  double area = 0.0;
  double perimeter = 0.0;
  const Vec3& v0 = verts[cyc[0]];
  for (size_t k = 1; k + 1 < cyc.size(); ++k) {
    area += 0.5 * norm(cross(verts[cyc[k]] - v0, verts[cyc[k + 1]] - v0));
  }
  for (size_t k = 0; k < cyc.size(); ++k) {
    perimeter += dist(verts[cyc[k]], verts[cyc[(k + 1) % cyc.size()]]);
  }
  if (area <= eps * perimeter)
    throw DegenerateFaceError("face vertices are collinear beyond tolerance");
  return area;
}

}  // namespace

double surface_area(const ConvexPolyhedron& p) {
  double a = 0.0;
  for (int f = 0; f < static_cast<int>(p.faces().size()); ++f) a += p.face_area(f);
  return a;
}

double volume(const ConvexPolyhedron& p) {
  const Vec3 c = p.vertex_centroid();
  const auto& verts = p.vertices();
  double six_vol = 0.0;
  for (const auto& face : p.faces()) {
    const Vec3 a = verts[face.cycle[0]] - c;
    for (size_t k = 1; k + 1 < face.cycle.size(); ++k) {
      six_vol += dot(a, cross(verts[face.cycle[k]] - c, verts[face.cycle[k + 1]] - c));
    }
  }
  return six_vol / 6.0;
}

CellMetrics metrics(const ConvexPolyhedron& p) {
  CellMetrics m;
  const double eps = eps_geom(p.coord_scale());

  for (int f = 0; f < static_cast<int>(p.faces().size()); ++f) {
    m.sarea += face_area_checked(p, f, eps);
  }
  m.vol = volume(p);

  m.dihedral_angles.reserve(p.edges().size());
  for (const auto& e : p.edges()) {
    const double len = p.edge_length(e);
    const double beta = p.inner_dihedral(e);
    m.dihedral_angles.push_back(beta);
    m.total_edge_length += len;
    m.ecurv += len / std::tan(beta / 2.0);
  }

  const auto& verts = p.vertices();
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      m.diameter = std::fmax(m.diameter, dist(verts[i], verts[j]));
    }
  }

  m.inradius = chebyshev_center(p.halfspaces(), p.vertex_centroid()).radius;
  return m;
}

}  // namespace ballcells
