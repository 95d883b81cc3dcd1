#include "ballcells/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "ballcells/errors.hpp"
#include "ballcells/tolerances.hpp"
#include "poly_build.hpp"

namespace ballcells {

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

namespace detail {

namespace {

uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

Vec3 newell_normal(const std::vector<Vec3>& verts, const std::vector<int>& cycle) {
  Vec3 n{0, 0, 0};
  const int m = static_cast<int>(cycle.size());
  for (int k = 0; k < m; ++k) {
    const Vec3& a = verts[cycle[k]];
    const Vec3& b = verts[cycle[(k + 1) % m]];
    n += cross(a, b);
  }
  return n;
}

double cycle_area(const std::vector<Vec3>& verts, const std::vector<int>& cycle) {
  return 0.5 * norm(newell_normal(verts, cycle));
}

void drop_consecutive_duplicates(std::vector<int>& cyc) {
  std::vector<int> out;
  out.reserve(cyc.size());
  for (int v : cyc) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  cyc = std::move(out);
}

// Chain undirected edges into a single closed cycle. Returns empty on failure.
std::vector<int> chain_cycle(const std::vector<std::pair<int, int>>& segs) {
  std::unordered_map<int, std::vector<int>> adj;
  for (auto [a, b] : segs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2) return {};
  }
  std::vector<int> cyc;
  cyc.reserve(segs.size());
  const int start = segs.front().first;
  int prev = -1, cur = start;
  do {
    cyc.push_back(cur);
    const auto& nb = adj[cur];
    const int next = (nb[0] != prev) ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    if (cyc.size() > segs.size() + 1) return {};
  } while (cur != start);
  return cyc.size() == segs.size() ? cyc : std::vector<int>{};
}

}  // namespace

MutablePoly MutablePoly::axis_cube(const Vec3& c, double h, int source_base) {
  MutablePoly p;
  p.verts.reserve(8);
  for (int i = 0; i < 8; ++i) {
    p.verts.push_back({c.x + ((i & 1) ? h : -h), c.y + ((i & 2) ? h : -h),
                       c.z + ((i & 4) ? h : -h)});
  }
  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<int> cycles[6] = {{1, 3, 7, 5}, {0, 4, 6, 2}, {2, 6, 7, 3},
                                      {0, 1, 5, 4}, {4, 5, 7, 6}, {0, 2, 3, 1}};
  for (int k = 0; k < 6; ++k) {
    const int axis = k / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const Vec3 n = axes[axis] * sign;
    p.faces.push_back({HalfSpace(n, h + dot(n, c)), source_base - k, cycles[k]});
  }
  return p;
}

MutablePoly MutablePoly::from(const ConvexPolyhedron& poly) {
  MutablePoly p;
  p.verts = poly.vertices();
  p.faces.reserve(poly.faces().size());
  for (const auto& f : poly.faces()) {
    p.faces.push_back({poly.halfspaces()[f.plane], f.plane, f.cycle});
  }
  return p;
}

double MutablePoly::coord_scale() const {
  double s = 0.0;
  for (const auto& v : verts) s = std::fmax(s, max_abs_coord(v));
  return s;
}

ClipOutcome MutablePoly::clip(const HalfSpace& h, int source) {
  const int nv = static_cast<int>(verts.size());
  std::vector<double> d(nv);
  std::vector<signed char> cls(nv);
  const double eps = kEpsGeom * std::fmax(1.0, std::fabs(h.offset));
  bool any_pos = false, any_neg = false;
  for (int i = 0; i < nv; ++i) {
    d[i] = h.signed_distance(verts[i]);
    cls[i] = (d[i] > eps) ? 1 : (d[i] < -eps ? -1 : 0);
    any_pos |= (cls[i] > 0);
    any_neg |= (cls[i] < 0);
  }
  if (!any_pos) return ClipOutcome::Unchanged;
  if (!any_neg) {
    verts.clear();
    faces.clear();
    return ClipOutcome::Empty;
  }

  std::unordered_map<uint64_t, int> memo;
  auto crossing = [&](int a, int b) {
    const uint64_t key = edge_key(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const double t = d[a] / (d[a] - d[b]);  // strictly in (0,1): signs differ
    const int idx = static_cast<int>(verts.size());
    verts.push_back(verts[a] + (verts[b] - verts[a]) * t);
    cls.push_back(0);
    d.push_back(0.0);
    memo.emplace(key, idx);
    return idx;
  };

  std::vector<std::pair<int, int>> rim;
  std::vector<uint64_t> rim_keys;
  auto add_rim = [&](int a, int b) {
    if (a == b) return;
    const uint64_t key = edge_key(a, b);
    if (std::find(rim_keys.begin(), rim_keys.end(), key) != rim_keys.end()) return;
    rim_keys.push_back(key);
    rim.emplace_back(a, b);
  };

  std::vector<WFace> kept;
  kept.reserve(faces.size() + 1);
  for (auto& f : faces) {
    const int m = static_cast<int>(f.cycle.size());
    bool fpos = false, fneg = false;
    for (int v : f.cycle) {
      fpos |= (cls[v] > 0);
      fneg |= (cls[v] < 0);
    }
    if (!fneg) continue;  // entirely on/outside the plane: replaced by the new face
    if (!fpos) {
      // survives whole; existing edges lying on the plane belong to the rim
      for (int k = 0; k < m; ++k) {
        const int v = f.cycle[k], w = f.cycle[(k + 1) % m];
        if (cls[v] == 0 && cls[w] == 0) add_rim(v, w);
      }
      kept.push_back(std::move(f));
      continue;
    }
    std::vector<int> nc;
    nc.reserve(m + 2);
    for (int k = 0; k < m; ++k) {
      const int v = f.cycle[k], w = f.cycle[(k + 1) % m];
      if (cls[v] <= 0) nc.push_back(v);
      if ((cls[v] < 0 && cls[w] > 0) || (cls[v] > 0 && cls[w] < 0))
        nc.push_back(crossing(v, w));
    }
    drop_consecutive_duplicates(nc);
    if (nc.size() < 3) continue;
    const int mz = static_cast<int>(nc.size());
    for (int k = 0; k < mz; ++k) {
      const int v = nc[k], w = nc[(k + 1) % mz];
      if (cls[v] == 0 && cls[w] == 0) add_rim(v, w);
    }
    f.cycle = std::move(nc);
    kept.push_back(std::move(f));
  }
  faces = std::move(kept);

  if (faces.empty()) {
    verts.clear();
    return ClipOutcome::Empty;
  }

  if (rim.size() >= 3) {
    std::vector<int> cyc = chain_cycle(rim);
    if (cyc.empty())
      throw GeometryError("half-space clip: rim does not close into a cycle");
    if (dot(newell_normal(verts, cyc), h.normal) < 0.0)
      std::reverse(cyc.begin(), cyc.end());
    faces.push_back({h, source, std::move(cyc)});
  }
  return ClipOutcome::Clipped;
}

void MutablePoly::canonicalize() {
  // 1. drop unreferenced vertices
  {
    std::vector<int> remap(verts.size(), -1);
    std::vector<Vec3> nverts;
    for (auto& f : faces) {
      for (int& v : f.cycle) {
        if (remap[v] < 0) {
          remap[v] = static_cast<int>(nverts.size());
          nverts.push_back(verts[v]);
        }
        v = remap[v];
      }
    }
    verts = std::move(nverts);
  }

  // 2. merge vertices closer than the geometric tolerance
  const double eps = kEpsGeom * std::fmax(1.0, coord_scale());
  {
    const int n = static_cast<int>(verts.size());
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (rep[i] == i && dist(verts[i], verts[j]) < eps) {
          rep[j] = i;
          break;
        }
      }
    }
    std::vector<int> remap(n, -1);
    std::vector<Vec3> nverts;
    for (int i = 0; i < n; ++i) {
      if (rep[i] == i) {
        remap[i] = static_cast<int>(nverts.size());
        nverts.push_back(verts[i]);
      }
    }
    for (int i = 0; i < n; ++i) remap[i] = remap[rep[i]];
    verts = std::move(nverts);
    std::vector<WFace> nfaces;
    for (auto& f : faces) {
      for (int& v : f.cycle) v = remap[v];
      drop_consecutive_duplicates(f.cycle);
      if (f.cycle.size() >= 3) nfaces.push_back(std::move(f));
    }
    faces = std::move(nfaces);
  }

  // 3. merge adjacent near-coplanar faces (inner dihedral within kEpsAngle of
  //    pi), so no spurious zero-curvature edges survive
  for (bool merged_any = true; merged_any;) {
    merged_any = false;
    std::unordered_map<uint64_t, int> first_face;
    for (int fi = 0; fi < static_cast<int>(faces.size()) && !merged_any; ++fi) {
      const auto& cyc = faces[fi].cycle;
      const int m = static_cast<int>(cyc.size());
      for (int k = 0; k < m; ++k) {
        const uint64_t key = edge_key(cyc[k], cyc[(k + 1) % m]);
        auto [it, fresh] = first_face.try_emplace(key, fi);
        if (fresh || it->second == fi) continue;
        const int fj = it->second;
        const double c = dot(faces[fi].hs.normal, faces[fj].hs.normal);
        if (std::acos(std::clamp(c, -1.0, 1.0)) < kEpsAngle) {
          merge_faces(fj, fi);
          merged_any = true;
          break;
        }
      }
    }
  }

  // 4. rebuild edge records; every edge must have exactly two incident faces
  edge_records.clear();
  {
    std::map<uint64_t, std::array<int, 4>> emap;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      const auto& cyc = faces[fi].cycle;
      const int m = static_cast<int>(cyc.size());
      for (int k = 0; k < m; ++k) {
        int a = cyc[k], b = cyc[(k + 1) % m];
        if (a == b) throw GeometryError("degenerate zero-length edge in face cycle");
        if (a > b) std::swap(a, b);
        auto [it, fresh] = emap.try_emplace(edge_key(a, b),
                                            std::array<int, 4>{a, b, fi, -1});
        if (!fresh) {
          if (it->second[3] != -1)
            throw GeometryError("edge incident to more than two faces");
          it->second[3] = fi;
        }
      }
    }
    edge_records.reserve(emap.size());
    for (auto& [key, rec] : emap) {
      if (rec[3] == -1) throw GeometryError("edge incident to only one face");
      edge_records.push_back(rec);
    }
  }

  // 5. enforce outward orientation against each face's stored plane
  for (auto& f : faces) {
    if (dot(newell_normal(verts, f.cycle), f.hs.normal) < 0.0)
      std::reverse(f.cycle.begin(), f.cycle.end());
  }
}

void MutablePoly::merge_faces(int keep, int absorb) {
  // Splice two coplanar cycles by cancelling directed edges shared in
  // opposite directions, then rechaining.
  auto& A = faces[keep];
  auto& B = faces[absorb];
  std::vector<std::pair<int, int>> directed;
  auto emit = [&](const std::vector<int>& cyc) {
    const int m = static_cast<int>(cyc.size());
    for (int k = 0; k < m; ++k) directed.emplace_back(cyc[k], cyc[(k + 1) % m]);
  };
  emit(A.cycle);
  emit(B.cycle);
  std::vector<std::pair<int, int>> boundary;
  for (auto [a, b] : directed) {
    if (std::find(directed.begin(), directed.end(), std::make_pair(b, a)) ==
        directed.end())
      boundary.emplace_back(a, b);
  }
  if (boundary.size() < 3)
    throw GeometryError("coplanar face merge produced a degenerate boundary");
  std::vector<int> cyc = chain_cycle(boundary);
  if (cyc.empty())
    throw GeometryError("coplanar face merge produced a disconnected boundary");
  // keep the larger face's supporting plane
  if (cycle_area(verts, B.cycle) > cycle_area(verts, A.cycle)) {
    A.hs = B.hs;
    A.source = B.source;
  }
  if (dot(newell_normal(verts, cyc), A.hs.normal) < 0.0)
    std::reverse(cyc.begin(), cyc.end());
  A.cycle = std::move(cyc);
  faces.erase(faces.begin() + absorb);
}

FinalizeResult finalize(MutablePoly&& mp, std::vector<HalfSpace> base) {
  mp.canonicalize();
  if (mp.verts.size() < 4 || mp.faces.size() < 4)
    throw EmptyInteriorError("half-space intersection has no interior");

  ConvexPolyhedron::BuildData d;
  d.halfspaces = std::move(base);
  d.vertices = mp.verts;
  d.intrinsically_bounded = true;

  std::vector<int> sources;
  std::unordered_map<int, int> synthetic;  // source tag -> appended plane index
  sources.reserve(mp.faces.size());
  for (auto& f : mp.faces) {
    int plane;
    if (f.source >= 0) {
      plane = f.source;
    } else {
      if (is_bounding_cube_source(f.source)) d.intrinsically_bounded = false;
      auto [it, fresh] = synthetic.try_emplace(f.source, -1);
      if (fresh) {
        it->second = static_cast<int>(d.halfspaces.size());
        d.halfspaces.push_back(f.hs);
      }
      plane = it->second;
    }
    d.faces.push_back({plane, std::move(f.cycle)});
    sources.push_back(f.source);
  }
  d.edges.reserve(mp.edge_records.size());
  for (const auto& rec : mp.edge_records) {
    d.edges.push_back({rec[0], rec[1], rec[2], rec[3]});
  }
  return {ConvexPolyhedron(std::move(d)), std::move(sources)};
}

}  // namespace detail

// ---------------------------------------------------------------------------

ConvexPolyhedron::ConvexPolyhedron(BuildData&& d)
    : halfspaces_(std::move(d.halfspaces)),
      vertices_(std::move(d.vertices)),
      faces_(std::move(d.faces)),
      edges_(std::move(d.edges)),
      intrinsically_bounded_(d.intrinsically_bounded) {
  validate();
}

double ConvexPolyhedron::face_area(int f) const {
  return 0.5 * norm(detail::newell_normal(vertices_, faces_[f].cycle));
}

Vec3 ConvexPolyhedron::face_centroid(int f) const {
  Vec3 c{0, 0, 0};
  for (int v : faces_[f].cycle) c += vertices_[v];
  return c / static_cast<double>(faces_[f].cycle.size());
}

double ConvexPolyhedron::inner_dihedral(const Edge& e) const {
  const double c = dot(face_normal(e.fa), face_normal(e.fb));
  return std::numbers::pi - std::acos(std::clamp(c, -1.0, 1.0));
}

Vec3 ConvexPolyhedron::vertex_centroid() const {
  Vec3 c{0, 0, 0};
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double ConvexPolyhedron::coord_scale() const {
  double s = 0.0;
  for (const auto& v : vertices_) s = std::fmax(s, max_abs_coord(v));
  return s;
}

void ConvexPolyhedron::validate() const {
  const int V = static_cast<int>(vertices_.size());
  const int E = static_cast<int>(edges_.size());
  const int F = static_cast<int>(faces_.size());
  if (V < 4 || F < 4) throw GeometryError("polyhedron has too few vertices or faces");
  if (V - E + F != 2) throw GeometryError("Euler relation V - E + F = 2 violated");

  const double tol = 64.0 * eps_geom(coord_scale());
  for (const auto& f : faces_) {
    if (f.plane < 0 || f.plane >= static_cast<int>(halfspaces_.size()))
      throw GeometryError("face references an invalid supporting plane");
    const auto& hs = halfspaces_[f.plane];
    for (int v : f.cycle) {
      if (std::fabs(hs.signed_distance(vertices_[v])) > tol)
        throw GeometryError("face cycle is not planar within tolerance");
    }
    if (dot(detail::newell_normal(vertices_, f.cycle), hs.normal) <= 0.0)
      throw GeometryError("face cycle is not oriented outward");
  }
  for (const auto& hs : halfspaces_) {
    if (!hs.has_unit_normal())
      throw GeometryError("supporting plane normal is not unit length");
    for (const auto& v : vertices_) {
      if (hs.signed_distance(v) > tol)
        throw GeometryError("vertex violates a supporting half-space");
    }
  }
  for (const auto& e : edges_) {
    if (e.fa < 0 || e.fb < 0) throw GeometryError("edge with missing incident face");
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<HalfSpace> normalize_list(std::span<const HalfSpace> hs) {
  std::vector<HalfSpace> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(HalfSpace::normalize(h.normal, h.offset));
  return out;
}

ConvexPolyhedron intersect_impl(std::vector<HalfSpace> normalized, double bound) {
  if (!(bound > 0.0)) throw Error("bounding-cube half-width must be positive");
  detail::MutablePoly mp =
      detail::MutablePoly::axis_cube({0, 0, 0}, bound, detail::kCubeSrc);
  for (int i = 0; i < static_cast<int>(normalized.size()); ++i) {
    if (mp.clip(normalized[i], i) == detail::ClipOutcome::Empty)
      throw EmptyInteriorError("half-space intersection has no interior");
  }
  return detail::finalize(std::move(mp), std::move(normalized)).poly;
}

}  // namespace

ConvexPolyhedron intersect_halfspaces(std::span<const HalfSpace> hs, double bound) {
  return intersect_impl(normalize_list(hs), bound);
}

ConvexPolyhedron intersect_halfspaces_auto(std::span<const HalfSpace> hs,
                                           double initial_bound, double max_bound) {
  std::vector<HalfSpace> normalized = normalize_list(hs);
  double bound = initial_bound;
  if (!(bound > 0.0)) {
    double mo = 1.0;
    for (const auto& h : normalized) mo = std::fmax(mo, std::fabs(h.offset));
    bound = 8.0 * mo;
  }
  for (;;) {
    ConvexPolyhedron p = intersect_impl(normalized, bound);
    if (p.intrinsically_bounded() || bound >= max_bound) return p;
    bound *= 2.0;
  }
}

ConvexPolyhedron hull_of_points(std::span<const Vec3> points) {
  if (points.size() < 4)
    throw DegenerateInputError("hull needs at least four points");
  Vec3 c{0, 0, 0};
  for (const auto& p : points) c += p;
  c *= 1.0 / static_cast<double>(points.size());

  // Polar dual: faces of { y : (p_i - c) . y <= 1 } are the hull's vertices.
  std::vector<HalfSpace> dual;
  dual.reserve(points.size());
  double rmax = 0.0;
  for (const auto& p : points) {
    const Vec3 u = p - c;
    const double len = norm(u);
    rmax = std::fmax(rmax, len);
    if (len < 1e-12) continue;  // a point at the centroid supports nothing
    dual.push_back(HalfSpace(u / len, 1.0 / len));
  }
  if (dual.size() < 4) throw DegenerateInputError("hull input is degenerate");
  ConvexPolyhedron polar = intersect_impl(std::move(dual), 1e3);
  if (!polar.intrinsically_bounded())
    throw DegenerateInputError("hull input is coplanar within tolerance");

  std::vector<HalfSpace> planes;
  planes.reserve(polar.vertices().size());
  for (const auto& w : polar.vertices()) {
    const double len = norm(w);
    if (len < 1e-12) throw DegenerateInputError("degenerate polar vertex");
    // (x - c) . w <= 1  in original coordinates
    planes.push_back(HalfSpace(w / len, (1.0 + dot(w, c)) / len));
  }
  ConvexPolyhedron hull = intersect_impl(std::move(planes), 2.0 * rmax + 1.0 + norm(c));
  if (!hull.intrinsically_bounded())
    throw DegenerateInputError("hull reconstruction is unbounded");
  return hull;
}

ConvexPolyhedron make_cube(const Vec3& center, double side) {
  if (!(side > 0.0)) throw Error("cube side must be positive");
  const double h = side / 2.0;
  std::vector<HalfSpace> hs;
  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 3; ++k) {
    hs.push_back(HalfSpace(axes[k], h + dot(axes[k], center)));
    hs.push_back(HalfSpace(-axes[k], h - dot(axes[k], center)));
  }
  return intersect_halfspaces(hs, max_abs_coord(center) + side + 1.0);
}

ConvexPolyhedron translated(const ConvexPolyhedron& p, const Vec3& t) {
  ConvexPolyhedron::BuildData d;
  d.halfspaces.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces())
    d.halfspaces.push_back(HalfSpace(h.normal, h.offset + dot(h.normal, t)));
  d.vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) d.vertices.push_back(v + t);
  d.faces = p.faces();
  d.edges = p.edges();
  d.intrinsically_bounded = p.intrinsically_bounded();
  return ConvexPolyhedron(std::move(d));
}

ConvexPolyhedron transformed(const ConvexPolyhedron& p, const Mat3& rot, const Vec3& t) {
  ConvexPolyhedron::BuildData d;
  d.halfspaces.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) {
    const Vec3 n = rot * h.normal;
    d.halfspaces.push_back(HalfSpace(n, h.offset + dot(n, t)));
  }
  d.vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) d.vertices.push_back(rot * v + t);
  d.faces = p.faces();
  d.edges = p.edges();
  d.intrinsically_bounded = p.intrinsically_bounded();
  return ConvexPolyhedron(std::move(d));
}

}  // namespace ballcells
