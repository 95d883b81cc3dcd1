#pragma once

// Internal working representation for incremental half-space clipping.
// Not installed; shared by polyhedron.cpp, clip.cpp and voronoi.cpp.

#include <array>
#include <vector>

#include "ballcells/halfspace.hpp"
#include "ballcells/polyhedron.hpp"
#include "ballcells/vec3.hpp"

namespace ballcells::detail {

// Face source tags. Non-negative sources index the caller's half-space list;
// negative ranges mark synthetic planes.
inline constexpr int kCubeSrc = -1;     // bounding cube planes: -1 .. -6
inline constexpr int kWindowSrc = -101; // window clip planes:   -101 .. -106

inline bool is_bounding_cube_source(int src) { return src <= -1 && src >= -6; }

enum class ClipOutcome { Unchanged, Clipped, Empty };

struct WFace {
  HalfSpace hs;
  int source{0};
  std::vector<int> cycle;
};

struct MutablePoly {
  std::vector<Vec3> verts;
  std::vector<WFace> faces;
  // filled by canonicalize(): vertex pair (a<b) plus the two incident faces
  std::vector<std::array<int, 4>> edge_records;

  static MutablePoly axis_cube(const Vec3& center, double half, int source_base);
  static MutablePoly from(const ConvexPolyhedron& p);

  /// Clip by { x . n <= o }. Unchanged when nothing lies strictly outside.
  ClipOutcome clip(const HalfSpace& h, int source);

  /// Merge coincident vertices, drop degenerate faces, merge near-coplanar
  /// adjacent faces, rebuild edge_records. Throws GeometryError when the
  /// combinatorics cannot be repaired.
  void canonicalize();

  double coord_scale() const;

 private:
  void merge_faces(int keep, int absorb);
};

struct FinalizeResult {
  ConvexPolyhedron poly;
  std::vector<int> face_sources;  // aligned with poly.faces()
};

/// Canonicalize and assemble the immutable polyhedron. `base` is the caller's
/// half-space list (kept in full, including constraints that yielded no
/// face); synthetic faces get their planes appended. Throws
/// EmptyInteriorError when fewer than four faces survive.
FinalizeResult finalize(MutablePoly&& mp, std::vector<HalfSpace> base);

}  // namespace ballcells::detail
