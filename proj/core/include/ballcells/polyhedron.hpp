#pragma once

#include <span>
#include <vector>

#include "ballcells/halfspace.hpp"
#include "ballcells/vec3.hpp"

namespace ballcells {

/// Bounded convex polyhedron with fully enumerated combinatorics.
///
/// Immutable after construction; build one with intersect_halfspaces(),
/// hull_of_points(), or the factories below. Invariants (checked by
/// validate()): every face cycle is planar and oriented counterclockwise as
/// seen from outside, every edge has exactly two incident faces, and
/// V - E + F = 2.
class ConvexPolyhedron {
 public:
  struct Face {
    int plane{-1};           ///< index into halfspaces()
    std::vector<int> cycle;  ///< vertex indices, CCW from outside
  };
  struct Edge {
    int a{-1}, b{-1};   ///< vertex indices, a < b
    int fa{-1}, fb{-1}; ///< incident faces
  };

  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// False when a face of the safety bounding cube survived the intersection.
  bool intrinsically_bounded() const { return intrinsically_bounded_; }

  const Vec3& face_normal(int f) const { return halfspaces_[faces_[f].plane].normal; }
  double face_offset(int f) const { return halfspaces_[faces_[f].plane].offset; }
  double face_area(int f) const;
  Vec3 face_centroid(int f) const;

  double edge_length(const Edge& e) const { return dist(vertices_[e.a], vertices_[e.b]); }
  /// Inner dihedral angle at an edge, in (0, pi).
  double inner_dihedral(const Edge& e) const;

  Vec3 vertex_centroid() const;
  /// Largest vertex coordinate magnitude; scales geometric tolerances.
  double coord_scale() const;

  /// Throws GeometryError when any structural invariant fails.
  void validate() const;

  // Construction is done by the free functions below via this token.
  struct BuildData {
    std::vector<HalfSpace> halfspaces;
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    std::vector<Edge> edges;
    bool intrinsically_bounded{true};
  };
  explicit ConvexPolyhedron(BuildData&& d);
  ConvexPolyhedron() = default;

 private:
  std::vector<HalfSpace> halfspaces_;
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  bool intrinsically_bounded_{true};
};

/// Intersect half-spaces clipped to the cube [-bound, bound]^3.
///
/// Vertex enumeration is by incremental half-space clipping of the bounding
/// cube. Input normals need not be unit; they are normalized (offsets
/// rescaled). If no bounding-cube plane contributes a face the result is
/// intrinsically bounded; otherwise the surviving cube planes are appended to
/// the half-space list and the flag is cleared so the caller can decide
/// whether that is an error.
///
/// Throws EmptyInteriorError when the clipped intersection has no interior.
ConvexPolyhedron intersect_halfspaces(std::span<const HalfSpace> hs, double bound);

/// intersect_halfspaces with the bound doubled until either the intersection
/// is intrinsically bounded or max_bound is exceeded (then the flagged result
/// is returned as-is).
ConvexPolyhedron intersect_halfspaces_auto(std::span<const HalfSpace> hs,
                                           double initial_bound = 0.0,
                                           double max_bound = 1e6);

/// Convex hull of a full-dimensional point set, via two polar duals through
/// the half-space kernel. Throws DegenerateInputError if the points are
/// coplanar within tolerance.
ConvexPolyhedron hull_of_points(std::span<const Vec3> points);

/// Axis-aligned cube of the given side centered at c.
ConvexPolyhedron make_cube(const Vec3& center, double side);

ConvexPolyhedron translated(const ConvexPolyhedron& p, const Vec3& t);
/// Rigid motion x -> R x + t. R must be a rotation.
ConvexPolyhedron transformed(const ConvexPolyhedron& p, const Mat3& rot, const Vec3& t);

}  // namespace ballcells
