#pragma once

#include <stdexcept>
#include <string>

namespace ballcells {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A geometric construction failed (invalid combinatorics, degeneracy, ...).
struct GeometryError : Error {
  using Error::Error;
};

/// Half-space intersection has no interior point.
struct EmptyInteriorError : GeometryError {
  using GeometryError::GeometryError;
};

/// Clip against a cube window produced nothing with an interior.
struct EmptyIntersectionError : GeometryError {
  using GeometryError::GeometryError;
};

/// A face's vertices are collinear beyond tolerance.
struct DegenerateFaceError : GeometryError {
  using GeometryError::GeometryError;
};

/// Input point set is degenerate (coplanar, too few points, ...).
struct DegenerateInputError : GeometryError {
  using GeometryError::GeometryError;
};

/// A certificate's stated precondition does not hold (e.g. no unit ball fits).
struct PreconditionViolatedError : Error {
  using Error::Error;
};

/// MeetingSegment angles do not sum to the case total.
struct CaseSumMismatchError : Error {
  using Error::Error;
};

/// Candidate cells do not tile the stated cube.
struct NotAPartitionError : Error {
  using Error::Error;
};

/// Doubling the Voronoi neighbor cutoff changed the cell.
struct CutoffTooSmallError : GeometryError {
  using GeometryError::GeometryError;
};

/// Normality bounds require diameter >= 2.
struct InvalidDiameterError : Error {
  using Error::Error;
};

/// Unrecognized packing preset name.
struct UnknownPresetError : Error {
  using Error::Error;
};

/// Every optimizer restart stayed infeasible (unbounded candidate).
struct NoBoundedCandidateError : Error {
  using Error::Error;
};

/// Malformed JSON or OFF input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ballcells
