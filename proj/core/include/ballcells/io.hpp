#pragma once

#include <span>
#include <string>

#include "ballcells/certificates.hpp"
#include "ballcells/metrics.hpp"
#include "ballcells/optimizer.hpp"
#include "ballcells/polyhedron.hpp"
#include "ballcells/window.hpp"

namespace ballcells {

/// Load a polyhedron from disk. ".off"/".OFF" files are read as OFF meshes
/// (vertices only; the convex hull is taken); anything else is parsed as
/// JSON. Throws ParseError on malformed input and geometry errors on
/// degenerate data. When `warnings` is non-null, non-fatal input repairs
/// (e.g. normalizing a non-unit normal) are appended to it, one per line.
ConvexPolyhedron parse_polyhedron(const std::string& path,
                                  std::string* warnings = nullptr);

/// JSON polyhedron input. Accepted forms:
///   {"halfspaces": [[nx, ny, nz, offset], ...]}   preferred when both keys
///   {"vertices":   [[x, y, z], ...]}              are present
///   bare array of 4-element rows  -> half-spaces
///   bare array of 3-element rows  -> vertices (hull taken)
/// Non-unit normals are normalized (offset rescaled) with a warning.
ConvexPolyhedron polyhedron_from_json_text(const std::string& text,
                                           std::string* warnings = nullptr);

/// Emit both representations: {"halfspaces": [...], "vertices": [...]}.
/// All numbers carry 17 significant digits, so emission is byte-stable and
/// parsing back reproduces the polyhedron exactly.
std::string polyhedron_to_json_text(const ConvexPolyhedron& p);

/// ASCII OFF mesh of the polyhedron: polygonal faces, counterclockwise from
/// outside.
std::string polyhedron_to_off_text(const ConvexPolyhedron& p);

ConvexPolyhedron read_off(const std::string& path);
void write_off(const std::string& path, const ConvexPolyhedron& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Report serialization (17-significant-digit numbers throughout).
std::string metrics_to_json(const CellMetrics& m);
std::string report_to_json(const CertificateReport& r);
/// One JSON record per line.
std::string reports_to_json_lines(std::span<const CertificateReport> rs);
std::string window_report_to_json(const WindowReport& r);
std::string series_to_json(std::span<const WindowReport> reports,
                           const SeriesSummary& summary,
                           std::span<const CertificateReport> certificates);
std::string optimization_to_json(
    const OptimizationResult& r,
    std::span<const CertificateReport> certificates = {});

}  // namespace ballcells
