#include "ballcells/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ballcells/errors.hpp"
#include "ballcells/tolerances.hpp"
#include "json.hpp"

namespace ballcells {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string vec_row(const Vec3& v) {
  return "[" + num(v.x) + ", " + num(v.y) + ", " + num(v.z) + "]";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

Vec3 vec_from_json(const nlohmann::json& row) {
  if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
      !row[1].is_number() || !row[2].is_number())
    throw ParseError("expected a [x, y, z] number triple");
  return {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()};
}

ConvexPolyhedron from_halfspace_rows(const nlohmann::json& rows,
                                     std::string* warnings) {
  std::vector<HalfSpace> hs;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 4)
      throw ParseError("expected [nx, ny, nz, offset] rows under \"halfspaces\"");
    for (const auto& x : row)
      if (!x.is_number()) throw ParseError("half-space entries must be numbers");
    const Vec3 n{row[0].get<double>(), row[1].get<double>(), row[2].get<double>()};
    const double o = row[3].get<double>();
    if (std::fabs(norm(n) - 1.0) > kEpsUnit && warnings != nullptr)
      *warnings += "normalized non-unit normal [" + num(n.x) + ", " + num(n.y) +
                   ", " + num(n.z) + "] (offset rescaled)\n";
    hs.push_back(HalfSpace::normalize(n, o));
  }
  ConvexPolyhedron p = intersect_halfspaces_auto(hs);
  if (!p.intrinsically_bounded())
    throw GeometryError("half-spaces do not bound a polytope");
  return p;
}

ConvexPolyhedron from_vertex_rows(const nlohmann::json& rows) {
  std::vector<Vec3> pts;
  for (const auto& row : rows) pts.push_back(vec_from_json(row));
  return hull_of_points(pts);
}

}  // namespace

ConvexPolyhedron polyhedron_from_json_text(const std::string& text,
                                           std::string* warnings) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  ConvexPolyhedron p;
  if (j.is_object()) {
    if (j.contains("halfspaces") && j["halfspaces"].is_array() &&
        !j["halfspaces"].empty())
      p = from_halfspace_rows(j["halfspaces"], warnings);
    else if (j.contains("vertices") && j["vertices"].is_array() &&
             !j["vertices"].empty())
      p = from_vertex_rows(j["vertices"]);
    else
      throw ParseError("polyhedron object needs \"halfspaces\" or \"vertices\"");
  } else if (j.is_array() && !j.empty() && j[0].is_array()) {
    if (j[0].size() == 4)
      p = from_halfspace_rows(j, warnings);
    else if (j[0].size() == 3)
      p = from_vertex_rows(j);
    else
      throw ParseError("rows must have 3 (vertex) or 4 (half-space) entries");
  } else {
    throw ParseError("polyhedron JSON must be an object or an array of rows");
  }
  p.validate();
  return p;
}

std::string polyhedron_to_json_text(const ConvexPolyhedron& p) {
  std::string out = "{\n  \"halfspaces\": [\n";
  const auto& hs = p.halfspaces();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    out += "    [" + num(hs[i].normal.x) + ", " + num(hs[i].normal.y) + ", " +
           num(hs[i].normal.z) + ", " + num(hs[i].offset) + "]";
    out += (i + 1 < hs.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"vertices\": [\n";
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += "    " + vec_row(vs[i]);
    out += (i + 1 < vs.size()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string polyhedron_to_off_text(const ConvexPolyhedron& p) {
  std::string out = "OFF\n";
  out += std::to_string(p.vertices().size()) + " " +
         std::to_string(p.faces().size()) + " " +
         std::to_string(p.edges().size()) + "\n";
  for (const auto& v : p.vertices())
    out += num(v.x) + " " + num(v.y) + " " + num(v.z) + "\n";
  for (const auto& f : p.faces()) {
    out += std::to_string(f.cycle.size());
    for (int vi : f.cycle) out += " " + std::to_string(vi);
    out += "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write to " + path + " failed");
}

ConvexPolyhedron read_off(const std::string& path) {
  std::string text = read_text_file(path);
  // Strip comments, then tokenize.
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '#')
      while (i < text.size() && text[i] != '\n') text[i++] = ' ';
  std::istringstream ss(text);
  std::string magic;
  if (!(ss >> magic) || magic != "OFF")
    throw ParseError(path + ": missing OFF header");
  long nv = 0, nf = 0, ne = 0;
  if (!(ss >> nv >> nf >> ne) || nv < 4)
    throw ParseError(path + ": bad OFF counts line");
  std::vector<Vec3> pts(static_cast<std::size_t>(nv));
  for (auto& v : pts)
    if (!(ss >> v.x >> v.y >> v.z))
      throw ParseError(path + ": truncated OFF vertex list");
  return hull_of_points(pts);
}

void write_off(const std::string& path, const ConvexPolyhedron& p) {
  write_text_file(path, polyhedron_to_off_text(p));
}

ConvexPolyhedron parse_polyhedron(const std::string& path, std::string* warnings) {
  std::string ext;
  const auto dot = path.find_last_of('.');
  if (dot != std::string::npos) {
    ext = path.substr(dot);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
  }
  if (ext == ".off") {
    ConvexPolyhedron p = read_off(path);
    p.validate();
    return p;
  }
  return polyhedron_from_json_text(read_text_file(path), warnings);
}

std::string metrics_to_json(const CellMetrics& m) {
  std::string out = "{";
  out += "\"sarea\": " + num(m.sarea);
  out += ", \"vol\": " + num(m.vol);
  out += ", \"ecurv\": " + num(m.ecurv);
  out += ", \"total_edge_length\": " + num(m.total_edge_length);
  out += ", \"inradius\": " + num(m.inradius);
  out += ", \"diameter\": " + num(m.diameter);
  out += ", \"dihedral_angles\": [";
  for (std::size_t i = 0; i < m.dihedral_angles.size(); ++i) {
    if (i) out += ", ";
    out += num(m.dihedral_angles[i]);
  }
  out += "]}";
  return out;
}

std::string report_to_json(const CertificateReport& r) {
  std::string out = "{";
  out += "\"name\": " + quoted(r.name);
  out += ", \"lhs\": " + num(r.lhs);
  out += ", \"rhs\": " + num(r.rhs);
  out += ", \"slack\": " + num(r.slack);
  out += std::string(", \"pass\": ") + (r.pass ? "true" : "false");
  out += ", \"tol\": " + num(r.tol);
  out += "}";
  return out;
}

std::string reports_to_json_lines(std::span<const CertificateReport> rs) {
  std::string out;
  for (const auto& r : rs) out += report_to_json(r) + "\n";
  return out;
}

std::string window_report_to_json(const WindowReport& r) {
  std::string out = "{";
  out += "\"packing\": " + quoted(r.packing);
  out += ", \"L\": " + num(r.L);
  out += ", \"n_contained\": " + std::to_string(r.n_contained);
  out += ", \"n_boundary\": " + std::to_string(r.n_boundary);
  out += ", \"sum_clipped_sarea\": " + num(r.sum_clipped_sarea);
  out += ", \"average_sarea\": " + num(r.average_sarea);
  out += ", \"f_L\": " + num(r.f_L);
  out += ", \"g_L\": " + num(r.g_L);
  out += ", \"delta_upper\": " + num(r.delta_upper);
  out += ", \"delta_bar_upper\": " + num(r.delta_bar_upper);
  out += ", \"density\": " + num(r.density);
  out += "}";
  return out;
}

std::string series_to_json(std::span<const WindowReport> reports,
                           const SeriesSummary& summary,
                           std::span<const CertificateReport> certificates) {
  std::string out = "{\n  \"series\": [\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += "    " + window_report_to_json(reports[i]);
    out += (i + 1 < reports.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"summary\": {\"min_average\": " + num(summary.min_average) +
         ", \"final_average\": " + num(summary.final_average) + "},\n";
  out += "  \"certificates\": [\n";
  for (std::size_t i = 0; i < certificates.size(); ++i) {
    out += "    " + report_to_json(certificates[i]);
    out += (i + 1 < certificates.size()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string optimization_to_json(const OptimizationResult& r,
                                 std::span<const CertificateReport> certificates) {
  std::string out = "{\n  \"best_area\": " + num(r.best_area);
  out += ",\n  \"restarts_used\": " + std::to_string(r.restarts_used);
  out += ",\n  \"normals\": [\n";
  const auto& ns = r.best_params.normals;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out += "    " + vec_row(ns[i]);
    out += (i + 1 < ns.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"history\": [";
  for (std::size_t i = 0; i < r.history.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(r.history[i].first) + ", " +
           num(r.history[i].second) + "]";
  }
  out += "]";
  if (!certificates.empty()) {
    out += ",\n  \"certificates\": [\n";
    for (std::size_t i = 0; i < certificates.size(); ++i)
      out += "    " + report_to_json(certificates[i]) +
             (i + 1 < certificates.size() ? ",\n" : "\n");
    out += "  ]";
  }
  out += "\n}\n";
  return out;
}

}  // namespace ballcells
