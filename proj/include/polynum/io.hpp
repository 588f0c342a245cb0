#pragma once

// JSON forms of polytopes, triangulations, partitions and sequences, and the
// builtin-family spec parser ("cube:3", "pyramid:square", "prism(triangle)").
//
// Rationals are strings "p/q" or "p". Integers that overflow int64 are
// written as decimal strings.

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polynum/sequences.hpp"

namespace polynum {

using json = nlohmann::json;

inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json counts_to_json(const Counts& c) { return json(c); }

inline json simplex_to_json(const Simplex& s) { return json(s.vertices); }

// ---------------------------------------------------------------------------
// Polytope

inline json polytope_to_json(const PolytopeWithLattice& pl) {
  json verts = json::array();
  for (const auto& v : pl.polytope.vertices) {
    json row = json::array();
    for (const auto& x : v.coords) row.push_back(format_rational(x));
    verts.push_back(std::move(row));
  }
  json faces = json::array();
  for (const auto& f : pl.lattice.faces())
    if (f.dim >= 0) faces.push_back(f.vertices);
  return json{{"name", pl.polytope.name}, {"vertices", std::move(verts)}, {"faces", std::move(faces)}};
}

/// Vertices are required. When "faces" is present it is taken as generators
/// of the lattice (closed under intersection) and the hull search is skipped.
inline PolytopeWithLattice polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw GeometryError("polytope JSON needs a \"vertices\" array");
  std::vector<Point> verts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array()) throw GeometryError("each vertex must be an array of coordinates");
    Point p;
    for (const auto& x : row) {
      if (x.is_string()) p.coords.push_back(parse_rational(x.get<std::string>()));
      else if (x.is_number_integer()) p.coords.emplace_back(x.get<std::int64_t>());
      else throw GeometryError("coordinates must be rational strings or integers");
    }
    verts.push_back(std::move(p));
  }
  std::string name = j.value("name", std::string("polytope"));
  Polytope p = make_polytope(std::move(name), std::move(verts));
  if (!j.contains("faces")) return {p, build_face_lattice(p)};
  std::vector<VertexSet> generators;
  for (const auto& f : j["faces"]) {
    VertexSet s = f.get<VertexSet>();
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
      if (v < 0 || v >= p.num_vertices()) throw GeometryError("face references vertex " + std::to_string(v));
    generators.push_back(std::move(s));
  }
  return {p, lattice_from_generators(p, generators)};
}

inline PolytopeWithLattice read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw GeometryError(path + ": " + e.what());
  }
  return polytope_from_json(j);
}

// ---------------------------------------------------------------------------
// Builtins

namespace detail {

inline int parse_dim(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    int d = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return d;
  } catch (const std::exception&) {
    throw GeometryError("bad dimension in builtin spec '" + spec + "'");
  }
}

}  // namespace detail

/// family:dim for simplex/cube/cross; square, triangle; and
/// pyramid/prism/bipyramid over any spec, as "pyramid:square" or
/// "pyramid(cube:2)".
inline PolytopeWithLattice builtin(const std::string& spec) {
  if (spec == "square") {
    auto p = cube_polytope(2);
    p.polytope.name = "square";
    return p;
  }
  if (spec == "triangle") {
    auto p = simplex_polytope(2);
    p.polytope.name = "triangle";
    return p;
  }
  std::string family, rest;
  auto paren = spec.find('('), colon = spec.find(':');
  if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
    if (spec.back() != ')') throw GeometryError("unbalanced builtin spec '" + spec + "'");
    family = spec.substr(0, paren);
    rest = spec.substr(paren + 1, spec.size() - paren - 2);
  } else if (colon != std::string::npos) {
    family = spec.substr(0, colon);
    rest = spec.substr(colon + 1);
  } else {
    throw GeometryError("unknown builtin '" + spec + "'");
  }
  if (family == "simplex") return simplex_polytope(detail::parse_dim(rest, spec));
  if (family == "cube") return cube_polytope(detail::parse_dim(rest, spec));
  if (family == "cross") return cross_polytope(detail::parse_dim(rest, spec));
  if (family == "pyramid" || family == "prism" || family == "bipyramid") {
    auto base = builtin(rest);
    auto out = family == "pyramid" ? pyramid_over(base) : family == "prism" ? prism_over(base) : bipyramid_over(base);
    out.polytope.name = family + "(" + base.polytope.name + ")";
    return out;
  }
  throw GeometryError("unknown builtin family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Triangulation, partition, sequence

inline json triangulation_to_json(const PointedTriangulation& t) {
  json apexes = json::object();
  json faces = json::array();
  for (const auto& f : t.lattice.faces()) {
    faces.push_back(f.vertices);
    if (f.dim >= 0) apexes[std::to_string(f.id)] = t.apexes[f.id];
  }
  auto split = split_boundary_interior(t);
  auto list = [](const Complex& c) {
    json out = json::array();
    for (const auto& s : c) out.push_back(s.vertices);
    return out;
  };
  json functional = json::array();
  for (const auto& c : t.apexes.functional.coeffs) functional.push_back(format_rational(c));
  return json{{"polytope", t.polytope.name},
              {"functional", std::move(functional)},
              {"faces", std::move(faces)},
              {"apexes", std::move(apexes)},
              {"simplices", list(t.complex())},
              {"boundary", list(split.boundary)},
              {"interior", list(split.interior)}};
}

inline json point_to_json(const Point& p) {
  json out = json::array();
  for (const auto& x : p.coords) out.push_back(format_rational(x));
  return out;
}

/// One record for both partitions: "lower" is G_F, "interior_lower" is D_F.
inline json partition_to_json(const Partition& exterior, const Partition& interior, const GenericPoint& g,
                              const Counts& h, const Counts& k) {
  json intervals = json::array();
  for (std::size_t i = 0; i < exterior.intervals.size(); ++i)
    intervals.push_back(json{{"upper", exterior.intervals[i].upper.vertices},
                             {"lower", exterior.intervals[i].lower.vertices},
                             {"interior_lower", interior.intervals[i].lower.vertices}});
  return json{{"point", point_to_json(g.x)}, {"intervals", std::move(intervals)}, {"h", h}, {"k", k}};
}

/// "values" lists P(1)..P(n_max); P(0) = 0 always.
inline json sequence_to_json(const std::string& polytope, const SequenceResult& r, const Counts& h, const Counts& k) {
  json values = json::array();
  for (std::size_t n = 1; n < r.values.size(); ++n) values.push_back(integer_to_json(r.values[n]));
  return json{{"polytope", polytope}, {"method", to_string(r.method)}, {"interior", r.interior},
              {"h", h},               {"k", k},                        {"values", std::move(values)}};
}

}  // namespace polynum
