#pragma once

// Pointed triangulations. A generic linear functional picks the apex v_F of
// every face F as its minimizing vertex; C_F is the set of simplices
// {v_G1, ..., v_Gk} over chains G1 > ... > Gk of faces of F with
// v_Gi not in G(i+1). This is the pulling triangulation for the vertex order
// induced by the functional.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polynum/face_lattice.hpp"

namespace polynum {

struct Simplex {
  VertexSet vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  bool contains(int v) const { return contains_vertex(vertices, v); }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

using Complex = std::set<Simplex>;

/// All subsets of every given simplex.
inline Complex closure(const Complex& simplices) {
  Complex out;
  for (const auto& s : simplices) {
    const auto n = s.vertices.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) sub.vertices.push_back(s.vertices[i]);
      out.insert(std::move(sub));
    }
  }
  return out;
}

/// Inclusion-maximal members.
inline std::vector<Simplex> maximal_simplices(const Complex& c) {
  std::set<int> verts;
  for (const auto& s : c) verts.insert(s.vertices.begin(), s.vertices.end());
  std::vector<Simplex> out;
  for (const auto& s : c) {
    bool maximal = true;
    for (int w : verts) {
      if (s.contains(w)) continue;
      VertexSet bigger = s.vertices;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), w), w);
      if (c.count(Simplex{std::move(bigger)})) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline int complex_dim(const Complex& c) {
  int d = -1;
  for (const auto& s : c) d = std::max(d, s.dim());
  return d;
}

inline std::vector<Simplex> simplices_of_dim(const Complex& c, int k) {
  std::vector<Simplex> out;
  for (const auto& s : c)
    if (s.dim() == k) out.push_back(s);
  return out;
}

struct ApexAssignment {
  LinearFunctional functional;
  std::vector<int> apex;  // by face id; -1 for the empty face

  int operator[](int face_id) const { return apex.at(static_cast<std::size_t>(face_id)); }
};

namespace detail {

inline bool values_distinct(const Polytope& p, const LinearFunctional& c) {
  std::set<Rational> seen;
  for (const auto& v : p.vertices)
    if (!seen.insert(evaluate_functional(c, v)).second) return false;
  return true;
}

}  // namespace detail

/// A functional taking pairwise distinct values on the vertices. First tries
/// the weights (1, M, M^2, ...) with M one more than the coordinate spread,
/// then seeded pseudo-random rational coefficients.
inline LinearFunctional generic_functional(const Polytope& p, std::uint64_t seed = 0) {
  const auto n = static_cast<std::size_t>(p.ambient_dim);
  Rational spread = 0;
  for (std::size_t k = 0; k < n; ++k) {
    auto [lo, hi] = std::minmax_element(p.vertices.begin(), p.vertices.end(),
                                        [k](const Point& a, const Point& b) { return a[k] < b[k]; });
    spread = std::max(spread, Rational((*hi)[k] - (*lo)[k]));
  }
  Integer m = 1 + (numerator(spread) + denominator(spread) - 1) / denominator(spread);
  LinearFunctional c;
  Integer w = 1;
  for (std::size_t k = 0; k < n; ++k, w *= m) c.coeffs.emplace_back(w);
  if (detail::values_distinct(p, c)) return c;

  std::mt19937_64 rng(seed);
  for (std::uint64_t bound = 1 << 10;; bound *= 2) {
    for (auto& coeff : c.coeffs) {
      auto num = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - static_cast<std::int64_t>(bound);
      auto den = static_cast<std::int64_t>(rng() % bound) + 1;
      coeff = Rational(num, den);
    }
    if (detail::values_distinct(p, c)) return c;
  }
}

/// v_F = argmin of c over Vert(F) for every nonempty face.
inline ApexAssignment assign_apexes(const PolytopeWithLattice& pl, const LinearFunctional& c) {
  ApexAssignment a{c, std::vector<int>(pl.lattice.size(), -1)};
  std::vector<Rational> value;
  for (const auto& v : pl.polytope.vertices) value.push_back(evaluate_functional(c, v));
  for (const auto& f : pl.lattice.faces()) {
    if (f.vertices.empty()) continue;
    std::set<Rational> seen;
    for (int v : f.vertices)
      if (!seen.insert(value[static_cast<std::size_t>(v)]).second)
        throw GeometryError("functional is not generic on face " + std::to_string(f.id));
    a.apex[static_cast<std::size_t>(f.id)] = *std::min_element(
        f.vertices.begin(), f.vertices.end(),
        [&](int u, int v) { return value[static_cast<std::size_t>(u)] < value[static_cast<std::size_t>(v)]; });
  }
  return a;
}

struct PointedTriangulation {
  Polytope polytope;
  FaceLattice lattice;
  ApexAssignment apexes;
  std::vector<Complex> per_face;  // C_F by face id

  int dim() const { return lattice.dim(); }
  const Complex& complex() const { return per_face.at(static_cast<std::size_t>(lattice.top().id)); }
  int apex_of_polytope() const { return apexes[lattice.top().id]; }
};

inline PointedTriangulation build_pointed_triangulation(const PolytopeWithLattice& pl, const ApexAssignment& apexes) {
  const auto& lattice = pl.lattice;
  if (apexes.apex.size() != lattice.size()) throw GeometryError("apex assignment does not match the lattice");
  for (const auto& f : lattice.faces())
    if (!f.vertices.empty() && !contains_vertex(f.vertices, apexes[f.id]))
      throw GeometryError("apex of face " + std::to_string(f.id) + " is not one of its vertices");

  // chains_from[G]: simplices of chains whose first face is G. Ids are sorted
  // by dimension, so every proper subface is finished before G.
  std::vector<Complex> chains_from(lattice.size());
  std::vector<std::vector<int>> subfaces(lattice.size());
  for (const auto& g : lattice.faces()) {
    if (g.dim < 0) continue;
    const int v = apexes[g.id];
    subfaces[static_cast<std::size_t>(g.id)] = lattice.nonempty_subfaces(g.id);
    auto& out = chains_from[static_cast<std::size_t>(g.id)];
    out.insert(Simplex{{v}});
    for (int h : subfaces[static_cast<std::size_t>(g.id)]) {
      if (h == g.id || contains_vertex(lattice.face(h).vertices, v)) continue;
      for (const auto& s : chains_from[static_cast<std::size_t>(h)]) out.insert(Simplex{detail::with_vertex(s.vertices, v)});
    }
  }

  PointedTriangulation t{pl.polytope, lattice, apexes, std::vector<Complex>(lattice.size())};
  for (const auto& f : lattice.faces()) {
    auto& cf = t.per_face[static_cast<std::size_t>(f.id)];
    cf.insert(Simplex{});
    for (int g : subfaces[static_cast<std::size_t>(f.id)])
      cf.insert(chains_from[static_cast<std::size_t>(g)].begin(), chains_from[static_cast<std::size_t>(g)].end());
  }
  return t;
}

/// Convenience: generic functional, apexes and triangulation in one call.
inline PointedTriangulation triangulate(const PolytopeWithLattice& pl, std::uint64_t seed = 0) {
  return build_pointed_triangulation(pl, assign_apexes(pl, generic_functional(pl.polytope, seed)));
}

struct PointedCertificate {
  bool ok = true;
  int failed_condition = 0;  // 1, 2 or 3; 0 when ok
  std::string detail;
};

/// Checks the three pointedness conditions:
///   1. every maximal simplex of each C_F has dim F and contains v_F;
///   2. {v_F1, v_F2} inside F1 and F2 forces v_F1 = v_F2;
///   3. every edge {v_F, w}, w in Vert(F), lies in C_F.
inline PointedCertificate verify_pointed(const PointedTriangulation& t) {
  const auto& lattice = t.lattice;
  auto fail = [](int cond, std::string why) { return PointedCertificate{false, cond, std::move(why)}; };
  for (const auto& f : lattice.faces()) {
    if (f.dim < 0) continue;
    const int v = t.apexes[f.id];
    for (const auto& s : maximal_simplices(t.per_face[static_cast<std::size_t>(f.id)]))
      if (s.dim() != f.dim || !s.contains(v))
        return fail(1, "face " + std::to_string(f.id) + ": maximal simplex misses the apex or has the wrong dimension");
  }
  for (const auto& f1 : lattice.faces()) {
    if (f1.dim < 0) continue;
    for (const auto& f2 : lattice.faces()) {
      if (f2.dim < 0 || f2.id <= f1.id) continue;
      VertexSet meet = intersect(f1.vertices, f2.vertices);
      int a = t.apexes[f1.id], b = t.apexes[f2.id];
      if (a != b && contains_vertex(meet, a) && contains_vertex(meet, b))
        return fail(2, "faces " + std::to_string(f1.id) + " and " + std::to_string(f2.id) + " share both apexes");
    }
  }
  for (const auto& f : lattice.faces()) {
    if (f.dim < 0) continue;
    const int v = t.apexes[f.id];
    const auto& cf = t.per_face[static_cast<std::size_t>(f.id)];
    for (int w : f.vertices) {
      if (w == v) continue;
      if (!cf.count(Simplex{{std::min(v, w), std::max(v, w)}}))
        return fail(3, "face " + std::to_string(f.id) + ": edge from apex to vertex " + std::to_string(w) + " missing");
    }
  }
  return {};
}

struct ComplexSplit {
  Complex boundary;  // C_dP: simplices inside some proper face
  Complex interior;  // I_P
};

inline bool in_proper_face(const PointedTriangulation& t, const Simplex& s) {
  const auto& lattice = t.lattice;
  if (lattice.dim() == 0) return s.vertices.empty();
  for (int facet : lattice.covers(lattice.top().id))
    if (is_subset(s.vertices, lattice.face(facet).vertices)) return true;
  return false;
}

inline ComplexSplit split_boundary_interior(const PointedTriangulation& t) {
  ComplexSplit out;
  for (const auto& s : t.complex()) (in_proper_face(t, s) ? out.boundary : out.interior).insert(s);
  return out;
}

inline Complex star(int v, const Complex& c) {
  if (!c.count(Simplex{{v}})) throw GeometryError("vertex " + std::to_string(v) + " is not in the complex");
  Complex out;
  for (const auto& s : c)
    if (c.count(Simplex{detail::with_vertex(s.vertices, v)}) || s.contains(v)) out.insert(s);
  return out;
}

inline Complex link(int v, const Complex& c) {
  Complex out;
  for (const auto& s : star(v, c))
    if (!s.contains(v)) out.insert(s);
  return out;
}

/// Structural certificate for |C_P| = P: closure, purity, affine
/// independence of top simplices, the pseudomanifold-with-boundary ridge
/// count, and that the two simplices on an interior ridge lie on opposite
/// sides of it.
struct ComplexCertificate {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

inline std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) out += (i ? "," : "") + std::to_string(s.vertices[i]);
  return out + "]";
}

inline ComplexCertificate verify_complex(const PointedTriangulation& t) {
  ComplexCertificate cert;
  const auto& c = t.complex();
  const int d = t.dim();
  if (closure(c) != c) cert.fail("not closed under taking faces");
  auto tops = maximal_simplices(c);
  for (const auto& s : tops) {
    if (s.dim() != d) cert.fail("not pure: maximal simplex " + to_string(s));
    else if (affine_rank(t.polytope.points(s.vertices)) != d) cert.fail("degenerate simplex " + to_string(s));
  }
  if (d < 1 || !cert.ok) return cert;

  auto local = local_coordinates(t.polytope);
  std::map<Simplex, std::vector<int>> opposite;  // ridge -> opposite vertices
  for (const auto& s : tops)
    for (int v : s.vertices) {
      Simplex ridge = s;
      ridge.vertices.erase(std::find(ridge.vertices.begin(), ridge.vertices.end(), v));
      opposite[ridge].push_back(v);
    }
  for (const auto& ridge : simplices_of_dim(c, d - 1)) {
    const auto& opp = opposite[ridge];
    bool boundary = in_proper_face(t, ridge);
    if (opp.size() != (boundary ? 1u : 2u)) {
      cert.fail("ridge " + to_string(ridge) + " lies in " + std::to_string(opp.size()) + " maximal simplices");
      continue;
    }
    if (!boundary) {
      std::vector<Point> pts;
      for (int v : ridge.vertices) pts.push_back(local[static_cast<std::size_t>(v)]);
      Hyperplane h = hyperplane_through(pts);
      auto a = side_of_hyperplane(h, local[static_cast<std::size_t>(opp[0])]);
      auto b = side_of_hyperplane(h, local[static_cast<std::size_t>(opp[1])]);
      if (a == b || a == Side::on || b == Side::on) cert.fail("simplices overlap across ridge " + to_string(ridge));
    }
  }
  return cert;
}

}  // namespace polynum
