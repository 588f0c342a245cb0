#pragma once

// Polytopes given by rational vertices, and their face lattices. Faces are
// identified with their vertex sets. A lattice is either computed from the
// coordinates (brute-force supporting hyperplanes) or built combinatorially
// for the builtin families.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polynum/exact_geometry.hpp"

namespace polynum {

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains_vertex(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet iota_set(int n) {
  VertexSet s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

struct Polytope {
  std::string name;
  int ambient_dim = 0;
  std::vector<Point> vertices;
  int dim = -1;

  int num_vertices() const { return static_cast<int>(vertices.size()); }

  std::vector<Point> points(const VertexSet& s) const {
    std::vector<Point> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(vertices[static_cast<std::size_t>(v)]);
    return out;
  }
};

/// Validates vertex data and fills in ambient_dim and dim.
inline Polytope make_polytope(std::string name, std::vector<Point> vertices) {
  if (vertices.empty()) throw GeometryError("polytope '" + name + "' has no vertices");
  Polytope p;
  p.name = std::move(name);
  p.ambient_dim = static_cast<int>(vertices[0].dim());
  for (const auto& v : vertices)
    if (static_cast<int>(v.dim()) != p.ambient_dim) throw GeometryError("vertices of mixed dimension in '" + p.name + "'");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) throw GeometryError("duplicate vertex in '" + p.name + "'");
  p.vertices = std::move(vertices);
  p.dim = affine_rank(p.vertices);
  return p;
}

/// Coordinates of the vertices inside their own affine hull: projection onto
/// the pivot coordinates of the difference vectors, which is injective on
/// the hull. The result lives in R^dim.
struct AffineChart {
  std::vector<std::size_t> pivots;

  Point project(const Point& p) const {
    Point out;
    out.coords.reserve(pivots.size());
    for (auto c : pivots) out.coords.push_back(p[c]);
    return out;
  }
};

inline AffineChart affine_chart(const std::vector<Point>& points) {
  if (points.empty()) throw GeometryError("affine chart of an empty point list");
  Matrix rows = difference_rows(points);
  AffineChart chart;
  if (!rows.empty()) chart.pivots = detail::rref(rows, points[0].dim());
  return chart;
}

inline std::vector<Point> local_coordinates(const Polytope& p) {
  auto chart = affine_chart(p.vertices);
  std::vector<Point> out;
  out.reserve(p.vertices.size());
  for (const auto& v : p.vertices) out.push_back(chart.project(v));
  return out;
}

struct Face {
  int id = 0;
  VertexSet vertices;
  int dim = -1;
};

class FaceLattice {
 public:
  FaceLattice() = default;

  /// Builds a lattice from its complete list of (vertex set, dim) pairs.
  /// Must contain the empty face and the top face. Ids are assigned by
  /// (dim, vertex set) order, so the empty face is id 0 and P is the last.
  static FaceLattice from_faces(std::vector<std::pair<VertexSet, int>> faces) {
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    FaceLattice l;
    for (auto& [verts, dim] : faces) {
      int id = static_cast<int>(l.faces_.size());
      if (l.index_.count(verts)) throw GeometryError("face listed with two dimensions");
      l.index_.emplace(verts, id);
      l.faces_.push_back(Face{id, std::move(verts), dim});
    }
    if (l.faces_.empty() || !l.faces_.front().vertices.empty()) throw GeometryError("face lattice lacks the empty face");
    l.dim_ = l.faces_.back().dim;
    l.by_dim_.assign(static_cast<std::size_t>(l.dim_ + 2), {});
    for (const auto& f : l.faces_) l.by_dim_[static_cast<std::size_t>(f.dim + 1)].push_back(f.id);
    if (l.by_dim_.back().size() != 1) throw GeometryError("face lattice has no unique top face");
    for (const auto& f : l.faces_)
      if (!is_subset(f.vertices, l.top().vertices)) throw GeometryError("face not contained in the top face");

    l.covers_.assign(l.faces_.size(), {});
    for (const auto& f : l.faces_) {
      if (f.dim < 0) continue;
      for (int g : l.by_dim_[static_cast<std::size_t>(f.dim)])
        if (is_subset(l.faces_[static_cast<std::size_t>(g)].vertices, f.vertices)) l.covers_[static_cast<std::size_t>(f.id)].push_back(g);
    }
    return l;
  }

  int dim() const { return dim_; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  const Face& top() const { return faces_.back(); }
  const Face& empty_face() const { return faces_.front(); }

  /// Ids of the k-faces, k = -1..dim.
  const std::vector<int>& faces_of_dim(int k) const { return by_dim_.at(static_cast<std::size_t>(k + 1)); }
  /// Ids of the faces covered by `id` (its facets).
  const std::vector<int>& covers(int id) const { return covers_.at(static_cast<std::size_t>(id)); }

  std::optional<int> find(const VertexSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Nonempty faces contained in face `id` (including itself).
  std::vector<int> nonempty_subfaces(int id) const {
    std::vector<int> out;
    const auto& verts = face(id).vertices;
    for (const auto& g : faces_)
      if (g.dim >= 0 && g.dim <= face(id).dim && is_subset(g.vertices, verts)) out.push_back(g.id);
    return out;
  }

  std::vector<std::int64_t> face_counts() const {
    std::vector<std::int64_t> out;
    for (const auto& ids : by_dim_) out.push_back(static_cast<std::int64_t>(ids.size()));
    return out;
  }

 private:
  std::vector<Face> faces_;
  std::map<VertexSet, int> index_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<int>> covers_;
  int dim_ = -1;
};

struct PolytopeWithLattice {
  Polytope polytope;
  FaceLattice lattice;
};

struct Facet {
  Hyperplane hyperplane;  // in local (affine-chart) coordinates
  VertexSet vertices;
};

namespace detail {

template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// Supporting hyperplanes of the facets, found by scanning hyperplanes
/// through d affinely independent vertices. Brute force; fine for d <= 5 and
/// a few dozen vertices.
inline std::vector<Facet> enumerate_facets(const Polytope& p) {
  const int d = p.dim;
  if (d < 1) throw GeometryError("facets need a polytope of dimension >= 1");
  if (p.num_vertices() < d + 1) throw GeometryError("fewer than d+1 vertices");
  auto local = local_coordinates(p);
  if (affine_rank(local) != d) throw GeometryError("vertex set not full-rank after affine restriction");

  std::vector<Facet> facets;
  std::set<VertexSet> seen;
  detail::for_each_subset(p.num_vertices(), d, [&](const std::vector<int>& subset) {
    for (const auto& f : facets)
      if (is_subset(subset, f.vertices)) return;
    std::vector<Point> pts;
    for (int v : subset) pts.push_back(local[static_cast<std::size_t>(v)]);
    if (affine_rank(pts) != d - 1) return;
    Hyperplane h = hyperplane_through(pts);
    bool above = false, below = false;
    VertexSet incident;
    for (int v = 0; v < p.num_vertices(); ++v) {
      switch (side_of_hyperplane(h, local[static_cast<std::size_t>(v)])) {
        case Side::above: above = true; break;
        case Side::below: below = true; break;
        case Side::on: incident.push_back(v); break;
      }
      if (above && below) return;
    }
    if (!seen.insert(incident).second) return;
    facets.push_back(Facet{std::move(h), std::move(incident)});
  });
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return facets;
}

/// Closes a family of vertex sets under intersection, adds P and the empty
/// face, and assigns dims by affine rank.
inline FaceLattice lattice_from_generators(const Polytope& p, const std::vector<VertexSet>& generators) {
  std::set<VertexSet> faces;
  VertexSet all = iota_set(p.num_vertices());
  faces.insert(all);
  faces.insert(VertexSet{});
  std::vector<VertexSet> queue{all};
  while (!queue.empty()) {
    VertexSet cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : generators) {
      VertexSet meet = intersect(cur, g);
      if (faces.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<std::pair<VertexSet, int>> with_dims;
  for (const auto& f : faces) with_dims.emplace_back(f, f.empty() ? -1 : affine_rank(p.points(f)));
  auto lattice = FaceLattice::from_faces(std::move(with_dims));
  for (int v = 0; v < p.num_vertices(); ++v)
    if (!lattice.find(VertexSet{v})) throw GeometryError("vertex " + std::to_string(v) + " of '" + p.name + "' is not extremal");
  return lattice;
}

inline FaceLattice build_face_lattice(const Polytope& p) {
  if (p.dim == 0) return FaceLattice::from_faces({{VertexSet{}, -1}, {VertexSet{0}, 0}});
  std::vector<VertexSet> generators;
  for (auto& f : enumerate_facets(p)) generators.push_back(std::move(f.vertices));
  return lattice_from_generators(p, generators);
}

/// Indices of the points that are vertices of their convex hull.
inline std::vector<int> extremal_points(const std::vector<Point>& points) {
  Polytope p;
  p.vertices = points;
  p.ambient_dim = points.empty() ? 0 : static_cast<int>(points[0].dim());
  p.dim = affine_rank(points);
  if (p.dim == 0) return {0};
  std::vector<VertexSet> generators;
  for (auto& f : enumerate_facets(p)) generators.push_back(std::move(f.vertices));
  std::vector<int> out;
  for (int v = 0; v < p.num_vertices(); ++v) {
    VertexSet meet = iota_set(p.num_vertices());
    bool on_boundary = false;
    for (const auto& g : generators)
      if (contains_vertex(g, v)) {
        meet = intersect(meet, g);
        on_boundary = true;
      }
    if (on_boundary && meet == VertexSet{v}) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builtin families, with combinatorially constructed lattices.

inline PolytopeWithLattice simplex_polytope(int d) {
  if (d < 0) throw GeometryError("simplex dimension must be >= 0");
  std::vector<Point> verts;
  for (int i = 0; i <= d; ++i) {
    Point v(std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    if (i > 0) v[static_cast<std::size_t>(i - 1)] = 1;
    verts.push_back(std::move(v));
  }
  std::vector<std::pair<VertexSet, int>> faces;
  for (std::uint32_t mask = 0; mask < (1u << (d + 1)); ++mask) {
    VertexSet s;
    for (int i = 0; i <= d; ++i)
      if (mask & (1u << i)) s.push_back(i);
    int dim = static_cast<int>(s.size()) - 1;
    faces.emplace_back(std::move(s), dim);
  }
  return {make_polytope("simplex:" + std::to_string(d), std::move(verts)), FaceLattice::from_faces(std::move(faces))};
}

/// {0,1}^d; vertex index bit k is coordinate k.
inline PolytopeWithLattice cube_polytope(int d) {
  if (d < 0 || d > 20) throw GeometryError("cube dimension must be in [0, 20]");
  std::vector<Point> verts;
  const int n = 1 << d;
  for (int i = 0; i < n; ++i) {
    Point v;
    for (int k = 0; k < d; ++k) v.coords.emplace_back((i >> k) & 1);
    verts.push_back(std::move(v));
  }
  // A face is a word in {0, 1, *}^d.
  std::vector<std::pair<VertexSet, int>> faces{{VertexSet{}, -1}};
  int words = 1;
  for (int k = 0; k < d; ++k) words *= 3;
  for (int w = 0; w < words; ++w) {
    std::vector<int> digit(static_cast<std::size_t>(d));
    int rest = w, free = 0;
    for (int k = 0; k < d; ++k) {
      digit[static_cast<std::size_t>(k)] = rest % 3;
      rest /= 3;
      if (digit[static_cast<std::size_t>(k)] == 2) ++free;
    }
    VertexSet s;
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      for (int k = 0; k < d && ok; ++k) {
        int want = digit[static_cast<std::size_t>(k)];
        ok = want == 2 || ((i >> k) & 1) == want;
      }
      if (ok) s.push_back(i);
    }
    faces.emplace_back(std::move(s), free);
  }
  return {make_polytope("cube:" + std::to_string(d), std::move(verts)), FaceLattice::from_faces(std::move(faces))};
}

/// Conv(+-e_k); vertex 2k is +e_k, 2k+1 is -e_k.
inline PolytopeWithLattice cross_polytope(int d) {
  if (d < 1 || d > 20) throw GeometryError("cross-polytope dimension must be in [1, 20]");
  std::vector<Point> verts;
  for (int k = 0; k < d; ++k)
    for (int sign : {1, -1}) {
      Point v(std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
      v[static_cast<std::size_t>(k)] = sign;
      verts.push_back(std::move(v));
    }
  // Proper faces pick at most one sign per axis.
  std::vector<std::pair<VertexSet, int>> faces;
  int words = 1;
  for (int k = 0; k < d; ++k) words *= 3;
  for (int w = 0; w < words; ++w) {
    VertexSet s;
    int rest = w;
    for (int k = 0; k < d; ++k) {
      int digit = rest % 3;
      rest /= 3;
      if (digit < 2) s.push_back(2 * k + digit);
    }
    int dim = static_cast<int>(s.size()) - 1;
    faces.emplace_back(std::move(s), dim);
  }
  faces.emplace_back(iota_set(2 * d), d);
  return {make_polytope("cross:" + std::to_string(d), std::move(verts)), FaceLattice::from_faces(std::move(faces))};
}

namespace detail {

inline Point vertex_barycenter(const Polytope& p) {
  Point c(std::vector<Rational>(static_cast<std::size_t>(p.ambient_dim), Rational(0)));
  for (const auto& v : p.vertices)
    for (std::size_t k = 0; k < c.dim(); ++k) c[k] += v[k];
  for (auto& x : c.coords) x /= p.num_vertices();
  return c;
}

inline Point lifted(const Point& p, Rational height) {
  Point out = p;
  out.coords.push_back(std::move(height));
  return out;
}

inline VertexSet shifted(const VertexSet& s, int offset) {
  VertexSet out;
  for (int v : s) out.push_back(v + offset);
  return out;
}

inline VertexSet with_vertex(VertexSet s, int v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

}  // namespace detail

/// Base at height 0, apex over the base's vertex barycenter at height 1.
inline PolytopeWithLattice pyramid_over(const PolytopeWithLattice& base) {
  const auto& b = base.polytope;
  std::vector<Point> verts;
  for (const auto& v : b.vertices) verts.push_back(detail::lifted(v, 0));
  verts.push_back(detail::lifted(detail::vertex_barycenter(b), 1));
  const int apex = b.num_vertices();
  std::vector<std::pair<VertexSet, int>> faces;
  for (const auto& f : base.lattice.faces()) {
    faces.emplace_back(f.vertices, f.dim);
    faces.emplace_back(detail::with_vertex(f.vertices, apex), f.dim + 1);
  }
  return {make_polytope("pyramid(" + b.name + ")", std::move(verts)), FaceLattice::from_faces(std::move(faces))};
}

/// base x [0,1]; vertex i + k*n is (base vertex i, k).
inline PolytopeWithLattice prism_over(const PolytopeWithLattice& base) {
  const auto& b = base.polytope;
  const int n = b.num_vertices();
  std::vector<Point> verts;
  for (int k = 0; k < 2; ++k)
    for (const auto& v : b.vertices) verts.push_back(detail::lifted(v, k));
  std::vector<std::pair<VertexSet, int>> faces{{VertexSet{}, -1}};
  for (const auto& f : base.lattice.faces()) {
    if (f.dim < 0) continue;
    faces.emplace_back(f.vertices, f.dim);
    faces.emplace_back(detail::shifted(f.vertices, n), f.dim);
    VertexSet both = f.vertices;
    for (int v : f.vertices) both.push_back(v + n);
    faces.emplace_back(std::move(both), f.dim + 1);
  }
  return {make_polytope("prism(" + b.name + ")", std::move(verts)), FaceLattice::from_faces(std::move(faces))};
}

/// Base at height 0, apexes over the barycenter at heights +1 and -1.
inline PolytopeWithLattice bipyramid_over(const PolytopeWithLattice& base) {
  const auto& b = base.polytope;
  if (b.dim < 1) throw GeometryError("bipyramid needs a base of dimension >= 1");
  std::vector<Point> verts;
  for (const auto& v : b.vertices) verts.push_back(detail::lifted(v, 0));
  Point centre = detail::vertex_barycenter(b);
  verts.push_back(detail::lifted(centre, 1));
  verts.push_back(detail::lifted(centre, -1));
  const int up = b.num_vertices(), down = up + 1;
  std::vector<std::pair<VertexSet, int>> faces;
  for (const auto& f : base.lattice.faces()) {
    if (f.id == base.lattice.top().id) continue;
    faces.emplace_back(f.vertices, f.dim);
    faces.emplace_back(detail::with_vertex(f.vertices, up), f.dim + 1);
    faces.emplace_back(detail::with_vertex(f.vertices, down), f.dim + 1);
  }
  faces.emplace_back(iota_set(b.num_vertices() + 2), b.dim + 1);
  return {make_polytope("bipyramid(" + b.name + ")", std::move(verts)), FaceLattice::from_faces(std::move(faces))};
}

}  // namespace polynum
