#pragma once

// Visibility partitions of a pointed triangulation from a generic interior
// point x, and the f-, h-, k-, e-vectors they certify.
//
// For a top simplex F and the facet of F opposite vertex u, the facet is
// visible from x iff x and u lie strictly on opposite sides of its
// hyperplane. G_F collects the vertices opposite visible facets and D_F the
// rest; [G_F, F] partitions C_P and [D_F, F] partitions the interior
// complex I_P.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polynum/triangulation.hpp"

namespace polynum {

using Counts = std::vector<std::int64_t>;

// ---------------------------------------------------------------------------
// Vectors

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// f_{-1}..f_d stored at index k+1. f_{-1} counts the empty simplex.
inline Counts f_vector(const Complex& c, int d) {
  Counts f(static_cast<std::size_t>(d + 2), 0);
  for (const auto& s : c)
    if (s.dim() <= d) ++f[static_cast<std::size_t>(s.dim() + 1)];
  return f;
}

/// e_0..e_d: face counts of I_P by dimension.
inline Counts e_vector(const Complex& interior, int d) {
  Counts e(static_cast<std::size_t>(d + 1), 0);
  for (const auto& s : interior)
    if (s.dim() >= 0 && s.dim() <= d) ++e[static_cast<std::size_t>(s.dim())];
  return e;
}

/// h_k = sum_{i=0}^{k} (-1)^(k-i) C(d+1-i, k-i) f_{i-1},  k = 0..d+1.
inline Counts h_from_f(const Counts& f, int d) {
  if (f.size() != static_cast<std::size_t>(d + 2)) throw GeometryError("f-vector length must be d+2");
  Counts h(static_cast<std::size_t>(d + 2), 0);
  for (int k = 0; k <= d + 1; ++k)
    for (int i = 0; i <= k; ++i) {
      std::int64_t term = binomial(d + 1 - i, k - i) * f[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(k)] += ((k - i) % 2 ? -term : term);
    }
  return h;
}

/// f_i = sum_{j=0}^{i+1} h_j C(d+1-j, i+1-j),  i = -1..d.
inline Counts f_from_h(const Counts& h, int d) {
  if (h.size() != static_cast<std::size_t>(d + 2)) throw GeometryError("h-vector length must be d+2");
  Counts f(static_cast<std::size_t>(d + 2), 0);
  for (int i = -1; i <= d; ++i)
    for (int j = 0; j <= i + 1; ++j)
      f[static_cast<std::size_t>(i + 1)] += h[static_cast<std::size_t>(j)] * binomial(d + 1 - j, i + 1 - j);
  return f;
}

/// Alternating sum over dims 0..l of an f-vector stored from index -1.
inline std::int64_t euler_characteristic(const Counts& f) {
  std::int64_t chi = 0;
  for (std::size_t k = 1; k < f.size(); ++k) chi += ((k - 1) % 2 ? -f[k] : f[k]);
  return chi;
}

/// e_i = sum_{j=0}^{i+1} k_j C(d+1-j, i+1-j).
inline Counts e_from_k(const Counts& k, int d) {
  Counts e(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i + 1; ++j)
      e[static_cast<std::size_t>(i)] += k[static_cast<std::size_t>(j)] * binomial(d + 1 - j, i + 1 - j);
  return e;
}

// ---------------------------------------------------------------------------
// Generic point

struct GenericPoint {
  Point x;                       // ambient coordinates
  Point local;                   // affine-chart coordinates
  Simplex start;                 // top simplex whose interior holds x
  std::vector<Simplex> checked;  // simplices of dim < d whose hulls x avoids
  int attempts = 0;
};

namespace detail {

inline bool avoids_low_hulls(const std::vector<Point>& local, const Complex& c, int d, const Point& x,
                             std::vector<Simplex>* checked) {
  if (checked) checked->clear();
  for (const auto& s : c) {
    if (s.dim() < 0 || s.dim() >= d) continue;
    std::vector<Point> pts;
    for (int v : s.vertices) pts.push_back(local[static_cast<std::size_t>(v)]);
    if (affine_hull_contains(pts, x)) return false;
    if (checked) checked->push_back(s);
  }
  return true;
}

}  // namespace detail

/// Seeded search: barycentric perturbation of the barycenter of the top
/// simplex chosen by the seed, with a shrinking step, until x lies in no
/// affine hull of a lower-dimensional simplex.
inline GenericPoint generic_point(const PointedTriangulation& t, std::uint64_t seed = 0) {
  const int d = t.dim();
  if (d < 1) throw GeometryError("generic point needs dimension >= 1");
  const auto local = local_coordinates(t.polytope);
  const auto tops = simplices_of_dim(t.complex(), d);
  if (tops.empty()) throw GeometryError("triangulation has no top simplices");
  GenericPoint g;
  g.start = tops[static_cast<std::size_t>(seed % tops.size())];

  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(d + 1);
  for (int attempt = 0;; ++attempt) {
    std::vector<std::int64_t> r(n);
    std::int64_t sum = 0, biggest = 1;
    for (auto& ri : r) {
      ri = static_cast<std::int64_t>(rng() % 2001) - 1000;
      sum += ri;
    }
    // Shift to sum zero: weights stay barycentric.
    std::vector<Rational> dir(n);
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = Rational(r[i]) - Rational(sum, static_cast<std::int64_t>(n));
      biggest = std::max<std::int64_t>(biggest, std::abs(r[i]) + std::abs(sum));
    }
    Rational step(1, Integer(static_cast<std::int64_t>(n) * (biggest + 1)) << std::min(attempt, 512));
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(1, static_cast<std::int64_t>(n)) + step * dir[i];

    Point x(std::vector<Rational>(static_cast<std::size_t>(t.polytope.ambient_dim), Rational(0)));
    Point xl(std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::size_t>(g.start.vertices[i]);
      for (std::size_t k = 0; k < x.dim(); ++k) x[k] += w[i] * t.polytope.vertices[v][k];
      for (std::size_t k = 0; k < xl.dim(); ++k) xl[k] += w[i] * local[v][k];
    }
    g.attempts = attempt + 1;
    if (detail::avoids_low_hulls(local, t.complex(), d, xl, &g.checked)) {
      g.x = std::move(x);
      g.local = std::move(xl);
      return g;
    }
  }
}

// ---------------------------------------------------------------------------
// Partitions

enum class IntervalKind { exterior, interior };

/// {G : lower <= G <= upper}.
struct Interval {
  Simplex lower;
  Simplex upper;
  IntervalKind kind = IntervalKind::exterior;

  bool contains(const Simplex& g) const {
    return is_subset(lower.vertices, g.vertices) && is_subset(g.vertices, upper.vertices);
  }
  std::int64_t size() const { return std::int64_t{1} << (upper.vertices.size() - lower.vertices.size()); }
};

struct Partition {
  std::vector<Interval> intervals;
  IntervalKind kind = IntervalKind::exterior;
  int dim = 0;
};

/// Vertices u of the top simplex F whose opposite facet is visible from x.
/// The returned set indexes the facets of R_F by their opposite vertex.
inline VertexSet visible_facets(const Simplex& top, const std::vector<Point>& local, const Point& x) {
  VertexSet opposite_visible;
  for (int u : top.vertices) {
    std::vector<Point> facet;
    for (int v : top.vertices)
      if (v != u) facet.push_back(local[static_cast<std::size_t>(v)]);
    Hyperplane h = hyperplane_through(facet);
    Side sx = side_of_hyperplane(h, x);
    if (sx == Side::on) throw GeometryError("point lies on a facet hyperplane; not generic");
    if (sx != side_of_hyperplane(h, local[static_cast<std::size_t>(u)])) opposite_visible.push_back(u);
  }
  return opposite_visible;
}

namespace detail {

inline Partition visibility_partition(const PointedTriangulation& t, const GenericPoint& g, IntervalKind kind) {
  const int d = t.dim();
  Partition p;
  p.kind = kind;
  p.dim = d;
  const auto local = local_coordinates(t.polytope);
  for (const auto& top : simplices_of_dim(t.complex(), d)) {
    VertexSet visible = d >= 1 ? visible_facets(top, local, g.local) : VertexSet{};
    Simplex lower;
    if (kind == IntervalKind::exterior) {
      lower.vertices = visible;
    } else {
      std::set_difference(top.vertices.begin(), top.vertices.end(), visible.begin(), visible.end(),
                          std::back_inserter(lower.vertices));
    }
    p.intervals.push_back(Interval{std::move(lower), top, kind});
  }
  return p;
}

}  // namespace detail

/// Intervals [G_F, F] covering C_P.
inline Partition exterior_partition(const PointedTriangulation& t, const GenericPoint& g) {
  return detail::visibility_partition(t, g, IntervalKind::exterior);
}

/// Intervals [D_F, F] covering I_P.
inline Partition interior_partition(const PointedTriangulation& t, const GenericPoint& g) {
  return detail::visibility_partition(t, g, IntervalKind::interior);
}

struct PartitionCertificate {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Every target element in exactly one interval, every interval element in
/// the target. Checked element by element.
inline PartitionCertificate verify_partition(const Partition& p, const Complex& target) {
  PartitionCertificate cert;
  auto violate = [&](std::string why) {
    cert.ok = false;
    if (cert.violations.size() < 20) cert.violations.push_back(std::move(why));
  };
  for (const auto& s : target) {
    int hits = 0;
    for (const auto& iv : p.intervals) hits += iv.contains(s) ? 1 : 0;
    if (hits != 1) violate(to_string(s) + " lies in " + std::to_string(hits) + " intervals");
  }
  for (const auto& iv : p.intervals) {
    VertexSet free;
    std::set_difference(iv.upper.vertices.begin(), iv.upper.vertices.end(), iv.lower.vertices.begin(),
                        iv.lower.vertices.end(), std::back_inserter(free));
    if (!is_subset(iv.lower.vertices, iv.upper.vertices)) {
      violate("interval lower " + to_string(iv.lower) + " not inside upper " + to_string(iv.upper));
      continue;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      Simplex g = iv.lower;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) g.vertices.push_back(free[i]);
      std::sort(g.vertices.begin(), g.vertices.end());
      if (!target.count(g)) violate(to_string(g) + " from interval " + to_string(iv.upper) + " is not in the target");
    }
  }
  return cert;
}

/// Histogram of |lower| over intervals, indices 0..d+1: the h-vector for an
/// exterior partition, the k-vector for an interior one. Refuses partitions
/// that fail verification against `target`.
inline Counts histogram_from_partition(const Partition& p, const Complex& target) {
  if (!verify_partition(p, target).ok) throw GeometryError("partition does not verify against its target");
  Counts out(static_cast<std::size_t>(p.dim + 2), 0);
  for (const auto& iv : p.intervals) ++out.at(iv.lower.vertices.size());
  return out;
}

inline Counts h_from_partition(const Partition& p, const Complex& c_p) {
  if (p.kind != IntervalKind::exterior) throw GeometryError("h-vector needs an exterior partition");
  return histogram_from_partition(p, c_p);
}

inline Counts k_from_partition(const Partition& p, const Complex& interior) {
  if (p.kind != IntervalKind::interior) throw GeometryError("k-vector needs an interior partition");
  return histogram_from_partition(p, interior);
}

/// All vectors of one triangulation, computed along both routes where two
/// exist.
struct VectorSet {
  int dim = 0;
  Counts f;       // C_P, indices -1..d
  Counts h;       // from f
  Counts h_partition;
  Counts k;       // from the interior partition
  Counts e;       // I_P, indices 0..d
  Counts f_boundary;
};

inline VectorSet compute_vectors(const PointedTriangulation& t, const GenericPoint& g) {
  const int d = t.dim();
  auto split = split_boundary_interior(t);
  VectorSet vs;
  vs.dim = d;
  vs.f = f_vector(t.complex(), d);
  vs.h = h_from_f(vs.f, d);
  vs.h_partition = h_from_partition(exterior_partition(t, g), t.complex());
  vs.k = k_from_partition(interior_partition(t, g), split.interior);
  vs.e = e_vector(split.interior, d);
  vs.f_boundary = f_vector(split.boundary, d);
  return vs;
}

}  // namespace polynum
