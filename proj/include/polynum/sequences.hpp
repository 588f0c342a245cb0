#pragma once

// Polytope numbers P(n) and interior numbers P(n)^#.
//
// The recursion over the face lattice is the definition; the simplex sums
// over C_P / I_P and the h-, k- and reversed-h decompositions into shifted
// simplex numbers are alternative routes that must agree with it exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polynum/partition.hpp"

namespace polynum {

inline Integer big_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// alpha^d(n) = C(n+d-1, d) for n >= 1, and 0 for n <= 0.
inline Integer simplex_number(int d, std::int64_t n) {
  if (d < 0) throw GeometryError("simplex number dimension must be >= 0");
  if (n <= 0) return 0;
  return big_binomial(n + d - 1, d);
}

/// alpha^d(n)^#: alpha^d(n-d-1); a point counts itself for every n >= 1.
inline Integer simplex_interior(int d, std::int64_t n) {
  if (d == 0) return n >= 1 ? 1 : 0;
  return simplex_number(d, n - d - 1);
}

/// Permutations of [d] with exactly i descents.
inline Integer eulerian_number(int d, int i) {
  if (d < 1 || i < 0 || i >= d) return 0;
  std::vector<Integer> row{1};
  for (int m = 2; m <= d; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      if (j < m - 1) next[static_cast<std::size_t>(j)] += (j + 1) * row[static_cast<std::size_t>(j)];
      if (j > 0) next[static_cast<std::size_t>(j)] += (m - j) * row[static_cast<std::size_t>(j - 1)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

/// Cross-polytope numbers: sum_{i<d} C(d-1, i) alpha^d(n-i).
inline Integer cross_number(int d, std::int64_t n) {
  if (d < 1) throw GeometryError("cross-polytope numbers need d >= 1");
  Integer acc = 0;
  for (int i = 0; i < d; ++i) acc += big_binomial(d - 1, i) * simplex_number(d, n - i);
  return acc;
}

/// Measure-polytope (cube) numbers: sum_{i<d} <d,i> alpha^d(n-i).
inline Integer measure_number(int d, std::int64_t n) {
  if (d < 1) throw GeometryError("measure-polytope numbers need d >= 1");
  Integer acc = 0;
  for (int i = 0; i < d; ++i) acc += eulerian_number(d, i) * simplex_number(d, n - i);
  return acc;
}

// ---------------------------------------------------------------------------

enum class Method { recursive, simplex_sum, h_decomposition, k_decomposition, closed_form };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::recursive: return "recursive";
    case Method::simplex_sum: return "simplex-sum";
    case Method::h_decomposition: return "h";
    case Method::k_decomposition: return "k";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
  for (auto m : {Method::recursive, Method::simplex_sum, Method::h_decomposition, Method::k_decomposition,
                 Method::closed_form})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

enum class Basis { alpha_shifted, alpha_shifted_interior };

struct Decomposition {
  int dim = 0;
  Counts coeffs;
  Basis basis = Basis::alpha_shifted;
};

struct SequenceResult {
  std::vector<Integer> values;  // n = 0..n_max
  Method method = Method::recursive;
  bool interior = false;
  std::optional<Decomposition> decomposition;
};

/// Exterior and interior sequences of every face, indexed by face id, from
/// the face-lattice recursion:
///   P(n)   = P(n-1) + sum over faces F not containing v_P of F(n)^#
///   P(n)^# = P(n)   - sum over proper nonempty faces F of F(n)^#
/// with P(0) = P(0)^# = 0, P(1) = 1, P(1)^# = 0, and points equal to 1 for
/// every n >= 1. Faces are processed by increasing dimension, so each face
/// sequence is computed once.
struct FaceSequences {
  std::vector<std::vector<Integer>> exterior;
  std::vector<std::vector<Integer>> interior;
};

inline FaceSequences face_sequences(const FaceLattice& lattice, const ApexAssignment& apexes, std::int64_t n_max) {
  if (n_max < 0) throw GeometryError("n_max must be >= 0");
  if (apexes.apex.size() != lattice.size()) throw GeometryError("apex assignment does not match the lattice");
  const auto len = static_cast<std::size_t>(n_max + 1);
  FaceSequences seq;
  seq.exterior.assign(lattice.size(), std::vector<Integer>(len, 0));
  seq.interior.assign(lattice.size(), std::vector<Integer>(len, 0));
  for (const auto& f : lattice.faces()) {
    if (f.dim < 0) continue;
    auto& ext = seq.exterior[static_cast<std::size_t>(f.id)];
    auto& in = seq.interior[static_cast<std::size_t>(f.id)];
    if (f.dim == 0) {
      for (std::size_t n = 1; n < len; ++n) ext[n] = in[n] = 1;
      continue;
    }
    const int apex = apexes[f.id];
    if (!contains_vertex(f.vertices, apex)) throw GeometryError("inconsistent apex for face " + std::to_string(f.id));
    std::vector<int> proper, avoiding_apex;
    for (int g : lattice.nonempty_subfaces(f.id)) {
      if (g == f.id) continue;
      proper.push_back(g);
      if (!contains_vertex(lattice.face(g).vertices, apex)) avoiding_apex.push_back(g);
    }
    if (len > 1) ext[1] = 1;
    for (std::size_t n = 2; n < len; ++n) {
      Integer grow = 0, rim = 0;
      for (int g : avoiding_apex) grow += seq.interior[static_cast<std::size_t>(g)][n];
      for (int g : proper) rim += seq.interior[static_cast<std::size_t>(g)][n];
      ext[n] = ext[n - 1] + grow;
      in[n] = ext[n] - rim;
    }
  }
  return seq;
}

inline SequenceResult polytope_number_recursive(const FaceLattice& lattice, const ApexAssignment& apexes,
                                                std::int64_t n_max, bool interior = false) {
  auto seq = face_sequences(lattice, apexes, n_max);
  const auto top = static_cast<std::size_t>(lattice.top().id);
  return SequenceResult{interior ? seq.interior[top] : seq.exterior[top], Method::recursive, interior, std::nullopt};
}

/// sum_i f_i alpha^i(n)^# over C_P (exterior, for n >= 2; P(0) = 0 and
/// P(1) = 1 are the base cases) or sum_i e_i alpha^i(n)^# over I_P.
inline SequenceResult polytope_number_simplex_sum(const PointedTriangulation& t, std::int64_t n_max,
                                                  bool interior = false) {
  if (n_max < 0) throw GeometryError("n_max must be >= 0");
  const int d = t.dim();
  Counts counts;
  if (interior) {
    counts = e_vector(split_boundary_interior(t).interior, d);
  } else {
    auto f = f_vector(t.complex(), d);
    counts.assign(f.begin() + 1, f.end());
  }
  SequenceResult r{std::vector<Integer>(static_cast<std::size_t>(n_max + 1), 0), Method::simplex_sum, interior,
                   std::nullopt};
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (!interior && n <= 1) {
      r.values[static_cast<std::size_t>(n)] = n;
      continue;
    }
    Integer acc = 0;
    for (int i = 0; i <= d; ++i) acc += counts[static_cast<std::size_t>(i)] * simplex_interior(i, n);
    r.values[static_cast<std::size_t>(n)] = acc;
  }
  return r;
}

/// P(n) = sum_{j=0}^{d-1} h_j alpha^d(n-j). (For a point, j = 0 only.)
inline Integer polytope_number_from_h(const Counts& h, int d, std::int64_t n) {
  Integer acc = 0;
  for (int j = 0; j <= std::max(d - 1, 0); ++j) acc += h.at(static_cast<std::size_t>(j)) * simplex_number(d, n - j);
  return acc;
}

/// P(n)^# = sum_{j=0}^{d+1} k_j alpha^d(n-j).
inline Integer interior_from_k(const Counts& k, int d, std::int64_t n) {
  Integer acc = 0;
  for (int j = 0; j <= d + 1; ++j) acc += k.at(static_cast<std::size_t>(j)) * simplex_number(d, n - j);
  return acc;
}

/// P(n)^# = sum_{j=0}^{d-1} h_j alpha^d(n-d-1+j).
inline Integer interior_from_h_reversed(const Counts& h, int d, std::int64_t n) {
  Integer acc = 0;
  for (int j = 0; j <= d - 1; ++j) acc += h.at(static_cast<std::size_t>(j)) * simplex_number(d, n - d - 1 + j);
  return acc;
}

inline SequenceResult sequence_from_h(const Counts& h, int d, std::int64_t n_max, bool interior = false) {
  SequenceResult r{{}, Method::h_decomposition, interior,
                   Decomposition{d, h, interior ? Basis::alpha_shifted_interior : Basis::alpha_shifted}};
  for (std::int64_t n = 0; n <= n_max; ++n)
    r.values.push_back(interior ? interior_from_h_reversed(h, d, n) : polytope_number_from_h(h, d, n));
  return r;
}

inline SequenceResult sequence_from_k(const Counts& k, int d, std::int64_t n_max) {
  SequenceResult r{{}, Method::k_decomposition, true, Decomposition{d, k, Basis::alpha_shifted}};
  for (std::int64_t n = 0; n <= n_max; ++n) r.values.push_back(interior_from_k(k, d, n));
  return r;
}

// ---------------------------------------------------------------------------
// Identities

/// alpha^d(n) - sum_{i<k} alpha^{d-1}(n-i) == alpha^d(n-k).
inline bool facet_cut_check(int d, std::int64_t n, std::int64_t k) {
  if (d < 1) throw GeometryError("facet-cut needs d >= 1");
  Integer lhs = simplex_number(d, n);
  for (std::int64_t i = 0; i < k; ++i) lhs -= simplex_number(d - 1, n - i);
  return lhs == simplex_number(d, n - k);
}

/// sum_{i=max(j-1,0)}^{d} C(d+1-j, i+1-j) alpha^i(n)^# == alpha^d(n-j).
/// Holds for n >= 2 (and trivially n = 0), the range where interior simplex
/// numbers equal C(n-2, i).
inline bool vandermonde_check(int d, int j, std::int64_t n) {
  Integer lhs = 0;
  for (int i = std::max(j - 1, 0); i <= d; ++i) lhs += big_binomial(d + 1 - j, i + 1 - j) * simplex_interior(i, n);
  return lhs == simplex_number(d, n - j);
}

/// alpha^d(n) - alpha^d(n-1) == alpha^{d-1}(n).
inline bool simplex_difference_check(int d, std::int64_t n) {
  if (d < 1) throw GeometryError("difference identity needs d >= 1");
  return simplex_number(d, n) - simplex_number(d, n - 1) == simplex_number(d - 1, n);
}

}  // namespace polynum
