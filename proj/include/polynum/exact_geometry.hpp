#pragma once

// Exact rational points, functionals and hyperplanes, plus the handful of
// predicates (side tests, affine rank, ray/simplex ordering) the rest of the
// library is built on. No floating point anywhere.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace polynum {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised for malformed input: dimension mismatches, degenerate simplices,
/// unparsable numbers and polytope files.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
};

struct LinearFunctional {
  std::vector<Rational> coeffs;

  std::size_t dim() const { return coeffs.size(); }
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// Locus normal . x = offset.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  Hyperplane() = default;
  Hyperplane(std::vector<Rational> n, Rational off) : normal(std::move(n)), offset(std::move(off)) {
    if (std::all_of(normal.begin(), normal.end(), [](const Rational& r) { return r == 0; }))
      throw GeometryError("hyperplane normal must be nonzero");
  }

  std::size_t dim() const { return normal.size(); }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class Side : int { below = -1, on = 0, above = 1 };

enum class HitOrder { before_y, at_or_after_y, misses };

// ---------------------------------------------------------------------------
// Rational text form: "p/q" or "p".

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw GeometryError("not a rational: '" + std::string(text) + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw GeometryError("not a rational: '" + std::string(text) + "'");
  Integer q(strip_plus(den));
  if (q == 0) throw GeometryError("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(strip_plus(num)), q);
}

inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// ---------------------------------------------------------------------------
// Dense exact linear algebra. Small matrices only (dimension <= ~10).

using Matrix = std::vector<std::vector<Rational>>;

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  return detail::rref(m, m.front().size()).size();
}

/// Basis of {z : m z = 0}.
inline std::vector<std::vector<Rational>> null_space(Matrix m, std::size_t cols) {
  auto pivots = detail::rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> z(cols, Rational(0));
    z[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -m[r][free];
    basis.push_back(std::move(z));
  }
  return basis;
}

/// Solution set of a z = b: one particular solution plus a null-space basis,
/// or nullopt when inconsistent.
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;
};

inline std::optional<AffineSolution> solve_linear(const Matrix& a, const std::vector<Rational>& b, std::size_t cols) {
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = detail::rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][cols];
  sol.directions = null_space(a, cols);
  return sol;
}

// ---------------------------------------------------------------------------
// Predicates

inline Rational evaluate_functional(const LinearFunctional& c, const Point& p) {
  if (c.dim() != p.dim()) throw GeometryError("functional/point dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) acc += c.coeffs[i] * p[i];
  return acc;
}

inline Side side_of_hyperplane(const Hyperplane& h, const Point& p) {
  if (h.dim() != p.dim()) throw GeometryError("hyperplane/point dimension mismatch");
  Rational acc = -h.offset;
  for (std::size_t i = 0; i < p.dim(); ++i) acc += h.normal[i] * p[i];
  return acc > 0 ? Side::above : (acc < 0 ? Side::below : Side::on);
}

inline Matrix difference_rows(const std::vector<Point>& points) {
  Matrix rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != points[0].dim()) throw GeometryError("points of mixed dimension");
    std::vector<Rational> row(points[0].dim());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = points[i][k] - points[0][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int affine_rank(const std::vector<Point>& points) {
  if (points.empty()) throw GeometryError("affine_rank of an empty point list");
  return static_cast<int>(matrix_rank(difference_rows(points)));
}

inline bool affine_hull_contains(const std::vector<Point>& points, const Point& q) {
  if (points.empty()) throw GeometryError("affine hull of an empty point list");
  if (q.dim() != points[0].dim()) throw GeometryError("query point dimension mismatch");
  std::vector<Point> with_q = points;
  with_q.push_back(q);
  return affine_rank(with_q) == affine_rank(points);
}

/// Canonical form: integer primitive normal with first nonzero entry positive.
inline Hyperplane canonical(Hyperplane h) {
  Integer lcm_den = 1;
  for (const auto& r : h.normal) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(r));
  lcm_den = boost::multiprecision::lcm(lcm_den, denominator(h.offset));
  Integer g = 0;
  for (const auto& r : h.normal) g = boost::multiprecision::gcd(g, numerator(r) * (lcm_den / denominator(r)));
  g = boost::multiprecision::gcd(g, numerator(h.offset) * (lcm_den / denominator(h.offset)));
  Rational scale(lcm_den, g);
  auto first = std::find_if(h.normal.begin(), h.normal.end(), [](const Rational& r) { return r != 0; });
  if (*first < 0) scale = -scale;
  for (auto& r : h.normal) r *= scale;
  h.offset *= scale;
  return h;
}

/// Hyperplane through `points` inside R^n, where the points span an
/// (n-1)-dimensional affine subspace. Canonicalized.
inline Hyperplane hyperplane_through(const std::vector<Point>& points) {
  if (points.empty()) throw GeometryError("hyperplane through no points");
  std::size_t n = points[0].dim();
  auto rows = difference_rows(points);
  auto basis = null_space(rows, n);
  if (basis.size() != 1) throw GeometryError("points do not span a hyperplane");
  Rational off = 0;
  for (std::size_t i = 0; i < n; ++i) off += basis[0][i] * points[0][i];
  return canonical(Hyperplane(basis[0], off));
}

/// Barycentric coordinates of q with respect to affinely independent
/// vertices, or nullopt if q is off their affine hull.
inline std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& simplex, const Point& q) {
  if (simplex.empty()) throw GeometryError("barycentric coordinates on an empty simplex");
  std::size_t n = q.dim(), k = simplex.size();
  Matrix a(n + 1, std::vector<Rational>(k));
  std::vector<Rational> b(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = simplex[c][r];
    b[r] = q[r];
  }
  for (std::size_t c = 0; c < k; ++c) a[n][c] = 1;
  b[n] = 1;
  auto sol = solve_linear(a, b, k);
  if (!sol) return std::nullopt;
  if (!sol->directions.empty()) throw GeometryError("degenerate simplex");
  return sol->particular;
}

/// Where the ray from x through y first meets the closed simplex: strictly
/// before y, at or after y, or never.
inline HitOrder segment_first_hit(const Point& x, const Point& y, const std::vector<Point>& simplex) {
  if (simplex.empty()) throw GeometryError("degenerate simplex");
  if (x.dim() != y.dim()) throw GeometryError("ray endpoints of mixed dimension");
  for (const auto& v : simplex)
    if (v.dim() != x.dim()) throw GeometryError("simplex/ray dimension mismatch");
  if (affine_rank(simplex) + 1 != static_cast<int>(simplex.size())) throw GeometryError("degenerate simplex");

  // Unknowns (lambda_0..lambda_k, t):  sum lambda_i v_i - t (y - x) = x,  sum lambda_i = 1.
  std::size_t n = x.dim(), k = simplex.size(), cols = k + 1;
  Matrix a(n + 1, std::vector<Rational>(cols));
  std::vector<Rational> b(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = simplex[c][r];
    a[r][k] = -(y[r] - x[r]);
    b[r] = x[r];
  }
  for (std::size_t c = 0; c < k; ++c) a[n][c] = 1;
  b[n] = 1;
  auto sol = solve_linear(a, b, cols);
  if (!sol) return HitOrder::misses;

  if (sol->directions.empty()) {
    const auto& z = sol->particular;
    bool inside = std::all_of(z.begin(), z.end(), [](const Rational& r) { return r >= 0; });
    if (!inside) return HitOrder::misses;
    return z[k] < 1 ? HitOrder::before_y : HitOrder::at_or_after_y;
  }
  if (sol->directions.size() > 1 || sol->directions[0][k] == 0)
    throw GeometryError("ray lies in the simplex's affine hull without it being full-dimensional");

  // Re-parametrize by t: lambda(t) = p + (t - p_t) * dir / dir_t. Feasible t is an interval.
  const auto& p = sol->particular;
  const auto& dir = sol->directions[0];
  std::optional<Rational> lo = Rational(0), hi;
  for (std::size_t i = 0; i < k; ++i) {
    Rational slope = dir[i] / dir[k];
    Rational at_zero = p[i] - p[k] * slope;  // lambda_i at t = 0
    if (slope == 0) {
      if (at_zero < 0) return HitOrder::misses;
      continue;
    }
    Rational root = -at_zero / slope;
    if (slope > 0) {
      if (!lo || root > *lo) lo = root;
    } else {
      if (!hi || root < *hi) hi = root;
    }
  }
  if (hi && *hi < *lo) return HitOrder::misses;
  return *lo < 1 ? HitOrder::before_y : HitOrder::at_or_after_y;
}

}  // namespace polynum
