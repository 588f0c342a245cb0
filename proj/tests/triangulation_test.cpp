#include <gtest/gtest.h>

#include "polynum/io.hpp"

using namespace polynum;

namespace {

// Every chain G_1 > G_2 > ... of nonempty faces inside F with
// v_{G_i} not in G_{i+1}, collected as apex sets. Plain recursion, no memo.
void chains_below(const PointedTriangulation& t, int g, VertexSet acc, Complex& out) {
  const auto& G = t.lattice.face(g);
  acc.push_back(t.apexes[g]);
  std::sort(acc.begin(), acc.end());
  out.insert(Simplex{acc});
  for (const auto& h : t.lattice.faces()) {
    if (h.dim < 0 || h.id == g || !is_subset(h.vertices, G.vertices)) continue;
    if (contains_vertex(h.vertices, t.apexes[g])) continue;
    chains_below(t, h.id, acc, out);
  }
}

Complex chain_oracle(const PointedTriangulation& t, int face_id) {
  Complex out{Simplex{}};
  const auto& F = t.lattice.face(face_id);
  for (const auto& g : t.lattice.faces())
    if (g.dim >= 0 && is_subset(g.vertices, F.vertices)) chains_below(t, g.id, {}, out);
  return out;
}

std::size_t count_dim(const Complex& c, int k) { return simplices_of_dim(c, k).size(); }

bool is_closed_under_faces(const Complex& c) {
  for (const auto& s : c)
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      Simplex sub = s;
      sub.vertices.erase(sub.vertices.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!c.count(sub)) return false;
    }
  return true;
}

}  // namespace

TEST(Functional, CubeWeights) {
  auto cube = cube_polytope(3);
  auto c = generic_functional(cube.polytope);
  EXPECT_EQ(c.coeffs, (std::vector<Rational>{1, 2, 4}));
  std::set<Rational> values;
  for (const auto& v : cube.polytope.vertices) values.insert(evaluate_functional(c, v));
  EXPECT_EQ(values.size(), 8u);
  EXPECT_EQ(*values.begin(), 0);
  EXPECT_EQ(*values.rbegin(), 7);
}

TEST(Functional, SinglePointAndSegment) {
  auto pt = make_polytope("pt", {Point{Rational(1, 3), 2}});
  EXPECT_EQ(generic_functional(pt).dim(), 2u);
  auto seg = make_polytope("seg", {Point{0, 5, 5}, Point{3, 5, 5}});
  auto c = generic_functional(seg);
  EXPECT_NE(evaluate_functional(c, seg.vertices[0]), evaluate_functional(c, seg.vertices[1]));
}

TEST(Functional, FallbackWhenWeightsCollide) {
  // (1, 2) takes the value 0 at both (0,0) and (1,-1/2).
  auto tri = make_polytope("tri", {Point{0, 0}, Point{1, Rational(-1, 2)}, Point{0, Rational(1, 2)}});
  auto c = generic_functional(tri, 7);
  EXPECT_NE(c.coeffs, (std::vector<Rational>{1, 2}));
  std::set<Rational> values;
  for (const auto& v : tri.vertices) values.insert(evaluate_functional(c, v));
  EXPECT_EQ(values.size(), 3u);
  EXPECT_EQ(generic_functional(tri, 7), c);
  auto pl = PolytopeWithLattice{tri, build_face_lattice(tri)};
  EXPECT_TRUE(verify_pointed(triangulate(pl, 7)).ok);
}

TEST(Apexes, Cube) {
  auto cube = cube_polytope(3);
  LinearFunctional c{{1, 2, 4}};
  auto a = assign_apexes(cube, c);
  EXPECT_EQ(a[cube.lattice.top().id], 0);
  EXPECT_EQ(a[*cube.lattice.find({0, 1})], 0);
  EXPECT_EQ(a[*cube.lattice.find({6, 7})], 6);
  for (int v = 0; v < 8; ++v) EXPECT_EQ(a[*cube.lattice.find({v})], v);
  EXPECT_EQ(a[0], -1);
}

TEST(Apexes, TieRejected) {
  auto cube = cube_polytope(3);
  EXPECT_THROW(assign_apexes(cube, LinearFunctional{{1, 1, 4}}), GeometryError);
}

TEST(Apexes, ScalingInvariance) {
  auto cross = cross_polytope(3);
  auto c = generic_functional(cross.polytope);
  LinearFunctional scaled = c;
  for (auto& x : scaled.coeffs) x *= Rational(5, 7);
  EXPECT_EQ(assign_apexes(cross, c).apex, assign_apexes(cross, scaled).apex);
}

TEST(Triangulation, Square) {
  auto t = triangulate(builtin("square"));
  const auto& c = t.complex();
  EXPECT_EQ(count_dim(c, 2), 2u);
  EXPECT_EQ(count_dim(c, 1), 5u);
  EXPECT_EQ(count_dim(c, 0), 4u);
  // Diagonal goes through v_P = (0,0).
  EXPECT_EQ(t.apex_of_polytope(), 0);
  EXPECT_TRUE(c.count(Simplex{{0, 3}}));
  EXPECT_FALSE(c.count(Simplex{{1, 2}}));
}

TEST(Triangulation, Cube3) {
  auto t = triangulate(cube_polytope(3));
  EXPECT_EQ(count_dim(t.complex(), 3), 6u);
  EXPECT_EQ(f_vector(t.complex(), 3), (Counts{1, 8, 19, 18, 6}));
}

TEST(Triangulation, SimplexIsItsOwnTriangulation) {
  for (int d = 1; d <= 5; ++d) {
    auto t = triangulate(simplex_polytope(d));
    auto tops = maximal_simplices(t.complex());
    ASSERT_EQ(tops.size(), 1u);
    EXPECT_EQ(tops[0].vertices, iota_set(d + 1));
  }
}

TEST(Triangulation, MatchesChainDefinition) {
  for (const auto* spec : {"square", "cube:3", "cross:3", "pyramid:square", "prism:triangle", "bipyramid:square"}) {
    auto t = triangulate(builtin(spec));
    for (const auto& f : t.lattice.faces()) EXPECT_EQ(t.per_face[static_cast<std::size_t>(f.id)], chain_oracle(t, f.id)) << spec;
  }
}

TEST(Triangulation, SimplicialComplexAndPure) {
  for (const auto* spec : {"cube:4", "cross:4", "simplex:4", "pyramid:square", "prism:triangle", "bipyramid:square"}) {
    auto t = triangulate(builtin(spec));
    const auto& c = t.complex();
    EXPECT_TRUE(is_closed_under_faces(c)) << spec;
    for (const auto& a : c)
      for (const auto& b : c) EXPECT_TRUE(c.count(Simplex{intersect(a.vertices, b.vertices)})) << spec;
    for (const auto& s : maximal_simplices(c)) {
      EXPECT_EQ(s.dim(), t.dim()) << spec;
      EXPECT_TRUE(s.contains(t.apex_of_polytope())) << spec;
      EXPECT_EQ(affine_rank(t.polytope.points(s.vertices)), t.dim()) << spec;
    }
  }
}

TEST(Pointed, BuiltinsPass) {
  for (const auto* spec : {"cube:3", "cross:3", "simplex:3", "pyramid:square", "cube:5", "cross:5"})
    EXPECT_TRUE(verify_pointed(triangulate(builtin(spec))).ok) << spec;
}

TEST(Pointed, SinglePointVacuous) {
  auto pt = make_polytope("pt", {Point{1, 1}});
  EXPECT_TRUE(verify_pointed(triangulate({pt, build_face_lattice(pt)})).ok);
}

TEST(Pointed, WrongDiagonalFailsCondition1) {
  auto t = triangulate(builtin("square"));
  ASSERT_EQ(t.apex_of_polytope(), 0);
  t.per_face[static_cast<std::size_t>(t.lattice.top().id)] = closure({Simplex{{0, 1, 2}}, Simplex{{1, 2, 3}}});
  auto cert = verify_pointed(t);
  EXPECT_FALSE(cert.ok);
  EXPECT_EQ(cert.failed_condition, 1);
}

TEST(Pointed, InconsistentApexesFailCondition2) {
  auto pl = cube_polytope(2);
  auto a = assign_apexes(pl, LinearFunctional{{1, 2}});
  // Edge {0,1} now points at 1 while P points at 0; both lie in the edge.
  a.apex[static_cast<std::size_t>(*pl.lattice.find({0, 1}))] = 1;
  auto cert = verify_pointed(build_pointed_triangulation(pl, a));
  EXPECT_FALSE(cert.ok);
  EXPECT_EQ(cert.failed_condition, 2);
}

TEST(Pointed, MissingApexEdgeFailsCondition3) {
  auto t = triangulate(builtin("square"));
  auto top = static_cast<std::size_t>(t.lattice.top().id);
  // One triangle through the apex: condition 1 holds, edge {0,2} is absent.
  t.per_face[top] = closure({Simplex{{0, 1, 3}}});
  auto cert = verify_pointed(t);
  EXPECT_FALSE(cert.ok);
  EXPECT_EQ(cert.failed_condition, 3);
}

TEST(Pointed, BadApexRejectedAtConstruction) {
  auto pl = cube_polytope(2);
  auto a = assign_apexes(pl, LinearFunctional{{1, 2}});
  a.apex[static_cast<std::size_t>(*pl.lattice.find({0, 1}))] = 3;
  EXPECT_THROW(build_pointed_triangulation(pl, a), GeometryError);
}

TEST(Coverage, PseudomanifoldCheckPasses) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& pl : {simplex_polytope(d), cube_polytope(d), cross_polytope(d)})
      EXPECT_TRUE(verify_complex(triangulate(pl)).ok) << pl.polytope.name;
}

TEST(Coverage, MissingTetrahedronDetected) {
  auto t = triangulate(cube_polytope(3));
  auto& c = t.per_face[static_cast<std::size_t>(t.lattice.top().id)];
  c.erase(maximal_simplices(c).front());
  EXPECT_FALSE(verify_complex(t).ok);
}

TEST(Split, Square) {
  auto t = triangulate(builtin("square"));
  auto split = split_boundary_interior(t);
  EXPECT_EQ(split.interior, (Complex{Simplex{{0, 3}}, Simplex{{0, 1, 3}}, Simplex{{0, 2, 3}}}));
  EXPECT_EQ(count_dim(split.boundary, 0), 4u);
  EXPECT_EQ(count_dim(split.boundary, 1), 4u);
  EXPECT_EQ(split.boundary.size(), 9u);  // including the empty simplex
}

TEST(Split, Cube3AgainstFacetContainment) {
  auto t = triangulate(cube_polytope(3));
  auto split = split_boundary_interior(t);
  Complex boundary;
  for (const auto& s : t.complex())
    for (int f : t.lattice.faces_of_dim(2))
      if (is_subset(s.vertices, t.lattice.face(f).vertices)) boundary.insert(s);
  EXPECT_EQ(split.boundary, boundary);
  EXPECT_EQ(f_vector(boundary, 3), (Counts{1, 8, 18, 12, 0}));
  EXPECT_EQ(e_vector(split.interior, 3), (Counts{0, 1, 6, 6}));
  EXPECT_EQ(split.boundary.size() + split.interior.size(), t.complex().size());
}

TEST(Split, SimplexInteriorIsTopOnly) {
  for (int d = 1; d <= 4; ++d) {
    auto split = split_boundary_interior(triangulate(simplex_polytope(d)));
    EXPECT_EQ(split.interior, Complex{Simplex{iota_set(d + 1)}});
  }
}

TEST(StarLink, SquareLinkIsPath) {
  auto t = triangulate(builtin("square"));
  auto lk = link(t.apex_of_polytope(), t.complex());
  EXPECT_EQ(maximal_simplices(lk), (std::vector<Simplex>{Simplex{{1, 3}}, Simplex{{2, 3}}}));
  EXPECT_EQ(count_dim(lk, 0), 3u);
}

TEST(StarLink, SingleSimplex) {
  auto c = closure({Simplex{{0, 1, 2}}});
  EXPECT_EQ(star(1, c), c);
  auto edge = closure({Simplex{{4, 9}}});
  EXPECT_EQ(link(4, edge), (Complex{Simplex{}, Simplex{{9}}}));
  EXPECT_THROW(link(5, edge), GeometryError);
  EXPECT_THROW(star(5, edge), GeometryError);
}

TEST(StarLink, PurityAndBijection) {
  for (const auto* spec : {"cube:3", "cross:4", "pyramid:square", "bipyramid:square"}) {
    auto t = triangulate(builtin(spec));
    const int d = t.dim(), v = t.apex_of_polytope();
    auto st = star(v, t.complex());
    for (const auto& s : maximal_simplices(st)) EXPECT_EQ(s.dim(), d);
    auto lk = link(v, t.complex());
    std::set<Simplex> lifted;
    for (const auto& s : maximal_simplices(lk)) {
      EXPECT_EQ(s.dim(), d - 1);
      lifted.insert(Simplex{detail::with_vertex(s.vertices, v)});
    }
    auto tops = maximal_simplices(t.complex());
    EXPECT_EQ(lifted, std::set<Simplex>(tops.begin(), tops.end())) << spec;
  }
}
