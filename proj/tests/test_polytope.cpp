#include <doctest.h>

#include "fano/hilbert.hpp"
#include "fano/polytope.hpp"

using namespace fano;

namespace {

LatticePolytope deg4_polytope() {
  // conv{e1, e2, e3, -e1-e2-e3}
  return make_polytope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
}

LatticePolytope unit_cube() {
  std::vector<LatticeVec> vs;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) vs.push_back({x, y, z});
  return make_polytope(3, vs);
}

}  // namespace

TEST_CASE("lattice point enumeration") {
  CHECK(lattice_points(unit_cube()).size() == 8);
  CHECK(lattice_points(deg4_polytope()).size() == 5);
  auto seg = make_polytope(1, {{0}, {4}});
  CHECK(lattice_points(seg).size() == 5);
}

TEST_CASE("toric ideals") {
  // five points of the degree-4 moment polytope: one quartic binomial
  auto pts = lattice_points(deg4_polytope());
  Ideal I = toric_ideal(pts);
  REQUIRE(I.gens.size() == 1);
  const Polynomial& g = I.gens[0];
  CHECK(g.nterms() == 2);
  // product of the four vertex variables minus the interior point to the 4th
  int origin = -1;
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == LatticeVec{0, 0, 0}) origin = static_cast<int>(i);
  REQUIRE(origin >= 0);
  for (auto& t : g.terms()) {
    CHECK(t.m.deg() == 4);
    if (t.m[origin]) CHECK(t.m[origin] == 4);
  }

  // a unimodular simplex has zero toric ideal
  Ideal Z = toric_ideal({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(Z.gens.empty());

  // 2x2 unit square: the Segre quadric
  Ideal S = toric_ideal({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  REQUIRE(S.gens.size() == 1);
  CHECK(S.gens[0].nterms() == 2);
  CHECK(S.gens[0].homogeneous_degree() == 2);
}

TEST_CASE("pulling triangulations") {
  // a simplex triangulates to itself
  auto simp = make_polytope(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto T = pulling_triangulation(simp.vertices, {0, 1, 2, 3});
  CHECK(T.simplices.size() == 1);

  // unit square: the two pull orders give the two diagonals
  std::vector<LatticeVec> sq = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  auto T1 = pulling_triangulation(sq, {0, 1, 2, 3});
  auto T2 = pulling_triangulation(sq, {1, 0, 2, 3});
  CHECK(T1.simplices.size() == 2);
  CHECK(T2.simplices.size() == 2);
  CHECK(T1.simplices != T2.simplices);

  // pulled triangulations carry a height certificate
  auto cube = unit_cube();
  auto pts = lattice_points(cube);
  std::vector<int> order = {0, 1, 2, 3, 4, 5, 6, 7};
  auto TC = pulling_triangulation(pts, order);
  auto h = is_regular(cube, TC, std::nullopt);
  CHECK(h.has_value());
  // and the heights verify exactly
  CHECK(is_regular(cube, TC, h).has_value());
}

TEST_CASE("unimodularity and volume") {
  auto P = deg4_polytope();
  CHECK(lattice_volume(P) == 4);
  auto pts = lattice_points(P);
  // pulling at the origin (index of (0,0,0)) cones over the four facets
  int origin = -1;
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == LatticeVec{0, 0, 0}) origin = static_cast<int>(i);
  std::vector<int> order = {origin};
  for (int i = 0; i < 5; ++i)
    if (i != origin) order.push_back(i);
  auto T = pulling_triangulation(pts, order);
  CHECK(T.simplices.size() == 4);
  CHECK(is_unimodular(P, T));
}

TEST_CASE("regularity rejects a bad height vector") {
  // subdivided segment: heights must be strictly convex across the middle
  std::vector<LatticeVec> pts = {{0}, {1}, {2}};
  Triangulation T;
  T.points = pts;
  T.simplices = {{0, 1}, {1, 2}};
  auto seg = make_polytope(1, {{0}, {2}});
  std::vector<Rational> bad = {Rational(0), Rational(1), Rational(2)};  // affine: fold fails
  CHECK(!is_regular(seg, T, bad).has_value());
  std::vector<Rational> good = {Rational(0), Rational(-1), Rational(0)};
  CHECK(is_regular(seg, T, good).has_value());
}

TEST_CASE("find_degeneration on the degree-4 example") {
  auto P = deg4_polytope();
  auto target = join_point(catalog("T4"), "0");
  DegenerationBudget budget;
  budget.max_orders = 200;
  auto D = find_degeneration(P, target, budget);
  REQUIRE(D.has_value());
  CHECK(is_unimodular(P, D->triangulation));
  // verified initial ideal is the single squarefree quartic
  REQUIRE(D->initial.gens.size() == 1);
  CHECK(D->initial.gens[0].nterms() == 1);
  CHECK(D->initial.gens[0].terms()[0].m.squarefree());
  CHECK(D->initial.gens[0].terms()[0].m.deg() == 4);

  // wrong vertex count: the T5 cone has six vertices, the polytope five points
  CHECK_THROWS_AS(find_degeneration(P, join_point(catalog("T5"), "0"), budget), Error);

  // right count but unreachable: reported as not-found-within-budget
  DegenerationBudget small;
  small.max_orders = 30;
  CHECK(!find_degeneration(P, catalog("T5"), small).has_value());
}

TEST_CASE("flatness of the verified degeneration") {
  auto P = deg4_polytope();
  auto pts = lattice_points(P);
  Ideal I = toric_ideal(pts);
  auto target = join_point(catalog("T4"), "0");
  DegenerationBudget budget;
  budget.max_orders = 200;
  auto D = find_degeneration(P, target, budget);
  REQUIRE(D.has_value());
  CHECK(hilbert_data(I) == hilbert_data(D->initial));
}
