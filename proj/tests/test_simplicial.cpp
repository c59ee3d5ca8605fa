#include <doctest.h>

#include <random>

#include "fano/hilbert.hpp"
#include "fano/simplicial.hpp"

using namespace fano;

TEST_CASE("make_complex canonicalizes") {
  auto K = make_complex_labeled({{"1", "2"}, {"2", "3"}});
  CHECK(K.facets.size() == 2);
  CHECK(K.is_face({0}));
  CHECK(K.is_face({0, 1}));
  CHECK(!K.is_face({0, 2}));

  auto R = make_complex_labeled({{"1", "2"}, {"1"}});
  CHECK(R.facets.size() == 1);  // redundant face dropped
  CHECK(R.facets[0].size() == 2);
}

TEST_CASE("joins") {
  // point * point = edge
  SimplicialComplex p1{{"a"}, {{0}}}, p2{{"b"}, {{0}}};
  auto e = join(p1, p2);
  CHECK(e.facets.size() == 1);
  CHECK(e.facets[0].size() == 2);

  // T5 is (boundary of a triangle) * (two points)
  auto T5 = catalog("T5");
  CHECK(T5.nverts() == 5);
  CHECK(is_triangulated_two_sphere(T5));

  // join with a cone point puts the new vertex in every facet
  auto T4 = catalog("T4");
  auto C = join_point(T4, "0");
  for (auto& f : C.facets) CHECK(f.size() == 4);
  CHECK(C.facets.size() == T4.facets.size());

  CHECK_THROWS_AS(join(p1, p1), Error);
}

TEST_CASE("catalog spheres pass the predicates") {
  for (auto name : {"T4", "T5", "T6", "T7", "T8", "T9", "T10", "T8p"}) {
    auto K = catalog(name);
    CHECK(is_triangulated_two_sphere(K));
  }
  CHECK(valency_profile(catalog("T4")) == std::vector<int>{3, 3, 3, 3});
  CHECK(valency_profile(catalog("T8p")) == std::vector<int>{4, 4, 4, 4, 4, 4, 6, 6});
  for (auto name : {"T6", "T7", "T8", "T9", "T10"}) {
    for (int v : valency_profile(catalog(name))) CHECK((v == 4 || v == 5));
  }
  CHECK(!is_triangulated_two_sphere(boundary_simplex(2)));
  CHECK_THROWS_AS(catalog("T11"), Error);
}

TEST_CASE("stanley-reisner ideals and round trips") {
  auto C = join_point(catalog("T4"), "0");
  // ring variables in vertex order: 1..4 then cone 0
  Ring R = make_ring({"x1", "x2", "x3", "x4", "x0"});
  Ideal I = sr_ideal(C, R);
  REQUIRE(I.gens.size() == 1);
  CHECK(I.gens[0] == parse_polynomial("x1*x2*x3*x4", R));

  auto back = complex_from_squarefree(I);
  auto bij = complexes_isomorphic(back, C);
  CHECK(bij.has_value());

  // the ten quadrics of the hexagonal bipyramid cone
  auto B = join_point(catalog("T8p"), "0");
  Ring R9 = make_ring({"x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y0"});
  Ideal IB = sr_ideal(B, R9);
  CHECK(IB.gens.size() == 10);
  for (auto& g : IB.gens) {
    CHECK(g.nterms() == 1);
    CHECK(g.terms()[0].m.deg() == 2);
    CHECK(g.terms()[0].m.squarefree());
  }
  CHECK(ideal_membership(parse_polynomial("y1*y2", R9), IB));
  CHECK(ideal_membership(parse_polynomial("x1*x4", R9), IB));
  CHECK(ideal_membership(parse_polynomial("x2*x6", R9), IB));
  CHECK(!ideal_membership(parse_polynomial("x1*x2", R9), IB));
}

TEST_CASE("sr ideal of a join is the sum of the sr ideals") {
  auto K = catalog("T4");
  auto L = boundary_simplex(1, "p");
  auto J = join(K, L);
  Ring RJ = make_ring({"a1", "a2", "a3", "a4", "b1", "b2"});
  Ideal IJ = sr_ideal(J, RJ);
  // I_K in the first block plus I_L in the second block
  Ideal IK = make_ideal(RJ, {parse_polynomial("a1*a2*a3*a4", RJ)});
  Ideal IL = make_ideal(RJ, {parse_polynomial("b1*b2", RJ)});
  std::vector<Polynomial> sum = IK.gens;
  sum.insert(sum.end(), IL.gens.begin(), IL.gens.end());
  CHECK(ideals_equal(IJ, make_ideal(RJ, sum)));
}

TEST_CASE("isomorphism search") {
  auto T8 = catalog("T8");
  auto T8p = catalog("T8p");
  CHECK(!complexes_isomorphic(T8, T8p).has_value());

  // relabeled copy is found
  auto K = catalog("T7");
  std::vector<std::string> labels = {"g", "f", "e", "d", "c", "b", "a"};
  std::vector<std::vector<int>> facets;
  for (auto& f : K.facets) {
    std::vector<int> g;
    for (int v : f) g.push_back(6 - v);
    facets.push_back(g);
  }
  auto L = make_complex(labels, facets);
  auto bij = complexes_isomorphic(K, L);
  REQUIRE(bij.has_value());
  // witness really maps facets to facets
  for (auto& f : K.facets) {
    std::vector<int> img;
    for (int v : f) img.push_back((*bij)[v]);
    std::sort(img.begin(), img.end());
    CHECK(std::find(L.facets.begin(), L.facets.end(), img) != L.facets.end());
  }
}

TEST_CASE("minimal primes of squarefree monomial ideals") {
  Ring R = make_ring({"t1", "t2", "t3", "t4", "t5", "t6"});
  Ideal I = parse_ideal(R, {"t1*t3", "t1*t4", "t2*t5", "t2*t6"});
  auto primes = minimal_primes_monomial(I);
  REQUIRE(primes.size() == 4);
  std::vector<std::vector<int>> expect = {{0, 1}, {0, 4, 5}, {1, 2, 3}, {2, 3, 4, 5}};
  std::sort(expect.begin(), expect.end());
  CHECK(primes == expect);

  Ring R2 = make_ring({"x", "y"});
  auto p2 = minimal_primes_monomial(parse_ideal(R2, {"x*y"}));
  CHECK(p2 == std::vector<std::vector<int>>{{0}, {1}});
  auto p1 = minimal_primes_monomial(parse_ideal(R2, {"x"}));
  CHECK(p1 == std::vector<std::vector<int>>{{0}});

  CHECK_THROWS_AS(minimal_primes_monomial(parse_ideal(R2, {"x^2"})), Error);
}

TEST_CASE("minimal primes match brute force over coordinate subspaces") {
  // brute force: minimal variable subsets V with every generator meeting V
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);  // up to 8 vars
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i));
    Ring R = make_ring(vars);
    std::vector<Polynomial> gens;
    int ng = 2 + static_cast<int>(rng() % 4);
    for (int g = 0; g < ng; ++g) {
      Monomial m(n);
      int sz = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < sz; ++k) m.set(static_cast<int>(rng() % n), 1);
      gens.push_back(Polynomial::monomial(R, m));
    }
    Ideal I = make_ideal(R, gens);
    if (I.gens.empty()) continue;
    auto primes = minimal_primes_monomial(I);

    std::vector<std::vector<int>> brute;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool hits_all = true;
      for (auto& g : I.gens) {
        bool hit = false;
        for (int v = 0; v < n; ++v)
          if ((mask >> v & 1) && g.terms()[0].m[v]) hit = true;
        if (!hit) hits_all = false;
      }
      if (!hits_all) continue;
      bool minimal = true;
      for (int v = 0; v < n && minimal; ++v) {
        if (!(mask >> v & 1)) continue;
        unsigned sub = mask & ~(1u << v);
        bool sub_hits = true;
        for (auto& g : I.gens) {
          bool hit = false;
          for (int u = 0; u < n; ++u)
            if ((sub >> u & 1) && g.terms()[0].m[u]) hit = true;
          if (!hit) sub_hits = false;
        }
        if (sub_hits) minimal = false;
      }
      if (!minimal) continue;
      std::vector<int> vs;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) vs.push_back(v);
      brute.push_back(vs);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(primes == brute);
  }
}

TEST_CASE("sr cones have dimension 3 and degree 2i-4") {
  for (int i = 4; i <= 10; ++i) {
    auto C = join_point(catalog("T" + std::to_string(i)), "0");
    Ring R = make_ring_x(i + 1);
    // vertices map to variables in order
    std::vector<std::string> vars;
    for (auto& l : C.labels) vars.push_back("v" + l);
    Ring RV = make_ring(vars);
    Ideal I = sr_ideal(C, RV);
    auto H = hilbert_data(I);
    CHECK(H.dimension == 3);
    CHECK(H.degree == 2 * i - 4);
    REQUIRE(H.genus.has_value());
    CHECK(*H.genus == i - 1);
  }
}
