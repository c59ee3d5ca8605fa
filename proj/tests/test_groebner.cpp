#include <doctest.h>

#include <random>

#include "fano/groebner.hpp"

using namespace fano;

namespace {

Ideal ideal_of(const Ring& R, std::initializer_list<const char*> polys) {
  std::vector<std::string> v(polys.begin(), polys.end());
  return parse_ideal(R, v);
}

}  // namespace

TEST_CASE("principal ideal is its own reduced basis") {
  Ring R = make_ring({"x0", "x1", "x2", "x3", "x4"});
  Ideal I = ideal_of(R, {"x1*x2*x3*x4 - x0^4"});
  // grevlex lead is x0^4, so the monic reduced element is its negation
  auto G = groebner_basis(I, MonomialOrder::grevlex());
  REQUIRE(G.basis.size() == 1);
  CHECK(G.basis[0] == parse_polynomial("x0^4 - x1*x2*x3*x4", R));
  // under a weight order preferring the squarefree term it keeps its sign
  auto w = MonomialOrder::weight({0, 1, 1, 1, 1}, MonomialOrder::grevlex());
  auto Gw = groebner_basis(I, w);
  REQUIRE(Gw.basis.size() == 1);
  CHECK(Gw.basis[0] == parse_polynomial("x1*x2*x3*x4 - x0^4", R));
}

TEST_CASE("textbook kernel: eliminate t from (x - t^2, y - t^3)") {
  Ring R = make_ring({"t", "x", "y"});
  Ideal I = ideal_of(R, {"x - t^2", "y - t^3"});
  Ideal E = eliminate(I, {0});
  REQUIRE(E.gens.size() == 1);
  auto g = E.gens[0];
  auto expect = parse_polynomial("x^3 - y^2", R);
  CHECK((g == expect || g == -expect));
}

TEST_CASE("normal form properties") {
  Ring R = make_ring({"x0", "x1", "x2", "x3", "x4"});
  Ideal I = ideal_of(R, {"x1*x2*x3*x4 - x0^4"});
  // with the lead at x1*x2*x3*x4 (weight order), x0^4 is already normal
  auto w = MonomialOrder::weight({0, 1, 1, 1, 1}, MonomialOrder::grevlex());
  auto G = groebner_basis(I, w);
  for (auto& g : I.gens) CHECK(normal_form(g, G).is_zero());
  auto nf = normal_form(parse_polynomial("x0^4", R), G);
  CHECK(nf == parse_polynomial("x0^4", R));
  // p - nf(p) is in the ideal
  auto p = parse_polynomial("x0^4*x1 + x2", R);
  auto r = normal_form(p, G);
  CHECK(normal_form(p - r, G).is_zero());
  // idempotence
  CHECK(normal_form(r, G) == r);
}

TEST_CASE("reduced basis is independent of generator order and shuffles") {
  Ring R = make_ring({"x", "y", "z"});
  Ideal I = ideal_of(R, {"x^2 + y*z", "x*y - z^2", "y^3 - x*z^2"});
  auto G0 = groebner_basis(I, MonomialOrder::grevlex());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 6; ++k) {
    auto gens = I.gens;
    std::shuffle(gens.begin(), gens.end(), rng);
    auto G = groebner_basis(make_ideal(R, gens), MonomialOrder::grevlex());
    REQUIRE(G.basis.size() == G0.basis.size());
    for (size_t i = 0; i < G.basis.size(); ++i) CHECK(G.basis[i] == G0.basis[i]);
  }
}

TEST_CASE("initial ideal examples") {
  Ring R = make_ring({"x0", "x1", "x2", "x3", "x4"});
  Ideal I = ideal_of(R, {"x1*x2*x3*x4 - x0^4"});
  // a weight order preferring the squarefree term degenerates the quartic
  // to its toric monomial
  auto w = MonomialOrder::weight({0, 1, 1, 1, 1}, MonomialOrder::grevlex());
  Ideal in1 = initial_ideal(I, w);
  REQUIRE(in1.gens.size() == 1);
  CHECK(in1.gens[0] == parse_polynomial("x1*x2*x3*x4", R));
  // a monomial ideal is its own initial ideal
  Ideal in2 = initial_ideal(in1, MonomialOrder::grevlex());
  CHECK(ideals_equal(in1, in2));
  // weight order with a tie on the binomial is rejected
  auto tied = MonomialOrder::weight({1, 1, 1, 1, 1}, MonomialOrder::grevlex());
  CHECK_THROWS_AS(initial_ideal(I, tied), Error);
  // plain grevlex picks x0^4 instead
  Ideal in3 = initial_ideal(I, MonomialOrder::grevlex());
  REQUIRE(in3.gens.size() == 1);
  CHECK(in3.gens[0] == parse_polynomial("x0^4", R));
}

TEST_CASE("membership trivia") {
  Ring R = make_ring({"x0", "x1"});
  Ideal I = ideal_of(R, {"x0"});
  CHECK(!ideal_membership(Polynomial::constant(R, 1), I));
  CHECK(ideal_membership(parse_polynomial("x0*x1", R), I));
}

TEST_CASE("intersect, quotient, saturate, radical membership") {
  Ring R = make_ring({"x", "y"});
  Ideal Ix = ideal_of(R, {"x"});
  Ideal Iy = ideal_of(R, {"y"});
  Ideal meet = intersect(Ix, Iy);
  CHECK(ideals_equal(meet, ideal_of(R, {"x*y"})));

  Ideal I2 = ideal_of(R, {"x^2*y"});
  CHECK(ideals_equal(quotient(I2, parse_polynomial("x", R)), ideal_of(R, {"x*y"})));
  CHECK(ideals_equal(saturate(I2, parse_polynomial("x", R)), ideal_of(R, {"y"})));

  CHECK(radical_membership(parse_polynomial("x", R), ideal_of(R, {"x^3"})));
  CHECK(!radical_membership(parse_polynomial("y", R), ideal_of(R, {"x^3"})));
}

TEST_CASE("intersect/saturate double-inclusion on random small ideals") {
  Ring R = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rand_p = [&]() {
    std::vector<Term> ts;
    for (int k = 0; k < 3; ++k) {
      Monomial m(3);
      for (int d = 0; d < 2; ++d) {
        std::uniform_int_distribution<int> vv(0, 2);
        int v = vv(rng);
        m.set(v, m[v] + 1);
      }
      ts.push_back({m, Rational(coef(rng))});
    }
    return Polynomial(R, ts);
  };
  for (int trial = 0; trial < 8; ++trial) {
    Ideal I = make_ideal(R, {rand_p(), rand_p()});
    Ideal J = make_ideal(R, {rand_p()});
    if (I.gens.empty() || J.gens.empty()) continue;
    Ideal M = intersect(I, J);
    for (auto& g : M.gens) {
      CHECK(ideal_membership(g, I));
      CHECK(ideal_membership(g, J));
    }
    // product of generators lies in the intersection
    for (auto& a : I.gens)
      for (auto& b : J.gens) CHECK(ideal_membership(a * b, M));
  }
}

TEST_CASE("krull dimension") {
  Ring R3 = make_ring({"x", "y", "z"});
  CHECK(krull_dimension(ideal_of(R3, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(ideal_of(R3, {"x*y"})) == 2);
  CHECK(krull_dimension(make_ideal(R3, {})) == 3);

  // generic 2x2 minors: codim (m-1)(n-1)
  // 3x6 matrix of distinct variables -> codim 10 in 18 vars -> dim 8
  std::vector<std::string> vars;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j)
      vars.push_back("a" + std::to_string(i) + std::to_string(j));
  Ring R18 = make_ring(vars);
  std::vector<Polynomial> minors;
  auto at = [&](int i, int j) {
    return Polynomial::variable(R18, i * 6 + j);
  };
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 6; ++j1)
        for (int j2 = j1 + 1; j2 < 6; ++j2)
          minors.push_back(at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1));
  CHECK(krull_dimension(make_ideal(R18, minors)) == 8);
}

TEST_CASE("budget exhaustion raises") {
  Ring R = make_ring({"x", "y", "z"});
  Ideal I = ideal_of(R, {"x^2 + y*z", "x*y - z^2", "y^3 - x*z^2", "x*z - y^2"});
  GBOptions opt;
  opt.max_pairs = 1;
  CHECK_THROWS_AS(groebner_basis(I, MonomialOrder::grevlex(), opt), Error);
}
