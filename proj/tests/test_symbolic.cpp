#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "fano/groebner.hpp"
#include "fano/polynomial.hpp"

using namespace fano;

namespace {

Ring ring5() { return make_ring({"x0", "x1", "x2", "x3", "x4"}); }

Polynomial rand_poly(const Ring& R, std::mt19937_64& rng, int max_terms = 5,
                     int max_deg = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::vector<Term> terms;
  int k = nt(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(R->nvars());
    int deg = ed(rng);
    std::uniform_int_distribution<int> vv(0, R->nvars() - 1);
    for (int d = 0; d < deg; ++d) {
      int v = vv(rng);
      m.set(v, m[v] + 1);
    }
    terms.push_back({m, Rational(coef(rng))});
  }
  return Polynomial(R, std::move(terms));
}

}  // namespace

TEST_CASE("rational arithmetic matches an independent big-integer oracle") {
  using BigInt = boost::multiprecision::cpp_int;
  struct Frac {
    BigInt n, d;  // oracle keeps un-normalized products, compares cross-wise
  };
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    Frac fx{BigInt(a), BigInt(b)}, fy{BigInt(c), BigInt(d)};
    int op = i % 4;
    Rational z;
    Frac fz;
    if (op == 0) {
      z = x + y;
      fz = {fx.n * fy.d + fy.n * fx.d, fx.d * fy.d};
    } else if (op == 1) {
      z = x - y;
      fz = {fx.n * fy.d - fy.n * fx.d, fx.d * fy.d};
    } else if (op == 2) {
      z = x * y;
      fz = {fx.n * fy.n, fx.d * fy.d};
    } else {
      if (c == 0) continue;
      z = x / y;
      fz = {fx.n * fy.d, fx.d * fy.n};
    }
    // cross-multiply comparison avoids relying on our normalization
    BigInt zn(z.num().get_str()), zd(z.den().get_str());
    CHECK(zn * fz.d == fz.n * zd);
    CHECK(z.den() > 0);
    Int g;
    mpz_gcd(g.get_mpz_t(), z.num().get_mpz_t(), z.den().get_mpz_t());
    CHECK(g == 1);  // lowest terms
  }
}

TEST_CASE("parse examples") {
  Ring R = ring5();
  auto p = parse_polynomial("x1*x2*x3*x4 - x0^4", R);
  CHECK(p.nterms() == 2);
  for (auto& t : p.terms()) CHECK(t.m.deg() == 4);

  CHECK(parse_polynomial("0", R).is_zero());

  Ring S = make_ring({"x0", "x2", "y0", "z1", "z2"});
  auto q = parse_polynomial("x0^2*x2 - y0*z1*z2", S);
  CHECK(q.nterms() == 2);
  CHECK(q.homogeneous_degree() == 3);
}

TEST_CASE("parse grammar corners") {
  Ring R = ring5();
  CHECK(parse_polynomial("x[1]*x[2] + 2", R) == parse_polynomial("x1*x2 + 2", R));
  CHECK(parse_polynomial("3/4*x0", R) == parse_polynomial("x0*3/4", R));
  CHECK(parse_polynomial("-x0 + x0", R).is_zero());
  CHECK(parse_polynomial("2x0", R) == parse_polynomial("2*x0", R));
  CHECK(parse_polynomial("(x0+x1)*(x0-x1)", R) ==
        parse_polynomial("x0^2 - x1^2", R));

  CHECK_THROWS_AS(parse_polynomial("y0", R), Error);
  try {
    parse_polynomial("x0 + qq", R);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::UnknownVariable);
    CHECK(std::string(e.what()).find("byte 5") != std::string::npos);
  }
  try {
    parse_polynomial("x0 + + +", R);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::SyntaxError);
  }
}

TEST_CASE("canonical form: serialize-parse-serialize is the identity") {
  Ring R = ring5();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = rand_poly(R, rng);
    std::string s = p.str();
    Polynomial q = parse_polynomial(s, R);
    CHECK(q == p);
    CHECK(q.str() == s);
  }
}

TEST_CASE("ring axioms on random small polynomials") {
  Ring R = ring5();
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    Polynomial a = rand_poly(R, rng), b = rand_poly(R, rng), c = rand_poly(R, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("specialize") {
  Ring R = ring5();
  auto p = parse_polynomial("x1*x2*x3*x4 - x0^4", R);
  auto killed = p.substitute({{0, Polynomial::zero(R)}});
  CHECK(killed == parse_polynomial("x1*x2*x3*x4", R));

  Ring Rt = make_ring({"t", "x0", "x1"});
  auto q = parse_polynomial("t*x0 + x1", Rt);
  auto ev = q.substitute({{0, Polynomial::constant(Rt, 1)}});
  CHECK(ev == parse_polynomial("x0 + x1", Rt));
}

TEST_CASE("compare_monomials examples") {
  // grevlex on 2 variables: x0^2 > x0*x1
  auto grev = MonomialOrder::grevlex();
  Monomial a(2), b(2);
  a.set(0, 2);
  b.set(0, 1);
  b.set(1, 1);
  CHECK(grev->compare(a, b) > 0);

  // elimination({u,v,w}) pushes block monomials to the top
  // ring u,v,w,x1,x2,x3: u*x1 vs x1*x2*x3
  auto elim = MonomialOrder::elimination({0, 1, 2}, MonomialOrder::grevlex(),
                                         MonomialOrder::grevlex());
  Monomial ux1(6), xxx(6);
  ux1.set(0, 1);
  ux1.set(3, 1);
  xxx.set(3, 1);
  xxx.set(4, 1);
  xxx.set(5, 1);
  CHECK(elim->compare(ux1, xxx) > 0);

  // weight (1,0): x0 > x1; equal weight and equal exponents compare EQ
  auto w = MonomialOrder::weight({1, 0}, MonomialOrder::grevlex());
  Monomial x0(2), x1(2);
  x0.set(0, 1);
  x1.set(1, 1);
  CHECK(w->compare(x0, x1) > 0);
  Monomial m1(2), m2(2);
  m1.set(1, 2);
  m2.set(1, 2);
  CHECK(w->compare(m1, m2) == 0);
}

TEST_CASE("prime field mode reduces coefficients") {
  Ring R = make_ring({"x0", "x1"}, 7);
  auto p = parse_polynomial("8*x0 + 7*x1", R);
  CHECK(p == parse_polynomial("x0", R));
  auto q = parse_polynomial("3*x0", R) - parse_polynomial("10*x0", R);
  CHECK(q.is_zero());
}

TEST_CASE("exponent overflow is a hard error") {
  Ring R = make_ring({"x0"});
  auto p = parse_polynomial("x0^60000", R);
  CHECK_THROWS_AS(p * p, Error);
}
