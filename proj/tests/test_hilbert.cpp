#include <doctest.h>

#include "fano/hilbert.hpp"

using namespace fano;

TEST_CASE("hilbert data of basic ideals") {
  // quartic monomial cone in P^4
  Ring R5 = make_ring({"x0", "x1", "x2", "x3", "x4"});
  auto H = hilbert_data(parse_ideal(R5, {"x1*x2*x3*x4"}));
  CHECK(H.dimension == 3);
  CHECK(H.degree == 4);
  REQUIRE(H.genus.has_value());
  CHECK(*H.genus == 3);

  // the quartic binomial has the same hilbert data (flatness)
  auto H2 = hilbert_data(parse_ideal(R5, {"x1*x2*x3*x4 - x0^4"}));
  CHECK(H == H2);

  // a point in P^1
  Ring R2 = make_ring({"x0", "x1"});
  auto Hp = hilbert_data(parse_ideal(R2, {"x0"}));
  CHECK(Hp.dimension == 0);
  CHECK(Hp.degree == 1);

  // empty scheme
  auto He = hilbert_data(parse_ideal(R2, {"x0", "x1"}));
  CHECK(He.dimension == -1);

  // zero ideal: all of P^1, hilbert polynomial m + 1
  auto Hz = hilbert_data(make_ideal(R2, {}));
  CHECK(Hz.dimension == 1);
  CHECK(Hz.degree == 1);
  CHECK(Hz.hp == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("hilbert function values") {
  // S/<x*y> in 2 vars: h(d) = 2 for d >= 1, h(0) = 1
  Monomial xy(2);
  xy.set(0, 1);
  xy.set(1, 1);
  CHECK(hilbert_function_monomial({xy}, 2, 0) == 1);
  CHECK(hilbert_function_monomial({xy}, 2, 1) == 2);
  CHECK(hilbert_function_monomial({xy}, 2, 5) == 2);
  // free ring in 3 vars: C(d+2,2)
  CHECK(hilbert_function_monomial({}, 3, 4) == 15);
}

TEST_CASE("groebner flatness: hilbert data preserved by initial ideals") {
  Ring R = make_ring({"x", "y", "z", "w"});
  std::vector<Ideal> fixtures = {
      parse_ideal(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}),  // twisted cubic
      parse_ideal(R, {"x^2 + y^2 + z^2 + w^2"}),
      parse_ideal(R, {"x*y - z*w", "x^2*w - y*z^2"}),
  };
  for (auto& I : fixtures) {
    auto H = hilbert_data(I);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      Ideal in = initial_ideal(I, ord);
      CHECK(hilbert_data(in) == H);
    }
  }
}

TEST_CASE("hilbert numerator of the unit ideal is empty") {
  Monomial one(2);
  CHECK(hilbert_numerator({one}, 2).empty());
}
