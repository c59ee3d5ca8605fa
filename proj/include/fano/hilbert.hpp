#pragma once

#include <optional>
#include <vector>

#include "fano/groebner.hpp"

namespace fano {

/// Projective invariants read off the Hilbert polynomial.
struct HilbertData {
  int dimension = -1;                 // dim Proj(S/I); -1 when empty
  Int degree = 0;                     // leading coefficient * dimension!
  std::vector<Rational> hp;           // hilbert polynomial, hp[k] * m^k
  std::optional<Int> genus;           // dimension 3 only: degree/2 + 1

  friend bool operator==(const HilbertData& a, const HilbertData& b) {
    return a.dimension == b.dimension && a.degree == b.degree && a.hp == b.hp;
  }
};

std::string hp_to_string(const std::vector<Rational>& hp);

/// Numerator of the Hilbert series of S/I over (1-t)^nvars, I monomial.
std::vector<Int> hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

/// Hilbert data of S/I for homogeneous I; passes through the initial ideal.
HilbertData hilbert_data(const Ideal& I, const GBOptions& opt = {});

/// Value of the Hilbert function of S/I at degree d, I monomial.
Int hilbert_function_monomial(const std::vector<Monomial>& gens, int nvars, int d);

}  // namespace fano
