#pragma once

#include <optional>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

struct LpProblem {
  // maximize c.x subject to A x <= b, x free
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

/// Dense exact two-phase simplex with Bland's rule. Returns nullopt when
/// infeasible; throws on an unbounded objective.
std::optional<LpSolution> lp_maximize(const LpProblem& p);

}  // namespace fano
