#include "fano/polytope.hpp"

namespace fano {

// kernel of the monomial map x_u -> t^(u,1), computed by inverting the
// torus coordinates with one auxiliary variable and eliminating
Ideal toric_ideal(const std::vector<LatticeVec>& points, const GBOptions& opt) {
  if (points.empty()) fail(Err::EmptyInput, "no points");
  int m = static_cast<int>(points.size());
  int d = static_cast<int>(points[0].size());
  if (m > 16) fail(Err::BudgetExceeded, "too many points for the toric kernel");

  // translate into the nonnegative orthant; the appended degree coordinate
  // makes the kernel translation-invariant
  LatticeVec shift(d, 0);
  for (auto& p : points)
    for (int j = 0; j < d; ++j) shift[j] = std::min(shift[j], p[j]);

  std::vector<std::string> vars;
  for (int i = 0; i < m; ++i) vars.push_back("x" + std::to_string(i));
  int tbase = m;
  for (int j = 0; j <= d; ++j) vars.push_back("t" + std::to_string(j));
  int yvar = m + d + 1;
  vars.push_back("y");
  Ring R = make_ring(vars);

  std::vector<Polynomial> gens;
  for (int i = 0; i < m; ++i) {
    Monomial tm(R->nvars());
    for (int j = 0; j < d; ++j)
      tm.set(tbase + j, static_cast<unsigned>(points[i][j] - shift[j]));
    tm.set(tbase + d, 1);
    gens.push_back(Polynomial::variable(R, i) - Polynomial::monomial(R, tm));
  }
  {
    Monomial prod(R->nvars());
    for (int j = 0; j <= d; ++j) prod.set(tbase + j, 1);
    prod.set(yvar, 1);
    gens.push_back(Polynomial::monomial(R, prod) - Polynomial::constant(R, 1));
  }
  Ideal J = make_ideal(R, std::move(gens));
  std::vector<int> block;
  for (int j = 0; j <= d; ++j) block.push_back(tbase + j);
  block.push_back(yvar);
  Ideal E = eliminate(J, block, opt);

  // restrict to the x-ring
  Ring X = make_ring(std::vector<std::string>(vars.begin(), vars.begin() + m));
  std::vector<Polynomial> out;
  for (auto& g : E.gens) {
    std::vector<Term> terms;
    for (auto& t : g.terms()) {
      Monomial mm(m);
      for (int i = 0; i < m; ++i) mm.set(i, t.m[i]);
      terms.push_back({std::move(mm), t.c});
    }
    out.push_back(Polynomial(X, std::move(terms)));
  }
  return make_ideal(X, std::move(out));
}

}  // namespace fano
