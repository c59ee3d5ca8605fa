#include "fano/lp.hpp"

#include <algorithm>

#include "fano/errors.hpp"

namespace fano {

namespace {

// tableau simplex over Q, minimization of the last row; Bland's rule
struct Tableau {
  // rows: m constraint rows (equalities) + 1 objective row
  // cols: n variable cols + 1 rhs col
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;  // basic variable per constraint row
  int m, n;

  void pivot(int row, int col) {
    Rational p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (int r = 0; r <= m; ++r) {
      if (r == row || t[r][col].is_zero()) continue;
      Rational f = t[r][col];
      for (int c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
    }
    basis[row] = col;
  }

  // returns false when the objective is unbounded below
  bool solve() {
    while (true) {
      int col = -1;
      for (int c = 0; c < n; ++c) {
        if (t[m][c].sign() < 0) {  // Bland: first improving column
          col = c;
          break;
        }
      }
      if (col < 0) return true;
      int row = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][col].sign() <= 0) continue;
        Rational ratio = t[r][n] / t[r][col];
        if (row < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[row])) {
          row = r;
          best = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

std::optional<LpSolution> lp_maximize(const LpProblem& p) {
  int m = static_cast<int>(p.A.size());
  int nfree = static_cast<int>(p.c.size());
  // x = u - v with u,v >= 0; slack per row; artificial per row
  int nu = nfree, nv = nfree, ns = m, na = m;
  int n = nu + nv + ns + na;
  Tableau T;
  T.m = m;
  T.n = n;
  T.t.assign(m + 1, std::vector<Rational>(n + 1, Rational(0)));
  T.basis.assign(m, -1);
  for (int r = 0; r < m; ++r) {
    int sgn = p.b[r].sign() < 0 ? -1 : 1;
    for (int c = 0; c < nfree; ++c) {
      T.t[r][c] = Rational(sgn) * p.A[r][c];
      T.t[r][nu + c] = Rational(-sgn) * p.A[r][c];
    }
    T.t[r][nu + nv + r] = Rational(sgn);
    T.t[r][nu + nv + ns + r] = Rational(1);
    T.t[r][n] = Rational(sgn) * p.b[r];
    T.basis[r] = nu + nv + ns + r;
  }
  // phase 1: minimize sum of artificials
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= n; ++c) T.t[m][c] -= T.t[r][c];
  for (int r = 0; r < m; ++r) T.t[m][nu + nv + ns + r] = Rational(0);
  if (!T.solve()) fail(Err::InvalidType, "phase-1 unbounded");
  if (!T.t[m][n].is_zero()) return std::nullopt;  // infeasible
  // drive remaining artificials out of the basis
  for (int r = 0; r < m; ++r) {
    if (T.basis[r] < nu + nv + ns) continue;
    int col = -1;
    for (int c = 0; c < nu + nv + ns; ++c)
      if (!T.t[r][c].is_zero()) {
        col = c;
        break;
      }
    if (col >= 0) T.pivot(r, col);
    // an all-zero row is a redundant constraint; harmless to keep
  }
  // phase 2 objective: maximize c.x = minimize -c.(u - v)
  for (int c = 0; c <= n; ++c) T.t[m][c] = Rational(0);
  for (int c = 0; c < nfree; ++c) {
    T.t[m][c] = -p.c[c];
    T.t[m][nu + c] = p.c[c];
  }
  for (int r = 0; r < m; ++r) {
    int bc = T.basis[r];
    if (bc >= nu + nv + ns) continue;
    if (!T.t[m][bc].is_zero()) {
      Rational f = T.t[m][bc];
      for (int c = 0; c <= n; ++c) T.t[m][c] -= f * T.t[r][c];
    }
  }
  // forbid artificials from re-entering by pricing them out
  for (int r = 0; r < m; ++r) T.t[m][nu + nv + ns + r] = Rational(1);
  if (!T.solve()) fail(Err::InvalidType, "unbounded objective");
  LpSolution sol;
  sol.x.assign(nfree, Rational(0));
  for (int r = 0; r < m; ++r) {
    int bc = T.basis[r];
    if (bc < nu) sol.x[bc] += T.t[r][n];
    else if (bc < nu + nv) sol.x[bc - nu] -= T.t[r][n];
  }
  sol.objective = T.t[m][n];
  return sol;
}

}  // namespace fano
