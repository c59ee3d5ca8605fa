#include "fano/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fano/lp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fano {

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

Rational det_q(QMat m) {
  int n = static_cast<int>(m.size());
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

int rank_q(QMat rows) {
  int rank = 0;
  int d = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < d && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (int k = c; k < d; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// rational coordinates of a point configuration
struct QConfig {
  std::vector<QVec> pts;

  int dim() const { return pts.empty() ? 0 : static_cast<int>(pts[0].size()); }
};

Rational simplex_det(const std::vector<LatticeVec>& pts, const std::vector<int>& s) {
  int d = static_cast<int>(pts[s[0]].size());
  QMat m(d, QVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m[i][j] = Rational(static_cast<long>(pts[s[i + 1]][j] - pts[s[0]][j]));
  return det_q(std::move(m));
}

QConfig to_q(const std::vector<LatticeVec>& pts) {
  QConfig c;
  for (auto& p : pts) {
    QVec q;
    for (auto x : p) q.push_back(Rational(static_cast<long>(x)));
    c.pts.push_back(std::move(q));
  }
  return c;
}

int affine_rank(const QConfig& c, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  QMat rows;
  for (size_t i = 1; i < idx.size(); ++i) {
    QVec r(c.dim());
    for (int j = 0; j < c.dim(); ++j)
      r[j] = c.pts[idx[i]][j] - c.pts[idx[0]][j];
    rows.push_back(std::move(r));
  }
  return rank_q(std::move(rows));
}

// project the points of idx onto rational coordinates of their affine span
// (rank k); the projection preserves affine structure
QConfig project(const QConfig& c, const std::vector<int>& idx, int k) {
  // pick k independent difference vectors as a basis
  QMat basis;
  std::vector<QVec> diffs;
  for (size_t i = 1; i < idx.size(); ++i) {
    QVec r(c.dim());
    for (int j = 0; j < c.dim(); ++j)
      r[j] = c.pts[idx[i]][j] - c.pts[idx[0]][j];
    diffs.push_back(std::move(r));
  }
  for (auto& d : diffs) {
    QMat test = basis;
    test.push_back(d);
    if (rank_q(test) > static_cast<int>(basis.size())) basis.push_back(d);
    if (static_cast<int>(basis.size()) == k) break;
  }
  // coordinates: solve basis^T * lambda = p - p0 in the least-squares-free
  // exact sense via Gaussian elimination on the k x dim system
  QConfig out;
  for (int ii : idx) {
    QVec rhs(c.dim());
    for (int j = 0; j < c.dim(); ++j) rhs[j] = c.pts[ii][j] - c.pts[idx[0]][j];
    // solve sum_l lambda_l * basis[l] = rhs
    QMat m(c.dim(), QVec(k + 1, Rational(0)));
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < c.dim(); ++j) m[j][l] = basis[l][j];
    for (int j = 0; j < c.dim(); ++j) m[j][k] = rhs[j];
    // eliminate
    int row = 0;
    QVec lambda(k, Rational(0));
    std::vector<int> pivcol;
    for (int cc = 0; cc < k && row < c.dim(); ++cc) {
      int piv = -1;
      for (int r = row; r < c.dim(); ++r)
        if (!m[r][cc].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[row]);
      for (int r = 0; r < c.dim(); ++r) {
        if (r == row || m[r][cc].is_zero()) continue;
        Rational f = m[r][cc] / m[row][cc];
        for (int t = cc; t <= k; ++t) m[r][t] -= f * m[row][t];
      }
      pivcol.push_back(cc);
      ++row;
    }
    for (size_t r = 0; r < pivcol.size(); ++r)
      lambda[pivcol[r]] = m[r][k] / m[r][pivcol[r]];
    out.pts.push_back(std::move(lambda));
  }
  return out;
}

// facets of a full-dimensional configuration in Q^k: index subsets of all
// points lying on each supporting hyperplane
std::vector<std::vector<int>> facets_fulldim(const QConfig& c) {
  int k = c.dim();
  int n = static_cast<int>(c.pts.size());
  if (k == 0) fail(Err::DegeneratePointConfiguration, "zero-dimensional hull");
  std::set<std::vector<int>> out;
  std::vector<int> sel(k);
  std::function<void(int, int)> rec = [&](int start, int got) {
    if (got == k) {
      // hyperplane through sel: normal a with a.(p_i - p_0) = 0
      QMat rows;
      for (int i = 1; i < k; ++i) {
        QVec r(k);
        for (int j = 0; j < k; ++j)
          r[j] = c.pts[sel[i]][j] - c.pts[sel[0]][j];
        rows.push_back(std::move(r));
      }
      if (k > 1 && rank_q(rows) != k - 1) return;
      // nullspace vector: append unit rows, solve by elimination
      QVec a(k, Rational(0));
      {
        QMat m = rows;
        // find a vector orthogonal to all rows: RREF then free column
        int row = 0;
        std::vector<int> piv(k, -1);
        for (int cc = 0; cc < k && row < static_cast<int>(m.size()); ++cc) {
          int p = -1;
          for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (!m[r][cc].is_zero()) {
              p = r;
              break;
            }
          if (p < 0) continue;
          std::swap(m[p], m[row]);
          for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][cc].is_zero()) continue;
            Rational f = m[r][cc] / m[row][cc];
            for (int t = 0; t < k; ++t) m[r][t] -= f * m[row][t];
          }
          piv[cc] = row;
          ++row;
        }
        int freec = -1;
        for (int cc = 0; cc < k; ++cc)
          if (piv[cc] < 0) {
            freec = cc;
            break;
          }
        if (freec < 0) return;
        a[freec] = Rational(1);
        for (int cc = 0; cc < k; ++cc) {
          if (piv[cc] < 0) continue;
          a[cc] = -(m[piv[cc]][freec] / m[piv[cc]][cc]);
        }
      }
      Rational b(0);
      for (int j = 0; j < k; ++j) b += a[j] * c.pts[sel[0]][j];
      int pos = 0, neg = 0;
      std::vector<int> on;
      for (int i = 0; i < n; ++i) {
        Rational v(0);
        for (int j = 0; j < k; ++j) v += a[j] * c.pts[i][j];
        v -= b;
        if (v.sign() > 0) ++pos;
        else if (v.sign() < 0) ++neg;
        else on.push_back(i);
      }
      if (pos && neg) return;
      out.insert(on);
    } else {
      for (int i = (got == 0 ? 0 : sel[got - 1] + 1); i < n; ++i) {
        sel[got] = i;
        rec(i + 1, got + 1);
      }
    }
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

// recursive pulling triangulation on a configuration given by indices into c
void pulling_rec(const QConfig& c, std::vector<int> idx,
                 const std::vector<int>& rank_in_order,
                 std::set<std::vector<int>>& out) {
  int k = affine_rank(c, idx);
  if (static_cast<int>(idx.size()) == k + 1) {
    std::vector<int> s = idx;
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
    return;
  }
  // pulled point: earliest in the pull order
  int v = idx[0];
  for (int i : idx)
    if (rank_in_order[i] < rank_in_order[v]) v = i;
  QConfig proj = project(c, idx, k);
  auto fac = facets_fulldim(proj);
  int vpos = static_cast<int>(std::find(idx.begin(), idx.end(), v) - idx.begin());
  for (auto& f : fac) {
    if (std::find(f.begin(), f.end(), vpos) != f.end()) continue;
    std::vector<int> sub;
    for (int i : f) sub.push_back(idx[i]);
    std::set<std::vector<int>> pieces;
    pulling_rec(c, sub, rank_in_order, pieces);
    for (auto& s : pieces) {
      std::vector<int> simplex = s;
      simplex.push_back(v);
      std::sort(simplex.begin(), simplex.end());
      out.insert(std::move(simplex));
    }
  }
}

}  // namespace

LatticePolytope make_polytope(int dim, std::vector<LatticeVec> vertices) {
  if (vertices.empty()) fail(Err::EmptyInput, "no vertices");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      fail(Err::VariableCountMismatch, "vertex dimension mismatch");
  QConfig c = to_q(vertices);
  std::vector<int> all(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) all[i] = static_cast<int>(i);
  if (affine_rank(c, all) != dim)
    fail(Err::DegeneratePointConfiguration, "polytope is not full-dimensional");
  // each listed point must be a vertex of the hull
  auto fac = facets_fulldim(c);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int count = 0;
    for (auto& f : fac)
      if (std::find(f.begin(), f.end(), static_cast<int>(i)) != f.end()) ++count;
    if (count < dim)
      fail(Err::InvalidType, "listed point is not a vertex of the hull");
  }
  return {dim, std::move(vertices)};
}

std::vector<LatticeVec> lattice_points(const LatticePolytope& P) {
  QConfig c = to_q(P.vertices);
  auto fac = facets_fulldim(c);
  // inequalities a.x <= b from facet hyperplanes, oriented by the centroid
  int d = P.dim;
  QVec centroid(d, Rational(0));
  for (auto& v : c.pts)
    for (int j = 0; j < d; ++j) centroid[j] += v[j];
  for (int j = 0; j < d; ++j)
    centroid[j] /= Rational(static_cast<long>(c.pts.size()));
  struct Ineq {
    QVec a;
    Rational b;
  };
  std::vector<Ineq> ineqs;
  for (auto& f : fac) {
    // hyperplane through the facet points
    QMat rows;
    for (size_t i = 1; i < f.size(); ++i) {
      QVec r(d);
      for (int j = 0; j < d; ++j) r[j] = c.pts[f[i]][j] - c.pts[f[0]][j];
      rows.push_back(std::move(r));
    }
    // normal: any nonzero vector killed by rows; reuse rank elimination
    QVec a(d, Rational(0));
    {
      QMat m = rows;
      int row = 0;
      std::vector<int> piv(d, -1);
      for (int cc = 0; cc < d && row < static_cast<int>(m.size()); ++cc) {
        int p = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
          if (!m[r][cc].is_zero()) {
            p = r;
            break;
          }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
          if (r == row || m[r][cc].is_zero()) continue;
          Rational fq = m[r][cc] / m[row][cc];
          for (int t = 0; t < d; ++t) m[r][t] -= fq * m[row][t];
        }
        piv[cc] = row;
        ++row;
      }
      int freec = -1;
      for (int cc = 0; cc < d; ++cc)
        if (piv[cc] < 0) {
          freec = cc;
          break;
        }
      a[freec] = Rational(1);
      for (int cc = 0; cc < d; ++cc)
        if (piv[cc] >= 0) a[cc] = -(m[piv[cc]][freec] / m[piv[cc]][cc]);
    }
    Rational b(0);
    for (int j = 0; j < d; ++j) b += a[j] * c.pts[f[0]][j];
    Rational side(0);
    for (int j = 0; j < d; ++j) side += a[j] * centroid[j];
    if (side > b) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    ineqs.push_back({std::move(a), std::move(b)});
  }
  LatticeVec lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = hi[j] = P.vertices[0][j];
    for (auto& v : P.vertices) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  std::vector<LatticeVec> out;
  LatticeVec cur(d);
  std::function<void(int)> enumerate = [&](int j) {
    if (j == d) {
      for (auto& iq : ineqs) {
        Rational v(0);
        for (int t = 0; t < d; ++t) v += iq.a[t] * Rational(static_cast<long>(cur[t]));
        if (v > iq.b) return;
      }
      out.push_back(cur);
      return;
    }
    for (long long x = lo[j]; x <= hi[j]; ++x) {
      cur[j] = x;
      enumerate(j + 1);
    }
  };
  enumerate(0);
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation pulling_triangulation(const std::vector<LatticeVec>& points,
                                    const std::vector<int>& order) {
  if (order.size() != points.size())
    fail(Err::InvalidType, "order must permute the point indices");
  QConfig c = to_q(points);
  std::vector<int> rank(points.size());
  std::vector<bool> seen(points.size(), false);
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= static_cast<int>(points.size()) || seen[order[i]])
      fail(Err::InvalidType, "order must permute the point indices");
    seen[order[i]] = true;
    rank[order[i]] = static_cast<int>(i);
  }
  std::vector<int> all(points.size());
  for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
  int d = c.dim();
  if (affine_rank(c, all) != d)
    fail(Err::DegeneratePointConfiguration, "points do not span");
  std::set<std::vector<int>> out;
  pulling_rec(c, all, rank, out);
  Triangulation T;
  T.points = points;
  T.simplices.assign(out.begin(), out.end());
  return T;
}

Int lattice_volume(const LatticePolytope& P) {
  std::vector<int> order(P.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  Triangulation T = pulling_triangulation(P.vertices, order);
  Rational vol(0);
  for (auto& s : T.simplices) {
    Rational dq = simplex_det(T.points, s);
    vol += dq.sign() < 0 ? -dq : dq;
  }
  if (!vol.is_integer()) fail(Err::InvalidType, "non-integral lattice volume");
  return vol.num();
}

namespace {

void validate_triangulation(const LatticePolytope& P, const Triangulation& T) {
  int d = P.dim;
  Rational vol(0);
  for (auto& s : T.simplices) {
    if (static_cast<int>(s.size()) != d + 1)
      fail(Err::NotATriangulation, "simplex has wrong vertex count");
    for (int i : s)
      if (i < 0 || i >= static_cast<int>(T.points.size()))
        fail(Err::NotATriangulation, "simplex index out of range");
    Rational dq = simplex_det(T.points, s);
    if (dq.is_zero()) fail(Err::NotATriangulation, "degenerate simplex");
    vol += dq.sign() < 0 ? -dq : dq;
  }
  if (Rational(lattice_volume(P)) != vol)
    fail(Err::NotATriangulation, "simplex volumes do not fill the polytope");
}

}  // namespace

bool is_unimodular(const LatticePolytope& P, const Triangulation& T) {
  validate_triangulation(P, T);
  for (auto& s : T.simplices) {
    Rational dq = simplex_det(T.points, s);
    if (dq != Rational(1) && dq != Rational(-1)) return false;
  }
  return true;
}

namespace {

// interior walls: (simplex containing the wall, its opposite vertex, the
// coefficients of the strict folding inequality on heights)
struct Wall {
  std::vector<std::pair<int, Rational>> coeffs;  // point index, coefficient
};

std::vector<Wall> wall_inequalities(const Triangulation& T) {
  int d = static_cast<int>(T.points[0].size());
  QConfig c = to_q(T.points);
  std::map<std::vector<int>, std::vector<int>> by_facet;  // wall -> simplex ids
  for (size_t si = 0; si < T.simplices.size(); ++si) {
    const auto& s = T.simplices[si];
    for (size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> w;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) w.push_back(s[i]);
      by_facet[w].push_back(static_cast<int>(si));
    }
  }
  std::vector<Wall> walls;
  for (auto& [w, sids] : by_facet) {
    if (sids.size() != 2) continue;
    const auto& s1 = T.simplices[sids[0]];
    const auto& s2 = T.simplices[sids[1]];
    int q = -1;
    for (int v : s2)
      if (std::find(w.begin(), w.end(), v) == w.end()) q = v;
    // express q as an affine combination of s1's vertices
    QMat m(d + 1, QVec(d + 2, Rational(0)));
    for (int col = 0; col <= d; ++col) {
      for (int row = 0; row < d; ++row)
        m[row][col] = c.pts[s1[col]][row];
      m[d][col] = Rational(1);
    }
    for (int row = 0; row < d; ++row) m[row][d + 1] = c.pts[q][row];
    m[d][d + 1] = Rational(1);
    // eliminate to solve for lambda
    int row = 0;
    std::vector<int> piv(d + 1, -1);
    for (int cc = 0; cc <= d && row <= d; ++cc) {
      int p = -1;
      for (int r = row; r <= d; ++r)
        if (!m[r][cc].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(m[p], m[row]);
      for (int r = 0; r <= d; ++r) {
        if (r == row || m[r][cc].is_zero()) continue;
        Rational f = m[r][cc] / m[row][cc];
        for (int t = cc; t <= d + 1; ++t) m[r][t] -= f * m[row][t];
      }
      piv[cc] = row;
      ++row;
    }
    Wall wall;
    wall.coeffs.emplace_back(q, Rational(1));
    for (int col = 0; col <= d; ++col) {
      if (piv[col] < 0) fail(Err::NotATriangulation, "wall solve failed");
      Rational lambda = m[piv[col]][d + 1] / m[piv[col]][col];
      if (!lambda.is_zero()) wall.coeffs.emplace_back(s1[col], -lambda);
    }
    walls.push_back(std::move(wall));
  }
  return walls;
}

}  // namespace

std::optional<std::vector<Rational>> is_regular(
    const LatticePolytope& P, const Triangulation& T,
    const std::optional<std::vector<Rational>>& heights) {
  validate_triangulation(P, T);
  auto walls = wall_inequalities(T);
  if (heights) {
    if (heights->size() != T.points.size())
      fail(Err::VariableCountMismatch, "one height per point required");
    for (auto& w : walls) {
      Rational v(0);
      for (auto& [i, coef] : w.coeffs) v += coef * (*heights)[i];
      if (v.sign() <= 0) return std::nullopt;
    }
    return heights;
  }
  // LP: maximize eps subject to wall(h) >= eps, eps <= 1
  int n = static_cast<int>(T.points.size());
  LpProblem lp;
  for (auto& w : walls) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (auto& [i, coef] : w.coeffs) row[i] -= coef;
    row[n] = Rational(1);
    lp.A.push_back(std::move(row));
    lp.b.push_back(Rational(0));
  }
  {
    std::vector<Rational> row(n + 1, Rational(0));
    row[n] = Rational(1);
    lp.A.push_back(std::move(row));
    lp.b.push_back(Rational(1));
  }
  lp.c.assign(n + 1, Rational(0));
  lp.c[n] = Rational(1);
  auto sol = lp_maximize(lp);
  if (!sol || sol->objective.sign() <= 0) return std::nullopt;
  std::vector<Rational> h(sol->x.begin(), sol->x.begin() + n);
  // exactness check
  for (auto& w : walls) {
    Rational v(0);
    for (auto& [i, coef] : w.coeffs) v += coef * h[i];
    if (v.sign() <= 0) return std::nullopt;
  }
  return h;
}

std::optional<Degeneration> find_degeneration(const LatticePolytope& P,
                                              const SimplicialComplex& target,
                                              const DegenerationBudget& budget,
                                              const GBOptions& opt) {
  auto pts = lattice_points(P);
  int m = static_cast<int>(pts.size());
  if (target.nverts() != m)
    fail(Err::VertexCountMismatch,
         "target has " + std::to_string(target.nverts()) + " vertices, polytope has " +
             std::to_string(m) + " lattice points");
  Ideal IP = toric_ideal(pts, opt);
  Ring R = IP.ring;

  std::mt19937_64 rng(budget.seed);
  auto try_order = [&](const std::vector<int>& order) -> std::optional<Degeneration> {
    Triangulation T;
    try {
      T = pulling_triangulation(pts, order);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!is_unimodular(P, T)) return std::nullopt;
    // combinatorial match first
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
    SimplicialComplex K = make_complex(labels, T.simplices);
    auto bij = complexes_isomorphic(K, target);
    if (!bij) return std::nullopt;
    auto h = is_regular(P, T, std::nullopt);
    if (!h) return std::nullopt;
    // integral heights
    Int lcm(1);
    for (auto& x : *h) {
      Int d = x.den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
      lcm = lcm / g * d;
    }
    std::vector<long> w(m);
    for (int i = 0; i < m; ++i) {
      Rational scaled = (*h)[i] * Rational(lcm);
      w[i] = static_cast<long>(scaled.num().get_si());
    }
    // full verification: the weight order degenerates the toric ideal to
    // the Stanley-Reisner ideal of the target under the bijection
    Ideal expected;
    {
      // move target's Stanley-Reisner ideal through the bijection
      Ring TR = make_ring(target.labels);
      Ideal sr = sr_ideal(target, TR);
      std::vector<Polynomial> gens;
      for (auto& g : sr.gens) {
        Monomial mm(m);
        for (int v = 0; v < target.nverts(); ++v)
          if (g.terms()[0].m[v]) {
            int src = -1;
            for (int i = 0; i < m; ++i)
              if ((*bij)[i] == v) src = i;
            mm.set(src, g.terms()[0].m[v]);
          }
        gens.push_back(Polynomial::monomial(R, mm));
      }
      expected = make_ideal(R, std::move(gens));
    }
    Ideal in_w;
    try {
      auto word = MonomialOrder::weight(std::vector<long>(w.begin(), w.end()),
                                        MonomialOrder::grevlex());
      in_w = initial_ideal(IP, word, opt);
    } catch (const Error& e) {
      if (e.kind() == Err::NonGenericWeight) return std::nullopt;
      throw;
    }
    if (!ideals_equal(in_w, expected, opt)) {
      // wrong sign convention for this wall orientation: try negated heights
      std::vector<long> neg(w.size());
      for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
      try {
        auto word = MonomialOrder::weight(std::vector<long>(neg.begin(), neg.end()),
                                          MonomialOrder::grevlex());
        Ideal in2 = initial_ideal(IP, word, opt);
        if (ideals_equal(in2, expected, opt)) {
          Degeneration D;
          D.triangulation = std::move(T);
          D.heights = std::move(neg);
          D.vertex_bijection = *bij;
          D.initial = std::move(in2);
          return D;
        }
      } catch (const Error&) {
      }
      return std::nullopt;
    }
    Degeneration D;
    D.triangulation = std::move(T);
    D.heights = std::move(w);
    D.vertex_bijection = *bij;
    D.initial = std::move(in_w);
    return D;
  };

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  long long tried = 0;
  // identity and a few rotations first, then seeded random orders
  for (long long iter = 0; iter < budget.max_orders; ++iter) {
    ++tried;
    auto res = try_order(order);
    if (res) {
      res->orders_tried = tried;
      return res;
    }
    std::shuffle(order.begin(), order.end(), rng);
  }
  return std::nullopt;
}

}  // namespace fano
