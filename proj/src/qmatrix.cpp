#include "fano/qmatrix.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fano {

void SparseRow::sort_entries() {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> out;
  out.reserve(e.size());
  for (auto& p : e) {
    if (!out.empty() && out.back().first == p.first)
      out.back().second += p.second;
    else
      out.push_back(std::move(p));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second.is_zero(); }),
            out.end());
  e = std::move(out);
}

SparseRow row_axpy(const SparseRow& r, const Rational& c, const SparseRow& pivot) {
  SparseRow out;
  out.e.reserve(r.e.size() + pivot.e.size());
  size_t i = 0, j = 0;
  while (i < r.e.size() && j < pivot.e.size()) {
    if (r.e[i].first < pivot.e[j].first) {
      out.e.push_back(r.e[i++]);
    } else if (r.e[i].first > pivot.e[j].first) {
      Rational v = -(c * pivot.e[j].second);
      if (!v.is_zero()) out.e.emplace_back(pivot.e[j].first, v);
      ++j;
    } else {
      Rational v = r.e[i].second - c * pivot.e[j].second;
      if (!v.is_zero()) out.e.emplace_back(r.e[i].first, v);
      ++i, ++j;
    }
  }
  for (; i < r.e.size(); ++i) out.e.push_back(r.e[i]);
  for (; j < pivot.e.size(); ++j) {
    Rational v = -(c * pivot.e[j].second);
    if (!v.is_zero()) out.e.emplace_back(pivot.e[j].first, v);
  }
  return out;
}

bool Rref::is_pivot(int col) const {
  return std::binary_search(pivot_cols.begin(), pivot_cols.end(), col);
}

SparseRow Rref::reduce(const SparseRow& r) const {
  SparseRow cur = r;
  size_t i = 0;
  while (i < cur.e.size()) {
    int col = cur.e[i].first;
    auto it = std::lower_bound(pivot_cols.begin(), pivot_cols.end(), col);
    if (it != pivot_cols.end() && *it == col) {
      size_t pi = static_cast<size_t>(it - pivot_cols.begin());
      cur = row_axpy(cur, cur.e[i].second, rows[pi]);
      // entries before position i are untouched (pivot row starts at col)
    } else {
      ++i;
    }
  }
  return cur;
}

namespace {

struct Builder {
  int ncols;
  std::vector<SparseRow> pivots;          // normalized, lead coeff 1
  std::map<int, size_t> by_col;           // pivot col -> index

  SparseRow reduce(const SparseRow& r) const {
    SparseRow cur = r;
    size_t i = 0;
    while (i < cur.e.size()) {
      auto it = by_col.find(cur.e[i].first);
      if (it != by_col.end()) {
        cur = row_axpy(cur, cur.e[i].second, pivots[it->second]);
      } else {
        ++i;
      }
    }
    return cur;
  }

  void insert(SparseRow r) {
    r = reduce(r);
    if (r.empty()) return;
    Rational lead = r.lead_coeff();
    for (auto& p : r.e) p.second /= lead;
    by_col[r.lead_col()] = pivots.size();
    pivots.push_back(std::move(r));
  }

  Rref finish() {
    Rref out;
    out.ncols = ncols;
    std::vector<size_t> order;
    for (auto& [col, idx] : by_col) order.push_back(idx);
    std::vector<SparseRow> sorted;
    sorted.reserve(order.size());
    for (size_t idx : order) sorted.push_back(std::move(pivots[idx]));
    std::map<int, size_t> colidx;
    for (size_t i = 0; i < sorted.size(); ++i) colidx[sorted[i].lead_col()] = i;
    // back substitution, last pivot first: each row ends fully reduced
    for (int i = static_cast<int>(sorted.size()) - 1; i >= 0; --i) {
      SparseRow& r = sorted[i];
      size_t k = 1;
      while (k < r.e.size()) {
        auto it = colidx.find(r.e[k].first);
        if (it != colidx.end()) {
          r = row_axpy(r, r.e[k].second, sorted[it->second]);
        } else {
          ++k;
        }
      }
    }
    for (auto& r : sorted) out.pivot_cols.push_back(r.lead_col());
    out.rows = std::move(sorted);
    return out;
  }
};

}  // namespace

Rref rref_serial(const std::vector<SparseRow>& rows, int ncols) {
  Builder b{ncols, {}, {}};
  for (const auto& r : rows) b.insert(r);
  return b.finish();
}

Rref rref_parallel(const std::vector<SparseRow>& rows, int ncols, const RrefOptions& opt) {
#ifndef _OPENMP
  (void)opt;
  return rref_serial(rows, ncols);
#else
  if (!opt.parallel) return rref_serial(rows, ncols);
  Builder b{ncols, {}, {}};
  size_t n = rows.size();
  size_t batch = std::max(1, opt.batch);
  std::vector<SparseRow> reduced(std::min(batch, n));
  for (size_t start = 0; start < n; start += batch) {
    size_t end = std::min(n, start + batch);
#pragma omp parallel for schedule(dynamic)
    for (long k = static_cast<long>(start); k < static_cast<long>(end); ++k)
      reduced[k - start] = b.reduce(rows[k]);
    // serial insertion re-reduces against pivots added within this batch
    for (size_t k = start; k < end; ++k) b.insert(std::move(reduced[k - start]));
  }
  return b.finish();
#endif
}

Rref rref(const std::vector<SparseRow>& rows, int ncols) {
  return rref_parallel(rows, ncols, RrefOptions{});
}

std::vector<SparseRow> Rref::nullspace() const {
  std::vector<bool> is_piv(ncols, false);
  for (int c : pivot_cols) is_piv[c] = true;
  std::vector<int> basis_of_col(ncols, -1);
  std::vector<SparseRow> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    basis_of_col[f] = static_cast<int>(basis.size());
    SparseRow v;
    v.add_entry(f, Rational(1));
    basis.push_back(std::move(v));
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (auto& [col, c] : rows[i].e) {
      if (basis_of_col[col] >= 0)
        basis[basis_of_col[col]].add_entry(pivot_cols[i], -c);
    }
  }
  for (auto& v : basis) v.sort_entries();
  return basis;
}

std::optional<std::vector<Rational>> solve_particular(const std::vector<SparseRow>& rows,
                                                      int ncols,
                                                      const std::vector<Rational>& rhs) {
  std::vector<SparseRow> aug = rows;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].add_entry(ncols, rhs[i]);
  for (auto& r : aug) r.sort_entries();
  Rref R = rref(aug, ncols + 1);
  std::vector<Rational> x(ncols, Rational(0));
  for (size_t i = 0; i < R.rows.size(); ++i) {
    if (R.pivot_cols[i] == ncols) return std::nullopt;  // inconsistent
    const SparseRow& r = R.rows[i];
    if (!r.e.empty() && r.e.back().first == ncols)
      x[R.pivot_cols[i]] = r.e.back().second;
  }
  return x;
}

int rank_of(const std::vector<SparseRow>& rows, int ncols) {
  return rref(rows, ncols).rank();
}

}  // namespace fano
