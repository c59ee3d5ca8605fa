#pragma once

#include <optional>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

/// Sparse row over Q: (column, coefficient) pairs sorted by column,
/// no zero coefficients.
struct SparseRow {
  std::vector<std::pair<int, Rational>> e;

  bool empty() const { return e.empty(); }
  int lead_col() const { return e.front().first; }
  const Rational& lead_coeff() const { return e.front().second; }
  void add_entry(int col, const Rational& c) {
    if (!c.is_zero()) e.emplace_back(col, c);
  }
  void sort_entries();
};

/// r -= c * pivot  (pivot's lead column entry cancels exactly when
/// c == r's coefficient at that column divided by pivot's lead).
SparseRow row_axpy(const SparseRow& r, const Rational& c, const SparseRow& pivot);

/// Reduced row echelon form over Q. The RREF of a row space is unique, so
/// serial and parallel elimination agree entry for entry.
struct Rref {
  int ncols = 0;
  std::vector<SparseRow> rows;    // pivot coefficient 1, sorted by pivot col
  std::vector<int> pivot_cols;    // ascending, parallel to rows

  int rank() const { return static_cast<int>(rows.size()); }
  bool is_pivot(int col) const;

  /// Fully reduce a row against the pivot rows.
  SparseRow reduce(const SparseRow& r) const;

  /// Nullspace basis: one vector per free column, entry 1 at the free
  /// column. Deterministic, column-echelon shaped.
  std::vector<SparseRow> nullspace() const;
};

struct RrefOptions {
  bool parallel = true;
  int batch = 256;
};

/// Serial reference implementation, kept for testing the parallel kernel.
Rref rref_serial(const std::vector<SparseRow>& rows, int ncols);

/// OpenMP-parallel elimination: rows are reduced against the current pivot
/// set in batches; insertion is serial, so the result equals rref_serial.
Rref rref_parallel(const std::vector<SparseRow>& rows, int ncols, const RrefOptions& opt = {});

Rref rref(const std::vector<SparseRow>& rows, int ncols);

/// Solve A x = b (dense rhs), free variables set to 0; nullopt if
/// inconsistent.
std::optional<std::vector<Rational>> solve_particular(const std::vector<SparseRow>& rows,
                                                      int ncols,
                                                      const std::vector<Rational>& rhs);

int rank_of(const std::vector<SparseRow>& rows, int ncols);

}  // namespace fano
