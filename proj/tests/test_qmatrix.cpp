#include <doctest.h>

#include <random>

#include "fano/qmatrix.hpp"

using namespace fano;

namespace {

std::vector<SparseRow> rand_rows(std::mt19937_64& rng, int nrows, int ncols,
                                 int density) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> col(0, ncols - 1);
  std::vector<SparseRow> rows(nrows);
  for (auto& r : rows) {
    for (int k = 0; k < density; ++k) r.add_entry(col(rng), Rational(coef(rng)));
    r.sort_entries();
  }
  return rows;
}

bool rref_equal(const Rref& a, const Rref& b) {
  if (a.pivot_cols != b.pivot_cols) return false;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].e.size() != b.rows[i].e.size()) return false;
    for (size_t j = 0; j < a.rows[i].e.size(); ++j)
      if (a.rows[i].e[j] != b.rows[i].e[j]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rref of a known matrix") {
  // [1 2 3; 2 4 6; 1 0 1] -> rank 2
  std::vector<SparseRow> rows(3);
  rows[0].add_entry(0, 1); rows[0].add_entry(1, 2); rows[0].add_entry(2, 3);
  rows[1].add_entry(0, 2); rows[1].add_entry(1, 4); rows[1].add_entry(2, 6);
  rows[2].add_entry(0, 1); rows[2].add_entry(2, 1);
  Rref R = rref_serial(rows, 3);
  CHECK(R.rank() == 2);
  auto ns = R.nullspace();
  REQUIRE(ns.size() == 1);
  // A * v == 0
  for (auto& row : rows) {
    Rational dot(0);
    for (auto& [c, v] : row.e)
      for (auto& [c2, v2] : ns[0].e)
        if (c == c2) dot += v * v2;
    CHECK(dot.is_zero());
  }
}

TEST_CASE("parallel kernel agrees with the serial reference") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    auto rows = rand_rows(rng, 120, 40, 6);
    Rref a = rref_serial(rows, 40);
    RrefOptions opt;
    opt.batch = 17;
    Rref b = rref_parallel(rows, 40, opt);
    CHECK(rref_equal(a, b));
  }
}

TEST_CASE("rref is invariant under row shuffles") {
  std::mt19937_64 rng(77);
  auto rows = rand_rows(rng, 60, 25, 5);
  Rref a = rref(rows, 25);
  std::shuffle(rows.begin(), rows.end(), rng);
  Rref b = rref(rows, 25);
  CHECK(rref_equal(a, b));
}

TEST_CASE("nullspace vectors annihilate and count matches rank") {
  std::mt19937_64 rng(31);
  auto rows = rand_rows(rng, 50, 30, 4);
  Rref R = rref(rows, 30);
  auto ns = R.nullspace();
  CHECK(static_cast<int>(ns.size()) == 30 - R.rank());
  for (auto& v : ns) {
    for (auto& row : rows) {
      Rational dot(0);
      size_t i = 0, j = 0;
      while (i < row.e.size() && j < v.e.size()) {
        if (row.e[i].first < v.e[j].first) ++i;
        else if (row.e[i].first > v.e[j].first) ++j;
        else dot += row.e[i++].second * v.e[j++].second;
      }
      CHECK(dot.is_zero());
    }
  }
}

TEST_CASE("solve_particular") {
  // x + y = 3, x - y = 1 -> x=2, y=1
  std::vector<SparseRow> rows(2);
  rows[0].add_entry(0, 1); rows[0].add_entry(1, 1);
  rows[1].add_entry(0, 1); rows[1].add_entry(1, -1);
  auto sol = solve_particular(rows, 2, {Rational(3), Rational(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rational(2));
  CHECK((*sol)[1] == Rational(1));

  // inconsistent
  std::vector<SparseRow> bad(2);
  bad[0].add_entry(0, 1);
  bad[1].add_entry(0, 1);
  CHECK(!solve_particular(bad, 1, {Rational(1), Rational(2)}).has_value());
}
