#pragma once

#include <vector>

#include "fano/order.hpp"
#include "fano/polynomial.hpp"

namespace fano {

/// Coefficient arithmetic in the ring's field (rationals, or Z/p when the
/// ring carries a prime).
Rational field_norm(const Ring& r, const Rational& c);
Rational field_div(const Ring& r, const Rational& a, const Rational& b);

/// Term of a free-module element: component index, monomial, coefficient.
struct MTerm {
  int comp;
  Monomial m;
  Rational c;
};

/// Element of S^rank, terms sorted descending under a position-over-term
/// order (lower component dominates; ties by the monomial order).
struct MVec {
  std::vector<MTerm> t;

  bool is_zero() const { return t.empty(); }
  const MTerm& lead() const { return t.front(); }
};

/// Position-over-term comparison: +1 if a > b.
inline int mterm_cmp(const MOrder& ord, const MTerm& a, const MTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ord->compare(a.m, b.m);
}

MVec mvec_from_poly(const Ring& ring, const Polynomial& p, const MOrder& ord, int comp = 0);
MVec mvec_from_tuple(const Ring& ring, const std::vector<Polynomial>& tuple,
                     const MOrder& ord, int comp_offset = 0);
Polynomial mvec_component(const MVec& v, const Ring& ring, int comp);
void mvec_sort(const Ring& ring, MVec& v, const MOrder& ord);

/// a - c * x^m * b, all sorted under ord.
MVec mvec_axpy(const Ring& ring, const MVec& a, const Rational& c, const Monomial& m,
               const MVec& b, const MOrder& ord);

}  // namespace fano
