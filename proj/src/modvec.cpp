#include "fano/modvec.hpp"

#include <algorithm>

namespace fano {

void mvec_sort(const Ring& ring, MVec& v, const MOrder& ord) {
  std::sort(v.t.begin(), v.t.end(),
            [&](const MTerm& a, const MTerm& b) { return mterm_cmp(ord, a, b) > 0; });
  std::vector<MTerm> out;
  out.reserve(v.t.size());
  for (auto& t : v.t) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = field_norm(ring, out.back().c + t.c);
    } else {
      t.c = field_norm(ring, t.c);
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const MTerm& t) { return t.c.is_zero(); }),
            out.end());
  v.t = std::move(out);
}

MVec mvec_from_poly(const Ring& ring, const Polynomial& p, const MOrder& ord, int comp) {
  MVec v;
  v.t.reserve(p.terms().size());
  for (auto& t : p.terms()) v.t.push_back({comp, t.m, t.c});
  mvec_sort(ring, v, ord);
  return v;
}

MVec mvec_from_tuple(const Ring& ring, const std::vector<Polynomial>& tuple,
                     const MOrder& ord, int comp_offset) {
  MVec v;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (auto& t : tuple[i].terms())
      v.t.push_back({comp_offset + static_cast<int>(i), t.m, t.c});
  mvec_sort(ring, v, ord);
  return v;
}

Polynomial mvec_component(const MVec& v, const Ring& ring, int comp) {
  std::vector<Term> terms;
  for (auto& t : v.t)
    if (t.comp == comp) terms.push_back({t.m, t.c});
  return Polynomial(ring, std::move(terms));
}

MVec mvec_axpy(const Ring& ring, const MVec& a, const Rational& c, const Monomial& m,
               const MVec& b, const MOrder& ord) {
  MVec out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    MTerm bt{b.t[j].comp, b.t[j].m * m, Rational(0)};
    int cmp = mterm_cmp(ord, a.t[i], bt);
    if (cmp > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      Rational v = field_norm(ring, -(c * b.t[j].c));
      if (!v.is_zero()) out.t.push_back({bt.comp, std::move(bt.m), std::move(v)});
      ++j;
    } else {
      Rational v = field_norm(ring, a.t[i].c - c * b.t[j].c);
      if (!v.is_zero()) out.t.push_back({a.t[i].comp, a.t[i].m, std::move(v)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) {
    Rational v = field_norm(ring, -(c * b.t[j].c));
    if (!v.is_zero()) out.t.push_back({b.t[j].comp, b.t[j].m * m, std::move(v)});
  }
  return out;
}

}  // namespace fano
