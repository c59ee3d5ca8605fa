#include "fano/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace fano {

namespace {

MVec mvec_times(const Ring& ring, const MVec& v, const Monomial& m, const Rational& c) {
  MVec out;
  out.t.reserve(v.t.size());
  for (auto& t : v.t) {
    Rational cc = field_norm(ring, t.c * c);
    if (!cc.is_zero()) out.t.push_back({t.comp, t.m * m, cc});
  }
  return out;
}

// Full normal form: cancels every reducible term, top down.
MVec reduce_full(const Ring& ring, MVec v, const std::vector<MVec>& basis,
                 const MOrder& ord) {
  MVec done;
  while (!v.is_zero()) {
    const MTerm& lt = v.lead();
    const MVec* red = nullptr;
    for (auto& g : basis) {
      if (g.is_zero()) continue;
      const MTerm& gl = g.lead();
      if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (red) {
      const MTerm& gl = red->lead();
      Rational c = field_div(ring, lt.c, gl.c);
      v = mvec_axpy(ring, v, c, lt.m / gl.m, *red, ord);
    } else {
      done.t.push_back(lt);
      v.t.erase(v.t.begin());
    }
  }
  return done;
}

struct Pair {
  long sugar;
  Monomial lcm;
  int i, j;
};

struct Engine {
  const Ring& ring;
  const MOrder& ord;
  const GBOptions& opt;
  bool product_criterion;
  std::vector<int> shifts;  // degree shift per component (module grading)

  std::vector<MVec> basis;
  std::vector<long> sugar;
  std::set<std::pair<int, int>> treated;

  long elem_sugar(const MVec& v) const {
    long s = 0;
    for (auto& t : v.t) {
      long d = static_cast<long>(t.m.deg());
      if (!shifts.empty()) d += shifts[t.comp];
      s = std::max(s, d);
    }
    return s;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void run(std::vector<MVec> gens) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      basis.push_back(std::move(g));
      sugar.push_back(elem_sugar(basis.back()));
    }
    std::vector<Pair> queue;
    auto push_pairs = [&](int j) {
      for (int i = 0; i < j; ++i) {
        if (basis[i].is_zero()) continue;
        const MTerm& a = basis[i].lead();
        const MTerm& b = basis[j].lead();
        if (a.comp != b.comp) continue;
        Monomial L = a.m.lcm(b.m);
        long s = std::max(sugar[i] - static_cast<long>(a.m.deg()),
                          sugar[j] - static_cast<long>(b.m.deg())) +
                 static_cast<long>(L.deg());
        queue.push_back({s, std::move(L), i, j});
      }
      std::sort(queue.begin(), queue.end(),
                [&](const Pair& x, const Pair& y) { return pair_less(y, x); });
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    size_t processed = 0;
    while (!queue.empty()) {
      Pair p = queue.back();
      queue.pop_back();
      if (++processed > opt.max_pairs)
        fail(Err::BudgetExceeded, "pair budget exhausted (" +
                                      std::to_string(opt.max_pairs) + ")");
      treated.insert({p.i, p.j});
      const MVec& gi = basis[p.i];
      const MVec& gj = basis[p.j];
      if (gi.is_zero() || gj.is_zero()) continue;
      const MTerm& ti = gi.lead();
      const MTerm& tj = gj.lead();
      if (product_criterion && ti.m.coprime(tj.m)) continue;
      if (chain_criterion(p)) continue;
      MVec u = mvec_times(ring, gi, p.lcm / ti.m, field_div(ring, Rational(1), ti.c));
      MVec s = mvec_axpy(ring, u, field_div(ring, Rational(1), tj.c), p.lcm / tj.m, gj, ord);
      s = reduce_full(ring, std::move(s), basis, ord);
      if (s.is_zero()) continue;
      basis.push_back(std::move(s));
      sugar.push_back(std::max(p.sugar, elem_sugar(basis.back())));
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
    finalize();
  }

  bool chain_criterion(const Pair& p) const {
    int comp = basis[p.i].lead().comp;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == p.i || k == p.j || basis[k].is_zero()) continue;
      const MTerm& tk = basis[k].lead();
      if (tk.comp != comp || !tk.m.divides(p.lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) return true;
    }
    return false;
  }

  void finalize() {
    // minimal leads
    std::vector<MVec> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      bool redundant = false;
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j || basis[j].is_zero()) continue;
        const MTerm& a = basis[j].lead();
        const MTerm& b = basis[i].lead();
        if (a.comp == b.comp && a.m.divides(b.m) &&
            (a.m != b.m || j < i)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(basis[i]);
    }
    // interreduce tails to the unique reduced basis
    auto mvec_eq = [](const MVec& a, const MVec& b) {
      if (a.t.size() != b.t.size()) return false;
      for (size_t k = 0; k < a.t.size(); ++k)
        if (a.t[k].comp != b.t[k].comp || a.t[k].m != b.t[k].m ||
            a.t[k].c != b.t[k].c)
          return false;
      return true;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<MVec> others;
        for (size_t j = 0; j < kept.size(); ++j)
          if (j != i) others.push_back(kept[j]);
        MVec r = reduce_full(ring, kept[i], others, ord);
        if (!mvec_eq(r, kept[i])) changed = true;
        kept[i] = std::move(r);
      }
      kept.erase(std::remove_if(kept.begin(), kept.end(),
                                [](const MVec& v) { return v.is_zero(); }),
                 kept.end());
    }
    for (auto& g : kept) {
      Rational lc = g.lead().c;
      if (!lc.is_one()) g = mvec_times(ring, g, Monomial(ring->nvars()),
                                       field_div(ring, Rational(1), lc));
    }
    std::sort(kept.begin(), kept.end(), [&](const MVec& a, const MVec& b) {
      return mterm_cmp(ord, a.lead(), b.lead()) > 0;
    });
    basis = std::move(kept);
  }
};

}  // namespace

std::vector<MVec> module_groebner(const Ring& ring, std::vector<MVec> gens, int rank,
                                  const MOrder& order, const GBOptions& opt,
                                  bool product_criterion) {
  (void)rank;
  Engine e{ring, order, opt, product_criterion, {}};
  e.run(std::move(gens));
  return std::move(e.basis);
}

MVec module_reduce(const Ring& ring, const MVec& v, const std::vector<MVec>& basis,
                   const MOrder& order) {
  return reduce_full(ring, v, basis, order);
}

bool Ideal::is_homogeneous() const {
  for (auto& g : gens)
    if (!g.is_zero() && !g.homogeneous_degree()) return false;
  return true;
}

Ideal make_ideal(Ring ring, std::vector<Polynomial> gens) {
  for (auto& g : gens) check_same_ring(ring, g.ring());
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Polynomial& p) { return p.is_zero(); }),
             gens.end());
  return Ideal{std::move(ring), std::move(gens)};
}

Ideal parse_ideal(const Ring& ring, const std::vector<std::string>& polys) {
  std::vector<Polynomial> gens;
  gens.reserve(polys.size());
  for (auto& s : polys) gens.push_back(parse_polynomial(s, ring));
  return make_ideal(ring, std::move(gens));
}

ReducedGroebnerBasis groebner_basis(const Ideal& I, const MOrder& order,
                                    const GBOptions& opt) {
  std::vector<MVec> gens;
  gens.reserve(I.gens.size());
  for (auto& g : I.gens) gens.push_back(mvec_from_poly(I.ring, g, order));
  auto gb = module_groebner(I.ring, std::move(gens), 1, order, opt,
                            /*product_criterion=*/true);
  ReducedGroebnerBasis out;
  out.ring = I.ring;
  out.order = order;
  for (auto& v : gb) {
    out.leads.push_back(v.lead().m);
    out.basis.push_back(mvec_component(v, I.ring, 0));
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const ReducedGroebnerBasis& G) {
  check_same_ring(p.ring(), G.ring);
  std::vector<MVec> basis;
  basis.reserve(G.basis.size());
  for (auto& g : G.basis) basis.push_back(mvec_from_poly(G.ring, g, G.order));
  MVec v = mvec_from_poly(G.ring, p, G.order);
  return mvec_component(reduce_full(G.ring, std::move(v), basis, G.order), G.ring, 0);
}

Ideal initial_ideal(const Ideal& I, const MOrder& order, const GBOptions& opt) {
  auto G = groebner_basis(I, order, opt);
  if (order->kind() == MonomialOrder::Kind::Weight) {
    const auto& w = order->weights();
    for (auto& g : G.basis) {
      long long best = 0;
      int count = 0;
      for (auto& t : g.terms()) {
        long long wd = 0;
        for (int i = 0; i < I.ring->nvars(); ++i)
          wd += static_cast<long long>(w[i]) * t.m[i];
        if (count == 0 || wd > best) {
          best = wd;
          count = 1;
        } else if (wd == best) {
          ++count;
        }
      }
      if (count > 1)
        fail(Err::NonGenericWeight,
             "tied initial form in basis element: " + g.str());
    }
  }
  std::vector<Polynomial> gens;
  gens.reserve(G.leads.size());
  for (auto& m : G.leads) gens.push_back(Polynomial::monomial(I.ring, m));
  return make_ideal(I.ring, std::move(gens));
}

bool ideal_membership(const Polynomial& p, const Ideal& I, const GBOptions& opt) {
  auto G = groebner_basis(I, MonomialOrder::grevlex(), opt);
  return normal_form(p, G).is_zero();
}

namespace {

Ring extended_ring(const Ring& base, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = base->vars;
  for (auto& v : extra) vars.push_back(v);
  return make_ring(std::move(vars), base->prime);
}

// transport by variable name between rings; target must contain every
// variable that appears
Polynomial transport(const Polynomial& p, const Ring& to) {
  std::vector<Term> terms;
  const Ring& from = p.ring();
  std::vector<int> map(from->nvars());
  for (int i = 0; i < from->nvars(); ++i) map[i] = to->var_index(from->vars[i]);
  for (auto& t : p.terms()) {
    Monomial m(to->nvars());
    for (int i = 0; i < from->nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (map[i] < 0) fail(Err::RingMismatch, "variable " + from->vars[i] + " missing");
      m.set(map[i], t.m[i]);
    }
    terms.push_back({std::move(m), t.c});
  }
  return Polynomial(to, std::move(terms));
}

std::string fresh_var(const Ring& r, const std::string& stem) {
  std::string name = stem;
  int k = 0;
  while (r->var_index(name) >= 0) name = stem + std::to_string(k++);
  return name;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& vars, const GBOptions& opt) {
  if (vars.empty()) return I;
  MOrder ord = MonomialOrder::elimination(vars, MonomialOrder::grevlex(),
                                          MonomialOrder::grevlex());
  auto G = groebner_basis(I, ord, opt);
  std::vector<Polynomial> kept;
  for (auto& g : G.basis) {
    bool uses = false;
    for (auto& t : g.terms())
      for (int v : vars)
        if (t.m[v]) uses = true;
    if (!uses) kept.push_back(g);
  }
  return make_ideal(I.ring, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opt) {
  check_same_ring(I.ring, J.ring);
  std::string aux = fresh_var(I.ring, "t@");
  Ring R = extended_ring(I.ring, {aux});
  int ti = R->var_index(aux);
  Polynomial t = Polynomial::variable(R, ti);
  Polynomial one_minus_t = Polynomial::constant(R, 1) - t;
  std::vector<Polynomial> gens;
  for (auto& g : I.gens) gens.push_back(t * transport(g, R));
  for (auto& g : J.gens) gens.push_back(one_minus_t * transport(g, R));
  Ideal K = make_ideal(R, std::move(gens));
  Ideal E = eliminate(K, {ti}, opt);
  std::vector<Polynomial> back;
  for (auto& g : E.gens) back.push_back(transport(g, I.ring));
  return make_ideal(I.ring, std::move(back));
}

namespace {

// exact division p / f under grevlex; nullopt if not exactly divisible
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& f) {
  MOrder ord = MonomialOrder::grevlex();
  const Ring& R = p.ring();
  MVec v = mvec_from_poly(R, p, ord);
  MVec d = mvec_from_poly(R, f, ord);
  if (d.is_zero()) return std::nullopt;
  std::vector<Term> q;
  while (!v.is_zero()) {
    const MTerm& lt = v.lead();
    if (!d.lead().m.divides(lt.m)) return std::nullopt;
    Rational c = field_div(R, lt.c, d.lead().c);
    Monomial m = lt.m / d.lead().m;
    q.push_back({m, c});
    v = mvec_axpy(R, v, c, m, d, ord);
  }
  return Polynomial(R, std::move(q));
}

}  // namespace

Ideal quotient(const Ideal& I, const Polynomial& f, const GBOptions& opt) {
  if (f.is_zero()) fail(Err::EmptyInput, "quotient by zero");
  Ideal fI = make_ideal(I.ring, {f});
  Ideal meet = intersect(I, fI, opt);
  std::vector<Polynomial> gens;
  for (auto& g : meet.gens) {
    auto q = divide_exact(g, f);
    if (!q) fail(Err::InvalidType, "intersection element not divisible");
    gens.push_back(*q);
  }
  return make_ideal(I.ring, std::move(gens));
}

bool ideals_equal(const Ideal& I, const Ideal& J, const GBOptions& opt) {
  auto GI = groebner_basis(I, MonomialOrder::grevlex(), opt);
  auto GJ = groebner_basis(J, MonomialOrder::grevlex(), opt);
  if (GI.basis.size() != GJ.basis.size()) return false;
  for (size_t i = 0; i < GI.basis.size(); ++i)
    if (GI.basis[i] != GJ.basis[i]) return false;
  return true;
}

Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opt) {
  Ideal cur = I;
  for (int step = 0; step < 256; ++step) {
    Ideal next = quotient(cur, f, opt);
    if (ideals_equal(cur, next, opt)) return cur;
    cur = std::move(next);
  }
  fail(Err::BudgetExceeded, "saturation did not stabilize");
}

bool radical_membership(const Polynomial& f, const Ideal& I, const GBOptions& opt) {
  check_same_ring(f.ring(), I.ring);
  if (f.is_zero()) return true;
  std::string aux = fresh_var(I.ring, "t@");
  Ring R = extended_ring(I.ring, {aux});
  int ti = R->var_index(aux);
  std::vector<Polynomial> gens;
  for (auto& g : I.gens) gens.push_back(transport(g, R));
  gens.push_back(Polynomial::constant(R, 1) -
                 Polynomial::variable(R, ti) * transport(f, R));
  Ideal K = make_ideal(R, std::move(gens));
  return ideal_membership(Polynomial::constant(R, 1), K, opt);
}

namespace {

// minimum hitting set over the supports of the lead monomials
int min_hitting_set(std::vector<std::uint64_t> edges, int nvars) {
  // drop supersets
  std::sort(edges.begin(), edges.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  std::vector<std::uint64_t> minimal;
  for (auto e : edges) {
    bool sup = false;
    for (auto m : minimal)
      if ((m & e) == m) sup = true;
    if (!sup) minimal.push_back(e);
  }
  int best = nvars + 1;
  std::function<void(std::vector<std::uint64_t>, int)> go =
      [&](std::vector<std::uint64_t> es, int count) {
        if (count >= best) return;
        if (es.empty()) {
          best = count;
          return;
        }
        // branch on the smallest edge
        std::uint64_t e = es[0];
        for (auto x : es)
          if (__builtin_popcountll(x) < __builtin_popcountll(e)) e = x;
        for (int v = 0; v < nvars; ++v) {
          if (!(e >> v & 1)) continue;
          std::vector<std::uint64_t> rest;
          for (auto x : es)
            if (!(x >> v & 1)) rest.push_back(x);
          go(std::move(rest), count + 1);
        }
      };
  go(minimal, 0);
  return best;
}

}  // namespace

Reducer::Reducer(const ReducedGroebnerBasis& G) : ring_(G.ring), order_(G.order) {
  basis_.reserve(G.basis.size());
  for (auto& g : G.basis) basis_.push_back(mvec_from_poly(G.ring, g, G.order));
}

Polynomial Reducer::reduce(const Polynomial& p) const {
  MVec v = mvec_from_poly(ring_, p, order_);
  return mvec_component(reduce_full(ring_, std::move(v), basis_, order_), ring_, 0);
}

Polynomial Reducer::reduce_times(const Polynomial& p, const Monomial& m,
                                 const Rational& c) const {
  MVec v = mvec_from_poly(ring_, p, order_);
  v = mvec_times(ring_, v, m, c);
  return mvec_component(reduce_full(ring_, std::move(v), basis_, order_), ring_, 0);
}

int krull_dimension(const Ideal& I, const GBOptions& opt) {
  if (I.gens.empty()) return I.ring->nvars();
  if (I.ring->nvars() > 64) fail(Err::BudgetExceeded, "too many variables");
  auto G = groebner_basis(I, MonomialOrder::grevlex(), opt);
  std::vector<std::uint64_t> edges;
  for (auto& m : G.leads) {
    if (m.is_one()) return -1;  // unit ideal, empty variety
    std::uint64_t e = 0;
    for (int i = 0; i < I.ring->nvars(); ++i)
      if (m[i]) e |= 1ull << i;
    edges.push_back(e);
  }
  return I.ring->nvars() - min_hitting_set(std::move(edges), I.ring->nvars());
}

}  // namespace fano
