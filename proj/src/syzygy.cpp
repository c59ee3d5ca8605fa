#include "fano/syzygy.hpp"

#include <algorithm>

namespace fano {

namespace {

// generic graph-module syzygy computation: given generators v_1..v_s of a
// submodule of S^rank, build (v_k ; e_k) in S^(rank+s), take a module GB,
// and split into elements with lead inside the first block (a GB of the
// submodule, with representations) and pure relation vectors.
struct GraphGB {
  std::vector<MVec> basis;  // full, for division with representation
  std::vector<std::vector<Polynomial>> members;     // first-block parts
  std::vector<std::vector<Polynomial>> member_reps; // their representations
  std::vector<std::vector<Polynomial>> relations;   // first block zero
};

GraphGB graph_gb(const Ring& ring, const std::vector<std::vector<Polynomial>>& gens,
                 int rank, const MOrder& order, const GBOptions& opt) {
  int s = static_cast<int>(gens.size());
  std::vector<MVec> input;
  input.reserve(s);
  for (int k = 0; k < s; ++k) {
    MVec v = mvec_from_tuple(ring, gens[k], order, 0);
    v.t.push_back({rank + k, Monomial(ring->nvars()), Rational(1)});
    mvec_sort(ring, v, order);
    input.push_back(std::move(v));
  }
  auto gb = module_groebner(ring, std::move(input), rank + s, order, opt,
                            /*product_criterion=*/false);
  GraphGB out;
  for (auto& v : gb) {
    std::vector<Polynomial> head(rank, Polynomial::zero(ring));
    std::vector<Polynomial> tail(s, Polynomial::zero(ring));
    for (int c = 0; c < rank; ++c) head[c] = mvec_component(v, ring, c);
    for (int k = 0; k < s; ++k) tail[k] = mvec_component(v, ring, rank + k);
    bool head_zero = true;
    for (auto& p : head)
      if (!p.is_zero()) head_zero = false;
    if (head_zero) {
      out.relations.push_back(std::move(tail));
    } else {
      out.members.push_back(std::move(head));
      out.member_reps.push_back(std::move(tail));
    }
  }
  out.basis = std::move(gb);
  return out;
}

int tuple_degree(const std::vector<Polynomial>& v, const std::vector<int>& shifts) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto d = v[i].homogeneous_degree();
    if (!d) fail(Err::InvalidType, "inhomogeneous syzygy component");
    return *d + shifts[i];
  }
  return 0;
}

}  // namespace

SyzygyContext::SyzygyContext(const Ideal& I, const MOrder& order, const GBOptions& opt)
    : ideal_(I), order_(order) {
  for (auto& g : I.gens) {
    auto d = g.homogeneous_degree();
    if (!d) fail(Err::InvalidType, "generators must be homogeneous");
    gen_degs_.push_back(*d);
  }

  std::vector<std::vector<Polynomial>> tuples;
  for (auto& g : I.gens) tuples.push_back({g});
  GraphGB gg = graph_gb(I.ring, tuples, 1, order, opt);

  gb_.ring = I.ring;
  gb_.order = order;
  for (auto& head : gg.members) {
    gb_.basis.push_back(head[0]);
    // leads are recovered from the module basis ordering
  }
  // the module GB is sorted by lead term, so the polynomial parts are in
  // canonical order already; recompute lead monomials
  for (auto& p : gb_.basis) {
    MVec v = mvec_from_poly(I.ring, p, order);
    gb_.leads.push_back(v.lead().m);
  }
  reducer_ = Reducer(gb_);
  graph_gb_ = std::move(gg.basis);
  syz_ = std::move(gg.relations);
  for (auto& z : syz_) syz_degs_.push_back(tuple_degree(z, gen_degs_));
}

std::pair<Polynomial, std::vector<Polynomial>> SyzygyContext::divide_rep(
    const Polynomial& p) const {
  MVec v = mvec_from_poly(ring(), p, order_, 0);
  MVec r = module_reduce(ring(), v, graph_gb_, order_);
  Polynomial nf = mvec_component(r, ring(), 0);
  std::vector<Polynomial> rep;
  rep.reserve(ngens());
  for (int i = 0; i < ngens(); ++i)
    rep.push_back(-mvec_component(r, ring(), 1 + i));
  return {std::move(nf), std::move(rep)};
}

SecondSyzygies::SecondSyzygies(const SyzygyContext& ctx, const GBOptions& opt) {
  const Ring& R = ctx.ring();
  int r = ctx.ngens();
  const auto& syz = ctx.syzygies();
  int q = static_cast<int>(syz.size());
  if (q == 0) return;

  GraphGB gg = graph_gb(R, syz, r, ctx.gb().order, opt);
  rels_ = std::move(gg.relations);
  for (auto& w : rels_) rel_degs_.push_back(tuple_degree(w, ctx.syzygy_degrees()));

  // express each Koszul element g_j e_i - g_i e_j over the syzygy basis
  const auto& gens = ctx.ideal().gens;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      std::vector<Polynomial> k(r, Polynomial::zero(R));
      k[i] = gens[j];
      k[j] = -gens[i];
      MVec v = mvec_from_tuple(R, k, ctx.gb().order, 0);
      MVec red = module_reduce(R, v, gg.basis, ctx.gb().order);
      for (int c = 0; c < r; ++c) {
        if (!mvec_component(red, R, c).is_zero())
          fail(Err::InvalidType, "Koszul element did not reduce into the syzygy module");
      }
      std::vector<Polynomial> rep;
      rep.reserve(q);
      for (int kk = 0; kk < q; ++kk)
        rep.push_back(-mvec_component(red, R, r + kk));
      koszul_.push_back(std::move(rep));
      koszul_degs_.push_back(ctx.gen_degrees()[i] + ctx.gen_degrees()[j]);
    }
  }
}

}  // namespace fano
