#pragma once

#include <utility>
#include <vector>

#include "fano/groebner.hpp"

namespace fano {

/// First-level context for an ideal: reduced basis, generators of the first
/// syzygy module of the *given* generator tuple, and division with an
/// explicit representation over the generators. Built once, reused by every
/// cotangent computation.
///
/// Everything comes from one module Groebner basis of the graph module
/// generated by (g_i ; e_i) in S^(1+r): elements with vanishing first
/// component are exactly the syzygies.
class SyzygyContext {
 public:
  SyzygyContext(const Ideal& I, const MOrder& order, const GBOptions& opt = {});

  const Ideal& ideal() const { return ideal_; }
  const Ring& ring() const { return ideal_.ring; }
  int ngens() const { return static_cast<int>(ideal_.gens.size()); }
  const std::vector<int>& gen_degrees() const { return gen_degs_; }

  const ReducedGroebnerBasis& gb() const { return gb_; }
  const Reducer& reducer() const { return reducer_; }

  /// Groebner generators of Syz(g_1..g_r) as vectors in S^r, with their
  /// internal degrees (deg z_i + deg g_i, constant over slots).
  const std::vector<std::vector<Polynomial>>& syzygies() const { return syz_; }
  const std::vector<int>& syzygy_degrees() const { return syz_degs_; }

  /// p = remainder + sum rep_i * g_i with remainder in normal form.
  std::pair<Polynomial, std::vector<Polynomial>> divide_rep(const Polynomial& p) const;

 private:
  Ideal ideal_;
  MOrder order_;
  std::vector<int> gen_degs_;
  ReducedGroebnerBasis gb_;
  Reducer reducer_;
  std::vector<MVec> graph_gb_;  // full module basis, for divide_rep
  std::vector<std::vector<Polynomial>> syz_;
  std::vector<int> syz_degs_;
};

/// Second-level context: relations among the syzygy generators of a
/// SyzygyContext, plus expressions of the Koszul syzygies over them. These
/// are the presentation data of Syz/Koszul used by the obstruction space.
class SecondSyzygies {
 public:
  SecondSyzygies(const SyzygyContext& ctx, const GBOptions& opt = {});

  /// Generators of the relation module of (z_1..z_q), vectors in S^q.
  const std::vector<std::vector<Polynomial>>& relations() const { return rels_; }
  const std::vector<int>& relation_degrees() const { return rel_degs_; }

  /// koszul_reps()[k] expresses the k-th Koszul element g_j e_i - g_i e_j
  /// (over pairs i<j in lex order) as a combination of the z's.
  const std::vector<std::vector<Polynomial>>& koszul_reps() const { return koszul_; }
  const std::vector<int>& koszul_degrees() const { return koszul_degs_; }

 private:
  std::vector<std::vector<Polynomial>> rels_;
  std::vector<int> rel_degs_;
  std::vector<std::vector<Polynomial>> koszul_;
  std::vector<int> koszul_degs_;
};

}  // namespace fano
