#pragma once

#include <vector>

#include "fano/modvec.hpp"
#include "fano/polynomial.hpp"

namespace fano {

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;

  bool is_homogeneous() const;
};

Ideal make_ideal(Ring ring, std::vector<Polynomial> gens);
Ideal parse_ideal(const Ring& ring, const std::vector<std::string>& polys);

/// Resource budget. Exceeding it is an error, never a silent truncation.
struct GBOptions {
  size_t max_pairs = 2000000;
};

/// Canonical reduced Groebner basis: monic, mutually reduced, unique for
/// (ideal, order).
struct ReducedGroebnerBasis {
  Ring ring;
  MOrder order;
  std::vector<Polynomial> basis;    // sorted by lead monomial, descending
  std::vector<Monomial> leads;      // parallel to basis
};

ReducedGroebnerBasis groebner_basis(const Ideal& I, const MOrder& order,
                                    const GBOptions& opt = {});

/// Remainder of division by the basis; unique normal form modulo the ideal.
Polynomial normal_form(const Polynomial& p, const ReducedGroebnerBasis& G);

/// Monomial ideal of lead terms of the reduced basis. For weight orders the
/// weight alone must pick a unique initial term of every basis element;
/// otherwise NonGenericWeight.
Ideal initial_ideal(const Ideal& I, const MOrder& order, const GBOptions& opt = {});

bool ideal_membership(const Polynomial& p, const Ideal& I, const GBOptions& opt = {});

/// I together with the ring map into ring+auxiliary variables (used by the
/// intersection/saturation tricks).
Ideal eliminate(const Ideal& I, const std::vector<int>& vars, const GBOptions& opt = {});

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opt = {});
Ideal quotient(const Ideal& I, const Polynomial& f, const GBOptions& opt = {});
Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opt = {});
bool radical_membership(const Polynomial& f, const Ideal& I, const GBOptions& opt = {});

/// Dimension of the affine cone Spec(S/I), via independent variable sets of
/// the initial ideal.
int krull_dimension(const Ideal& I, const GBOptions& opt = {});

bool ideals_equal(const Ideal& I, const Ideal& J, const GBOptions& opt = {});

/// Reduced Groebner basis of a submodule of S^rank given by generators,
/// under position-over-term order (component 0 highest). The workhorse
/// behind syzygies and cotangent cohomology.
std::vector<MVec> module_groebner(const Ring& ring, std::vector<MVec> gens, int rank,
                                  const MOrder& order, const GBOptions& opt = {},
                                  bool product_criterion = false);

/// Full normal form of v against a module Groebner basis.
MVec module_reduce(const Ring& ring, const MVec& v, const std::vector<MVec>& basis,
                   const MOrder& order);

/// Prepared divisor set for repeated normal-form calls against one basis.
class Reducer {
 public:
  Reducer() = default;
  Reducer(const ReducedGroebnerBasis& G);

  const Ring& ring() const { return ring_; }
  const MOrder& order() const { return order_; }

  Polynomial reduce(const Polynomial& p) const;
  /// Normal form of c * x^m * p.
  Polynomial reduce_times(const Polynomial& p, const Monomial& m, const Rational& c) const;

 private:
  Ring ring_;
  MOrder order_;
  std::vector<MVec> basis_;
};

}  // namespace fano
