#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fano/groebner.hpp"
#include "fano/simplicial.hpp"

namespace fano {

using LatticeVec = std::vector<long long>;

/// Full-dimensional lattice polytope given by its vertex list.
struct LatticePolytope {
  int dim = 0;
  std::vector<LatticeVec> vertices;
};

LatticePolytope make_polytope(int dim, std::vector<LatticeVec> vertices);

/// All lattice points of P in lexicographic order.
std::vector<LatticeVec> lattice_points(const LatticePolytope& P);

struct Triangulation {
  std::vector<LatticeVec> points;             // indexed configuration
  std::vector<std::vector<int>> simplices;    // (dim+1)-subsets of indices
};

/// Pulling triangulation for the given point order (a permutation of the
/// point indices). Always regular.
Triangulation pulling_triangulation(const std::vector<LatticeVec>& points,
                                    const std::vector<int>& order);

/// Normalized (lattice) volume: every unimodular triangulation has exactly
/// this many simplices.
Int lattice_volume(const LatticePolytope& P);

bool is_unimodular(const LatticePolytope& P, const Triangulation& T);

/// With heights: exact verification of the strict local folding inequality
/// on every interior wall. Without: exact LP search for certified heights.
std::optional<std::vector<Rational>> is_regular(const LatticePolytope& P,
                                                const Triangulation& T,
                                                const std::optional<std::vector<Rational>>& heights);

/// Toric ideal of a graded point configuration: kernel of x_u -> t^(u,1).
Ideal toric_ideal(const std::vector<LatticeVec>& points, const GBOptions& opt = {});

struct Degeneration {
  Triangulation triangulation;
  std::vector<long> heights;           // integral certificate
  std::vector<int> vertex_bijection;   // triangulation point -> target vertex
  Ideal initial;                       // the verified initial ideal
  long long orders_tried = 0;
};

struct DegenerationBudget {
  long long max_orders = 2000;
  std::uint64_t seed = 0;
};

/// Search for a regular unimodular triangulation of P isomorphic to
/// `target`, verified all the way down: the weight order from the height
/// certificate degenerates the toric ideal to the Stanley-Reisner ideal of
/// the target. Absence is never certified, only "not found within budget".
std::optional<Degeneration> find_degeneration(const LatticePolytope& P,
                                              const SimplicialComplex& target,
                                              const DegenerationBudget& budget,
                                              const GBOptions& opt = {});

}  // namespace fano
