#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/groebner.hpp"

namespace fano {

/// Abstract simplicial complex: vertex labels plus inclusion-maximal faces.
/// Faces are sorted index lists into `labels`; every vertex lies in a facet.
struct SimplicialComplex {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> facets;

  int nverts() const { return static_cast<int>(labels.size()); }
  bool is_face(const std::vector<int>& s) const;
  std::vector<std::vector<int>> edges() const;
};

SimplicialComplex make_complex(std::vector<std::string> labels,
                               std::vector<std::vector<int>> facets);
/// Facets given directly by label; the vertex set is their union, sorted.
SimplicialComplex make_complex_labeled(const std::vector<std::vector<std::string>>& facets);

/// Boundary of the n-simplex on n+1 vertices.
SimplicialComplex boundary_simplex(int n, const std::string& prefix = "");

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);
/// K * point, the cone.
SimplicialComplex join_point(const SimplicialComplex& K, const std::string& label);

/// Stanley-Reisner ideal: one squarefree monomial per minimal non-face.
/// Ring variables correspond to vertices in order.
Ideal sr_ideal(const SimplicialComplex& K, const Ring& ring);
SimplicialComplex complex_from_squarefree(const Ideal& I);

bool is_triangulated_two_sphere(const SimplicialComplex& K);
std::vector<int> valency_profile(const SimplicialComplex& K);

/// The sphere catalog: T4..T10 (deltahedra boundaries, valencies 4 and 5)
/// and T8p, the hexagonal bipyramid. Facet lists are frozen fixtures,
/// revalidated by the predicates in tests.
SimplicialComplex catalog(const std::string& name);

/// Vertex bijection K -> L inducing a bijection of facets, if any.
std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& K,
                                                     const SimplicialComplex& L);

/// Minimal primes of a squarefree monomial ideal: complements of facets of
/// the associated complex, each a list of variable indices.
std::vector<std::vector<int>> minimal_primes_monomial(const Ideal& I);

}  // namespace fano
