#include "fano/simplicial.hpp"

#include <algorithm>
#include <set>

namespace fano {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  // both sorted
  size_t j = 0;
  for (int x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size() || b[j] != x) return false;
  }
  return true;
}

}  // namespace

bool SimplicialComplex::is_face(const std::vector<int>& s) const {
  for (auto& f : facets)
    if (subset(s, f)) return true;
  return false;
}

std::vector<std::vector<int>> SimplicialComplex::edges() const {
  std::set<std::vector<int>> es;
  for (auto& f : facets)
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j) es.insert({f[i], f[j]});
  return {es.begin(), es.end()};
}

SimplicialComplex make_complex(std::vector<std::string> labels,
                               std::vector<std::vector<int>> facets) {
  if (facets.empty()) fail(Err::EmptyInput, "no facets");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= static_cast<int>(labels.size()))
        fail(Err::VariableCountMismatch, "facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // drop faces contained in another
  std::vector<std::vector<int>> maximal;
  for (size_t i = 0; i < facets.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < facets.size(); ++j)
      if (i != j && subset(facets[i], facets[j]) && facets[i] != facets[j]) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(facets[i]);
  }
  std::vector<bool> used(labels.size(), false);
  for (auto& f : maximal)
    for (int v : f) used[v] = true;
  for (size_t v = 0; v < labels.size(); ++v)
    if (!used[v]) fail(Err::VariableCountMismatch,
                       "vertex " + labels[v] + " lies in no facet");
  return {std::move(labels), std::move(maximal)};
}

SimplicialComplex make_complex_labeled(const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> vs;
  for (auto& f : facets) vs.insert(f.begin(), f.end());
  std::vector<std::string> labels(vs.begin(), vs.end());
  std::vector<std::vector<int>> idx;
  for (auto& f : facets) {
    std::vector<int> g;
    for (auto& v : f)
      g.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) -
                                   labels.begin()));
    idx.push_back(std::move(g));
  }
  return make_complex(std::move(labels), std::move(idx));
}

SimplicialComplex boundary_simplex(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  std::vector<std::vector<int>> facets;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != omit) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return make_complex(std::move(labels), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
  for (auto& a : K.labels)
    for (auto& b : L.labels)
      if (a == b) fail(Err::LabelCollision, "shared vertex label " + a);
  std::vector<std::string> labels = K.labels;
  labels.insert(labels.end(), L.labels.begin(), L.labels.end());
  std::vector<std::vector<int>> facets;
  int off = K.nverts();
  for (auto& f : K.facets)
    for (auto& g : L.facets) {
      std::vector<int> u = f;
      for (int v : g) u.push_back(v + off);
      facets.push_back(std::move(u));
    }
  return make_complex(std::move(labels), std::move(facets));
}

SimplicialComplex join_point(const SimplicialComplex& K, const std::string& label) {
  SimplicialComplex pt{{label}, {{0}}};
  return join(K, pt);
}

Ideal sr_ideal(const SimplicialComplex& K, const Ring& ring) {
  if (ring->nvars() != K.nverts())
    fail(Err::VariableCountMismatch, "ring needs one variable per vertex");
  // minimal non-faces: S not a face with every S minus a vertex a face
  std::vector<Polynomial> gens;
  int n = K.nverts();
  if (n > 24) fail(Err::BudgetExceeded, "too many vertices");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (K.is_face(s)) continue;
    bool minimal = true;
    for (size_t drop = 0; drop < s.size() && minimal; ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) sub.push_back(s[i]);
      if (!sub.empty() && !K.is_face(sub)) minimal = false;
      if (sub.empty() && false) minimal = false;
    }
    if (!minimal) continue;
    Monomial m(n);
    for (int v : s) m.set(v, 1);
    gens.push_back(Polynomial::monomial(ring, m));
  }
  return make_ideal(ring, std::move(gens));
}

SimplicialComplex complex_from_squarefree(const Ideal& I) {
  int n = I.ring->nvars();
  if (n > 24) fail(Err::BudgetExceeded, "too many variables");
  std::vector<unsigned> supports;
  for (auto& g : I.gens) {
    if (g.nterms() != 1 || !g.terms()[0].m.squarefree())
      fail(Err::NotSquareFreeMonomial, "generator " + g.str());
    unsigned s = 0;
    for (int v = 0; v < n; ++v)
      if (g.terms()[0].m[v]) s |= 1u << v;
    supports.push_back(s);
  }
  // faces are the subsets containing no generator support; facets maximal
  std::vector<unsigned> faces;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool face = true;
    for (unsigned s : supports)
      if ((mask & s) == s) {
        face = false;
        break;
      }
    if (face) faces.push_back(mask);
  }
  std::vector<std::vector<int>> facets;
  for (unsigned f : faces) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(f >> v & 1)) {
        unsigned g = f | (1u << v);
        bool gface = true;
        for (unsigned s : supports)
          if ((g & s) == s) gface = false;
        if (gface) maximal = false;
      }
    if (!maximal || f == 0) continue;
    std::vector<int> fv;
    for (int v = 0; v < n; ++v)
      if (f >> v & 1) fv.push_back(v);
    facets.push_back(std::move(fv));
  }
  return make_complex(I.ring->vars, std::move(facets));
}

std::vector<int> valency_profile(const SimplicialComplex& K) {
  std::vector<int> deg(K.nverts(), 0);
  for (auto& e : K.edges()) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool is_triangulated_two_sphere(const SimplicialComplex& K) {
  // pure of dimension 2
  for (auto& f : K.facets)
    if (f.size() != 3) return false;
  auto es = K.edges();
  // every edge in exactly two facets
  for (auto& e : es) {
    int count = 0;
    for (auto& f : K.facets)
      if (subset(e, f)) ++count;
    if (count != 2) return false;
  }
  // vertex links are single cycles
  for (int v = 0; v < K.nverts(); ++v) {
    std::map<int, std::vector<int>> link;
    for (auto& f : K.facets) {
      if (std::find(f.begin(), f.end(), v) == f.end()) continue;
      std::vector<int> rest;
      for (int u : f)
        if (u != v) rest.push_back(u);
      link[rest[0]].push_back(rest[1]);
      link[rest[1]].push_back(rest[0]);
    }
    if (link.empty()) return false;
    for (auto& [u, nb] : link)
      if (nb.size() != 2) return false;
    int start = link.begin()->first, prev = -1, cur = start;
    size_t visited = 0;
    do {
      int next = link[cur][0] == prev ? link[cur][1] : link[cur][0];
      prev = cur;
      cur = next;
      ++visited;
      if (visited > link.size()) return false;
    } while (cur != start);
    if (visited != link.size()) return false;
  }
  // connectivity + Euler characteristic 2
  std::vector<int> comp(K.nverts(), -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto& e : es) {
      int other = -1;
      if (e[0] == v) other = e[1];
      if (e[1] == v) other = e[0];
      if (other >= 0 && comp[other] < 0) {
        comp[other] = 0;
        stack.push_back(other);
      }
    }
  }
  for (int c : comp)
    if (c < 0) return false;
  long chi = K.nverts() - static_cast<long>(es.size()) + static_cast<long>(K.facets.size());
  return chi == 2;
}

namespace {

SimplicialComplex from_facets_1based(int n, std::vector<std::vector<int>> facets) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (auto& f : facets)
    for (int& v : f) --v;
  return make_complex(std::move(labels), std::move(facets));
}

}  // namespace

SimplicialComplex catalog(const std::string& name) {
  if (name == "T4") return boundary_simplex(3);
  if (name == "T5") {
    // (boundary of the triangle) * (two points)
    auto tri = boundary_simplex(2);
    SimplicialComplex two{{"4", "5"}, {{0}, {1}}};
    return join(tri, two);
  }
  if (name == "T6") {
    return from_facets_1based(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                  {2, 3, 6}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
  }
  if (name == "T7") {
    return from_facets_1based(7, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                  {2, 3, 6}, {2, 4, 6}, {3, 5, 7}, {3, 6, 7},
                                  {4, 5, 7}, {4, 6, 7}});
  }
  if (name == "T8") {
    return from_facets_1based(8, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                  {2, 3, 6}, {2, 4, 6}, {3, 5, 7}, {3, 6, 7},
                                  {4, 5, 8}, {4, 6, 8}, {5, 7, 8}, {6, 7, 8}});
  }
  if (name == "T9") {
    return from_facets_1based(9, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                  {2, 3, 6}, {2, 4, 7}, {2, 6, 7}, {3, 5, 8},
                                  {3, 6, 8}, {4, 5, 9}, {4, 7, 9}, {5, 8, 9},
                                  {6, 7, 8}, {7, 8, 9}});
  }
  if (name == "T10") {
    return from_facets_1based(10, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                   {2, 3, 6}, {2, 4, 7}, {2, 6, 7}, {3, 5, 8},
                                   {3, 6, 8}, {4, 5, 9}, {4, 7, 9}, {5, 8, 9},
                                   {6, 7, 10}, {6, 8, 10}, {7, 9, 10}, {8, 9, 10}});
  }
  if (name == "T8p") {
    // hexagonal bipyramid: hexagon 1..6, poles 7 and 8
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= 6; ++i) {
      int j = i % 6 + 1;
      facets.push_back({i, j, 7});
      facets.push_back({i, j, 8});
    }
    return from_facets_1based(8, std::move(facets));
  }
  fail(Err::UnknownName, "no catalog sphere named " + name);
}

namespace {

std::vector<std::vector<int>> neighbor_sets(const SimplicialComplex& K) {
  std::vector<std::set<int>> nb(K.nverts());
  for (auto& e : K.edges()) {
    nb[e[0]].insert(e[1]);
    nb[e[1]].insert(e[0]);
  }
  std::vector<std::vector<int>> out;
  for (auto& s : nb) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& K,
                                                     const SimplicialComplex& L) {
  if (K.nverts() != L.nverts() || K.facets.size() != L.facets.size()) return std::nullopt;
  if (valency_profile(K) != valency_profile(L)) return std::nullopt;
  int n = K.nverts();
  auto nbK = neighbor_sets(K), nbL = neighbor_sets(L);
  auto degK = [&](int v) { return nbK[v].size(); };
  auto degL = [&](int v) { return nbL[v].size(); };
  // invariant per vertex: (valency, sorted multiset of neighbor valencies)
  auto inv = [&](const std::vector<std::vector<int>>& nb, int v) {
    std::vector<size_t> m;
    for (int u : nb[v]) m.push_back(nb[u].size());
    std::sort(m.begin(), m.end());
    return std::make_pair(nb[v].size(), m);
  };
  std::set<std::vector<int>> facetsL(L.facets.begin(), L.facets.end());

  std::vector<int> map(n, -1), used(n, 0);
  // order K's vertices by decreasing constraint (valency)
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return degK(a) > degK(b); });

  std::function<bool(size_t)> go = [&](size_t pos) -> bool {
    if (pos == order.size()) {
      for (auto& f : K.facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(map[v]);
        std::sort(g.begin(), g.end());
        if (!facetsL.count(g)) return false;
      }
      return true;
    }
    int v = order[pos];
    for (int w = 0; w < n; ++w) {
      if (used[w] || degL(w) != degK(v)) continue;
      if (inv(nbK, v) != inv(nbL, w)) continue;
      // mapped neighbors must stay neighbors
      bool ok = true;
      for (int u : nbK[v]) {
        if (map[u] < 0) continue;
        if (!std::binary_search(nbL[w].begin(), nbL[w].end(), map[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (go(pos + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

std::vector<std::vector<int>> minimal_primes_monomial(const Ideal& I) {
  int n = I.ring->nvars();
  if (n > 24) fail(Err::BudgetExceeded, "too many variables");
  std::vector<unsigned> supports;
  for (auto& g : I.gens) {
    if (g.nterms() != 1 || !g.terms()[0].m.squarefree())
      fail(Err::NotSquareFreeMonomial, "generator " + g.str());
    unsigned s = 0;
    for (int v = 0; v < n; ++v)
      if (g.terms()[0].m[v]) s |= 1u << v;
    supports.push_back(s);
  }
  // facets of the associated complex = maximal subsets containing no
  // generator support; primes are their complements
  std::vector<std::vector<int>> primes;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool face = true;
    for (unsigned s : supports)
      if ((mask & s) == s) {
        face = false;
        break;
      }
    if (!face) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask >> v & 1) continue;
      unsigned g = mask | (1u << v);
      bool gface = true;
      for (unsigned s : supports)
        if ((g & s) == s) gface = false;
      if (gface) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1)) comp.push_back(v);
    primes.push_back(std::move(comp));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace fano
