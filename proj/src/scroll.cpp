#include "fano/scroll.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "fano/hilbert.hpp"
#include "fano/simplicial.hpp"

namespace fano {

namespace {

const char* kBlockLetters = "xyzwuv";

}  // namespace

ScrollDescription make_scroll(const std::vector<int>& type,
                              const std::vector<std::string>& names) {
  if (type.empty()) fail(Err::InvalidType, "empty scroll type");
  for (size_t i = 1; i < type.size(); ++i)
    if (type[i] > type[i - 1])
      fail(Err::InvalidType, "scroll type must be non-increasing");
  if (type.back() < 0) fail(Err::InvalidType, "negative scroll type entry");

  int nonzero = 0, zero = 0;
  for (int d : type) (d > 0 ? nonzero : zero)++;
  std::vector<std::string> vars;
  if (!names.empty()) {
    vars = names;
  } else {
    int letter = 0;
    for (int b = 0; b < nonzero; ++b, ++letter)
      for (int j = 0; j <= type[b]; ++j)
        vars.push_back(std::string(1, kBlockLetters[letter]) + std::to_string(j));
    if (zero == 1) {
      vars.push_back(std::string(1, kBlockLetters[letter]));
    } else {
      for (int j = 1; j <= zero; ++j)
        vars.push_back(std::string(1, kBlockLetters[letter]) + std::to_string(j));
    }
  }
  size_t expect = 0;
  for (int d : type) expect += d > 0 ? d + 1 : 1;
  if (vars.size() != expect)
    fail(Err::InvalidType, "scroll needs " + std::to_string(expect) + " variables");

  ScrollDescription s;
  s.type = type;
  s.ring = make_ring(vars);
  s.rolled_to.assign(vars.size(), -1);
  int base = 0;
  for (int b = 0; b < nonzero; ++b) {
    for (int j = 0; j < type[b]; ++j) {
      s.columns.emplace_back(base + j, base + j + 1);
      s.rolled_to[base + j] = base + j + 1;
    }
    base += type[b] + 1;
  }
  return s;
}

Ideal scroll_ideal(const ScrollDescription& s) {
  std::vector<Polynomial> minors;
  const Ring& R = s.ring;
  for (size_t a = 0; a < s.columns.size(); ++a) {
    for (size_t b = a + 1; b < s.columns.size(); ++b) {
      Polynomial m = Polynomial::variable(R, s.columns[a].first) *
                         Polynomial::variable(R, s.columns[b].second) -
                     Polynomial::variable(R, s.columns[a].second) *
                         Polynomial::variable(R, s.columns[b].first);
      if (m.is_zero()) continue;
      bool dup = false;
      for (auto& k : minors)
        if (k == m || k == -m) dup = true;
      if (!dup) minors.push_back(std::move(m));
    }
  }
  return make_ideal(R, std::move(minors));
}

namespace {

bool monomial_rollable(const ScrollDescription& s, const Monomial& m, int k) {
  if (k <= 0) return true;
  for (int v = s.ring->nvars() - 1; v >= 0; --v) {
    if (m[v] == 0 || s.rolled_to[v] < 0) continue;
    Monomial next = m;
    next.set(v, next[v] - 1);
    next.set(s.rolled_to[v], next[s.rolled_to[v]] + 1);
    if (monomial_rollable(s, next, k - 1)) return true;
  }
  return false;
}

}  // namespace

bool rollable(const ScrollDescription& s, const Polynomial& f, int k) {
  for (auto& t : f.terms())
    if (!monomial_rollable(s, t.m, k)) return false;
  return !f.is_zero();
}

Polynomial roll(const ScrollDescription& s, const Polynomial& f, int lookahead) {
  check_same_ring(f.ring(), s.ring);
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    int pick = -1;
    for (int v = s.ring->nvars() - 1; v >= 0; --v) {
      if (t.m[v] == 0 || s.rolled_to[v] < 0) continue;
      Monomial next = t.m;
      next.set(v, next[v] - 1);
      next.set(s.rolled_to[v], next[s.rolled_to[v]] + 1);
      if (monomial_rollable(s, next, lookahead)) {
        pick = v;
        break;
      }
    }
    if (pick < 0)
      fail(Err::NotRollable,
           "monomial " + Polynomial::monomial(s.ring, t.m).str() + " has no roll");
    Monomial m = t.m;
    m.set(pick, m[pick] - 1);
    m.set(s.rolled_to[pick], m[s.rolled_to[pick]] + 1);
    out.push_back({std::move(m), t.c});
  }
  return Polynomial(s.ring, std::move(out));
}

std::vector<Polynomial> roll_chain(const ScrollDescription& s, const Polynomial& f0,
                                   int m) {
  std::vector<Polynomial> chain = {f0};
  for (int i = 0; i < m; ++i) chain.push_back(roll(s, chain.back(), m - i - 1));
  return chain;
}

Ideal rolling_divisor_ideal(const ScrollDescription& s, const Polynomial& f0, int m) {
  Ideal minors = scroll_ideal(s);
  std::vector<Polynomial> gens = minors.gens;
  for (auto& f : roll_chain(s, f0, m)) gens.push_back(f);
  return make_ideal(s.ring, std::move(gens));
}

Int h0N_formula(long g, long b2, long b3) {
  if (b3 % 2 != 0) fail(Err::OddB3, "third Betti number must be even");
  return Int(g) * g + 3 * g + 22 - b2 + b3 / 2;
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  Rational coeff() {
    std::uniform_int_distribution<int> d(1, 10);
    int v = d(gen);
    return Rational(v <= 5 ? v : 5 - v);  // uniform on {-5..5} minus 0
  }
};

// general homogeneous polynomial supported on the given monomials
Polynomial general_on(const Ring& R, const std::vector<Monomial>& support, Rng& rng) {
  std::vector<Term> ts;
  for (auto& m : support) ts.push_back({m, rng.coeff()});
  return Polynomial(R, std::move(ts));
}

std::vector<Monomial> monomials_of_degree(const Ring& R, int d) {
  std::vector<Monomial> out;
  int n = R->nvars();
  Monomial cur(n);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      cur.set(var, left);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.set(var, e);
      rec(var + 1, left - e);
    }
    cur.set(var, 0);
  };
  rec(0, d);
  return out;
}

// support of a "general degree-d form rollable k times"
std::vector<Monomial> rollable_support(const ScrollDescription& s, int d, int k) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(s.ring, d))
    if (monomial_rollable(s, m, k)) out.push_back(m);
  return out;
}

Ideal sr_cone_ideal(const std::string& sphere) {
  auto C = join_point(catalog(sphere), "0");
  // vertex "k" -> variable xk, cone "0" -> x0; ring ordered x0, x1, ..
  std::vector<std::string> vars;
  vars.reserve(C.nverts());
  std::vector<int> perm(C.nverts());
  {
    std::vector<std::pair<long, int>> keyed;
    for (int v = 0; v < C.nverts(); ++v)
      keyed.push_back({std::stol(C.labels[v]), v});
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i < keyed.size(); ++i) {
      vars.push_back("x" + std::to_string(keyed[i].first));
      perm[keyed[i].second] = static_cast<int>(i);
    }
  }
  // relabel the complex so vertex order matches the ring order
  std::vector<std::vector<int>> facets;
  for (auto& f : C.facets) {
    std::vector<int> g;
    for (int v : f) g.push_back(perm[v]);
    facets.push_back(g);
  }
  SimplicialComplex K = make_complex(vars, facets);
  return sr_ideal(K, make_ring(vars));
}

Ideal xbp_ideal() {
  auto C = join_point(catalog("T8p"), "0");
  // hexagon 1..6 -> x1..x6, poles 7,8 -> y1,y2, cone 0 -> y0
  std::vector<std::string> names = {"x1", "x2", "x3", "x4", "x5", "x6", "y1", "y2", "y0"};
  std::map<std::string, int> slot = {{"1", 0}, {"2", 1}, {"3", 2}, {"4", 3}, {"5", 4},
                                     {"6", 5}, {"7", 6}, {"8", 7}, {"0", 8}};
  std::vector<std::vector<int>> facets;
  for (auto& f : C.facets) {
    std::vector<int> g;
    for (int v : f) g.push_back(slot[C.labels[v]]);
    facets.push_back(g);
  }
  SimplicialComplex K = make_complex(names, facets);
  return sr_ideal(K, make_ring(names));
}

Ideal case_5953() {
  Ring R = make_ring({"x1", "x2", "x3", "x4", "x5", "x6", "y0", "y1", "y2"});
  return parse_ideal(R, {
      "x2*x6 - y0*x1", "x1*x3 - y0*x2", "x2*x4 - y0*x3",
      "x3*x5 - y0*x4", "x4*x6 - y0*x5", "x1*x5 - y0*x6",
      "x1*x4 - y0^2", "x2*x5 - y0^2", "x3*x6 - y0^2",
      "y1*y2 - y0*x1",
  });
}

Ideal v12_2_9(Rng* rng, Polynomial* quadric_out, Ring* ring_out) {
  Ring R = make_ring({"x0", "x1", "x2", "y0", "y1", "y2", "u", "v", "w"});
  // 3x3 matrix with u,v,w on the diagonal
  const char* mat[3][3] = {{"u", "x1", "y0"}, {"y1", "v", "x2"}, {"x0", "y2", "w"}};
  std::vector<Polynomial> gens;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2) {
          Polynomial m = parse_polynomial(mat[i1][j1], R) * parse_polynomial(mat[i2][j2], R) -
                         parse_polynomial(mat[i1][j2], R) * parse_polynomial(mat[i2][j1], R);
          if (!m.is_zero()) gens.push_back(m);
        }
  Polynomial q;
  if (rng) {
    q = general_on(R, monomials_of_degree(R, 2), *rng);
  } else {
    q = parse_polynomial("u*v", R);
  }
  if (quadric_out) *quadric_out = q;
  if (ring_out) *ring_out = R;
  gens.push_back(q);
  return make_ideal(R, std::move(gens));
}

Ideal v12_3(Rng* rng, Ring* ring_out) {
  std::vector<std::string> names;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k)
        names.push_back("x" + std::to_string(i) + std::to_string(j) + std::to_string(k));
  names.push_back("t");
  Ring R = make_ring(names);
  auto x = [&](const char* ijk) { return parse_polynomial(std::string("x") + ijk, R); };
  const char* m1[2][4] = {{"000", "100", "001", "101"}, {"010", "110", "011", "111"}};
  const char* m2[2][4] = {{"000", "010", "001", "011"}, {"100", "110", "101", "111"}};
  std::vector<Polynomial> gens;
  auto add_minors = [&](const char* m[2][4]) {
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        Polynomial p = x(m[0][a]) * x(m[1][b]) - x(m[0][b]) * x(m[1][a]);
        bool dup = false;
        for (auto& g : gens)
          if (g == p || g == -p) dup = true;
        if (!p.is_zero() && !dup) gens.push_back(p);
      }
  };
  add_minors(m1);
  add_minors(m2);
  if (rng) {
    gens.push_back(general_on(R, monomials_of_degree(R, 2), *rng));
  } else {
    gens.push_back(parse_polynomial("x000*x111", R));
  }
  if (ring_out) *ring_out = R;
  return make_ideal(R, std::move(gens));
}

Ideal t3_ideal(Rng& rng) {
  Ring R = make_ring({"x0", "x1", "x2", "y0", "y1", "y2", "z1", "z2"});
  const char* mat[3][3] = {{"x0", "y2", "y1"}, {"y2", "x1", "y0"}, {"y1", "y0", "x2"}};
  std::vector<Polynomial> gens;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2) {
          Polynomial m = parse_polynomial(mat[i1][j1], R) * parse_polynomial(mat[i2][j2], R) -
                         parse_polynomial(mat[i1][j2], R) * parse_polynomial(mat[i2][j1], R);
          bool dup = false;
          for (auto& g : gens)
            if (g == m || g == -m) dup = true;
          if (!m.is_zero() && !dup) gens.push_back(m);
        }
  // cubics M . (g0,g1,g2) for general quadrics g_i
  auto quad = monomials_of_degree(R, 2);
  std::vector<Polynomial> g = {general_on(R, quad, rng), general_on(R, quad, rng),
                               general_on(R, quad, rng)};
  for (int i = 0; i < 3; ++i) {
    Polynomial f = Polynomial::zero(R);
    for (int j = 0; j < 3; ++j) f = f + parse_polynomial(mat[i][j], R) * g[j];
    gens.push_back(f);
  }
  return make_ideal(R, std::move(gens));
}

NamedIdeal scroll_case(const std::vector<int>& type, int rolls, Rng& rng) {
  NamedIdeal out;
  out.scroll = make_scroll(type);
  out.on_scroll = true;
  Polynomial f0 = general_on(out.scroll.ring, rollable_support(out.scroll, 3, rolls), rng);
  out.divisor_cubics = roll_chain(out.scroll, f0, rolls);
  std::vector<Polynomial> gens = scroll_ideal(out.scroll).gens;
  for (auto& f : out.divisor_cubics) gens.push_back(f);
  out.ideal = make_ideal(out.scroll.ring, std::move(gens));
  return out;
}

}  // namespace

std::vector<std::string> registry_names() {
  return {"V10p",   "V12_2_6", "V12_2_9", "V12_2_9_uv", "V12_3", "V12_3_cube",
          "T3",     "T9",      "T25",     "T7s",        "Xbp",   "275510",
          "147467", "524375",  "5953",    "SR_T4",      "SR_T5", "SR_T6",
          "SR_T7",  "SR_T8",   "SR_T9",   "SR_T10",     "SR_T8p"};
}

NamedIdeal construct_named(const std::string& name, std::uint64_t seed,
                           const GBOptions& opt) {
  // cases with random data validate dimension/degree and resample
  auto with_retries = [&](Int want_degree,
                          const std::function<NamedIdeal(Rng&)>& build) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      Rng rng(seed + 0x9e3779b97f4a7c15ull * attempt);
      NamedIdeal out = build(rng);
      HilbertData H = hilbert_data(out.ideal, opt);
      if (H.dimension == 3 && H.degree == want_degree) return out;
    }
    fail(Err::GenericityFailure, name + ": no general member found");
  };

  auto explicit_scroll = [&](const std::vector<int>& type,
                             const std::vector<std::string>& names, const char* f0s,
                             int rolls) {
    NamedIdeal out;
    out.scroll = make_scroll(type, names);
    out.on_scroll = true;
    Polynomial f0 = parse_polynomial(f0s, out.scroll.ring);
    out.divisor_cubics = roll_chain(out.scroll, f0, rolls);
    std::vector<Polynomial> gens = scroll_ideal(out.scroll).gens;
    for (auto& f : out.divisor_cubics) gens.push_back(f);
    out.ideal = make_ideal(out.scroll.ring, std::move(gens));
    return out;
  };
  if (name == "275510")
    return explicit_scroll({2, 2, 0, 0}, {}, "x0^2*x2 - y0*z1*z2", 2);
  if (name == "147467")
    return explicit_scroll({2, 2, 1, 0}, {}, "x0*z0*w - y0^2*y1", 3);
  if (name == "524375")
    return explicit_scroll({3, 2, 0, 0},
                           {"x0", "x1", "x2", "x3", "y0", "y1", "y2", "z", "w"},
                           "x0*z*w - y0^3", 3);
  if (name == "5953") {
    NamedIdeal out;
    out.ideal = case_5953();
    return out;
  }
  if (name == "Xbp") {
    NamedIdeal out;
    out.ideal = xbp_ideal();
    return out;
  }
  if (name.rfind("SR_", 0) == 0) {
    NamedIdeal out;
    out.ideal = sr_cone_ideal(name.substr(3));
    return out;
  }
  if (name == "V10p")
    return with_retries(10, [&](Rng& rng) { return scroll_case({1, 1, 1, 1}, 2, rng); });
  if (name == "V12_2_6")
    return with_retries(12, [&](Rng& rng) { return scroll_case({2, 1, 1, 1}, 3, rng); });
  if (name == "T9")
    return with_retries(10, [&](Rng& rng) { return scroll_case({2, 2, 0, 0}, 2, rng); });
  if (name == "T25")
    return with_retries(12, [&](Rng& rng) { return scroll_case({4, 1, 0, 0}, 3, rng); });
  if (name == "T7s")
    return with_retries(10, [&](Rng& rng) { return scroll_case({2, 1, 1, 0}, 2, rng); });
  if (name == "T3")
    return with_retries(10, [&](Rng& rng) {
      NamedIdeal out;
      out.ideal = t3_ideal(rng);
      return out;
    });
  if (name == "V12_2_9")
    return with_retries(12, [&](Rng& rng) {
      NamedIdeal out;
      out.ideal = v12_2_9(&rng, nullptr, nullptr);
      return out;
    });
  if (name == "V12_3")
    return with_retries(12, [&](Rng& rng) {
      NamedIdeal out;
      out.ideal = v12_3(&rng, nullptr);
      return out;
    });
  // quadric degenerated to a monomial, the inputs of the elimination-order
  // initial-ideal checks
  if (name == "V12_2_9_uv") {
    NamedIdeal out;
    out.ideal = v12_2_9(nullptr, nullptr, nullptr);
    return out;
  }
  if (name == "V12_3_cube") {
    NamedIdeal out;
    out.ideal = v12_3(nullptr, nullptr);
    return out;
  }
  fail(Err::UnknownName, name + " is not in the registry");
}

}  // namespace fano
