#include "fano/hilbert.hpp"

#include <algorithm>
#include <map>

namespace fano {

namespace {

using ZPoly = std::vector<Int>;  // dense in t

ZPoly zp_scale_shift(const ZPoly& p, int shift) {
  ZPoly r(p.size() + shift, Int(0));
  for (size_t i = 0; i < p.size(); ++i) r[i + shift] = p[i];
  return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly one_minus_t_pow(int d) {
  // 1 - t^d
  ZPoly r(d + 1, Int(0));
  r[0] = 1;
  r[d] = -1;
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg() < b.deg(); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool red = false;
    for (auto& k : out)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

// pivot recursion on monomial ideals with memoization on the generator set
struct NumeratorCalc {
  int nvars;
  std::map<std::vector<std::vector<Monomial::Exp>>, ZPoly> memo;

  ZPoly run(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {Int(1)};
    if (gens.size() == 1) return one_minus_t_pow(gens[0].deg());
    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        if (!gens[i].coprime(gens[j])) {
          pairwise_coprime = false;
          break;
        }
    if (pairwise_coprime) {
      ZPoly r = {Int(1)};
      for (auto& g : gens) r = zp_mul(r, one_minus_t_pow(g.deg()));
      return r;
    }
    std::vector<std::vector<Monomial::Exp>> key;
    key.reserve(gens.size());
    for (auto& g : gens) key.push_back(g.exps());
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // pivot on the most shared variable
    std::vector<int> freq(nvars, 0);
    for (auto& g : gens)
      for (int v = 0; v < nvars; ++v)
        if (g[v]) ++freq[v];
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // I = I:x * t + I+(x)
    std::vector<Monomial> colon, plus;
    Monomial x = Monomial::var(nvars, pivot);
    plus.push_back(x);
    for (auto& g : gens) {
      if (g[pivot]) {
        colon.push_back(g / x);
      } else {
        colon.push_back(g);
        plus.push_back(g);
      }
    }
    ZPoly r = zp_add(zp_scale_shift(run(std::move(colon)), 1),
                     run(std::move(plus)));
    memo.emplace(std::move(key), r);
    return r;
  }
};

// binomial coefficient C(m + c, k) as a polynomial in m
std::vector<Rational> binom_poly(long c, int k) {
  std::vector<Rational> r = {Rational(1)};
  for (int i = 0; i < k; ++i) {
    // multiply by (m + c - i)
    std::vector<Rational> next(r.size() + 1, Rational(0));
    for (size_t j = 0; j < r.size(); ++j) {
      next[j + 1] += r[j];
      next[j] += r[j] * Rational(c - i);
    }
    r = std::move(next);
  }
  Rational fact(1);
  for (int i = 2; i <= k; ++i) fact *= Rational(i);
  for (auto& x : r) x /= fact;
  return r;
}

}  // namespace

std::vector<Int> hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  for (auto& g : gens)
    if (g.is_one()) return {};  // unit ideal
  NumeratorCalc calc{nvars, {}};
  return calc.run(gens);
}

std::string hp_to_string(const std::vector<Rational>& hp) {
  if (hp.empty()) return "0";
  std::string s;
  for (int k = static_cast<int>(hp.size()) - 1; k >= 0; --k) {
    if (hp[k].is_zero()) continue;
    if (!s.empty()) s += hp[k].sign() > 0 ? " + " : " - ";
    else if (hp[k].sign() < 0) s += "-";
    Rational a = hp[k].sign() < 0 ? -hp[k] : hp[k];
    if (k == 0) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += k == 1 ? "m" : "m^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

HilbertData hilbert_data(const Ideal& I, const GBOptions& opt) {
  int n = I.ring->nvars();
  std::vector<Monomial> lead_gens;
  bool monomial = true;
  for (auto& g : I.gens)
    if (g.nterms() != 1) monomial = false;
  if (monomial) {
    for (auto& g : I.gens) lead_gens.push_back(g.terms()[0].m);
  } else {
    auto G = groebner_basis(I, MonomialOrder::grevlex(), opt);
    lead_gens = G.leads;
  }
  ZPoly K = hilbert_numerator(lead_gens, n);

  HilbertData out;
  if (K.empty()) {
    out.dimension = -1;
    out.degree = 0;
    return out;
  }
  // P(m) = sum_j K[j] * C(m - j + n - 1, n - 1)
  std::vector<Rational> hp;
  for (size_t j = 0; j < K.size(); ++j) {
    if (K[j] == 0) continue;
    auto b = binom_poly(-static_cast<long>(j) + n - 1, n - 1);
    if (hp.size() < b.size()) hp.resize(b.size(), Rational(0));
    for (size_t k = 0; k < b.size(); ++k) hp[k] += Rational(K[j]) * b[k];
  }
  while (!hp.empty() && hp.back().is_zero()) hp.pop_back();
  out.hp = hp;
  if (hp.empty()) {
    out.dimension = -1;  // Proj empty; the cone is supported at the origin
    out.degree = 0;
    return out;
  }
  out.dimension = static_cast<int>(hp.size()) - 1;
  Rational lead = hp.back();
  Int fact(1);
  for (int i = 2; i <= out.dimension; ++i) fact *= i;
  Rational deg = lead * Rational(fact);
  if (!deg.is_integer()) fail(Err::InvalidType, "non-integral degree");
  out.degree = deg.num();
  if (out.dimension == 3 && out.degree % 2 == 0)
    out.genus = out.degree / 2 + 1;
  return out;
}

Int hilbert_function_monomial(const std::vector<Monomial>& gens, int nvars, int d) {
  ZPoly K = hilbert_numerator(gens, nvars);
  // coefficient of t^d in K(t) / (1-t)^n = sum_j K[j] * C(d - j + n - 1, n - 1)
  Int total(0);
  for (size_t j = 0; j < K.size() && static_cast<int>(j) <= d; ++j) {
    if (K[j] == 0) continue;
    long top = d - static_cast<long>(j) + nvars - 1;
    if (top < nvars - 1) continue;
    Int b(1);
    for (int i = 0; i < nvars - 1; ++i) b = b * (top - i);
    Int fact(1);
    for (int i = 2; i <= nvars - 1; ++i) fact *= i;
    total += K[j] * (b / fact);
  }
  return total;
}

}  // namespace fano
