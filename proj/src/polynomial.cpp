#include "fano/polynomial.hpp"

#include <algorithm>

#include "fano/modvec.hpp"

namespace fano {

namespace {

// fixed canonical storage order: grevlex descending
int canon_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg() != b.deg()) return a.deg() > b.deg() ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Rational mod_reduce(const Rational& c, long p) {
  // representative in [0,p); coefficients in Z/p always have denominator 1
  Int n = c.num(), d = c.den();
  Int pp(p);
  n %= pp;
  if (n < 0) n += pp;
  if (d != 1) {
    Int dm = d % pp, inv;
    if (mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pp.get_mpz_t()) == 0)
      fail(Err::InvalidType, "denominator not invertible mod p");
    n = (n * inv) % pp;
  }
  return Rational(n);
}

}  // namespace

Rational field_norm(const Ring& r, const Rational& c) {
  if (r && r->prime) return mod_reduce(c, *r->prime);
  return c;
}

Rational field_div(const Ring& r, const Rational& a, const Rational& b) {
  if (r && r->prime) {
    long p = *r->prime;
    Int inv, bn = mod_reduce(b, p).num();
    Int pp(p);
    if (bn == 0 || mpz_invert(inv.get_mpz_t(), bn.get_mpz_t(), pp.get_mpz_t()) == 0)
      fail(Err::InvalidType, "division by zero in Z/p");
    Int prod = mod_reduce(a, p).num() * inv;
    return mod_reduce(Rational(prod), p);
  }
  return a / b;
}

Rational Polynomial::fnorm(const Rational& c) const { return field_norm(ring_, c); }

Rational Polynomial::fdiv(const Rational& a, const Rational& b) const {
  return field_div(ring_, a, b);
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (auto& t : terms_) t.c = fnorm(t.c);
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return canon_cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = fnorm(out.back().c + t.c);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.c.is_zero(); }),
            out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  p.normalize();
  return p;
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  p.normalize();
  return p;
}

Polynomial Polynomial::variable(Ring ring, int i) {
  int n = ring->nvars();
  return monomial(std::move(ring), Monomial::var(n, i));
}

int Polynomial::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg()));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = terms_.front().m.deg();
  for (auto& t : terms_)
    if (t.m.deg() != d) return std::nullopt;
  return static_cast<int>(d);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.c = fnorm(-t.c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  // merge two canonically sorted term lists
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = canon_cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = fnorm(terms_[i].c + o.terms_[j].c);
      if (!s.is_zero()) r.terms_.push_back({terms_[i].m, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    Rational cc = fnorm(t.c * c);
    if (!cc.is_zero()) r.terms_.push_back({t.m * m, cc});
  }
  // multiplying by a fixed monomial preserves the canonical order
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  return times_monomial(Monomial(ring_->nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial acc(ring_);
  const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
  const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
  for (auto& t : small.terms_) acc = acc + big.times_monomial(t.m, t.c);
  return acc;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(ring_);
  for (auto& t : terms_) {
    unsigned e = t.m[var];
    if (e == 0) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    r.terms_.push_back({m, fnorm(t.c * Rational(static_cast<long>(e)))});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment) const {
  for (auto& [v, val] : assignment) check_same_ring(ring_, val.ring());
  Polynomial acc(ring_);
  for (auto& t : terms_) {
    Polynomial factor = constant(ring_, t.c);
    Monomial fixed(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
      unsigned e = t.m[i];
      if (e == 0) continue;
      auto it = assignment.find(i);
      if (it == assignment.end()) {
        fixed.set(i, e);
      } else {
        factor = factor * it->second.pow(e);
      }
    }
    acc = acc + factor.times_monomial(fixed, Rational(1));
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.c;
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Rational a = neg ? -c : c;
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      unsigned e = t.m[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace fano
