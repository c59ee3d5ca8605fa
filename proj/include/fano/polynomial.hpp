#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/monomial.hpp"
#include "fano/order.hpp"
#include "fano/rational.hpp"
#include "fano/ring.hpp"

namespace fano {

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse multivariate polynomial over the ring's coefficient field.
/// Terms are kept in a fixed canonical order (grevlex descending), with no
/// zero coefficients, so equal polynomials have equal representations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial monomial(Ring ring, Monomial m, Rational c = Rational(1));
  static Polynomial variable(Ring ring, int i);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }

  /// Total degree (max over terms); -1 for the zero polynomial.
  int degree() const;
  /// Common degree of all terms, or nullopt if inhomogeneous/zero.
  std::optional<int> homogeneous_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  Polynomial derivative(int var) const;

  /// Substitution homomorphism; unmapped variables stay fixed. Values must
  /// live in this ring.
  Polynomial substitute(const std::map<int, Polynomial>& assignment) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const;

  /// Coefficient arithmetic respecting the ring's field (rationals or Z/p).
  Rational fnorm(const Rational& c) const;
  Rational fdiv(const Rational& a, const Rational& b) const;

 private:
  void normalize();

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial parse_polynomial(const std::string& text, const Ring& ring);

}  // namespace fano
