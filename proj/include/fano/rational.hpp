#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fano {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(runtime/explicit) - numeric literal
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) { v_.canonicalize(); }
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rational(q);
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace fano
