#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "fano/errors.hpp"

namespace fano {

/// Exponent vector with cached total degree. Exponents are fixed-width;
/// overflow is a hard error, never wraparound.
class Monomial {
 public:
  using Exp = std::uint16_t;
  static constexpr unsigned kMaxExp = 0xFFFF;

  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<Exp> e)
      : e_(std::move(e)),
        deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

  static Monomial var(int nvars, int i, unsigned power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  unsigned deg() const { return deg_; }
  unsigned operator[](int i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, unsigned v) {
    if (v > kMaxExp) fail(Err::ExponentOverflow, "exponent too large");
    deg_ += v - e_[i];
    e_[i] = static_cast<Exp>(v);
  }

  bool squarefree() const {
    for (auto x : e_)
      if (x > 1) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) {
      unsigned s = r.e_[i] + o.e_[i];
      if (s > kMaxExp) fail(Err::ExponentOverflow, "exponent overflow in product");
      r.e_[i] = static_cast<Exp>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// Quotient this/o; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] = static_cast<Exp>(e_[i] - o.e_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(nvars());
    unsigned d = 0;
    for (int i = 0; i < nvars(); ++i) {
      r.e_[i] = std::max(e_[i], o.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  const std::vector<Exp>& exps() const { return e_; }

 private:
  std::vector<Exp> e_;
  unsigned deg_ = 0;
};

}  // namespace fano
