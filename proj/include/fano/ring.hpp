#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fano/errors.hpp"

namespace fano {

/// Coefficient field and ordered variable list. Every monomial order uses
/// the order of `vars` as the order of the exponent vector.
struct PolyRing {
  std::vector<std::string> vars;
  std::optional<long> prime;  // unset: rationals; set: Z/p accelerator mode

  int nvars() const { return static_cast<int>(vars.size()); }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }
};

using Ring = std::shared_ptr<const PolyRing>;

inline Ring make_ring(std::vector<std::string> vars,
                      std::optional<long> prime = std::nullopt) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        fail(Err::LabelCollision, "duplicate variable " + vars[i]);
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->prime = prime;
  return r;
}

/// Variables named x0..x{n-1}.
Ring make_ring_x(int n, std::optional<long> prime = std::nullopt);

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a->vars == b->vars && a->prime == b->prime);
}

inline void check_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) fail(Err::RingMismatch, "operands in different rings");
}

}  // namespace fano
