#pragma once

#include <memory>
#include <vector>

#include "fano/monomial.hpp"

namespace fano {

/// Monomial orders: lex, grevlex, weight vectors refined by a tiebreak, and
/// block elimination orders. Shared immutable values.
class MonomialOrder;
using MOrder = std::shared_ptr<const MonomialOrder>;

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Weight, Elim };

  static MOrder lex();
  static MOrder grevlex();
  static MOrder weight(std::vector<long> w, MOrder tiebreak);
  /// Monomials meeting `block` rank above all others; ties broken by `inner`
  /// on the block exponents, then `outer` on the rest.
  static MOrder elimination(std::vector<int> block, MOrder outer, MOrder inner);

  /// -1, 0, +1 for a <, =, > b. Total on equal-length exponent vectors for
  /// lex/grevlex/elim; weight variants are refined by their tiebreak.
  int compare(const Monomial& a, const Monomial& b) const;

  Kind kind() const { return kind_; }
  const std::vector<long>& weights() const { return w_; }
  const std::vector<int>& block() const { return block_; }

  std::string describe() const;

 private:
  Kind kind_;
  std::vector<long> w_;
  std::vector<int> block_;   // sorted variable indices
  MOrder sub1_, sub2_;       // weight: tiebreak; elim: outer, inner
};

inline bool mo_less(const MOrder& o, const Monomial& a, const Monomial& b) {
  return o->compare(a, b) < 0;
}

}  // namespace fano
