#include "fano/order.hpp"

#include <algorithm>

#include "fano/errors.hpp"

namespace fano {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg() != b.deg()) return a.deg() > b.deg() ? 1 : -1;
  // last nonzero entry of a-b negative => a > b
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MOrder MonomialOrder::lex() {
  auto o = std::make_shared<MonomialOrder>();
  o->kind_ = Kind::Lex;
  return o;
}

MOrder MonomialOrder::grevlex() {
  auto o = std::make_shared<MonomialOrder>();
  o->kind_ = Kind::Grevlex;
  return o;
}

MOrder MonomialOrder::weight(std::vector<long> w, MOrder tiebreak) {
  auto o = std::make_shared<MonomialOrder>();
  o->kind_ = Kind::Weight;
  o->w_ = std::move(w);
  o->sub1_ = std::move(tiebreak);
  return o;
}

MOrder MonomialOrder::elimination(std::vector<int> block, MOrder outer, MOrder inner) {
  std::sort(block.begin(), block.end());
  auto o = std::make_shared<MonomialOrder>();
  o->kind_ = Kind::Elim;
  o->block_ = std::move(block);
  o->sub1_ = std::move(outer);
  o->sub2_ = std::move(inner);
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::Grevlex:
      return cmp_grevlex(a, b);
    case Kind::Weight: {
      if (w_.size() != static_cast<size_t>(a.nvars()))
        fail(Err::RingMismatch, "weight vector length != variable count");
      long long wa = 0, wb = 0;
      for (int i = 0; i < a.nvars(); ++i) {
        wa += static_cast<long long>(w_[i]) * a[i];
        wb += static_cast<long long>(w_[i]) * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      return sub1_->compare(a, b);
    }
    case Kind::Elim: {
      // compare block exponents under inner order, then the rest under outer
      Monomial ab(a.nvars()), bb(a.nvars()), ar(a.nvars()), br(a.nvars());
      size_t k = 0;
      for (int i = 0; i < a.nvars(); ++i) {
        bool in_block = k < block_.size() && block_[k] == i;
        if (in_block) {
          ++k;
          ab.set(i, a[i]);
          bb.set(i, b[i]);
        } else {
          ar.set(i, a[i]);
          br.set(i, b[i]);
        }
      }
      if (int c = sub2_->compare(ab, bb)) return c;
      return sub1_->compare(ar, br);
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Weight: {
      std::string s = "weight:";
      for (size_t i = 0; i < w_.size(); ++i)
        s += (i ? "," : "") + std::to_string(w_[i]);
      return s;
    }
    case Kind::Elim: {
      std::string s = "elim:";
      for (size_t i = 0; i < block_.size(); ++i)
        s += (i ? "," : "") + std::to_string(block_[i]);
      return s;
    }
  }
  return "?";
}

}  // namespace fano
