#include <cctype>
#include <string>

#include "fano/polynomial.hpp"

namespace fano {

namespace {

// Recursive-descent parser for the polynomial grammar: integer or rational
// coefficients, ring variables (bare `x0` or bracketed `x[0]` spelling),
// `^` powers, optional `*` between factors, `+`/`-` separators, parentheses.
class Parser {
 public:
  Parser(const std::string& s, const Ring& ring) : s_(s), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void err(const std::string& what) {
    fail(Err::SyntaxError, what + " at byte " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc * factor();
      } else if (at_factor_start()) {
        acc = acc * factor();  // implicit product
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= s_.size()) err("expected factor");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) err("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (eat('/')) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          err("expected denominator");
        Int den = integer();
        if (den == 0) err("zero denominator");
        return Polynomial::constant(ring_, Rational(num, den));
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      std::string name = identifier();
      if (eat('[')) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          err("expected index");
        name += integer().get_str();
        if (!eat(']')) err("expected ']'");
      }
      int vi = ring_->var_index(name);
      if (vi < 0) {
        pos_ = start;
        fail(Err::UnknownVariable,
             name + " at byte " + std::to_string(start));
      }
      unsigned e = 1;
      if (eat('^')) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          err("expected exponent");
        Int k = integer();
        if (k < 0 || k > Monomial::kMaxExp) fail(Err::ExponentOverflow, "exponent too large");
        e = static_cast<unsigned>(k.get_ui());
      }
      return Polynomial::monomial(ring_, Monomial::var(ring_->nvars(), vi, e));
    }
    err("unexpected character");
  }

  Int integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  const Ring& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
  return Parser(text, ring).parse();
}

Ring make_ring_x(int n, std::optional<long> prime) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  return make_ring(std::move(vars), prime);
}

const char* err_name(Err e) {
  switch (e) {
    case Err::UnknownVariable: return "UnknownVariable";
    case Err::SyntaxError: return "SyntaxError";
    case Err::RingMismatch: return "RingMismatch";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NonGenericWeight: return "NonGenericWeight";
    case Err::NotSquareFreeMonomial: return "NotSquareFreeMonomial";
    case Err::NotATriangulation: return "NotATriangulation";
    case Err::DegeneratePointConfiguration: return "DegeneratePointConfiguration";
    case Err::LabelCollision: return "LabelCollision";
    case Err::EmptyInput: return "EmptyInput";
    case Err::VariableCountMismatch: return "VariableCountMismatch";
    case Err::VertexCountMismatch: return "VertexCountMismatch";
    case Err::UnknownName: return "UnknownName";
    case Err::InvalidType: return "InvalidType";
    case Err::NotRollable: return "NotRollable";
    case Err::OddB3: return "OddB3";
    case Err::WrongDimension: return "WrongDimension";
    case Err::PowerSeriesNonTermination: return "PowerSeriesNonTermination";
    case Err::GenericityFailure: return "GenericityFailure";
    case Err::ExponentOverflow: return "ExponentOverflow";
    case Err::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace fano
