#ifndef NEUTRO_EXPR_HPP
#define NEUTRO_EXPR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "neutro/base_ring.hpp"

namespace neutro {

/// Shared little expression language for polynomials and formal sums:
/// numbers, fractions p/q, identifiers, [bracketed labels], + - * ^ ( ),
/// juxtaposition as multiplication ("8I x^2", "(7+5I)x").
struct ExprToken {
  enum Kind { Number, Ident, BracketLabel, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind = End;
  std::string text;
};

std::vector<ExprToken> expr_lex(const std::string& s);

/// Evaluation callbacks; V must be copyable.
template <typename V>
struct ExprAlgebra {
  virtual ~ExprAlgebra() = default;
  virtual V number(const std::string& text) = 0;  // "12" or "5/19"
  virtual V atom(const std::string& name, bool bracketed) = 0;
  virtual V add(const V&, const V&) = 0;
  virtual V sub(const V&, const V&) = 0;
  virtual V neg(const V&) = 0;
  virtual V mul(const V&, const V&) = 0;
  virtual V pow(const V&, long exp) = 0;
};

template <typename V>
class ExprParser {
 public:
  ExprParser(std::vector<ExprToken> toks, ExprAlgebra<V>& alg)
      : toks_(std::move(toks)), alg_(alg) {}

  V parse() {
    V v = expression();
    expect(ExprToken::End);
    return v;
  }

 private:
  std::vector<ExprToken> toks_;
  ExprAlgebra<V>& alg_;
  size_t i_ = 0;

  const ExprToken& peek() const { return toks_[i_]; }
  ExprToken next() { return toks_[i_++]; }
  void expect(ExprToken::Kind k) {
    if (peek().kind != k) throw std::invalid_argument("parse error near '" + peek().text + "'");
    ++i_;
  }
  static bool starts_factor(ExprToken::Kind k) {
    return k == ExprToken::Number || k == ExprToken::Ident || k == ExprToken::BracketLabel ||
           k == ExprToken::LParen;
  }

  V expression() {
    bool neg = false;
    while (peek().kind == ExprToken::Plus || peek().kind == ExprToken::Minus) {
      if (next().kind == ExprToken::Minus) neg = !neg;
    }
    V v = product();
    if (neg) v = alg_.neg(v);
    while (peek().kind == ExprToken::Plus || peek().kind == ExprToken::Minus) {
      bool minus = next().kind == ExprToken::Minus;
      while (peek().kind == ExprToken::Plus || peek().kind == ExprToken::Minus) {
        if (next().kind == ExprToken::Minus) minus = !minus;
      }
      V rhs = product();
      v = minus ? alg_.sub(v, rhs) : alg_.add(v, rhs);
    }
    return v;
  }

  V product() {
    V v = power();
    while (true) {
      if (peek().kind == ExprToken::Star) {
        ++i_;
        v = alg_.mul(v, power());
      } else if (starts_factor(peek().kind)) {
        v = alg_.mul(v, power());
      } else {
        break;
      }
    }
    return v;
  }

  V power() {
    V v = atom();
    if (peek().kind == ExprToken::Caret) {
      ++i_;
      if (peek().kind != ExprToken::Number) throw std::invalid_argument("exponent expected");
      long e = std::stol(next().text);
      if (e < 0) throw std::invalid_argument("negative exponent");
      v = alg_.pow(v, e);
    }
    return v;
  }

  V atom() {
    const ExprToken t = next();
    switch (t.kind) {
      case ExprToken::Number: return alg_.number(t.text);
      case ExprToken::Ident: return alg_.atom(t.text, false);
      case ExprToken::BracketLabel: return alg_.atom(t.text, true);
      case ExprToken::LParen: {
        V v = expression();
        expect(ExprToken::RParen);
        return v;
      }
      default: throw std::invalid_argument("unexpected token '" + t.text + "'");
    }
  }
};

}  // namespace neutro

#endif
