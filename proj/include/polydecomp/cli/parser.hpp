#pragma once

/**
 * @file parser.hpp
 * @brief Polynomial expressions for the command line.
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := base ('^' uint)?
 *   base   := int | int '/' uint | 'x' | 't' | 'w' | '(' expr ')'
 *
 * Whitespace is ignored. Multiplication must be written out. w is sqrt(d)
 * of the ring's quadratic field; t is the variable of Z[t]-style rings.
 */

#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "polydecomp/domains/integer.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp::cli {

struct ExprAST {
  enum class Kind { Number, X, T, W, Negate, Add, Subtract, Multiply, Power };

  Kind kind;
  std::size_t position;  // offset of the node's first character
  Rational value;        // Number
  unsigned long exponent = 0;
  std::unique_ptr<ExprAST> lhs;  // also the operand of Negate and Power
  std::unique_ptr<ExprAST> rhs;
};

using ExprPtr = std::unique_ptr<ExprAST>;

inline constexpr unsigned long kMaxExponent = 4096;

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    ExprPtr e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (!at_end() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(ExprAST::Kind kind, std::size_t at, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto n = std::make_unique<ExprAST>();
    n->kind = kind;
    n->position = at;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  ExprPtr expr() {
    skip_space();
    const std::size_t start = pos_;
    ExprPtr acc;
    if (accept('-'))
      acc = node(ExprAST::Kind::Negate, start, term());
    else
      acc = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        acc = node(ExprAST::Kind::Add, at, std::move(acc), term());
      else if (accept('-'))
        acc = node(ExprAST::Kind::Subtract, at, std::move(acc), term());
      else
        return acc;
    }
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) break;
      acc = node(ExprAST::Kind::Multiply, at, std::move(acc), factor());
    }
    skip_space();
    if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      fail("implicit multiplication is not allowed; write '*'");
    return acc;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return b;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a nonnegative integer literal");
    const Integer e = digits();
    if (e > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), at);
    ExprPtr p = node(ExprAST::Kind::Power, at, std::move(b));
    p->exponent = e.get_ui();
    return p;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  ExprPtr base() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = digits();
      Integer den(1);
      skip_space();
      if (accept('/')) {
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("denominator must be an unsigned integer literal");
        const std::size_t den_at = pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", den_at);
      }
      ExprPtr n = node(ExprAST::Kind::Number, at);
      n->value = make_rational(num, den);
      return n;
    }
    if (ch == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    ++pos_;
    if (ch == 'x') return node(ExprAST::Kind::X, at);
    if (ch == 't') return node(ExprAST::Kind::T, at);
    if (ch == 'w') return node(ExprAST::Kind::W, at);
    pos_ = at;
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

/// How the symbols and numbers of an expression embed in a Q-algebra A.
template <QAlgebra A>
struct Symbols {
  std::function<A(const Rational&)> constant;
  std::optional<A> t;  // unset when the ring has no t
  std::optional<A> w;  // unset when the ring is not quadratic
  std::string ring_name;
};

/// Lowers an expression to a polynomial in x over A.
template <QAlgebra A>
Polynomial<A> lower(const ExprAST& e, const Symbols<A>& sym) {
  using P = Polynomial<A>;
  auto symbol = [&](const std::optional<A>& value, char name) {
    if (!value)
      throw ParseError(std::string("symbol '") + name + "' is not defined over " + sym.ring_name, e.position);
    return P::constant(*value);
  };
  switch (e.kind) {
    case ExprAST::Kind::Number: return P::constant(sym.constant(e.value));
    case ExprAST::Kind::X: return P::variable(sym.constant(Rational(1)));
    case ExprAST::Kind::T: return symbol(sym.t, 't');
    case ExprAST::Kind::W: return symbol(sym.w, 'w');
    case ExprAST::Kind::Negate: return -lower(*e.lhs, sym);
    case ExprAST::Kind::Add: return lower(*e.lhs, sym) + lower(*e.rhs, sym);
    case ExprAST::Kind::Subtract: return lower(*e.lhs, sym) - lower(*e.rhs, sym);
    case ExprAST::Kind::Multiply: return lower(*e.lhs, sym) * lower(*e.rhs, sym);
    case ExprAST::Kind::Power: {
      P b = lower(*e.lhs, sym);
      if (e.exponent == 0) return P::constant(sym.constant(Rational(1)));
      return pow(b, e.exponent);
    }
  }
  throw std::logic_error("lower: unknown node");
}

}  // namespace polydecomp::cli
