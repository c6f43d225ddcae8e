#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "lring/polynomial.hpp"

namespace lring {

namespace detail {

// Recursive-descent parser for
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | identifier | '(' expr ')'
// Juxtaposition ("2x") is rejected.
template <class F>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, RingPtr<F> ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial<F> parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial<F> p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    Polynomial<F> acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= unary();
        continue;
      }
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        fail("implicit multiplication is not allowed");
      }
      return acc;
    }
  }

  Polynomial<F> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    Polynomial<F> base = atom();
    if (accept('^')) {
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
      mpz_class e = integer();
      if (e > 100000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<F> atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer denominator");
        den = integer();
        if (den == 0) fail("zero denominator");
      } else {
        pos_ = save;
      }
      return Polynomial<F>::constant(ring_, ring_->field().from_fraction(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial<F>::variable(ring_, *idx);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RingPtr<F> ring_;
};

}  // namespace detail

/// Parses the shared polynomial expression grammar: integer and a/b
/// coefficients, variables of `ring`, + - * ^ and parentheses. Throws
/// ParseError with the character position.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolynomialParser<F>(text, ring).parse();
}

}  // namespace lring
