#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hilbertkit/ring.hpp"

namespace hk {

namespace detail {

// expr   := ['+'|'-'] term { ('+'|'-') term }
// term   := power { '*' power }
// power  := atom [ '^' integer ]
// atom   := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring, std::size_t line, std::size_t col0)
      : text_(text), ring_(ring), line_(line), col0_(col0) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) {
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(')
        fail("expected operator (juxtaposition is not multiplication)");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      bool minus = peek() == '-';
      ++pos_;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
      unsigned long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long>(peek() - '0');
        if (e > 0xFFFF) fail("exponent too large");
        ++pos_;
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& F = ring_->field();
      Coeff v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = F.add(F.mul(v, F.reduce(10)), F.reduce(peek() - '0'));
        ++pos_;
      }
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col0_ + pos_); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial; `line`/`column` locate `text` inside a larger file so
/// diagnostics point at the right place.
inline Polynomial parse_poly(std::string_view text, const PolyRingPtr& ring, std::size_t line = 1,
                             std::size_t column = 1) {
  return detail::PolyParser(text, ring, line, column).parse();
}

}  // namespace hk
