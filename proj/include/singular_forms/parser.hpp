#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "singular_forms/errors.hpp"
#include "singular_forms/polynomial.hpp"

namespace sforms {

namespace detail {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*        division only by nonzero constants
//   power  := atom ['^' integer]
//   atom   := integer | name | '(' expr ')' | '-' power
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
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

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = power();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        Rational c = d.constant_term();
        if (c == 0) throw ParseError("division by zero", at);
        acc = Rational(1 / c) * acc;
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("exponent must be a non-negative integer", at);
      std::string digits = read_digits();
      if (digits.size() > 4 || std::stoul(digits) > 4096) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer value(read_digits());
      return Polynomial::constant(ring_, Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += text_[pos_++];
      int idx = ring_->index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (at_end()) throw ParseError("unexpected end of expression", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string read_digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and expands an arithmetic expression in the ring's variables.
inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

/// Splits "x,y,z" into names.
inline std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& n : out) {
    if (n.empty()) throw InputError("empty name in variable list");
    if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw InputError("invalid variable name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InputError("invalid variable name '" + n + "'");
  }
  return out;
}

}  // namespace sforms
