#pragma once

// Recursive-descent parser for polynomial text.
//
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ('^' nat)?
//   base    := integer-literal | identifier | '(' expr ')'
//
// Integer literals may carry a leading '-'. A '-' in front of a non-literal
// base is read as negation. Over F_q[u] the identifier "u" denotes the
// coefficient variable and literals are reduced mod q.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hs/errors.hpp"
#include "hs/multipoly.hpp"

namespace hs {

inline constexpr unsigned kMaxParsedExponent = 10000;

namespace detail {

template <CoefficientRing R>
std::optional<typename R::Elem> coefficient_symbol(const R& ring, const std::string& name) {
  if constexpr (requires { ring.u(); }) {
    if (name == "u") return ring.u();
  }
  return std::nullopt;
}

template <CoefficientRing R>
class PolyParser {
 public:
  using Poly = MultiPoly<R>;

  PolyParser(std::string_view text, const VarSet& vars, const R& ring) : s_(text), vars_(vars), ring_(ring) {}

  Poly parse() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty input");
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) unexpected();
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '/') {
        throw CoefficientNotInRing("division at position " + std::to_string(pos_) + " in ring " + ring_.tag());
      }
      if (peek() != '*') return acc;
      ++pos_;
      acc *= factor();
    }
  }

  Poly factor() {
    skip_ws();
    if (peek() == '-') {
      const std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
      } else {
        return -factor();
      }
    }
    Poly b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "expected exponent");
      const Integer e{std::string(digits())};
      if (e > kMaxParsedExponent) throw InvalidArgument("exponent too large at position " + std::to_string(at));
      return b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = false;
      if (c == '-') {
        neg = true;
        ++pos_;
        skip_ws();
      }
      const Integer n{std::string(digits())};
      if (peek() == '.' || peek() == '/') {
        throw CoefficientNotInRing("non-integer literal at position " + std::to_string(pos_) + " for ring " +
                                   ring_.tag());
      }
      return Poly::from_int(ring_, vars_, neg ? Integer(-n) : n);
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      if (auto sym = coefficient_symbol(ring_, name)) return Poly::constant(ring_, vars_, *sym);
      auto idx = vars_.find(name);
      if (!idx) {
        throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start), name);
      }
      return Poly::variable(ring_, vars_, *idx);
    }
    if (c == '.' || c == '/') {
      throw CoefficientNotInRing("non-integer coefficient at position " + std::to_string(pos_) + " for ring " +
                                 ring_.tag());
    }
    unexpected();
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected digits");
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void unexpected() const {
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  const VarSet& vars_;
  const R& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientRing R>
MultiPoly<R> parse_poly(std::string_view text, const VarSet& vars, const R& ring) {
  if constexpr (requires { ring.u(); }) {
    if (vars.find("u")) throw InvalidArgument("'u' is reserved for the coefficient variable of " + ring.tag(), "u");
  }
  return detail::PolyParser<R>(text, vars, ring).parse();
}

}  // namespace hs
