#pragma once

// Elements a + b*sqrt(5) of Z[sqrt 5].

#include <optional>
#include <string>

#include "hs/arith.hpp"

namespace hs {

struct Zsqrt5Elem {
  Integer a = 0, b = 0;

  static Zsqrt5Elem sigma() { return {1, 1}; }

  friend Zsqrt5Elem operator+(const Zsqrt5Elem& x, const Zsqrt5Elem& y) { return {x.a + y.a, x.b + y.b}; }
  friend Zsqrt5Elem operator-(const Zsqrt5Elem& x, const Zsqrt5Elem& y) { return {x.a - y.a, x.b - y.b}; }
  friend Zsqrt5Elem operator-(const Zsqrt5Elem& x) { return {-x.a, -x.b}; }
  friend Zsqrt5Elem operator*(const Zsqrt5Elem& x, const Zsqrt5Elem& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const Zsqrt5Elem& x, const Zsqrt5Elem& y) { return x.a == y.a && x.b == y.b; }

  bool is_zero() const { return a == 0 && b == 0; }
  Zsqrt5Elem conjugate() const { return {a, -b}; }
  /// a^2 - 5 b^2
  Integer norm() const { return a * a - 5 * b * b; }
  bool is_unit() const { return norm() == 1 || norm() == -1; }

  std::string to_string() const {
    if (b == 0) return a.get_str();
    std::string s = a == 0 ? "" : a.get_str() + (b < 0 ? " - " : " + ");
    const Integer mag = (a != 0 && b < 0) ? Integer(-b) : b;
    if (mag == 1) return s + "sqrt5";
    if (mag == -1) return s + "-sqrt5";
    return s + mag.get_str() + "*sqrt5";
  }
};

/// Quotient x/d when it lies in Z[sqrt 5].
inline std::optional<Zsqrt5Elem> z5_quotient(const Zsqrt5Elem& d, const Zsqrt5Elem& x) {
  if (d.is_zero()) throw ZeroDivisor("division by 0 in Z[sqrt5]");
  const Integer n = d.norm();
  const Zsqrt5Elem num = x * d.conjugate();
  if (!divides_int(n, num.a) || !divides_int(n, num.b)) return std::nullopt;
  return Zsqrt5Elem{div_exact(num.a, n), div_exact(num.b, n)};
}

/// True iff x/d lies in Z[sqrt 5].
inline bool z5_divides(const Zsqrt5Elem& d, const Zsqrt5Elem& x) { return z5_quotient(d, x).has_value(); }

}  // namespace hs
