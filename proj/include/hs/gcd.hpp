#pragma once

// Content, exact division, multivariate gcd and fraction-free Bezout
// relations for polynomials over a gcd ring.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hs/multipoly.hpp"

namespace hs {

/// Scales P by a unit so that its leading coefficient is normalized.
template <GcdRing R>
MultiPoly<R> normalize_poly(const MultiPoly<R>& p) {
  if (p.is_zero()) return p;
  const auto& ring = p.ring();
  return p.scale(ring.unit_inverse(ring.unit_part(p.leading_coeff())));
}

template <GcdRing R>
struct ContentPrimitive {
  typename R::Elem content;
  MultiPoly<R> primitive;
};

/// content * primitive == P, content normalized, primitive part with coprime coefficients.
template <GcdRing R>
ContentPrimitive<R> content_primitive(const MultiPoly<R>& p) {
  if (p.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
  const auto& ring = p.ring();
  auto c = ring.zero();
  for (const auto& [e, x] : p.terms()) c = ring.gcd(c, x);
  c = ring.normalize(c);
  return {c, p.map_coeffs([&](const auto& x) { return ring.exact_quo(x, c); })};
}

/// Quotient A / B if B divides A exactly, by division on leading terms.
template <GcdRing R>
std::optional<MultiPoly<R>> divide_exact(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  if (b.is_zero()) throw ZeroDivisor("division by the zero polynomial");
  const auto& ring = a.ring();
  MultiPoly<R> q(ring, a.vars()), r = a;
  const Exps& lb = b.leading_exps();
  const auto& cb = b.leading_coeff();
  Exps shift(a.nvars());
  while (!r.is_zero()) {
    const Exps& lr = r.leading_exps();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      shift[i] = lr[i] - lb[i];
    }
    if (!ring.divides(cb, r.leading_coeff())) return std::nullopt;
    const auto c = ring.exact_quo(r.leading_coeff(), cb);
    q.add_term(shift, c);
    MultiPoly<R> mono(ring, a.vars());
    mono.add_term(shift, c);
    r -= mono * b;
  }
  return q;
}

template <GcdRing R>
MultiPoly<R> divide_or_throw(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("expected exact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

template <GcdRing R>
MultiPoly<R> gcd_poly(const MultiPoly<R>& a, const MultiPoly<R>& b);

namespace detail {

template <GcdRing R>
int max_support(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  int v = -1;
  for (std::size_t i : a.support()) v = std::max(v, static_cast<int>(i));
  for (std::size_t i : b.support()) v = std::max(v, static_cast<int>(i));
  return v;
}

/// gcd of the coefficients of P with respect to variable v.
template <GcdRing R>
MultiPoly<R> content_in(const MultiPoly<R>& p, std::size_t v) {
  MultiPoly<R> g(p.ring(), p.vars());
  for (const auto& c : p.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_poly(g, c);
    if (g.is_constant() && p.ring().is_unit(g.constant_value())) break;
  }
  return g;
}

template <GcdRing R>
MultiPoly<R> primitive_in(const MultiPoly<R>& p, std::size_t v) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content_in(p, v));
}

template <GcdRing R>
MultiPoly<R> monomial(const R& ring, const VarSet& vars, std::size_t v, unsigned d) {
  return MultiPoly<R>::variable(ring, vars, v, d);
}

}  // namespace detail

/// lc_v(B)^s * A = Q * B + Rem with deg_v Rem < deg_v B; returns (Q, Rem, lc_v(B), s).
template <GcdRing R>
struct PseudoDivision {
  MultiPoly<R> quotient, remainder, lead;
  unsigned steps = 0;
};

template <GcdRing R>
PseudoDivision<R> pseudo_divide(const MultiPoly<R>& a, const MultiPoly<R>& b, std::size_t v) {
  if (b.is_zero()) throw ZeroDivisor("pseudo-division by zero");
  const auto& ring = a.ring();
  const int db = b.degree(v);
  PseudoDivision<R> out{MultiPoly<R>(ring, a.vars()), a, b.leading_coeff_in(v), 0};
  while (!out.remainder.is_zero() && out.remainder.degree(v) >= db) {
    const int dr = out.remainder.degree(v);
    const MultiPoly<R> lr = out.remainder.leading_coeff_in(v);
    const MultiPoly<R> x = detail::monomial(ring, a.vars(), v, static_cast<unsigned>(dr - db));
    out.quotient = out.quotient * out.lead + lr * x;
    out.remainder = out.remainder * out.lead - lr * x * b;
    ++out.steps;
  }
  return out;
}

/// Greatest common divisor, leading coefficient normalized; gcd(0, 0) = 0.
/// Primitive remainder sequences, recursing on the highest variable present.
template <GcdRing R>
MultiPoly<R> gcd_poly(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  if (a.is_zero()) return normalize_poly(b);
  if (b.is_zero()) return normalize_poly(a);
  const auto& ring = a.ring();
  const int top = detail::max_support(a, b);
  if (top < 0) {
    return MultiPoly<R>::constant(ring, a.vars(), ring.normalize(ring.gcd(a.constant_value(), b.constant_value())));
  }
  const std::size_t v = static_cast<std::size_t>(top);
  const MultiPoly<R> ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  const MultiPoly<R> c = gcd_poly(ca, cb);
  MultiPoly<R> f = divide_or_throw(a, ca), g = divide_or_throw(b, cb);
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  while (g.degree(v) > 0) {
    MultiPoly<R> r = pseudo_divide(f, g, v).remainder;
    f = std::move(g);
    g = r.is_zero() ? r : detail::primitive_in(r, v);
  }
  if (!g.is_zero()) return normalize_poly(c);
  return normalize_poly(c * f);
}

/// Coefficient-wise reduction modulo a prime of the coefficient ring,
/// to canonical residues.
template <SearchRing R>
MultiPoly<R> reduce_mod(const MultiPoly<R>& p, const typename R::Elem& prime) {
  const auto& ring = p.ring();
  if (!ring.is_prime(prime)) throw NotPrime(ring.to_string(prime) + " is not prime", ring.to_string(prime));
  return p.map_coeffs([&](const auto& c) { return ring.rem(c, prime); });
}

/// Sum_j cofactors[j] * family[j] = delta, with delta free of the chosen variable.
template <GcdRing R>
struct PolyBezout {
  MultiPoly<R> delta;
  std::vector<MultiPoly<R>> cofactors;
};

/// Fraction-free Bezout relation eliminating variable v. Throws
/// NotCoprimeFamily if the family has a common factor of positive degree in v.
template <GcdRing R>
PolyBezout<R> bezout_in_var(const std::vector<MultiPoly<R>>& family, std::size_t v) {
  if (family.empty()) throw FewerThanTwoPolys("empty family");
  const auto& ring = family.front().ring();
  const VarSet& vars = family.front().vars();
  const std::size_t n = family.size();
  const MultiPoly<R> zero(ring, vars), one = MultiPoly<R>::constant(ring, vars, ring.one());
  for (const auto& p : family) {
    if (p.is_zero()) throw ZeroPolyInFamily("zero polynomial in family");
  }

  struct Row {
    MultiPoly<R> r;
    std::vector<MultiPoly<R>> cof;
  };
  auto unit_row = [&](std::size_t j) {
    Row row{family[j], std::vector<MultiPoly<R>>(n, zero)};
    row.cof[j] = one;
    return row;
  };
  auto finish = [&](Row row) {
    const auto u = ring.unit_inverse(ring.unit_part(row.r.leading_coeff()));
    PolyBezout<R> out{row.r.scale(u), {}};
    for (auto& c : row.cof) out.cofactors.push_back(c.scale(u));
    return out;
  };

  for (std::size_t j = 0; j < n; ++j) {
    if (family[j].degree(v) == 0) return finish(unit_row(j));
  }

  Row acc = unit_row(0);
  for (std::size_t j = 1; j < n && acc.r.degree(v) > 0; ++j) {
    Row a = std::move(acc), b = unit_row(j);
    for (;;) {
      if (b.r.is_zero()) {
        acc = std::move(a);
        break;
      }
      if (b.r.degree(v) == 0) {
        acc = std::move(b);
        break;
      }
      if (a.r.degree(v) < b.r.degree(v)) std::swap(a, b);
      const PseudoDivision<R> pd = pseudo_divide(a.r, b.r, v);
      const MultiPoly<R> scale = pd.lead.pow(pd.steps);
      Row next{pd.remainder, std::vector<MultiPoly<R>>(n, zero)};
      for (std::size_t i = 0; i < n; ++i) next.cof[i] = a.cof[i] * scale - pd.quotient * b.cof[i];
      // strip the common factor free of v
      MultiPoly<R> g = detail::content_in(next.r, v);
      for (const auto& c : next.cof) {
        if (g.is_constant() && ring.is_unit(g.constant_value())) break;
        for (const auto& cc : c.coeffs_in(v)) {
          if (!cc.is_zero()) g = gcd_poly(g, cc);
        }
      }
      if (!g.is_zero() && !(g.is_constant() && ring.is_unit(g.constant_value()))) {
        next.r = divide_or_throw(next.r, g);
        for (auto& c : next.cof) c = divide_or_throw(c, g);
      }
      a = std::move(b);
      b = std::move(next);
    }
  }
  if (acc.r.degree(v) > 0) {
    throw NotCoprimeFamily("family has a common factor of positive degree in " + vars.name(v) + ": " +
                               acc.r.to_string(),
                           acc.r.to_string());
  }
  return finish(std::move(acc));
}

}  // namespace hs
