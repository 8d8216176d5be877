#pragma once

// Dense univariate polynomials: over a field (for Bezout relations) and over
// a gcd ring (for resultants and factorization).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hs/multipoly.hpp"

namespace hs {

/// Coefficients low degree first, no trailing zeros.
template <class Ring>
struct DensePoly {
  using Elem = typename Ring::Elem;
  std::vector<Elem> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lc() const { return c.back(); }

  bool operator==(const DensePoly&) const = default;
};

template <class Ring>
void trim(const Ring& ring, DensePoly<Ring>& p) {
  while (!p.c.empty() && ring.is_zero(p.c.back())) p.c.pop_back();
}

template <class Ring>
DensePoly<Ring> dense_add(const Ring& ring, const DensePoly<Ring>& a, const DensePoly<Ring>& b) {
  DensePoly<Ring> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), ring.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = ring.add(r.c[i], b.c[i]);
  trim(ring, r);
  return r;
}

template <class Ring>
DensePoly<Ring> dense_neg(const Ring& ring, const DensePoly<Ring>& a) {
  DensePoly<Ring> r = a;
  for (auto& x : r.c) x = ring.neg(x);
  return r;
}

template <class Ring>
DensePoly<Ring> dense_sub(const Ring& ring, const DensePoly<Ring>& a, const DensePoly<Ring>& b) {
  return dense_add(ring, a, dense_neg(ring, b));
}

template <class Ring>
DensePoly<Ring> dense_mul(const Ring& ring, const DensePoly<Ring>& a, const DensePoly<Ring>& b) {
  DensePoly<Ring> r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (ring.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = ring.add(r.c[i + j], ring.mul(a.c[i], b.c[j]));
  }
  trim(ring, r);
  return r;
}

template <class Ring>
DensePoly<Ring> dense_scale(const Ring& ring, const DensePoly<Ring>& a, const typename Ring::Elem& s) {
  DensePoly<Ring> r;
  for (const auto& x : a.c) r.c.push_back(ring.mul(x, s));
  trim(ring, r);
  return r;
}

template <class Ring>
typename Ring::Elem dense_eval(const Ring& ring, const DensePoly<Ring>& a, const typename Ring::Elem& x) {
  auto v = ring.zero();
  for (std::size_t i = a.c.size(); i-- > 0;) v = ring.add(ring.mul(v, x), a.c[i]);
  return v;
}

/// Univariate view of a polynomial in which only variable `var` may occur.
template <CoefficientRing R>
DensePoly<R> to_dense(const MultiPoly<R>& p, std::size_t var) {
  DensePoly<R> d;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) {
        throw InvalidArgument("expected a polynomial in " + p.vars().name(var) + " only, got " + p.to_string());
      }
    }
    if (d.c.size() <= e[var]) d.c.resize(e[var] + 1, p.ring().zero());
    d.c[e[var]] = c;
  }
  trim(p.ring(), d);
  return d;
}

template <CoefficientRing R>
MultiPoly<R> from_dense(const DensePoly<R>& d, const R& ring, const VarSet& vars, std::size_t var) {
  MultiPoly<R> p(ring, vars);
  Exps e(vars.size(), 0);
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    e[var] = static_cast<unsigned>(i);
    p.add_term(e, d.c[i]);
  }
  return p;
}

/// The only variable with positive degree among the inputs, or the first of
/// `fallback` if all are constant.
template <CoefficientRing R>
std::size_t single_variable(const std::vector<MultiPoly<R>>& ps, std::size_t fallback = 0) {
  std::optional<std::size_t> var;
  for (const auto& p : ps) {
    for (std::size_t i : p.support()) {
      if (var && *var != i) throw InvalidArgument("expected univariate polynomials in a common variable");
      var = i;
    }
  }
  return var.value_or(fallback);
}

// ---------------------------------------------------------------------------
// Polynomials over a fraction field

template <GcdRing Base>
using FieldPoly = DensePoly<FractionField<Base>>;

template <GcdRing Base>
std::pair<FieldPoly<Base>, FieldPoly<Base>> field_divmod(const FractionField<Base>& K, const FieldPoly<Base>& a,
                                                         const FieldPoly<Base>& b) {
  if (b.is_zero()) throw ZeroDivisor("polynomial division by zero");
  FieldPoly<Base> q, r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(a.c.size() - b.c.size() + 1, K.zero());
  const auto lc_inv = K.inv(b.lc());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    const std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
    const auto f = K.mul(r.lc(), lc_inv);
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] = K.sub(r.c[shift + j], K.mul(f, b.c[j]));
    r.c.pop_back();
    trim(K, r);
  }
  trim(K, q);
  return {q, r};
}

template <GcdRing Base>
FieldPoly<Base> field_monic(const FractionField<Base>& K, const FieldPoly<Base>& a) {
  if (a.is_zero()) return a;
  return dense_scale(K, a, K.inv(a.lc()));
}

template <GcdRing Base>
struct FieldXgcd {
  FieldPoly<Base> g, u, v;  // u*A + v*B = g, g monic
};

/// Extended Euclid over the fraction field of Base.
template <GcdRing Base>
FieldXgcd<Base> ext_gcd_fieldpoly(const FractionField<Base>& K, const FieldPoly<Base>& a, const FieldPoly<Base>& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("extended gcd of two zero polynomials");
  FieldPoly<Base> r0 = a, r1 = b, s0{{K.one()}}, s1{}, t0{}, t1{{K.one()}};
  while (!r1.is_zero()) {
    auto [q, r] = field_divmod(K, r0, r1);
    auto s2 = dense_sub(K, s0, dense_mul(K, q, s1));
    auto t2 = dense_sub(K, t0, dense_mul(K, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto inv = K.inv(r0.lc());
  return {dense_scale(K, r0, inv), dense_scale(K, s0, inv), dense_scale(K, t0, inv)};
}

template <GcdRing Base>
FieldPoly<Base> to_field(const FractionField<Base>& K, const DensePoly<Base>& p) {
  FieldPoly<Base> out;
  for (const auto& x : p.c) out.c.push_back(K.embed(x));
  return out;
}

template <class Ring>
typename Ring::Elem pow_elem(const Ring& ring, typename Ring::Elem base, unsigned e) {
  auto r = ring.one();
  while (e) {
    if (e & 1) r = ring.mul(r, base);
    e >>= 1;
    if (e) base = ring.mul(base, base);
  }
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
template <class Ring>
DensePoly<Ring> pseudo_rem(const Ring& ring, DensePoly<Ring> a, const DensePoly<Ring>& b) {
  if (b.is_zero()) throw ZeroDivisor("pseudo-remainder by zero");
  if (a.deg() < b.deg()) return a;
  int e = a.deg() - b.deg() + 1;
  const auto& lb = b.lc();
  while (!a.is_zero() && a.deg() >= b.deg()) {
    const std::size_t shift = static_cast<std::size_t>(a.deg() - b.deg());
    const auto la = a.lc();
    for (auto& x : a.c) x = ring.mul(x, lb);
    for (std::size_t j = 0; j < b.c.size(); ++j) a.c[shift + j] = ring.sub(a.c[shift + j], ring.mul(la, b.c[j]));
    trim(ring, a);
    --e;
  }
  if (e > 0) a = dense_scale(ring, a, pow_elem(ring, lb, static_cast<unsigned>(e)));
  return a;
}

// ---------------------------------------------------------------------------
// Resultant

/// Determinant of the Sylvester matrix of A and B, rows of A first.
/// Subresultant algorithm; the ring must support exact division.
template <GcdRing Ring>
typename Ring::Elem resultant_dense(const Ring& ring, DensePoly<Ring> a, DensePoly<Ring> b) {
  using E = typename Ring::Elem;
  if (a.is_zero() || b.is_zero()) return ring.zero();
  E sign = ring.one();
  if (a.deg() < b.deg()) {
    std::swap(a, b);
    if (a.deg() % 2 == 1 && b.deg() % 2 == 1) sign = ring.neg(sign);
  }
  if (b.deg() == 0) return ring.mul(sign, pow_elem(ring, b.lc(), static_cast<unsigned>(a.deg())));
  E g = ring.one(), h = ring.one();
  while (b.deg() > 0) {
    const int delta = a.deg() - b.deg();
    if (a.deg() % 2 == 1 && b.deg() % 2 == 1) sign = ring.neg(sign);
    DensePoly<Ring> r = pseudo_rem(ring, a, b);
    if (r.is_zero()) return ring.zero();
    const E divisor = ring.mul(g, pow_elem(ring, h, static_cast<unsigned>(delta)));
    for (auto& x : r.c) x = ring.exact_quo(x, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.lc();
    if (delta > 0) {
      h = ring.exact_quo(pow_elem(ring, g, static_cast<unsigned>(delta)),
                         pow_elem(ring, h, static_cast<unsigned>(delta - 1)));
    }
  }
  const unsigned n = static_cast<unsigned>(a.deg());
  const E last = ring.exact_quo(pow_elem(ring, b.lc(), n), pow_elem(ring, h, n - 1));
  return ring.mul(sign, last);
}

/// Resultant of two nonzero polynomials in the same single variable.
template <GcdRing R>
typename R::Elem resultant_univar(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant of a zero polynomial");
  const std::size_t var = single_variable<R>({a, b});
  return resultant_dense(a.ring(), to_dense(a, var), to_dense(b, var));
}

}  // namespace hs
