#pragma once

// Factorization of univariate integer polynomials: squarefree decomposition,
// factorization modulo a good prime, multifactor Hensel lifting and subset
// recombination.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hs/fp_poly.hpp"
#include "hs/upoly.hpp"

namespace hs {

using ZPoly = DensePoly<IntegerRing>;

namespace zpoly {

inline const IntegerRing kZ{};

inline ZPoly make(std::vector<Integer> c) {
  ZPoly p{std::move(c)};
  trim(kZ, p);
  return p;
}

inline Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& x : p.c) g = gcd_int(g, x);
  return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.lc() < 0) c = -c;
  ZPoly r = p;
  for (auto& x : r.c) x = div_exact(x, c);
  return r;
}

inline ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * static_cast<unsigned long>(i));
  trim(kZ, d);
  return d;
}

/// a / b when the quotient is in Z[x].
inline std::optional<ZPoly> divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw ZeroDivisor("division by the zero polynomial");
  if (a.is_zero()) return ZPoly{};
  if (a.deg() < b.deg()) return std::nullopt;
  ZPoly r = a, q;
  q.c.assign(a.c.size() - b.c.size() + 1, 0);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    if (!divides_int(b.lc(), r.lc())) return std::nullopt;
    const Integer f = div_exact(r.lc(), b.lc());
    const std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] -= f * b.c[j];
    trim(kZ, r);
  }
  if (!r.is_zero()) return std::nullopt;
  trim(kZ, q);
  return q;
}

inline ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  auto q = divide(a, b);
  if (!q) throw InternalError("inexact polynomial division");
  return *q;
}

/// Primitive gcd with positive leading coefficient times the gcd of the contents.
inline ZPoly gcd(ZPoly a, ZPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : dense_scale(kZ, primitive(b), content(b));
  if (b.is_zero()) return dense_scale(kZ, primitive(a), content(a));
  const Integer c = gcd_int(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = pseudo_rem(kZ, a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive(r);
  }
  return dense_scale(kZ, primitive(a), c);
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) { return dense_mul(kZ, a, b); }

inline bool less(const ZPoly& a, const ZPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

// Arithmetic modulo an integer m on polynomials with entries in [0, m).

inline ZPoly mod(const ZPoly& a, const Integer& m) {
  ZPoly r;
  for (const auto& x : a.c) r.c.push_back(mod_nonneg(x, m));
  trim(kZ, r);
  return r;
}

/// Coefficients in (-m/2, m/2].
inline ZPoly symmetric_mod(const ZPoly& a, const Integer& m) {
  ZPoly r;
  const Integer half = m / 2;
  for (const auto& x : a.c) {
    Integer y = mod_nonneg(x, m);
    if (y > half) y -= m;
    r.c.push_back(y);
  }
  trim(kZ, r);
  return r;
}

inline ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return mod(mul(a, b), m); }

/// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = mod(a, m), q;
  if (r.deg() < b.deg()) return {q, r};
  q.c.assign(r.c.size() - b.c.size() + 1, 0);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    const Integer f = r.lc();
    const std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] = mod_nonneg(r.c[shift + j] - f * b.c[j], m);
    trim(kZ, r);
  }
  trim(kZ, q);
  return {q, r};
}

inline ZPoly from_fp(const fp::Poly& p) {
  ZPoly r;
  for (auto x : p) r.c.emplace_back(static_cast<unsigned long>(x));
  trim(kZ, r);
  return r;
}

inline fp::Poly to_fp(const ZPoly& p, std::uint64_t q) { return fp::from_integers(p.c, q); }

}  // namespace zpoly

namespace detail {

/// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the same
/// relations mod m^2. h stays monic.
struct HenselState {
  ZPoly g, h, s, t;
};

inline HenselState hensel_step(const ZPoly& f, const HenselState& in, const Integer& m) {
  using namespace zpoly;
  const Integer m2 = m * m;
  const ZPoly e = mod(dense_sub(kZ, f, mul(in.g, in.h)), m2);
  auto [q, r] = divmod_monic(mul(in.s, e), in.h, m2);
  const ZPoly g2 = mod(dense_add(kZ, dense_add(kZ, in.g, mul(in.t, e)), mul(q, in.g)), m2);
  const ZPoly h2 = mod(dense_add(kZ, in.h, r), m2);
  const ZPoly b = mod(dense_sub(kZ, dense_add(kZ, mul(in.s, g2), mul(in.t, h2)), ZPoly{{1}}), m2);
  auto [c, d] = divmod_monic(mul(in.s, b), h2, m2);
  const ZPoly s2 = mod(dense_sub(kZ, in.s, d), m2);
  const ZPoly t2 = mod(dense_sub(kZ, dense_sub(kZ, in.t, mul(in.t, b)), mul(c, g2)), m2);
  return {g2, h2, s2, t2};
}

/// Lifts f = lc(f) * prod(factors) mod p to a factorization mod p^(2^steps).
/// Factors are monic mod p; the lifted factors are monic mod the final modulus.
inline void hensel_lift(const ZPoly& f, const std::vector<fp::Poly>& factors, std::uint64_t p, unsigned steps,
                        std::vector<ZPoly>& out) {
  using namespace zpoly;
  const Integer pp(static_cast<unsigned long>(p));
  Integer modulus = pp;
  for (unsigned i = 0; i < steps; ++i) modulus *= modulus;
  if (factors.size() == 1) {
    // monic associate of f modulo the final modulus
    Integer inv;
    mpz_invert(inv.get_mpz_t(), mod_nonneg(f.lc(), modulus).get_mpz_t(), modulus.get_mpz_t());
    out.push_back(mod(dense_scale(kZ, f, inv), modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<fp::Poly> left(factors.begin(), factors.begin() + half);
  const std::vector<fp::Poly> right(factors.begin() + half, factors.end());
  fp::Poly gl{1}, hr{1};
  for (const auto& x : left) gl = fp::mul(gl, x, p);
  for (const auto& x : right) hr = fp::mul(hr, x, p);
  gl = fp::scale(gl, mod_nonneg(f.lc(), pp).get_ui(), p);
  const auto bez = fp::xgcd(gl, hr, p);
  if (bez.g != fp::Poly{1}) throw InternalError("modular factors are not coprime");
  HenselState st{from_fp(gl), from_fp(hr), from_fp(bez.s), from_fp(bez.t)};
  Integer m = pp;
  for (unsigned i = 0; i < steps; ++i) {
    st = hensel_step(f, st, m);
    m *= m;
  }
  hensel_lift(st.g, left, p, steps, out);
  hensel_lift(st.h, right, p, steps, out);
}

inline Integer sqrt_ceil(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

struct SquarefreeFactors {
  std::vector<ZPoly> factors;
  std::string evidence;
};

/// Irreducible factors of a primitive squarefree polynomial with positive leading coefficient.
inline SquarefreeFactors factor_squarefree_zz(const ZPoly& f) {
  using namespace zpoly;
  if (f.deg() <= 1) return {{f}, "degree " + std::to_string(f.deg())};
  std::uint64_t p = 0;
  fp::Poly fbar;
  for (std::uint32_t q : hs::detail::small_primes()) {
    if (q < 3) continue;
    if (divides_int(Integer(q), f.lc())) continue;
    fbar = to_fp(f, q);
    if (fp::deg(fp::gcd(fbar, fp::derivative(fbar, q), q)) == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) throw InternalError("no good prime below 10^6");
  const std::vector<fp::Poly> modular = fp::factor_squarefree(fp::monic(fbar, p), p);
  std::string evidence = "p=" + std::to_string(p) + " degrees";
  for (const auto& m : modular) evidence += " " + std::to_string(fp::deg(m));
  if (modular.size() == 1) return {{f}, evidence};

  // modulus must exceed twice the bound on coefficients of lc(f) * (monic factor)
  Integer norm2 = 0;
  for (const auto& x : f.c) norm2 += x * x;
  const Integer bound = pow_int(2, static_cast<unsigned long>(f.deg())) * sqrt_ceil(norm2) * abs_int(f.lc());
  const Integer pp(static_cast<unsigned long>(p));
  unsigned steps = 0;
  Integer modulus = pp;
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  hensel_lift(f, modular, p, steps, lifted);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  for (std::size_t d = 1; 2 * d <= remaining.size();) {
    bool hit = false;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      ZPoly prod{{rest.lc()}};
      for (std::size_t i : pick) prod = mul_mod(prod, lifted[remaining[i]], modulus);
      const ZPoly cand = primitive(symmetric_mod(prod, modulus));
      if (auto q = divide(rest, cand)) {
        found.push_back(cand);
        rest = *q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        hit = true;
        break;
      }
      // next d-subset of remaining in lexicographic order
      std::size_t i = d;
      while (i > 0 && pick[i - 1] == remaining.size() - d + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++d;
  }
  found.push_back(primitive(rest));
  std::sort(found.begin(), found.end(), less);
  return {found, evidence};
}

}  // namespace detail

struct FactorizationZZ {
  Integer content;                                  // carries the sign
  std::vector<std::pair<ZPoly, unsigned>> factors;  // primitive, positive lc, sorted
  std::vector<std::string> evidence;                // per squarefree part: good prime and modular degrees

  ZPoly expand() const {
    ZPoly r = zpoly::make({content});
    for (const auto& [f, e] : factors) {
      for (unsigned i = 0; i < e; ++i) r = zpoly::mul(r, f);
    }
    return r;
  }
  std::size_t factor_count() const {
    std::size_t n = 0;
    for (const auto& [f, e] : factors) n += e;
    return n;
  }
};

/// Squarefree decomposition of a primitive polynomial: parts[i] has multiplicity i+1.
inline std::vector<ZPoly> squarefree_decomposition(const ZPoly& f) {
  using namespace zpoly;
  std::vector<ZPoly> parts;
  const ZPoly df = derivative(f);
  const ZPoly a = gcd(f, df);
  ZPoly b = divide_exact(f, a);
  ZPoly c = divide_exact(df, a);
  ZPoly d = dense_sub(kZ, c, derivative(b));
  while (b.deg() > 0) {
    ZPoly g = gcd(b, d);
    parts.push_back(g);
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    d = dense_sub(kZ, c, derivative(b));
  }
  return parts;
}

inline FactorizationZZ factor_zz(const ZPoly& f) {
  using namespace zpoly;
  if (f.is_zero()) throw ZeroPolynomial("factorization of the zero polynomial");
  FactorizationZZ out;
  out.content = content(f);
  if (f.lc() < 0) out.content = -out.content;
  if (f.deg() == 0) return out;
  const ZPoly pp = primitive(f);
  const auto parts = squarefree_decomposition(pp);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].deg() < 1) continue;
    auto sf = detail::factor_squarefree_zz(primitive(parts[i]));
    out.evidence.push_back(sf.evidence);
    for (auto& g : sf.factors) out.factors.emplace_back(std::move(g), static_cast<unsigned>(i + 1));
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

struct PolyFactorization {
  Integer content;
  std::vector<std::pair<MultiPoly<IntegerRing>, unsigned>> factors;
  std::vector<std::string> evidence;
};

/// Factorization of a polynomial in a single variable over the integers.
inline PolyFactorization factor_univariate_over_ZZ(const MultiPoly<IntegerRing>& f) {
  if (f.is_zero()) throw ZeroPolynomial("factorization of the zero polynomial");
  const auto ys = f.vars().indices(VarRole::y);
  const std::size_t var = single_variable<IntegerRing>({f}, ys.empty() ? 0 : ys.front());
  auto fz = factor_zz(to_dense(f, var));
  PolyFactorization out{fz.content, {}, std::move(fz.evidence)};
  for (auto& [g, e] : fz.factors) out.factors.emplace_back(from_dense(g, f.ring(), f.vars(), var), e);
  return out;
}

inline bool is_irreducible_over_Q(const ZPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("irreducibility of the zero polynomial");
  if (f.deg() < 1) throw ConstantPolynomial("irreducibility of a constant");
  const auto fz = factor_zz(f);
  return fz.factors.size() == 1 && fz.factors.front().second == 1;
}

inline bool is_irreducible_over_Q(const MultiPoly<IntegerRing>& f) {
  if (f.is_zero()) throw ZeroPolynomial("irreducibility of the zero polynomial");
  if (f.is_constant()) throw ConstantPolynomial("irreducibility of a constant");
  return is_irreducible_over_Q(to_dense(f, single_variable<IntegerRing>({f})));
}

}  // namespace hs
