#pragma once

// Dense univariate polynomials over a prime field F_p, p < 2^32.
// Coefficients are stored low degree first; the zero polynomial is empty.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hs/arith.hpp"

namespace hs::fp {

using Coeff = std::uint64_t;
using Poly = std::vector<Coeff>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Coeff mulmod(Coeff a, Coeff b, Coeff p) { return (a * b) % p; }

inline Coeff powmod(Coeff a, std::uint64_t e, Coeff p) {
  Coeff r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline Coeff inv(Coeff a, Coeff p) {
  if (a % p == 0) throw ZeroDivisor("inverse of 0 in F_p");
  return powmod(a, p - 2, p);
}

inline Poly from_integers(const std::vector<Integer>& c, Coeff p) {
  Poly out(c.size());
  const Integer pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = mod_nonneg(c[i], pp).get_ui();
  trim(out);
  return out;
}

inline Poly add(const Poly& a, const Poly& b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, Coeff c, Coeff p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c % p, p);
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, Coeff p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Coeff p) {
  if (b.empty()) throw ZeroDivisor("polynomial division by zero over F_p");
  Poly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  Poly q(a.size() - b.size() + 1, 0);
  const Coeff lc_inv = inv(b.back(), p);
  for (int i = deg(r); i >= deg(b); --i) {
    const Coeff c = mulmod(r[i], lc_inv, p);
    if (c == 0) continue;
    const int shift = i - deg(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = (r[shift + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline Poly rem(const Poly& a, const Poly& b, Coeff p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, Coeff p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, Coeff p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

struct Xgcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};

inline Xgcd xgcd(const Poly& a, const Poly& b, Coeff p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const Coeff c = inv(r0.back(), p);
  return {scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)};
}

inline Poly derivative(const Poly& a, Coeff p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

/// base^e mod m, with e given as an arbitrary-precision exponent.
inline Poly powmod(const Poly& base, const Integer& e, const Poly& m, Coeff p) {
  Poly result = rem(Poly{1}, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

/// Ben-Or style test: a polynomial of degree d is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every i <= d/2.
inline bool is_irreducible(const Poly& f, Coeff p) {
  const int d = deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly xp = rem(x, f, p);
  const Integer pp(static_cast<unsigned long>(p));
  for (int i = 1; i <= d / 2; ++i) {
    xp = powmod(xp, pp, f, p);
    if (deg(gcd(f, sub(xp, x, p), p)) > 0) return false;
  }
  return true;
}

namespace detail {

// p-th root of a polynomial whose derivative vanishes (all exponents are multiples of p).
inline Poly pth_root(const Poly& a, Coeff p) {
  Poly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(a[i]);  // a^(1/p) = a in F_p
  trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree f: pairs (product of degree-d factors, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, Coeff p) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly xp = x;
  const Integer pp(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= deg(f); ++d) {
    xp = powmod(xp, pp, f, p);
    Poly g = gcd(f, sub(xp, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      xp = rem(xp, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Equal-degree splitting of a monic squarefree product of degree-d irreducibles.
inline void equal_degree(const Poly& f, int d, Coeff p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<Coeff> coeff(0, p - 1);
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = rem(mul(term, term, p), f, p);
        b = add(b, term, p);
      }
    } else {
      Integer e = (pow_int(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
      b = sub(powmod(a, e, f, p), Poly{1}, p);
    }
    Poly g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

inline bool lex_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace detail

/// Monic irreducible factors of a monic squarefree polynomial, sorted by (degree, coefficients).
inline std::vector<Poly> factor_squarefree(const Poly& f, Coeff p, std::uint64_t seed = 0) {
  std::vector<Poly> out;
  if (deg(f) < 1) return out;
  std::uint64_t s = seed ^ (p * 0x9E3779B97F4A7C15ull);
  for (Coeff c : f) s = s * 1000003u + c;
  std::mt19937_64 rng(s);
  for (const auto& [g, d] : detail::distinct_degree(monic(f, p), p)) detail::equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), detail::lex_less);
  return out;
}

/// Complete factorization into monic irreducibles with multiplicities (leading coefficient dropped).
inline std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, Coeff p) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (deg(f) < 1) return out;
  // Yun-style squarefree decomposition with the characteristic-p correction
  auto rec = [&](auto&& self, const Poly& g, unsigned mult) -> void {
    if (deg(g) < 1) return;
    Poly dg = derivative(g, p);
    if (dg.empty()) {
      self(self, detail::pth_root(g, p), mult * static_cast<unsigned>(p));
      return;
    }
    Poly c = gcd(g, dg, p);
    Poly w = divmod(g, c, p).first;
    unsigned i = 1;
    while (deg(w) > 0) {
      Poly y = gcd(w, c, p);
      Poly z = divmod(w, y, p).first;
      for (auto& fac : factor_squarefree(z, p)) out.emplace_back(fac, i * mult);
      ++i;
      w = y;
      c = divmod(c, y, p).first;
    }
    if (deg(c) > 0) self(self, detail::pth_root(c, p), mult * static_cast<unsigned>(p));
  };
  rec(rec, monic(f, p), 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return detail::lex_less(a.first, b.first);
    return a.second < b.second;
  });
  // merge equal factors that arose on different branches
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& f2 : out) {
    if (!merged.empty() && merged.back().first == f2.first) {
      merged.back().second += f2.second;
    } else {
      merged.push_back(std::move(f2));
    }
  }
  return merged;
}

}  // namespace hs::fp
