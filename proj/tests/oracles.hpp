#pragma once

// Brute-force reference implementations used by the tests. None of them call
// into the algorithms they are compared against.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Int = mpz_class;

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_trial(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

/// (prime, exponent) pairs of |n| by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::int64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

inline std::uint64_t phi_brute(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      const std::uint64_t r = a % b;
      a = b;
      b = r;
    }
    if (a == 1) ++c;
  }
  return c;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials, low degree first.

using Poly = std::vector<Int>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline Int eval(const Poly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// True iff b divides a in Z[x] (b nonzero).
inline bool divides(const Poly& b, Poly a) {
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    if (mod(a.back(), b.back()) != 0) return false;
    const Int f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  return a.empty();
}

inline Poly primitive_positive(Poly p) {
  trim(p);
  Int c = 0;
  for (const auto& x : p) c = gcd(c, x);
  if (p.back() < 0) c = -c;
  for (auto& x : p) x /= c;
  return p;
}

inline Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::vector<Int> signed_divisors(const Int& n) {
  std::vector<Int> out;
  Int a = abs(n);
  for (Int d = 1; d <= a; ++d) {
    if (mod(a, d) == 0) {
      out.push_back(d);
      out.push_back(-d);
    }
  }
  return out;
}

/// Searches all integer polynomials g of degree 1..deg(f)/2 whose coefficients
/// obey |g_j| <= C(d, j) * ceil(||f||_2), with lc(g) | lc(f) and g(0) | f(0);
/// true iff none divides f. Only meant for degree <= 4.
inline bool irreducible_mignotte(Poly f) {
  trim(f);
  const int n = degree(f);
  if (n < 1) return false;
  f = primitive_positive(f);
  if (n == 1) return true;
  if (f[0] == 0) return false;
  Int norm2 = 0;
  for (const auto& x : f) norm2 += x * x;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  if (root * root < norm2) ++root;
  const auto leads = signed_divisors(f.back());
  const auto consts = signed_divisors(f[0]);
  for (int d = 1; 2 * d <= n; ++d) {
    Poly g(static_cast<std::size_t>(d) + 1);
    std::vector<Int> bound(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) bound[static_cast<std::size_t>(j)] = binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)) * root;
    for (const auto& lc : leads) {
      if (lc < 0) continue;  // g and -g divide together
      if (abs(lc) > bound[static_cast<std::size_t>(d)]) continue;
      for (const auto& c0 : consts) {
        if (abs(c0) > bound[0]) continue;
        g[0] = c0;
        g[static_cast<std::size_t>(d)] = lc;
        // odometer over the middle coefficients
        std::vector<Int> mid(static_cast<std::size_t>(std::max(0, d - 1)));
        for (int j = 1; j < d; ++j) mid[static_cast<std::size_t>(j - 1)] = -bound[static_cast<std::size_t>(j)];
        for (;;) {
          for (int j = 1; j < d; ++j) g[static_cast<std::size_t>(j)] = mid[static_cast<std::size_t>(j - 1)];
          if (divides(g, f)) return false;
          int pos = d - 2;
          while (pos >= 0) {
            auto& m = mid[static_cast<std::size_t>(pos)];
            if (m < bound[static_cast<std::size_t>(pos + 1)]) {
              ++m;
              break;
            }
            m = -bound[static_cast<std::size_t>(pos + 1)];
            --pos;
          }
          if (pos < 0) break;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Resultant through the Sylvester matrix (rows of a on top), Bareiss elimination.

inline Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline Int sylvester_resultant(Poly a, Poly b) {
  trim(a);
  trim(b);
  const int m = degree(a), n = degree(b);
  if (m < 0 || n < 0) return 0;
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size, 0));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a[static_cast<std::size_t>(m - j)];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = b[static_cast<std::size_t>(n - j)];
  }
  return determinant(s);
}

// ---------------------------------------------------------------------------
// Z[sqrt 5] as pairs (a, b) = a + b sqrt5.

struct Z5 {
  Int a, b;
};

inline Z5 z5_mul(const Z5& x, const Z5& y) { return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a}; }

/// d | x iff x * conj(d) has both coordinates divisible by N(d).
inline bool z5_div(const Z5& d, const Z5& x) {
  const Int n = d.a * d.a - 5 * d.b * d.b;
  const Z5 q = z5_mul(x, Z5{d.a, -d.b});
  return mod(q.a, abs(n)) == 0 && mod(q.b, abs(n)) == 0;
}

/// Quotient search over a box: some q with d*q == x and |q_i| <= bound.
inline bool z5_div_search(const Z5& d, const Z5& x, long bound) {
  // the sqrt5 part of d*q is linear in q, so each qb fixes at most one qa
  for (long qb = -bound; qb <= bound; ++qb) {
    const Int num = d.b != 0 ? x.b - d.a * qb : x.a;
    const Int den = d.b != 0 ? d.b : d.a;
    if (num % den != 0) continue;
    const Z5 p = z5_mul(d, Z5{Int(num / den), Int(qb)});
    if (p.a == x.a && p.b == x.b) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Random generation

inline Poly random_poly(std::mt19937_64& rng, int deg, long coeff) {
  std::uniform_int_distribution<long> c(-coeff, coeff);
  Poly p(static_cast<std::size_t>(deg) + 1);
  for (auto& x : p) x = c(rng);
  while (p.back() == 0) p.back() = c(rng);
  return p;
}

inline std::string poly_text(const Poly& p, const std::string& var) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + p[i].get_str() + ")";
    if (i > 0) s += "*" + var + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace oracle
