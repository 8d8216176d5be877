#pragma once

// Exact integer utilities: primes, factorization, CRT, Euler's totient.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hs/errors.hpp"

namespace hs {

using Integer = mpz_class;
using Rational = mpq_class;  // mpq_class keeps num/den reduced with den > 0

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Least non-negative residue of a modulo m (m > 0).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Exact quotient; caller guarantees b | a.
inline Integer div_exact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides_int(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer powmod_int(const Integer& base, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace detail {

inline std::vector<std::uint32_t> sieve_u32(std::uint64_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_u32(1000000);
  return primes;
}

}  // namespace detail

/// All primes p <= bound in ascending order.
inline std::vector<Integer> sieve_primes(const Integer& bound) {
  std::vector<Integer> out;
  if (bound < 2) return out;
  if (!bound.fits_ulong_p()) throw InvalidArgument("sieve bound too large: " + to_string(bound));
  for (std::uint32_t p : detail::sieve_u32(bound.get_ui())) out.emplace_back(p);
  return out;
}

/// Miller-Rabin with the first 13 prime bases: deterministic below 3.3e24.
/// Larger inputs get 25 extra random rounds from GMP (probabilistic).
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (divides_int(Integer(b), n)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Integer n_minus_1 = n - 1;
  for (unsigned b : kBases) {
    Integer x = powmod_int(Integer(b), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = mod_nonneg(x * x, n);
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

struct IntFactorization {
  int sign = 1;
  std::vector<std::pair<Integer, unsigned>> factors;  // strictly increasing primes

  Integer value() const {
    Integer v = sign;
    for (const auto& [p, e] : factors) v *= pow_int(p, e);
    return v;
  }

  std::vector<Integer> primes() const {
    std::vector<Integer> out;
    for (const auto& f : factors) out.push_back(f.first);
    return out;
  }
};

inline constexpr std::uint64_t kDefaultFactorBudget = 10'000'000;

namespace detail {

// Brent's variant of Pollard rho. The walk constant is derived from n and the
// attempt number, so results are reproducible. Returns a nontrivial divisor
// or 0 when the budget is used up.
inline Integer rho_split(const Integer& n, std::uint64_t& budget) {
  if (divides_int(2, n)) return 2;
  for (unsigned attempt = 0;; ++attempt) {
    const Integer c = mod_nonneg(Integer(n % 1000003) + 2 * attempt + 1, n);
    Integer y = mod_nonneg(Integer(attempt) + 2, n);
    Integer x, ys, g = 1, q = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = mod_nonneg(y * y + c, n);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = mod_nonneg(y * y + c, n);
          q = mod_nonneg(q * abs_int(x - y), n);
        }
        if (budget < steps) return 0;
        budget -= steps;
        g = gcd_int(q, n);
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = mod_nonneg(ys * ys + c, n);
        g = gcd_int(abs_int(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_cofactor(const Integer& n, std::uint64_t& budget, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = rho_split(n, budget);
  if (d == 0) {
    throw BudgetExceeded("integer factorization budget exhausted on cofactor " + to_string(n),
                         to_string(n));
  }
  factor_cofactor(d, budget, out);
  factor_cofactor(div_exact(n, d), budget, out);
}

}  // namespace detail

/// Complete factorization of n != 0: trial division by primes below 10^6, then Pollard rho.
inline IntFactorization factor_integer(const Integer& n, std::uint64_t budget = kDefaultFactorBudget) {
  if (n == 0) throw InvalidArgument("cannot factor 0");
  IntFactorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer rest = abs_int(n);
  std::vector<Integer> primes;
  for (std::uint32_t p : detail::small_primes()) {
    const Integer pp(p);
    if (pp * pp > rest) break;
    while (divides_int(pp, rest)) {
      primes.push_back(pp);
      rest = div_exact(rest, pp);
    }
  }
  detail::factor_cofactor(rest, budget, primes);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!result.factors.empty() && result.factors.back().first == p) {
      ++result.factors.back().second;
    } else {
      result.factors.emplace_back(p, 1u);
    }
  }
  return result;
}

struct Congruence {
  Integer residue;
  Integer modulus;
};

/// Solves m = residue_i (mod modulus_i). Negative moduli are replaced by their
/// absolute value and residues are reduced first; a zero modulus is rejected.
/// Returns (m, M) with M the product of the moduli and 0 <= m < M.
inline std::pair<Integer, Integer> crt_integers(const std::vector<Congruence>& congruences) {
  Integer m = 0, big_m = 1;
  for (const auto& c : congruences) {
    const Integer mod = abs_int(c.modulus);
    if (mod == 0) throw InvalidArgument("zero modulus in CRT");
    const Integer r = mod_nonneg(c.residue, mod);
    if (gcd_int(big_m, mod) != 1) {
      throw NotCoprimeModuli("moduli share a factor with " + to_string(mod), to_string(mod));
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(mod_nonneg(big_m, mod)).get_mpz_t(), mod.get_mpz_t());
    if (mod == 1) inv = 0;
    const Integer k = mod_nonneg((r - m) * inv, mod);
    m += big_m * k;
    big_m *= mod;
    m = mod_nonneg(m, big_m);
  }
  return {m, big_m};
}

inline Integer euler_phi(const Integer& n) {
  if (n < 1) throw InvalidArgument("euler_phi needs n >= 1");
  Integer phi = n;
  for (const auto& [p, e] : factor_integer(n).factors) phi = div_exact(phi, p) * (p - 1);
  return phi;
}

/// Product of the distinct primes dividing n (n != 0); radical(+-1) = 1.
inline Integer radical(const Integer& n, std::uint64_t budget = kDefaultFactorBudget) {
  Integer r = 1;
  for (const auto& [p, e] : factor_integer(n, budget).factors) r *= p;
  return r;
}

}  // namespace hs
