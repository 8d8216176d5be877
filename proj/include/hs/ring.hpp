#pragma once

// Coefficient-ring descriptors. A descriptor is a small value type carrying
// the ring parameters; all element arithmetic goes through it. Two Euclidean
// instances are provided (the integers and F_q[u] for prime q), plus the
// fraction field of any Euclidean descriptor.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hs/arith.hpp"
#include "hs/fp_poly.hpp"

namespace hs {

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.from_int(Integer{}) } -> std::same_as<typename R::Elem>;
  { r.add(a, b) } -> std::same_as<typename R::Elem>;
  { r.sub(a, b) } -> std::same_as<typename R::Elem>;
  { r.mul(a, b) } -> std::same_as<typename R::Elem>;
  { r.neg(a) } -> std::same_as<typename R::Elem>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.compare(a, b) } -> std::convertible_to<int>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
  { r.tag() } -> std::convertible_to<std::string>;
};

/// Rings with a gcd, unit normalization and exact division.
template <class R>
concept GcdRing = CoefficientRing<R> && requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
  { r.gcd(a, b) } -> std::same_as<typename R::Elem>;
  { r.normalize(a) } -> std::same_as<typename R::Elem>;
  { r.unit_part(a) } -> std::same_as<typename R::Elem>;
  { r.divides(a, b) } -> std::convertible_to<bool>;
  { r.exact_quo(a, b) } -> std::same_as<typename R::Elem>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
};

/// Euclidean rings with finite residue fields at primes: the search domains.
template <class R>
concept SearchRing = GcdRing<R> && requires(const R& r, const typename R::Elem& a, const typename R::Elem& b,
                                            const Integer& n) {
  { r.rem(a, b) } -> std::same_as<typename R::Elem>;
  { r.norm(a) } -> std::same_as<Integer>;
  { r.residues(a) } -> std::same_as<std::vector<typename R::Elem>>;
  { r.primes_up_to_norm(n) } -> std::same_as<std::vector<typename R::Elem>>;
  { r.prime_divisors(a) } -> std::same_as<std::vector<typename R::Elem>>;
  { r.is_prime(a) } -> std::convertible_to<bool>;
};

template <class R>
struct Xgcd {
  typename R::Elem g, s, t;  // s*a + t*b = g
};

// ---------------------------------------------------------------------------
// The integers

struct IntegerRing {
  using Elem = Integer;
  static constexpr bool is_pid = true;
  static constexpr bool all_primes_maximal = true;

  std::string tag() const { return "zz"; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Integer& n) const { return n; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
  bool is_negative(const Elem& a) const { return a < 0; }
  int compare(const Elem& a, const Elem& b) const { return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  /// Coefficient rendering inside a product; integers never need parentheses.
  std::string coeff_string(const Elem& a) const { return a.get_str(); }

  Elem normalize(const Elem& a) const { return abs_int(a); }
  Elem unit_part(const Elem& a) const { return a < 0 ? Elem(-1) : Elem(1); }
  Elem unit_inverse(const Elem& u) const { return u; }
  Elem gcd(const Elem& a, const Elem& b) const { return gcd_int(a, b); }
  bool divides(const Elem& d, const Elem& a) const { return divides_int(d, a); }
  Elem exact_quo(const Elem& a, const Elem& d) const {
    if (d == 0) throw ZeroDivisor("division by zero");
    return div_exact(a, d);
  }
  /// Least non-negative remainder modulo |m|.
  Elem rem(const Elem& a, const Elem& m) const {
    if (m == 0) throw ZeroDivisor("reduction modulo zero");
    return mod_nonneg(a, abs_int(m));
  }
  Xgcd<IntegerRing> xgcd(const Elem& a, const Elem& b) const {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, s, t};
  }

  Integer norm(const Elem& p) const { return abs_int(p); }
  bool is_prime(const Elem& p) const { return hs::is_prime(abs_int(p)); }
  std::vector<Elem> residues(const Elem& p) const {
    std::vector<Elem> out;
    for (Integer r = 0; r < abs_int(p); ++r) out.push_back(r);
    return out;
  }
  std::vector<Elem> primes_up_to_norm(const Integer& bound) const { return sieve_primes(bound); }
  std::vector<Elem> prime_divisors(const Elem& a, std::uint64_t budget = kDefaultFactorBudget) const {
    if (a == 0) throw InvalidArgument("prime divisors of 0");
    return factor_integer(a, budget).primes();
  }
  /// n-th element of the enumeration 0, 1, -1, 2, -2, ...
  Elem enumerate(std::uint64_t n) const {
    const Integer half(static_cast<unsigned long>((n + 1) / 2));
    return n % 2 == 1 ? half : Elem(-half);
  }
  /// Exponent of the prime p in a != 0.
  unsigned valuation(const Elem& a, const Elem& p) const {
    unsigned v = 0;
    Integer x = a;
    while (divides_int(p, x)) {
      x = div_exact(x, p);
      ++v;
    }
    return v;
  }

  bool operator==(const IntegerRing&) const = default;
};

// ---------------------------------------------------------------------------
// F_q[u], q prime

struct FqPoly {
  fp::Poly c;  // low degree first, no trailing zeros
  bool operator==(const FqPoly&) const = default;
};

struct FqPolyRing {
  using Elem = FqPoly;
  static constexpr bool is_pid = true;
  static constexpr bool all_primes_maximal = true;

  std::uint64_t q = 2;

  FqPolyRing() = default;
  explicit FqPolyRing(std::uint64_t prime) : q(prime) {
    if (prime >= (1ull << 32) || !hs::is_prime(Integer(static_cast<unsigned long>(prime)))) {
      throw NotPrime("F_q[u] needs a prime q below 2^32, got " + std::to_string(prime));
    }
  }

  std::string tag() const { return "fq_u:" + std::to_string(q); }
  Elem zero() const { return {}; }
  Elem one() const { return {{1}}; }
  Elem from_int(const Integer& n) const {
    const Integer r = mod_nonneg(n, Integer(static_cast<unsigned long>(q)));
    if (r == 0) return {};
    return {{r.get_ui()}};
  }
  Elem u() const { return {{0, 1}}; }
  Elem add(const Elem& a, const Elem& b) const { return {fp::add(a.c, b.c, q)}; }
  Elem sub(const Elem& a, const Elem& b) const { return {fp::sub(a.c, b.c, q)}; }
  Elem mul(const Elem& a, const Elem& b) const { return {fp::mul(a.c, b.c, q)}; }
  Elem neg(const Elem& a) const { return {fp::sub({}, a.c, q)}; }
  bool is_zero(const Elem& a) const { return a.c.empty(); }
  bool equal(const Elem& a, const Elem& b) const { return a.c == b.c; }
  bool is_unit(const Elem& a) const { return a.c.size() == 1; }
  bool is_negative(const Elem&) const { return false; }
  int degree(const Elem& a) const { return fp::deg(a.c); }

  /// Canonical order: by degree, then coefficients from the top down.
  int compare(const Elem& a, const Elem& b) const {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
    for (std::size_t i = a.c.size(); i-- > 0;) {
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    }
    return 0;
  }

  std::string to_string(const Elem& a) const {
    if (a.c.empty()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
      if (a.c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      const bool show_coeff = a.c[i] != 1 || i == 0;
      if (show_coeff) out += std::to_string(a.c[i]);
      if (i > 0) {
        if (show_coeff) out += "*";
        out += "u";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }
  std::string coeff_string(const Elem& a) const {
    std::size_t nonzero = 0;
    for (auto c : a.c) nonzero += c != 0;
    return nonzero > 1 ? "(" + to_string(a) + ")" : to_string(a);
  }

  Elem normalize(const Elem& a) const { return {fp::monic(a.c, q)}; }
  Elem unit_part(const Elem& a) const { return a.c.empty() ? one() : Elem{{a.c.back()}}; }
  Elem unit_inverse(const Elem& u) const { return {{fp::inv(u.c.at(0), q)}}; }
  Elem gcd(const Elem& a, const Elem& b) const { return {fp::gcd(a.c, b.c, q)}; }
  bool divides(const Elem& d, const Elem& a) const {
    if (d.c.empty()) return a.c.empty();
    return fp::rem(a.c, d.c, q).empty();
  }
  Elem exact_quo(const Elem& a, const Elem& d) const {
    if (d.c.empty()) throw ZeroDivisor("division by zero in F_q[u]");
    return {fp::divmod(a.c, d.c, q).first};
  }
  Elem rem(const Elem& a, const Elem& m) const { return {fp::rem(a.c, m.c, q)}; }
  Xgcd<FqPolyRing> xgcd(const Elem& a, const Elem& b) const {
    auto r = fp::xgcd(a.c, b.c, q);
    return {{r.g}, {r.s}, {r.t}};
  }

  Integer norm(const Elem& p) const {
    return pow_int(Integer(static_cast<unsigned long>(q)), static_cast<unsigned long>(std::max(0, degree(p))));
  }
  bool is_prime(const Elem& p) const { return fp::is_irreducible(p.c, q); }

  /// All polynomials of degree < deg p, in canonical order.
  std::vector<Elem> residues(const Elem& p) const {
    const int d = degree(p);
    std::vector<Elem> out;
    if (d < 1) return {zero()};
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) out.push_back(decode(code, d));
    return out;
  }

  /// Monic irreducibles of norm q^d <= bound, ordered by degree then canonical order.
  std::vector<Elem> primes_up_to_norm(const Integer& bound) const {
    std::vector<Elem> out;
    Integer norm = q;
    for (int d = 1; norm <= bound; ++d, norm *= q) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= q;
      for (std::uint64_t code = 0; code < count; ++code) {
        Elem f = decode(code, d);
        f.c.resize(d + 1, 0);
        f.c[d] = 1;
        if (fp::is_irreducible(f.c, q)) out.push_back(std::move(f));
      }
    }
    return out;
  }

  std::vector<Elem> prime_divisors(const Elem& a, std::uint64_t = 0) const {
    if (a.c.empty()) throw InvalidArgument("prime divisors of 0");
    std::vector<Elem> out;
    for (auto& [f, e] : fp::factor(a.c, q)) out.push_back({f});
    std::sort(out.begin(), out.end(), [&](const Elem& x, const Elem& y) { return compare(x, y) < 0; });
    return out;
  }
  /// n-th element in canonical order: the base-q digits of n are the coefficients.
  Elem enumerate(std::uint64_t n) const {
    Elem e;
    while (n) {
      e.c.push_back(n % q);
      n /= q;
    }
    return e;
  }
  unsigned valuation(const Elem& a, const Elem& p) const {
    unsigned v = 0;
    Elem x = a;
    while (!x.c.empty() && divides(p, x)) {
      x = exact_quo(x, p);
      ++v;
    }
    return v;
  }

  bool operator==(const FqPolyRing&) const = default;

 private:
  Elem decode(std::uint64_t code, int len) const {
    Elem e;
    for (int i = 0; i < len; ++i) {
      e.c.push_back(code % q);
      code /= q;
    }
    fp::trim(e.c);
    return e;
  }
};

// ---------------------------------------------------------------------------
// Fraction field of a Euclidean ring

template <GcdRing Base>
struct FractionField {
  struct Elem {
    typename Base::Elem num, den;
  };

  Base base;

  std::string tag() const { return "frac(" + base.tag() + ")"; }
  Elem make(const typename Base::Elem& n, const typename Base::Elem& d) const {
    if (base.is_zero(d)) throw ZeroDivisor("zero denominator");
    if (base.is_zero(n)) return {base.zero(), base.one()};
    const auto g = base.gcd(n, d);
    auto nn = base.exact_quo(n, g), dd = base.exact_quo(d, g);
    const auto u = base.unit_inverse(base.unit_part(dd));
    return {base.mul(nn, u), base.mul(dd, u)};
  }
  Elem embed(const typename Base::Elem& a) const { return {a, base.one()}; }
  Elem zero() const { return {base.zero(), base.one()}; }
  Elem one() const { return {base.one(), base.one()}; }
  Elem from_int(const Integer& n) const { return embed(base.from_int(n)); }
  Elem add(const Elem& a, const Elem& b) const {
    return make(base.add(base.mul(a.num, b.den), base.mul(b.num, a.den)), base.mul(a.den, b.den));
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const { return make(base.mul(a.num, b.num), base.mul(a.den, b.den)); }
  Elem neg(const Elem& a) const { return {base.neg(a.num), a.den}; }
  Elem inv(const Elem& a) const {
    if (base.is_zero(a.num)) throw ZeroDivisor("inverse of zero");
    return make(a.den, a.num);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return base.is_zero(a.num); }
  bool equal(const Elem& a, const Elem& b) const { return base.equal(a.num, b.num) && base.equal(a.den, b.den); }
  int compare(const Elem& a, const Elem& b) const {
    const int c = base.compare(a.num, b.num);
    return c != 0 ? c : base.compare(a.den, b.den);
  }
  std::string to_string(const Elem& a) const {
    if (base.equal(a.den, base.one())) return base.to_string(a.num);
    return base.coeff_string(a.num) + "/" + base.coeff_string(a.den);
  }
  std::string coeff_string(const Elem& a) const { return to_string(a); }
  bool is_negative(const Elem&) const { return false; }
};

using RationalField = FractionField<IntegerRing>;

// ---------------------------------------------------------------------------
// Operations shared by the search rings

/// Certified primes of norm <= bound, normalized, ascending by norm then canonical order.
template <SearchRing R>
std::vector<typename R::Elem> enumerate_primes_up_to_norm(const R& ring, const Integer& bound) {
  if (bound < 1) throw InvalidArgument("norm bound must be >= 1");
  return ring.primes_up_to_norm(bound);
}

/// Complete duplicate-free residue system modulo the prime p.
template <SearchRing R>
std::vector<typename R::Elem> enumerate_residues(const R& ring, const typename R::Elem& p) {
  if (!ring.is_prime(p)) throw NotPrime(ring.to_string(p) + " is not prime", ring.to_string(p));
  return ring.residues(p);
}

template <SearchRing R>
struct RingCongruence {
  typename R::Elem residue;
  typename R::Elem modulus;
};

/// Simultaneous solution of x = a_i mod m_i for pairwise coprime m_i,
/// reduced to the canonical representative modulo the product.
template <SearchRing R>
typename R::Elem ring_crt(const R& ring, const std::vector<RingCongruence<R>>& congruences) {
  auto x = ring.zero();
  auto big_m = ring.one();
  for (const auto& c : congruences) {
    if (ring.is_zero(c.modulus)) throw InvalidArgument("zero modulus in CRT");
    const auto m = ring.normalize(c.modulus);
    const auto bez = ring.xgcd(ring.rem(big_m, m), m);
    if (!ring.is_unit(bez.g) && !ring.is_unit(m)) {
      throw NotCoprimeModuli("moduli not coprime at " + ring.to_string(m), ring.to_string(m));
    }
    if (ring.is_unit(m)) continue;
    // s * M = g (mod m) with g a unit
    const auto inv = ring.mul(bez.s, ring.unit_inverse(bez.g));
    const auto k = ring.rem(ring.mul(ring.sub(c.residue, x), inv), m);
    x = ring.add(x, ring.mul(big_m, k));
    big_m = ring.mul(big_m, m);
    x = ring.rem(x, big_m);
  }
  return x;
}

}  // namespace hs
