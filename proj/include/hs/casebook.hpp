#pragma once

// Exact re-verification of worked examples and counterexamples: finite local
// rings and two-valued polynomials, the Z[sqrt 5] failure of the coprime
// specialization property, a fixed-divisor gallery, the density example and
// gcd instability over Z[x,y,z].

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hs/gcd.hpp"
#include "hs/parse.hpp"
#include "hs/schinzel.hpp"
#include "hs/zsqrt5.hpp"

namespace hs {

struct EvidenceItem {
  std::string label;
  std::string detail;
  bool pass = false;
};

struct CaseReport {
  std::string name;
  std::string anchor;
  std::vector<EvidenceItem> evidence;

  bool pass() const {
    if (evidence.empty()) return false;
    for (const auto& e : evidence) {
      if (!e.pass) return false;
    }
    return true;
  }
  void add(std::string label, std::string detail, bool ok) {
    evidence.push_back({std::move(label), std::move(detail), ok});
  }
};

// ---------------------------------------------------------------------------
// Finite local rings

/// A finite ring given by a full set of coset representatives and its tables.
struct FiniteLocalRing {
  std::string descriptor;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> add_table, mul_table;
  std::size_t zero = 0, one = 0;
  std::vector<std::size_t> units, nilpotents;

  std::size_t size() const { return names.size(); }
  std::size_t add(std::size_t a, std::size_t b) const { return add_table[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_table[a][b]; }
  std::size_t neg(std::size_t a) const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (add(a, x) == zero) return x;
    }
    throw InternalError("no additive inverse");
  }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  std::size_t power(std::size_t r, std::uint64_t n) const {
    std::size_t acc = one;
    for (std::uint64_t i = 0; i < n; ++i) acc = mul(acc, r);
    return acc;
  }
  bool is_unit(std::size_t r) const { return std::find(units.begin(), units.end(), r) != units.end(); }
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (names[i] == name) return i;
    }
    throw InvalidArgument("no element named '" + name + "' in " + descriptor, name);
  }
};

namespace detail {

/// Builds the tables from representatives and an ideal-membership test; checks
/// that every sample falls in exactly one class and that each element is a
/// unit or nilpotent.
template <class T, class InIdeal>
FiniteLocalRing build_local_ring(std::string descriptor, const std::vector<T>& reps, std::vector<std::string> names,
                                 InIdeal&& in_ideal, const std::vector<T>& samples) {
  const std::size_t n = reps.size();
  auto classify = [&](const T& x) {
    std::size_t found = n, count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_ideal(x - reps[i])) {
        found = i;
        ++count;
      }
    }
    if (count != 1) {
      throw InvalidArgument(descriptor + ": representatives are " + (count == 0 ? "not exhaustive" : "not incongruent"));
    }
    return found;
  };
  for (const auto& r : reps) classify(r);
  for (const auto& s : samples) classify(s);

  FiniteLocalRing ring;
  ring.descriptor = std::move(descriptor);
  ring.names = std::move(names);
  ring.add_table.assign(n, std::vector<std::size_t>(n));
  ring.mul_table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ring.add_table[i][j] = classify(reps[i] + reps[j]);
      ring.mul_table[i][j] = classify(reps[i] * reps[j]);
    }
  }
  ring.zero = classify(reps[0] - reps[0]);
  ring.one = classify(reps[0] - reps[0] + T{1});
  for (std::size_t r = 0; r < n; ++r) {
    bool unit = false, nil = false;
    std::size_t acc = r;
    for (std::size_t k = 1; k <= n && !unit && !nil; ++k) {
      if (acc == ring.one) unit = true;
      if (acc == ring.zero) nil = true;
      acc = ring.mul(acc, r);
    }
    if (unit) ring.units.push_back(r);
    else if (nil) ring.nilpotents.push_back(r);
    else throw InvalidArgument(ring.descriptor + " is not local: " + ring.names[r] + " is neither unit nor nilpotent");
  }
  return ring;
}

}  // namespace detail

/// Z/p^e with representatives 0..p^e-1.
inline FiniteLocalRing zmod_local_ring(std::uint64_t p, unsigned e) {
  if (!is_prime(Integer(static_cast<unsigned long>(p)))) throw NotPrime(std::to_string(p) + " is not prime");
  if (e == 0) throw InvalidArgument("exponent must be positive");
  const Integer q = pow_int(Integer(static_cast<unsigned long>(p)), e);
  if (q > 1024) throw InvalidArgument("p^e too large for table construction");
  std::vector<Integer> reps;
  std::vector<std::string> names;
  for (Integer r = 0; r < q; ++r) {
    reps.push_back(r);
    names.push_back(r.get_str());
  }
  std::vector<Integer> samples;
  for (Integer r = -q; r < 2 * q; ++r) samples.push_back(r);
  return detail::build_local_ring("Z/" + q.get_str(), reps, names, [&](const Integer& x) { return divides_int(q, x); },
                                  samples);
}

/// Membership in J = 2 Z[sqrt5] intersected with sigma Z[sqrt5].
inline bool zsqrt5_in_J(const Zsqrt5Elem& x) {
  return z5_divides(Zsqrt5Elem{2, 0}, x) && z5_divides(Zsqrt5Elem::sigma(), x);
}

/// Z[sqrt5]/J with representatives {0,1,2,3,sigma,sigma+1,sigma+2,sigma+3}.
inline FiniteLocalRing zsqrt5_local_ring() {
  std::vector<Zsqrt5Elem> reps;
  std::vector<std::string> names;
  for (int s = 0; s < 2; ++s) {
    for (int c = 0; c < 4; ++c) {
      reps.push_back(Zsqrt5Elem{c, 0} + (s ? Zsqrt5Elem::sigma() : Zsqrt5Elem{}));
      names.push_back(s == 0 ? std::to_string(c) : (c == 0 ? "sigma" : "sigma+" + std::to_string(c)));
    }
  }
  std::vector<Zsqrt5Elem> samples;
  for (int a = -4; a < 8; ++a) {
    for (int b = -4; b < 8; ++b) samples.push_back(Zsqrt5Elem{a, b});
  }
  return detail::build_local_ring("Z[sqrt5]/J", reps, names, zsqrt5_in_J, samples);
}

struct TwoValuedPolynomial {
  std::uint64_t exponent = 0;
  std::size_t lead = 0;      // a - b
  std::size_t constant = 0;  // b
  std::string text;
};

/// f(t) = (a-b) t^n + b, taking the value a exactly on the units and b elsewhere,
/// with the least n that works; checked at every element.
inline TwoValuedPolynomial two_valued_polynomial(const FiniteLocalRing& ring, std::size_t a, std::size_t b) {
  if (a >= ring.size() || b >= ring.size()) throw InvalidArgument("element index out of range");
  if (a == b) throw InvalidArgument("the two values must differ");
  const std::uint64_t limit = static_cast<std::uint64_t>(ring.size()) * ring.size();
  std::uint64_t n = 0;
  for (std::uint64_t k = 1; k <= limit && n == 0; ++k) {
    bool ok = true;
    for (std::size_t r = 0; r < ring.size() && ok; ++r) ok = ring.power(r, k) == (ring.is_unit(r) ? ring.one : ring.zero);
    if (ok) n = k;
  }
  if (n == 0) throw NoExponentFound("no exponent up to " + std::to_string(limit) + " in " + ring.descriptor);
  TwoValuedPolynomial f{n, ring.sub(a, b), b, {}};
  for (std::size_t r = 0; r < ring.size(); ++r) {
    const std::size_t v = ring.add(ring.mul(f.lead, ring.power(r, n)), b);
    if (v != (ring.is_unit(r) ? a : b)) throw NoExponentFound("two-valued check failed at " + ring.names[r]);
  }
  const std::string& lead = ring.names[f.lead];
  std::string mono = n == 1 ? "t" : "t^" + std::to_string(n);
  if (f.lead != ring.one) {
    mono = (lead.find('+') != std::string::npos ? "(" + lead + ")" : lead) + "*" + mono;
  }
  f.text = b == ring.zero ? mono : mono + " + " + ring.names[b];
  return f;
}

// ---------------------------------------------------------------------------
// Z[sqrt 5]

namespace detail {

/// No element of Z[sqrt5] has norm +-2: a^2 - 5b^2 mod 5 is a square mod 5.
inline bool no_element_of_norm_pm2() {
  for (int a = 0; a < 5; ++a) {
    const int sq = (a * a) % 5;
    if (sq == 2 || sq == 3) return false;
  }
  return true;
}

inline Zsqrt5Elem z5_poly_eval(const std::vector<Zsqrt5Elem>& coeffs, const Zsqrt5Elem& x) {
  Zsqrt5Elem acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace detail

inline CaseReport verify_zsqrt5_failure() {
  CaseReport rep{"zsqrt5", "the coprime specialization property fails over Z[sqrt5]", {}};
  const FiniteLocalRing ring = zsqrt5_local_ring();
  rep.add("local ring", "Z[sqrt5]/J has " + std::to_string(ring.size()) + " classes, " +
                            std::to_string(ring.units.size()) + " units, " + std::to_string(ring.nilpotents.size()) +
                            " nilpotents",
          ring.size() == 8 && ring.units.size() == 4 && ring.nilpotents.size() == 4);
  const auto tv = two_valued_polynomial(ring, ring.index_of("1"), ring.index_of("0"));
  rep.add("two-valued polynomial", "f(t) = " + tv.text + ": 1 on units, 0 elsewhere", tv.exponent == 2);

  const Zsqrt5Elem two{2, 0}, sigma = Zsqrt5Elem::sigma(), one{1, 0};
  const std::vector<Zsqrt5Elem> p1{{0, 0}, {0, 0}, two};   // 2 t^2
  const std::vector<Zsqrt5Elem> p2{sigma, {0, 0}, -sigma};  // sigma (1 - t^2)
  const IntegerRing Z;
  const Integer res = resultant_dense(Z, DensePoly<IntegerRing>{{0, 0, 1}}, DensePoly<IntegerRing>{{1, 0, -1}});
  rep.add("no common root", "P1 = 2*t^2, P2 = sigma*(1 - t^2); Res(t^2, 1 - t^2) = " + res.get_str(), res != 0);

  const Zsqrt5Elem v1 = detail::z5_poly_eval(p1, one);
  const Zsqrt5Elem v2 = detail::z5_poly_eval(p2, Zsqrt5Elem{});
  rep.add("values", "P1(1) = " + v1.to_string() + ", P2(0) = " + v2.to_string(), v1 == two && v2 == sigma);
  const bool non_assoc = !z5_divides(two, sigma) && !z5_divides(sigma, two);
  rep.add("non-associate", "2 does not divide sigma and sigma does not divide 2", non_assoc);
  rep.add("irreducible", "N(2) = " + two.norm().get_str() + ", N(sigma) = " + sigma.norm().get_str() +
                             ", no element has norm +-2 (squares mod 5 are 0, 1, 4)",
          abs_int(two.norm()) == 4 && abs_int(sigma.norm()) == 4 && detail::no_element_of_norm_pm2());

  for (std::size_t c = 0; c < ring.size(); ++c) {
    const Zsqrt5Elem x = (c < 4) ? Zsqrt5Elem{static_cast<long>(c), 0} : sigma + Zsqrt5Elem{static_cast<long>(c - 4), 0};
    const Zsqrt5Elem a = detail::z5_poly_eval(p1, x), b = detail::z5_poly_eval(p2, x);
    std::string who;
    if (z5_divides(two, a) && z5_divides(two, b)) who = "2";
    else if (z5_divides(sigma, a) && z5_divides(sigma, b)) who = "sigma";
    rep.add("c = " + ring.names[c],
            "P1 = " + a.to_string() + ", P2 = " + b.to_string() + "; " +
                (who.empty() ? std::string("no common divisor among 2, sigma") : who + " divides both"),
            !who.empty());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fixed divisors, density, gcd instability

namespace detail {

template <GcdRing R>
std::string prime_set(const R& ring, const std::vector<typename R::Elem>& primes) {
  std::vector<std::string> names;
  for (const auto& p : primes) names.push_back(ring.to_string(p));
  return join_strings(names);
}

}  // namespace detail

inline CaseReport verify_fixed_divisor_gallery() {
  CaseReport rep{"fixed-gallery", "p divides m^p - m for every m, so p is a fixed divisor", {}};
  const IntegerRing Z;
  const VarSet vars({"t"}, {"y"});
  for (int p : {2, 3, 5}) {
    const std::string ps = std::to_string(p);
    const std::string text = "(t^" + ps + " - t)*y + (t^" + ps + " - t + " + ps + ")";
    const auto r = fixed_prime_divisors(parse_poly(text, vars, Z));
    const auto primes = r.fixed_prime_list();
    rep.add("p = " + ps, text + ": fixed primes " + detail::prime_set(Z, primes) + ", bound " + r.search_bound.get_str(),
            primes.size() == 1 && primes.front() == p);
  }
  for (std::uint64_t q : {2u, 3u}) {
    const FqPolyRing F(q);
    const std::string qs = std::to_string(q);
    const std::string text = "(t^" + qs + " - t + u)*y + (t^" + qs + " - t)^2 + u";
    const auto r = fixed_prime_divisors(parse_poly(text, vars, F));
    const auto primes = r.fixed_prime_list();
    rep.add("q = " + qs, text + " over F_" + qs + "[u]: fixed primes " + detail::prime_set(F, primes),
            primes.size() == 1 && F.equal(primes.front(), F.u()));
  }
  return rep;
}

inline constexpr unsigned kMaxDensityH = 8;

/// Product of the first h primes.
inline Integer primorial_first(unsigned h) {
  Integer pi = 1;
  unsigned seen = 0;
  for (Integer p = 2; seen < h; ++p) {
    if (is_prime(p)) {
      pi *= p;
      ++seen;
    }
  }
  return pi;
}

inline CaseReport verify_density_example(unsigned h) {
  if (h < 2 || h > kMaxDensityH) {
    throw InvalidArgument("h must lie in [2, " + std::to_string(kMaxDensityH) + "]", std::to_string(h));
  }
  CaseReport rep{"density", "values of t and t + Pi are coprime exactly on integers prime to Pi", {}};
  const Integer pi = primorial_first(h);
  const std::uint64_t n = pi.get_ui();
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < n; ++m) {
    if (std::gcd(m, m + n) == 1) ++count;
  }
  const Integer phi = euler_phi(pi);
  rep.add("count", "h = " + std::to_string(h) + ", Pi = " + pi.get_str() + ": " + std::to_string(count) + " of " +
                       pi.get_str() + " residues give coprime values, phi(Pi) = " + phi.get_str(),
          Integer(static_cast<unsigned long>(count)) == phi);
  Rational closed = pi;
  for (const auto& [p, e] : factor_integer(pi).factors) closed *= Rational(p - 1, p);
  closed.canonicalize();
  rep.add("closed form", "Pi * prod(1 - 1/p) = " + closed.get_str(), closed == Rational(phi));
  Rational density(phi, pi);
  density.canonicalize();
  rep.add("density", std::to_string(count) + "/" + pi.get_str() + " = " + density.get_str(),
          Integer(static_cast<unsigned long>(count)) == phi);
  return rep;
}

inline const VarSet& xyz_vars() {
  static const VarSet v({}, {"x", "y", "z"});
  return v;
}

inline std::vector<MultiPoly<IntegerRing>> default_instability_samples() {
  std::vector<MultiPoly<IntegerRing>> out;
  for (const char* s : {"0", "1", "x", "y", "z", "x*y", "x+1", "x*y*z"}) {
    out.push_back(parse_poly(s, xyz_vars(), IntegerRing{}));
  }
  return out;
}

/// Values of the two-polynomial family at t = m for m in Z[x,y,z].
inline std::pair<MultiPoly<IntegerRing>, MultiPoly<IntegerRing>> instability_values(const MultiPoly<IntegerRing>& m) {
  const IntegerRing Z;
  const VarSet& v = xyz_vars();
  const auto x = MultiPoly<IntegerRing>::variable(Z, v, "x");
  const auto y = MultiPoly<IntegerRing>::variable(Z, v, "y");
  const auto z = MultiPoly<IntegerRing>::variable(Z, v, "z");
  const auto one = MultiPoly<IntegerRing>::constant(Z, v, 1);
  const auto m1 = (m - one) * (m - one);
  const auto p1 = (x * x * y * y * z + m * m) * (x * x * y * z * z + m1);
  const auto p2 = (x * y * y * z * z + m * m) * (x * x * y * y * z * z + m1);
  return {p1, p2};
}

inline CaseReport verify_gcd_instability(const std::vector<MultiPoly<IntegerRing>>& samples) {
  const IntegerRing Z;
  if (samples.empty()) throw InvalidArgument("no samples given");
  const auto zero = MultiPoly<IntegerRing>::constant(Z, xyz_vars(), 0);
  const auto one = MultiPoly<IntegerRing>::constant(Z, xyz_vars(), 1);
  auto has = [&](const MultiPoly<IntegerRing>& s) {
    return std::any_of(samples.begin(), samples.end(), [&](const auto& x) { return x == s; });
  };
  if (!has(zero) || !has(one)) throw InvalidArgument("samples must include 0 and 1");
  for (const auto& s : samples) {
    if (!(s.vars() == xyz_vars())) throw InvalidArgument("samples must be polynomials in x, y, z");
  }
  CaseReport rep{"gcd-instability", "gcds of values at t = m, m in Z[x,y,z], never equal xyz (sampled evidence)", {}};
  auto value_gcd = [](const MultiPoly<IntegerRing>& m) {
    const auto [a, b] = instability_values(m);
    return normalize_poly(gcd_poly(a, b));
  };
  const auto d0 = value_gcd(zero);
  const auto d1 = value_gcd(one);
  const auto x = parse_poly("x*y^2*z", xyz_vars(), Z), y = parse_poly("x^2*y*z^2", xyz_vars(), Z);
  const auto xyz = parse_poly("x*y*z", xyz_vars(), Z);
  rep.add("m = 0", "gcd = " + d0.to_string(), d0 == x);
  rep.add("m = 1", "gcd = " + d1.to_string(), d1 == y);
  const auto d = normalize_poly(gcd_poly(d0, d1));
  rep.add("gcd(d0, d1)", d.to_string(), d == xyz);
  for (const auto& m : samples) {
    if (m == zero || m == one) continue;
    const auto g = value_gcd(m);
    rep.add("m = " + m.to_string(), "gcd = " + g.to_string() + " (evidence, sampled)", !(g == xyz));
  }
  return rep;
}

}  // namespace hs
