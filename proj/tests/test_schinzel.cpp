#include <gtest/gtest.h>

#include <random>

#include "hs/parse.hpp"
#include "hs/schinzel.hpp"
#include "oracles.hpp"

using namespace hs;

namespace {

using ZP = MultiPoly<IntegerRing>;
using ZFamily = Family<IntegerRing>;

const IntegerRing Z;

ZP pz(const std::string& s, const VarSet& v) { return parse_poly(s, v, Z); }

ZFamily fam(std::initializer_list<const char*> texts, const VarSet& v) {
  ZFamily f;
  for (const char* s : texts) f.push_back(pz(s, v));
  return f;
}

Integer value_gcd(const ZFamily& f, const std::vector<Integer>& pt) {
  Integer g = 0;
  for (const auto& p : f) g = oracle::gcd(g, p.eval(pt));
  return g;
}

/// Smallest prime <= bound dividing every value of the family at every residue, or 0.
long naive_av_prime(const std::vector<oracle::Poly>& members, long bound) {
  for (auto p : oracle::primes_trial(static_cast<std::uint64_t>(bound))) {
    const long q = static_cast<long>(p);
    bool all = true;
    for (long r = 0; r < q && all; ++r) {
      for (const auto& m : members) all = all && oracle::mod(oracle::eval(m, r), q) == 0;
    }
    if (all) return q;
  }
  return 0;
}

std::vector<std::string> prime_strings(const FixedDivisorReport<IntegerRing>& r) {
  std::vector<std::string> out;
  for (const auto& f : r.fixed_primes) out.push_back(f.prime.get_str());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bezout parameter

TEST(ComputeDelta, Examples) {
  const VarSet v({"t"}, {});
  {
    const auto c = compute_delta(fam({"t", "t + 2"}, v));
    EXPECT_EQ(c.delta, 2);
    EXPECT_EQ(c.witnesses[0], pz("-1", v));
    EXPECT_EQ(c.witnesses[1], pz("1", v));
  }
  {
    const auto c = compute_delta(fam({"t", "t + 1"}, v));
    EXPECT_EQ(c.delta, 1);
    EXPECT_EQ(c.witnesses[0], pz("-1", v));
    EXPECT_EQ(c.witnesses[1], pz("1", v));
  }
  {
    const auto f = fam({"t^2 + 1", "t^2 + t"}, v);
    const auto c = compute_delta(f);
    EXPECT_EQ(c.delta, 2);
    EXPECT_EQ(c.witnesses[0], pz("t + 2", v));
    EXPECT_EQ(c.witnesses[1], pz("-(t + 1)", v));
    EXPECT_EQ(oracle::sylvester_resultant({1, 0, 1}, {0, 1, 1}), 2);
  }
}

TEST(ComputeDelta, Errors) {
  const VarSet v({"t"}, {});
  EXPECT_THROW(compute_delta(fam({"t"}, v)), FewerThanTwoPolys);
  EXPECT_THROW(compute_delta(fam({"t", "0"}, v)), ZeroPolyInFamily);
  EXPECT_THROW(compute_delta(fam({"t^2 - 1", "t - 1"}, v)), NotCoprimeFamily);
}

TEST(ComputeDelta, IdentityAndDivisibilityOnRandomFamilies) {
  std::mt19937_64 rng(101);
  const VarSet v({"t"}, {});
  int checked = 0;
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<oracle::Poly> raw;
    for (std::size_t j = 0; j < n; ++j) raw.push_back(oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 30));
    if (oracle::sylvester_resultant(raw[0], raw[1]) == 0) continue;
    ZFamily f;
    for (const auto& r : raw) f.push_back(pz(oracle::poly_text(r, "t"), v));
    const auto c = compute_delta(f);
    ZP sum(Z, v);
    for (std::size_t j = 0; j < n; ++j) sum += c.witnesses[j] * f[j];
    EXPECT_EQ(sum, ZP::constant(Z, v, c.delta));
    EXPECT_GT(c.delta, 0);
    for (long m = -10; m <= 10; ++m) {
      EXPECT_EQ(oracle::mod(c.delta, value_gcd(f, {Integer(m)})), 0);
      // periodicity
      for (long z : {-2L, 1L, 3L}) {
        EXPECT_EQ(value_gcd(f, {Integer(m)}), value_gcd(f, {Integer(m) + z * c.delta}));
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(ComputeDelta, OverFq) {
  const FqPolyRing F(3);
  const VarSet v({"t"}, {});
  Family<FqPolyRing> f{parse_poly("t", v, F), parse_poly("t + u", v, F)};
  const auto c = compute_delta(f);
  EXPECT_EQ(F.to_string(c.delta), "u");
  MultiPoly<FqPolyRing> sum(F, v);
  for (std::size_t j = 0; j < 2; ++j) sum += c.witnesses[j] * f[j];
  EXPECT_EQ(sum, MultiPoly<FqPolyRing>::constant(F, v, c.delta));
}

// ---------------------------------------------------------------------------
// Fixed prime divisors

TEST(FixedDivisors, Examples) {
  const VarSet v({"t"}, {"y"});
  EXPECT_EQ(prime_strings(fixed_prime_divisors(pz("(t^2 - t)*y + (t^2 - t + 2)", v))), std::vector<std::string>{"2"});
  EXPECT_TRUE(fixed_prime_divisors(pz("t*y + 1", v)).fixed_primes.empty());
  const auto r = fixed_prime_divisors(pz("(t^3 - t)*y + 6", v));
  EXPECT_EQ(prime_strings(r), (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(r.search_bound, 3);

  const FqPolyRing F(2);
  const auto rf = fixed_prime_divisors(parse_poly("(t^2 - t + u)*y + (t^2 - t)^2 + u", v, F));
  ASSERT_EQ(rf.fixed_primes.size(), 1u);
  EXPECT_EQ(F.to_string(rf.fixed_primes[0].prime), "u");
  EXPECT_THROW(fixed_prime_divisors(ZP(Z, v)), ZeroPolynomial);
}

TEST(FixedDivisors, ContentReportedSeparately) {
  const VarSet v({"t"}, {"y"});
  const auto r = fixed_prime_divisors(pz("6*t*y + 12", v));
  EXPECT_EQ(r.content, 6);
  EXPECT_EQ(r.content_prime_divisors, (std::vector<Integer>{2, 3}));
  EXPECT_TRUE(r.fixed_primes.empty());
  EXPECT_THROW(require_no_fixed_divisor(pz("6*t*y + 12", v)), FixedDivisorPresent);
  EXPECT_NO_THROW(require_no_fixed_divisor(pz("t*y + 1", v)));
}

TEST(FixedDivisors, ClearedPrimesCarryWitnesses) {
  const VarSet v({"t1", "t2"}, {"y"});
  const auto p = pz("t1^2*t2*y + t1*t2^3 + 1", v);
  const auto r = fixed_prime_divisors(p);
  for (const auto& c : r.cleared) {
    auto val = p.eval_partial(std::vector<std::pair<std::size_t, Integer>>{{0, c.witness[0]}, {1, c.witness[1]}});
    bool nonzero = false;
    for (const auto& [e, x] : val.terms()) nonzero = nonzero || oracle::mod(x, c.prime) != 0;
    EXPECT_TRUE(nonzero);
  }
}

TEST(FixedDivisors, AgreesWithNaiveScanUpTo12) {
  std::mt19937_64 rng(55);
  const VarSet v({"t"}, {"y"});
  int planted = 0;
  for (int it = 0; it < 80; ++it) {
    // P = A(t)*y + B(t), optionally with m^p - m planted in both
    auto a = oracle::random_poly(rng, static_cast<int>(rng() % 4), 12);
    auto b = oracle::random_poly(rng, static_cast<int>(rng() % 4), 12);
    if (rng() % 3 == 0) {
      const long q = (rng() % 2) ? 2 : 3;
      oracle::Poly fermat(static_cast<std::size_t>(q) + 1, 0);
      fermat[1] = -1;
      fermat[static_cast<std::size_t>(q)] = 1;
      a = oracle::mul(a, fermat);
      b = oracle::mul(b, fermat);
      for (auto& x : b) x += 0;
      ++planted;
    }
    Integer c = 0;
    for (const auto& x : a) c = oracle::gcd(c, x);
    for (const auto& x : b) c = oracle::gcd(c, x);
    if (c != 1) continue;
    const auto p = pz("(" + oracle::poly_text(a, "t") + ")*y + (" + oracle::poly_text(b, "t") + ")", v);
    const auto r = fixed_prime_divisors(p);
    std::vector<std::string> naive;
    for (auto q : oracle::primes_trial(12)) {
      bool all = true;
      for (std::uint64_t m = 0; m < q && all; ++m) {
        all = oracle::mod(oracle::eval(a, m), q) == 0 && oracle::mod(oracle::eval(b, m), q) == 0;
      }
      if (all) naive.push_back(std::to_string(q));
    }
    EXPECT_EQ(prime_strings(r), naive) << p.to_string();
    for (const auto& s : naive) EXPECT_LE(Integer(s), r.search_bound);
  }
  EXPECT_GT(planted, 10);
}

// ---------------------------------------------------------------------------
// Univariate coprime search

TEST(CopschUnivar, Examples) {
  const VarSet v({"t"}, {});
  {
    const auto r = copsch_search_univar<IntegerRing>({fam({"t", "t + 2"}, v)});
    EXPECT_EQ(r.cert.alpha, 1);
    EXPECT_EQ(r.cert.omega, 2);
    EXPECT_EQ(r.m, 1);
  }
  {
    const auto r = copsch_search_univar<IntegerRing>({fam({"t", "t + 1"}, v)});
    EXPECT_EQ(r.cert.alpha, 0);
    EXPECT_EQ(r.cert.omega, 1);
  }
  try {
    copsch_search_univar<IntegerRing>({fam({"t^2 + t", "t^2 + t + 2"}, v)});
    FAIL();
  } catch (const AVViolation& e) {
    EXPECT_EQ(e.witness(), "2");
  }
  try {
    copsch_search_univar<IntegerRing>({fam({"t", "t + 2"}, v), fam({"t + 1", "t + 3"}, v)});
    FAIL();
  } catch (const AVViolation& e) {
    EXPECT_EQ(e.witness(), "2");
  }
}

TEST(CopschUnivar, GuardSkipsZeros) {
  const VarSet v({"t"}, {});
  const auto r = copsch_search_univar<IntegerRing>({fam({"t", "t + 2"}, v)}, pz("t - 1", v));
  EXPECT_NE(r.m, 1);
  EXPECT_EQ(oracle::mod(r.m, 2), 1);
  EXPECT_THROW(copsch_search_univar<IntegerRing>({fam({"t", "t + 2"}, v)}, pz("0", v)), GuardUnsatisfiable);
}

TEST(CopschUnivar, RandomFamiliesMatchNaiveAvCheck) {
  std::mt19937_64 rng(7);
  const VarSet v({"t"}, {});
  int positive = 0, negative = 0;
  for (int it = 0; it < 120; ++it) {
    std::vector<oracle::Poly> raw;
    const std::size_t n = 2 + rng() % 2;
    const long scale = (rng() % 5 == 0) ? 3 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      auto p = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 8);
      for (auto& x : p) x *= scale;
      raw.push_back(p);
    }
    if (oracle::sylvester_resultant(raw[0], raw[1]) == 0) continue;
    ZFamily f;
    for (const auto& r : raw) f.push_back(pz(oracle::poly_text(r, "t"), v));
    const long bad = naive_av_prime(raw, 50);
    if (bad) {
      try {
        copsch_search_univar<IntegerRing>({f});
        ADD_FAILURE() << "expected a violation at " << bad;
      } catch (const AVViolation& e) {
        EXPECT_EQ(e.witness(), std::to_string(bad));
      }
      ++negative;
      continue;
    }
    const auto r = copsch_search_univar<IntegerRing>({f});
    EXPECT_EQ(value_gcd(f, {r.m}), 1);
    const auto rep = certify_progression(r.cert, {f}, 25);
    EXPECT_TRUE(rep.passed);
    EXPECT_EQ(rep.checked, 25u);
    // an independent scan of the progression
    for (long l = -12; l <= 12; ++l) EXPECT_EQ(value_gcd(f, {r.cert.alpha + l * r.cert.omega}), 1);
    ++positive;
  }
  EXPECT_GT(positive, 40);
  EXPECT_GT(negative, 5);
}

TEST(CopschUnivar, OverFq) {
  const FqPolyRing F(2);
  const VarSet v({"t"}, {});
  const Family<FqPolyRing> f{parse_poly("t", v, F), parse_poly("t + u", v, F)};
  const auto r = copsch_search_univar<FqPolyRing>({f});
  const auto rep = certify_progression(r.cert, {f}, 10);
  EXPECT_TRUE(rep.passed);
  const auto g = F.gcd(f[0].eval({r.m}), f[1].eval({r.m}));
  EXPECT_TRUE(F.is_unit(g));
}

// ---------------------------------------------------------------------------
// Progression certificates

TEST(CertifyProgression, Examples) {
  const VarSet v({"t"}, {});
  const auto f = fam({"t", "t + 2"}, v);
  const ZP one = ZP::constant(Z, v, 1);
  ProgressionCertificate<IntegerRing> good{Z, v, {}, 2, 1, one, one, "coprime-values", {}};
  const auto a = certify_progression(good, {f}, 10);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.checked, 10u);

  ProgressionCertificate<IntegerRing> bad{Z, v, {}, 2, 0, one, one, "coprime-values", {}};
  const auto b = certify_progression(bad, {f}, 10);
  EXPECT_FALSE(b.passed);
  ASSERT_TRUE(b.failure.has_value());
  EXPECT_EQ(b.failure->index, "0");
  EXPECT_EQ(b.failure->witness, "2");
  EXPECT_THROW(b.require_valid(), CertificateInvalid);

  ProgressionCertificate<IntegerRing> consecutive{Z, v, {}, 1, 0, one, one, "coprime-values", {}};
  EXPECT_TRUE(certify_progression(consecutive, {fam({"t", "t + 1"}, v)}, 10).passed);

  ProgressionCertificate<IntegerRing> zero_step{Z, v, {}, 0, 1, one, one, "coprime-values", {}};
  EXPECT_THROW(certify_progression(zero_step, {f}, 3), InvalidArgument);
}

TEST(CertifyProgression, SkipsGuardZeros) {
  const VarSet v({"t"}, {});
  const auto f = fam({"t", "t + 2"}, v);
  const ZP one = ZP::constant(Z, v, 1);
  ProgressionCertificate<IntegerRing> c{Z, v, {}, 2, 1, pz("t - 3", v), one, "coprime-values", {}};
  const auto r = certify_progression(c, {f}, 5);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.skipped, 1u);
}

// ---------------------------------------------------------------------------
// Multivariate coprime search

TEST(CopschMultivar, Examples) {
  const VarSet v({"t1", "t2"}, {});
  {
    const auto f = fam({"t1", "t2"}, v);
    const auto c = copsch_search_multivar<IntegerRing>({f});
    EXPECT_EQ(c.prefix.size(), 1u);
    EXPECT_TRUE(certify_progression(c, {f}, 25).passed);
  }
  {
    const auto f = fam({"t1 + t2", "t1*t2 + 1"}, v);
    const auto c = copsch_search_multivar<IntegerRing>({f});
    EXPECT_TRUE(certify_progression(c, {f}, 20).passed);
    for (long l = 0; l < 20; ++l) EXPECT_EQ(value_gcd(f, {c.prefix[0], c.alpha + l * c.omega}), 1);
    EXPECT_NE(c.bezout_guard.eval_partial(std::vector<std::pair<std::size_t, Integer>>{{0, c.prefix[0]}}).is_zero(),
              true);
  }
  try {
    copsch_search_multivar<IntegerRing>({fam({"t1^2 + t1", "t1^2 + t1 + 2"}, v)});
    FAIL();
  } catch (const FixedDivisorPresent& e) {
    EXPECT_EQ(e.witness(), "2");
  }
  EXPECT_THROW(copsch_search_multivar<IntegerRing>({fam({"t1*t2", "t1*(t2 + 1)"}, v)}), NotCoprimeFamily);
}

TEST(CopschMultivar, ThreeVariablesWithGuard) {
  const VarSet v({"t1", "t2", "t3"}, {});
  const auto f = fam({"t1*t3 + t2", "t2*t3 + t1 + 1"}, v);
  const auto g = fam({"t3 + t1 + t2", "t3^2 + 2"}, v);
  const auto guard = pz("t3 - t1", v);
  const auto c = copsch_search_multivar<IntegerRing>({f, g}, guard);
  ASSERT_EQ(c.prefix.size(), 2u);
  const auto rep = certify_progression(c, {f, g}, 25);
  EXPECT_TRUE(rep.passed) << (rep.log.empty() ? "" : rep.log.back());
  for (long l = 0; l < 25; ++l) {
    const Integer m = c.alpha + l * c.omega;
    const std::vector<Integer> pt{c.prefix[0], c.prefix[1], m};
    if (guard.eval(pt) == 0) continue;
    EXPECT_EQ(value_gcd(f, pt), 1);
    EXPECT_EQ(value_gcd(g, pt), 1);
  }
}

TEST(CopschMultivar, OverFq) {
  const FqPolyRing F(3);
  const VarSet v({"t1", "t2"}, {});
  const Family<FqPolyRing> f{parse_poly("t1*t2 + u", v, F), parse_poly("t2 + t1 + 1", v, F)};
  const auto c = copsch_search_multivar<FqPolyRing>({f});
  EXPECT_TRUE(certify_progression(c, {f}, 15).passed);
}

// ---------------------------------------------------------------------------
// Value gcd sets

TEST(ValueGcdSet, WindowExamples) {
  const VarSet v({"t"}, {});
  const VarSet none({}, {});
  std::vector<ZP> window;
  for (long m = 0; m < 20; ++m) window.push_back(ZP::constant(Z, none, m));
  {
    const auto r = value_gcd_set(fam({"t", "t + 2"}, v), 0, window);
    ASSERT_EQ(r.distinct.size(), 2u);
    EXPECT_EQ(r.distinct[0].constant_value(), 1);
    EXPECT_EQ(r.distinct[1].constant_value(), 2);
    EXPECT_TRUE(r.stable);
  }
  {
    const auto f = fam({"t", "t + 4"}, v);
    const auto r = value_gcd_set(f, 0, window);
    std::vector<Integer> got, want;
    for (const auto& d : r.distinct) got.push_back(d.constant_value());
    for (long m = 0; m < 20; ++m) {
      const Integer g = value_gcd(f, {Integer(m)});
      if (std::find(want.begin(), want.end(), g) == want.end()) want.push_back(g);
    }
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    EXPECT_EQ(got, (std::vector<Integer>{1, 2, 4}));
    EXPECT_TRUE(r.stable);
  }
}

TEST(ValueGcdSet, InstabilityOverZxyz) {
  const VarSet v({"t"}, {"x", "y", "z"});
  const auto f = fam({"(x^2*y^2*z + t^2)*(x^2*y*z^2 + (t - 1)^2)", "(x*y^2*z^2 + t^2)*(x^2*y^2*z^2 + (t - 1)^2)"}, v);
  const VarSet xyz({}, {"x", "y", "z"});
  const auto r = value_gcd_set(f, 0, {pz("0", xyz), pz("1", xyz)});
  EXPECT_EQ(r.gcds[0], pz("x*y^2*z", xyz));
  EXPECT_EQ(r.gcds[1], pz("x^2*y*z^2", xyz));
  EXPECT_FALSE(r.stable);
  ASSERT_TRUE(r.violating_gcd.has_value());
  EXPECT_EQ(*r.violating_gcd, pz("x*y*z", xyz));
}

TEST(ValueGcdSet, Errors) {
  const VarSet v({"t"}, {});
  const VarSet none({}, {});
  EXPECT_THROW(value_gcd_set(fam({"t", "t + 2"}, v), 0, {}), InvalidArgument);
  EXPECT_THROW(value_gcd_set(fam({"t^2 - 1", "t - 1"}, v), 0, {ZP::constant(Z, none, 1)}), NotCoprimeFamily);
}
