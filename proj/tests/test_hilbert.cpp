#include <gtest/gtest.h>

#include "hs/hilbert.hpp"
#include "hs/parse.hpp"
#include "oracles.hpp"

using namespace hs;

namespace {

const IntegerRing Z;

ZMultiPoly pz(const std::string& s, const VarSet& v) { return parse_poly(s, v, Z); }

bool is_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Dense coefficients in y of P at t = m.
oracle::Poly specialize(const ZMultiPoly& p, const std::vector<Integer>& m) {
  const auto ts = p.vars().indices(VarRole::t);
  const std::size_t y = p.vars().indices(VarRole::y).front();
  oracle::Poly out(static_cast<std::size_t>(std::max(0, p.degree(y)) + 1), 0);
  for (const auto& [e, c] : p.terms()) {
    Integer v = c;
    for (std::size_t h = 0; h < ts.size(); ++h) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), m[h].get_mpz_t(), e[ts[h]]);
      v *= pw;
    }
    out[e[y]] += v;
  }
  oracle::trim(out);
  return out;
}

Integer content_of(const oracle::Poly& f) {
  Integer c = 0;
  for (const auto& x : f) c = oracle::gcd(c, x);
  return c;
}

}  // namespace

TEST(Hilbert, SquareRootFirstHitIsTwo) {
  const VarSet v({"t"}, {"y"});
  HilbertBudget b;
  b.hits = 1;
  const auto r = hilbert_search({pz("y^2 - t", v)}, std::nullopt, b);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_EQ(r.hits[0].m, std::vector<Integer>{2});
  EXPECT_EQ(r.hits[0].verdicts[0].specialized, "y^2 - 2");
  EXPECT_EQ(r.members_checked, 3u);
  // m = 0 and m = 1 are rejected
  EXPECT_FALSE(evaluate_hilbert_point({pz("y^2 - t", v)}, ZMultiPoly::constant(Z, v, 1), {Integer(0)}).ok());
  EXPECT_FALSE(evaluate_hilbert_point({pz("y^2 - t", v)}, ZMultiPoly::constant(Z, v, 1), {Integer(1)}).ok());
  EXPECT_EQ(r.input_irreducibility, "asserted");
}

TEST(Hilbert, SquareRootHitsAreNonSquares) {
  const VarSet v({"t"}, {"y"});
  HilbertBudget b;
  b.hits = 20;
  const auto r = hilbert_search({pz("y^2 - t", v)}, std::nullopt, b);
  ASSERT_EQ(r.hits.size(), 20u);
  Integer prev = -1;
  for (const auto& h : r.hits) {
    EXPECT_FALSE(is_square(h.m[0]));
    EXPECT_GT(h.m[0], prev);
    prev = h.m[0];
  }
  // every non-square before the last hit is found
  for (Integer m = 0; m < prev; ++m) {
    const bool found = std::any_of(r.hits.begin(), r.hits.end(), [&](const HilbertHit& h) { return h.m[0] == m; });
    EXPECT_EQ(found, !is_square(m)) << m;
  }
}

TEST(Hilbert, FixedDivisorRejected) {
  const VarSet v({"t"}, {"y"});
  try {
    hilbert_search({pz("(t^2 - t)*y + (t^2 - t + 2)", v)}, std::nullopt);
    FAIL();
  } catch (const FixedDivisorPresent& e) {
    EXPECT_EQ(e.witness(), "2");
  }
}

TEST(Hilbert, LinearHitsOnlyAtOddPoints) {
  const VarSet v({"t"}, {"y"});
  HilbertBudget b;
  b.hits = 10;
  const auto p = pz("t*y + 2", v);
  const auto r = hilbert_search({p}, std::nullopt, b);
  EXPECT_EQ(r.hits.size(), 10u);
  EXPECT_EQ(r.input_irreducibility, "verified");
  for (const auto& h : r.hits) {
    EXPECT_EQ(oracle::mod(h.m[0], 2), 1);
    EXPECT_EQ(content_of(specialize(p, h.m)), 1);
  }
  const auto even = evaluate_hilbert_point({p}, ZMultiPoly::constant(Z, v, 1), {Integer(4)});
  EXPECT_FALSE(even.verdicts[0].primitive);
  EXPECT_EQ(even.verdicts[0].content, 2);
}

TEST(Hilbert, TwoParameterQuadratic) {
  const VarSet v({"t1", "t2"}, {"y"});
  const auto p = pz("y^2 + t1*y + t2", v);
  HilbertBudget b;
  b.hits = 5;
  const auto r = hilbert_search({p}, std::nullopt, b);
  ASSERT_GE(r.hits.size(), 3u);
  EXPECT_LE(r.members_checked, 10000u);
  for (const auto& h : r.hits) {
    const Integer disc = h.m[0] * h.m[0] - 4 * h.m[1];
    EXPECT_FALSE(is_square(disc)) << h.m[0] << "," << h.m[1];
    EXPECT_TRUE(oracle::irreducible_mignotte(specialize(p, h.m)));
  }
  const auto one_one = evaluate_hilbert_point({p}, ZMultiPoly::constant(Z, v, 1), {Integer(1), Integer(1)});
  EXPECT_TRUE(one_one.ok());
  EXPECT_EQ(one_one.verdicts[0].specialized, "y^2 + y + 1");
}

TEST(Hilbert, VerdictsAgreeWithOracles) {
  const VarSet v({"t"}, {"y"});
  const std::vector<ZMultiPoly> polys{pz("y^3 - t*y + 1", v), pz("t*y^2 + y + t + 2", v)};
  const auto guard = ZMultiPoly::constant(Z, v, 1);
  for (long m = -12; m <= 12; ++m) {
    const auto hit = evaluate_hilbert_point(polys, guard, {Integer(m)});
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const auto f = specialize(polys[j], {Integer(m)});
      const auto& vd = hit.verdicts[j];
      if (f.size() < 2) {
        EXPECT_FALSE(vd.irreducible);
        continue;
      }
      EXPECT_EQ(vd.primitive, content_of(f) == 1) << m;
      EXPECT_EQ(abs(vd.content), content_of(f));
      EXPECT_EQ(vd.irreducible, oracle::irreducible_mignotte(f)) << m << " " << vd.specialized;
      EXPECT_EQ(vd.certificate_hash.size(), 16u);
    }
  }
}

TEST(Hilbert, GuardZerosAreSkipped) {
  const VarSet v({"t"}, {"y"});
  HilbertBudget b;
  b.hits = 3;
  const auto r = hilbert_search({pz("y^2 - t", v)}, pz("t - 2", v), b);
  for (const auto& h : r.hits) {
    EXPECT_NE(h.m[0], 2);
    EXPECT_NE(h.guard_value, 0);
  }
  EXPECT_EQ(r.hits[0].m[0], 3);
}

TEST(Hilbert, DeterministicAcrossRuns) {
  const VarSet v({"t1", "t2"}, {"y"});
  const auto p = pz("y^3 + t1*y + t2", v);
  HilbertBudget b;
  b.hits = 6;
  const auto a = hilbert_search({p}, std::nullopt, b), c = hilbert_search({p}, std::nullopt, b);
  ASSERT_EQ(a.hits.size(), c.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    EXPECT_EQ(a.hits[i].m, c.hits[i].m);
    EXPECT_EQ(a.hits[i].verdicts[0].certificate_hash, c.hits[i].verdicts[0].certificate_hash);
  }
  EXPECT_EQ(a.trace, c.trace);
}

TEST(Hilbert, InputValidation) {
  const VarSet v({"t"}, {"y"});
  EXPECT_THROW(hilbert_search({pz("t + 1", v)}, std::nullopt), DegreeZeroInY);
  EXPECT_THROW(hilbert_search({pz("2*y^2 - 2*t", v)}, std::nullopt), NotPrimitiveInput);
  EXPECT_THROW(hilbert_search({pz("(y - t)^2", v)}, std::nullopt), InvalidArgument);
  EXPECT_THROW(hilbert_search({ZMultiPoly(Z, v)}, std::nullopt), ZeroPolynomial);
  EXPECT_THROW(hilbert_search({pz("y - t", v)}, pz("0", v)), GuardUnsatisfiable);
  EXPECT_THROW(hilbert_search({pz("y - t", v)}, pz("y", v)), InvalidArgument);
  EXPECT_THROW(hilbert_search({pz("y + t", VarSet({"t"}, {"y", "z"}))}, std::nullopt), InvalidArgument);
}

TEST(Hilbert, BudgetExhaustionIsAResourceSignal) {
  const VarSet v({"t"}, {"y"});
  HilbertBudget b;
  b.members = 2;
  EXPECT_THROW(hilbert_search({pz("y^2 - t", v)}, std::nullopt, b), BudgetExceeded);
  b.members = 10000;
  b.hits = 3;
  const auto r = hilbert_search({pz("y^2 - t", v)}, std::nullopt, b);
  EXPECT_FALSE(r.budget_exhausted);
}
