#include <gtest/gtest.h>

#include <random>

#include "hs/parse.hpp"
#include "oracles.hpp"

using namespace hs;

namespace {

using ZP = MultiPoly<IntegerRing>;

const IntegerRing Z;

ZP parse_z(const std::string& s, const VarSet& v) { return parse_poly(s, v, Z); }

}  // namespace

TEST(Parser, RemarkPolynomial) {
  const VarSet v({"t"}, {"y"});
  const auto p = parse_z("(t^2 - t)*y + (t^2 - t + 2)", v);
  EXPECT_EQ(p.term_count(), 5u);
  EXPECT_EQ(p.coeff({2, 1}), 1);
  EXPECT_EQ(p.coeff({1, 1}), -1);
  EXPECT_EQ(p.coeff({2, 0}), 1);
  EXPECT_EQ(p.coeff({1, 0}), -1);
  EXPECT_EQ(p.coeff({0, 0}), 2);
}

TEST(Parser, ZeroAndConstants) {
  const VarSet v({"t"}, {"y"});
  EXPECT_TRUE(parse_z("0", v).is_zero());
  EXPECT_TRUE(parse_z("t - t", v).is_zero());
  EXPECT_EQ(parse_z("-7", v).constant_value(), -7);
  EXPECT_EQ(parse_z("2^10", v).constant_value(), 1024);
  EXPECT_EQ(parse_z("123456789012345678901234567890", v).constant_value(), Integer("123456789012345678901234567890"));
}

TEST(Parser, ThreeTermTwoVariables) {
  const VarSet v({"t1", "t2"}, {});
  const auto p = parse_z("t1*t2 - 3*t1 + 7", v);
  EXPECT_EQ(p.term_count(), 3u);
  EXPECT_EQ(p.coeff({1, 1}), 1);
  EXPECT_EQ(p.coeff({1, 0}), -3);
  EXPECT_EQ(p.coeff({0, 0}), 7);
}

TEST(Parser, PrecedenceAndUnaryMinus) {
  const VarSet v({"t"}, {});
  EXPECT_EQ(parse_z("-t^2", v), parse_z("-(t^2)", v));
  EXPECT_EQ(parse_z("2*t^3", v).coeff({3}), 2);
  EXPECT_EQ(parse_z("(t+1)^2", v), parse_z("t^2 + 2*t + 1", v));
  EXPECT_EQ(parse_z("t - -3", v), parse_z("t + 3", v));
  EXPECT_EQ(parse_z("  t  *  ( t - 1 ) ", v), parse_z("t^2-t", v));
}

TEST(Parser, Errors) {
  const VarSet v({"t"}, {"y"});
  EXPECT_THROW(parse_z("", v), SyntaxError);
  EXPECT_THROW(parse_z("t +", v), SyntaxError);
  EXPECT_THROW(parse_z("(t + 1", v), SyntaxError);
  EXPECT_THROW(parse_z("t ^ y", v), SyntaxError);
  EXPECT_THROW(parse_z("t $ 1", v), SyntaxError);
  EXPECT_THROW(parse_z("x + 1", v), UnknownVariable);
  EXPECT_THROW(parse_z("t/2", v), CoefficientNotInRing);
  EXPECT_THROW(parse_z("1.5*t", v), CoefficientNotInRing);
  try {
    parse_z("t + * 2", v);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_z("t + zz", v);
    FAIL();
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.witness(), "zz");
  }
}

TEST(Parser, CoefficientSymbolOverFq) {
  const FqPolyRing F(2);
  const VarSet v({"t"}, {"y"});
  const auto p = parse_poly("(t^2 - t + u)*y + (t^2 - t)^2 + u", v, F);
  EXPECT_EQ(p.coeff({0, 1}), F.u());
  EXPECT_EQ(p.coeff({0, 0}), F.u());
  EXPECT_EQ(p.coeff({1, 1}), F.one());  // -1 = 1 in F_2
  EXPECT_THROW(parse_poly("u", VarSet({"u"}, {}), F), InvalidArgument);
  EXPECT_THROW(parse_z("u", v), UnknownVariable);
}

TEST(Parser, PrintedFormParsesBack) {
  std::mt19937_64 rng(17);
  const VarSet v({"t1", "t2"}, {"y"});
  std::uniform_int_distribution<long> coeff(-40, 40);
  std::uniform_int_distribution<unsigned> ex(0, 4);
  for (int it = 0; it < 300; ++it) {
    ZP p(Z, v);
    const int terms = static_cast<int>(rng() % 7);
    for (int k = 0; k < terms; ++k) p.add_term({ex(rng), ex(rng), ex(rng)}, coeff(rng));
    const std::string s = p.to_string();
    EXPECT_EQ(parse_z(s, v), p) << s;
    EXPECT_EQ(parse_z(s, v).to_string(), s);
  }
}

TEST(Parser, PrintedFormParsesBackOverFq) {
  std::mt19937_64 rng(23);
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const FqPolyRing F(q);
    const VarSet v({"t"}, {"y"});
    for (int it = 0; it < 100; ++it) {
      MultiPoly<FqPolyRing> p(F, v);
      for (int k = 0; k < 4; ++k) {
        fp::Poly c(1 + rng() % 3);
        for (auto& x : c) x = rng() % q;
        fp::trim(c);
        p.add_term({static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3)}, FqPoly{c});
      }
      const std::string s = p.to_string();
      EXPECT_EQ(parse_poly(s, v, F), p) << s;
    }
  }
}

TEST(Parser, OracleTextAgreesWithEvaluation) {
  std::mt19937_64 rng(4);
  const VarSet v({"t"}, {});
  for (int it = 0; it < 100; ++it) {
    const auto f = oracle::random_poly(rng, static_cast<int>(rng() % 7), 50);
    const auto p = parse_z(oracle::poly_text(f, "t"), v);
    for (long m = -5; m <= 5; ++m) EXPECT_EQ(p.eval({Integer(m)}), oracle::eval(f, m));
  }
}
