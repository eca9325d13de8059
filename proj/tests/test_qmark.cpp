#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dyadic/qmark.hpp"

using namespace dyadic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Oracle: direct sum over the quotients, no shared code with qmark_exact.
Rational alternating_sum(const CF& a) {
  Rational F = 1, sign = -1;
  long s = 0;
  for (long ai : a) {
    s += ai;
    F += sign / Rational(BigInt(1) << s);
    sign = -sign;
  }
  return F;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(1, 5000);
  return make_rational(d(rng), d(rng));
}

}  // namespace

TEST(ContinuedFraction, RationalExamples) {
  EXPECT_EQ(cf_expand(q(5, 2)), (CF{2, 2}));
  EXPECT_EQ(cf_expand(q(3, 5)), (CF{0, 1, 1, 2}));
  EXPECT_EQ(cf_expand(q(0)), (CF{0}));
  EXPECT_THROW(cf_expand(q(-1, 3)), DomainError);
}

TEST(ContinuedFraction, GoldenRatioIsAllOnes) {
  APReal phi = (1 + sqrt(APReal(5L, 256))) / 2;
  EXPECT_EQ(cf_expand(phi, 10), CF(10, 1));
  EXPECT_THROW(cf_expand(APReal(-0.5, 64)), DomainError);
}

TEST(ContinuedFraction, RealExpansionStopsBeforePrecisionRunsOut) {
  APReal s2 = sqrt(APReal(2L, 128));
  CF c = cf_expand(s2);
  ASSERT_GT(c.size(), 20u);
  EXPECT_LT(c.size(), 100u);
  EXPECT_EQ(c[0], 1);
  for (size_t i = 1; i < c.size(); ++i) EXPECT_EQ(c[i], 2) << i;
}

TEST(ContinuedFraction, ValueRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng);
    EXPECT_EQ(cf_value(cf_expand(x)), x);
  }
}

TEST(QuestionMark, KnownValues) {
  EXPECT_EQ(qmark_F(q(1)), q(1, 2));
  EXPECT_EQ(minkowski_q(q(1, 2)), q(1, 2));
  EXPECT_EQ(qmark_F(q(0)), q(0));
  APReal phi = (1 + sqrt(APReal(5L, 256))) / 2;
  EXPECT_LT(abs(qmark_F(phi) - APReal(q(2, 3), 256)).to_double(), 1e-30);
}

TEST(QuestionMark, MatchesAlternatingSumOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng);
    EXPECT_EQ(qmark_F(x), alternating_sum(cf_expand(x)));
  }
}

TEST(QuestionMark, ReciprocalSymmetry) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng);
    EXPECT_EQ(qmark_F(x) + qmark_F(1 / x), 1) << x.get_str();
  }
}

TEST(QuestionMark, BothContinuedFractionFormsAgree) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    CF a = cf_expand(random_rational(rng));
    if (a.back() < 2) continue;
    CF b = a;
    b.back() -= 1;
    b.push_back(1);
    EXPECT_EQ(qmark_exact(a), qmark_exact(b));
    EXPECT_EQ(cf_value(a), cf_value(b));
  }
}

TEST(QuestionMark, MonotoneOnSortedGeneration) {
  auto g = cw_generation(12);
  std::sort(g.begin(), g.end());
  for (size_t i = 1; i < g.size(); ++i) EXPECT_LT(qmark_F(g[i - 1].to_rational()), qmark_F(g[i].to_rational()));
}

TEST(CalkinWilf, FourthGeneration) {
  std::vector<Fraction> want{{1, 4}, {4, 3}, {3, 5}, {5, 2}, {2, 5}, {5, 3}, {3, 4}, {4, 1}};
  EXPECT_EQ(cw_generation(4), want);
  EXPECT_EQ(cw_generation(1), (std::vector<Fraction>{{1, 1}}));
  EXPECT_THROW(cw_generation(0), DomainError);
  EXPECT_THROW(cw_generation(25), RangeError);
}

TEST(CalkinWilf, GenerationsPartitionByQuotientSum) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (int n = 1; n <= 12; ++n) {
    auto g = cw_generation(n);
    ASSERT_EQ(g.size(), size_t(1) << (n - 1));
    for (const auto& f : g) {
      BigInt a(static_cast<unsigned long>(f.num)), b(static_cast<unsigned long>(f.den));
      EXPECT_EQ(gcd(a, b), 1);
      CF c = cf_expand(f.to_rational());
      long s = 0;
      for (long x : c) s += x;
      EXPECT_EQ(s, n);
      if (n <= 10) {
        EXPECT_TRUE(seen.insert({f.num, f.den}).second);
      }
    }
  }
}

TEST(EmpiricalCdf, SmallCases) {
  EXPECT_EQ(empirical_cdf(1, q(2)), 1);
  EXPECT_EQ(empirical_cdf(4, q(1)), q(1, 2));
}

TEST(EmpiricalCdf, ConvergesToF) {
  for (int k = 1; k <= 50; ++k) {
    Rational x = q(k, 10);
    double d = Rational(empirical_cdf(14, x) - qmark_F(x)).get_d();
    EXPECT_LT(std::abs(d), 0.01) << k;
  }
}
