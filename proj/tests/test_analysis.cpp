#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dyadic/borel.hpp"
#include "dyadic/gfunc.hpp"
#include "dyadic/moments.hpp"
#include "dyadic/stieltjes.hpp"

using namespace dyadic;

namespace {

constexpr int kPrec = 256;

const MomentVector& shared_moments() {
  static const MomentVector mv = moments_solve(160, kPrec);
  return mv;
}

double dist(const APComplex& a, const APComplex& b) { return abs(a - b).to_double(); }
double dist(const CD& a, const CD& b) { return std::hypot(a.re - b.re, a.im - b.im); }

}  // namespace

// ------------------------------------------------------------------ moments

TEST(Moments, FirstMomentIsOneHalf) {
  EXPECT_LT(std::fabs(shared_moments()[1].to_double() - 0.5), 1e-60);
}

TEST(Moments, LinearRelationOfSecondAndThird) {
  const auto& m = shared_moments();
  EXPECT_LT(std::fabs((3 * m[2] - 2 * m[3]).to_double() - 0.5), 1e-40);
}

TEST(Moments, AgreeWithQuadratureOfTheMeasure) {
  const auto& m = shared_moments();
  for (int L = 1; L <= 4; ++L) EXPECT_NEAR(m[L].to_double(), p_moment(1, L), 2e-6) << "L=" << L;
}

TEST(Moments, DecreasingAndPositive) {
  const auto& m = shared_moments();
  for (int L = 1; L < 50; ++L) {
    EXPECT_GT(m[L].to_double(), 0);
    EXPECT_LT(m[L + 1], m[L]);
  }
}

TEST(Moments, GeneratingFunctionNegativeSideMatchesSeries) {
  const auto& m = shared_moments();
  for (double t : {0.5, 2.0, 5.0}) {
    APReal T(t, kPrec);
    auto [a, d] = mgen_negative(T, m);
    EXPECT_LT(abs(a - mgen(-T, m)).to_double(), 1e-30) << t;
    EXPECT_GT(a.to_double(), 0);
    EXPECT_LT(d.to_double(), a.to_double() + 1e-30);
  }
}

TEST(Moments, PoleAtLogTwo) {
  EXPECT_THROW(mgen_eval(APReal::log2(kPrec), shared_moments()), PoleError);
}

TEST(Moments, AlphaNeedsEnoughMoments) {
  auto small = moments_solve(20, 128);
  EXPECT_THROW(hausdorff_alpha(small), DomainError);
  auto a = hausdorff_alpha(shared_moments());
  EXPECT_NEAR(a.alpha.to_double(), 0.8747163051082111, 1e-14);
  EXPECT_GE(a.digits, 14);
}

// ---------------------------------------------------------------- Stieltjes

TEST(Stieltjes, PointMassAtTwo) {
  for (CD z : {CD{0.3, 0.1}, CD{-1, 2}, CD{5, -3}}) {
    CD g = g_stieltjes(z, 2);
    CD want = CD{1, 0} / (CD{2, 0} - z);
    EXPECT_LT(dist(g, want), 1e-12);
  }
}

TEST(Stieltjes, ValueAtZero) { EXPECT_NEAR(g_stieltjes(CD{0, 0}).re, 0.5, 1e-3); }

TEST(Stieltjes, RejectsTheCut) { EXPECT_THROW(g_stieltjes(CD{3, 0}), DomainError); }

// ---------------------------------------------------------------- G reducer

TEST(GReduce, ExactValuesAtZeroAndOne) {
  const auto& m = shared_moments();
  EXPECT_LT(dist(g_reduce_eval(apc(0, 0, kPrec), m).value, apc(0.5, 0, kPrec)), 1e-40);
  EXPECT_LT(dist(g_reduce_eval(apc(1, 0, kPrec), m).value, apc(1.5, 0, kPrec)), 1e-40);
}

TEST(GReduce, AgreesWithStieltjesOffTheAxis) {
  const auto& m = shared_moments();
  for (CD z : {CD{2.0 / 3, 4}, CD{3, 0.01}, CD{-2, -1}, CD{0.302, -0.777}, CD{2, 0.5}}) {
    auto g = g_reduce_eval(apc(z.re, z.im, kPrec), m);
    EXPECT_LT(dist(to_cd(g.value), g_stieltjes(z)), 1e-4) << z.re << "," << z.im;
  }
}

TEST(GReduce, AgreesWithHSeriesNearZero) {
  const auto& m = shared_moments();
  auto z = apc(0.05, 0.03, kPrec);
  auto g = g_reduce_eval(z, m).value;
  HSeries hs;
  double prev = 1;
  for (int N : {10, 20, 30, 40, 60}) {
    double d = dist(g, g_via_h(z, N, hs).value);
    EXPECT_LT(d, prev) << N;
    prev = d;
  }
  EXPECT_LT(prev, 1e-10);
}

TEST(GReduce, RejectsTheCut) { EXPECT_THROW(g_reduce_eval(apc(2.5, 0, kPrec), shared_moments()), DomainError); }

TEST(GReduce, RandomPointsSatisfyFunctionalEquations) {
  const auto& m = shared_moments();
  GReducer red(m);
  GEvaluator G = [&](const APComplex& w) { return red(w).value; };
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 20; ++i) {
    double re = u(rng), im = u(rng);
    if (std::fabs(im) < 0.05) im = 0.5;
    auto r = feq_residual(APReal(1L, kPrec), apc(re, im, kPrec), G);
    EXPECT_LT(r[0].to_double(), 1e-25) << re << "," << im;
    EXPECT_LT(r[1].to_double(), 1e-25) << re << "," << im;
  }
}

TEST(GFunc, HSeriesAtZero) {
  auto h = g_via_h(apc(0, 0, 128), 10);
  EXPECT_LT(dist(h.value, apc(0.5, 0, 128)), 1e-30);
  EXPECT_THROW(g_via_h(apc(2, 0, 128), 10), PoleError);
}

TEST(GFunc, PointMassSolvesItsEquations) {
  auto r = feq_residual(APReal(2L, kPrec), apc(0.3, 0.2, kPrec), g_point_mass);
  EXPECT_LT(r[0].to_double(), 1e-70);
  EXPECT_LT(r[1].to_double(), 1e-70);
  // but not the p = 1 equation
  EXPECT_GT(feq_residual(APReal(1L, kPrec), apc(0.3, 0.2, kPrec), g_point_mass)[0].to_double(), 1e-3);
}

TEST(GFunc, ContourAroundPointMass) {
  auto c = contour_check(2, 5, 256, g_point_mass, 128);
  EXPECT_LT(dist(c, apc(-1, 0, 128)), 1e-30);
  EXPECT_THROW(contour_check(2, 1.5, 256, g_point_mass, 128), DomainError);
  EXPECT_THROW(contour_integral(5, 2, g_point_mass, 128), DomainError);
}

TEST(GFunc, IntegralEquationPointMass) {
  auto r = integral_eq_residual(2, 1.0, 80, nullptr);
  EXPECT_LT(r.residual, 1e-20);
  EXPECT_THROW(integral_eq_residual(3, 1.0, 80, nullptr), DomainError);
  EXPECT_THROW(integral_eq_residual(1, 1.0, 80, nullptr), DomainError);
}

TEST(GFunc, DoubleSumConstant) {
  APReal s = dyadic_double_sum(128);
  EXPECT_NEAR(s.to_double(), 0.2045304685, 1e-9);
  // the n = m = 0 term alone
  EXPECT_GT(s.to_double(), 1.0 / 9);
  EXPECT_LT(s.to_double(), 1.0);
}

// -------------------------------------------------------------------- Borel

TEST(Borel, ToySeriesSumsToOneThird) {
  EXPECT_NEAR(borel_toy().to_double(), 1.0 / 3, 1e-15);
}

TEST(Borel, SecondMomentFromSlices) {
  auto b = borel_m2(110, 11, 192);
  ASSERT_EQ(b.theta.size(), 12u);
  EXPECT_NEAR(b.theta[0].value.to_double(), 0.2327797875, 1e-9);
  EXPECT_NEAR(b.sum.to_double(), 0.29094, 1e-4);
}

TEST(Borel, RangeGuard) {
  EXPECT_THROW(borel_m2(110, kBorelMaxR + 1), RangeError);
  EXPECT_THROW(borel_sum({1}, -1, 64), DomainError);
}
