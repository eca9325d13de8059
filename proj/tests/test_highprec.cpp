#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "dyadic/special.hpp"

using namespace dyadic;

namespace {

// Romberg extrapolation of the trapezoid rule; the oracle for smooth integrals.
APReal romberg(const std::function<APReal(const APReal&)>& f, const APReal& a, const APReal& b, int levels) {
  int prec = a.prec();
  std::vector<APReal> prev, cur;
  APReal h = b - a;
  prev.push_back((f(a) + f(b)) * h / 2);
  long n = 1;
  for (int k = 1; k <= levels; ++k) {
    h = h / 2;
    APReal s(0L, prec);
    for (long i = 0; i < n; ++i) s += f(a + h * (2 * i + 1));
    n *= 2;
    cur.assign(1, prev[0] / 2 + s * h);
    APReal pw(4L, prec);
    for (int j = 1; j <= k; ++j) {
      cur.push_back(cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (pw - 1));
      pw = pw * 4;
    }
    prev = cur;
  }
  return prev.back();
}

double absdiff(const APReal& a, const APReal& b) { return abs(a - b).to_double(); }

}  // namespace

TEST(Polylog, FirstTwoClosedForms) {
  int p = 256;
  APReal l2 = APReal::log2(p), pi = APReal::pi(p);
  EXPECT_LT(absdiff(polylog_half(1, p), l2), 1e-70);
  EXPECT_LT(absdiff(polylog_half(2, p), pi * pi / 12 - l2 * l2 / 2), 1e-70);
}

TEST(Polylog, MonotoneTowardsOneHalf) {
  APReal prev = polylog_half(1, 256);
  for (long L = 2; L <= 200; ++L) {
    APReal c = polylog_half(L, 256);
    EXPECT_LT(c, prev);
    EXPECT_GT(c, 0.5);
    prev = c;
  }
  EXPECT_LT(absdiff(polylog_half(200, 128), APReal(0.5, 128)), 1e-60);
}

TEST(GammaSlice, SmallCases) {
  int p = 256;
  APReal e1 = exp(APReal(-1L, p));
  EXPECT_LT(absdiff(gamma_slice(0, 0, p), 1 - e1), 1e-70);
  EXPECT_LT(absdiff(gamma_slice(1, 0, p), 1 - 2 * e1), 1e-70);
}

TEST(GammaSlice, AgreesWithQuadrature) {
  int p = 192;
  for (long n : {0L, 3L, 10L, 25L})
    for (long r : {0L, 2L, 7L}) {
      auto f = [n](const APReal& t) { return pow(t, n) * exp(-t); };
      APReal q = romberg(f, APReal(r, p), APReal(r + 1, p), 12);
      EXPECT_LT(absdiff(gamma_slice(n, r, p), q) / q.to_double(), 1e-35) << n << " " << r;
    }
}

TEST(GammaSlice, SlicesSumToFactorial) {
  int p = 256;
  for (long n = 0; n <= 10; ++n) {
    APReal s(0L, p);
    for (long r = 0; r < 120; ++r) s += gamma_slice(n, r, p);
    EXPECT_LT(absdiff(s, APReal(factorial(n), p)), 1e-30) << n;
  }
}

TEST(BesselJ0, LaplaceTransformIdentity) {
  // integral_0^inf e^-t J0(2 sqrt(st)) dt = e^-s at s = 1; t = u^2
  int p = 128;
  auto f = [p](const APReal& u) { return 2 * u * exp(-u * u) * bessel_j0(2 * u, p); };
  APReal q = romberg(f, APReal(0L, p), APReal(9L, p), 11);
  EXPECT_LT(absdiff(q, exp(APReal(-1L, p))), 1e-12);
}

TEST(BesselJ0, IntegralRepresentationAtTwo) {
  int p = 128;
  APReal pi = APReal::pi(p);
  // periodic integrand: the plain trapezoid rule is spectrally accurate
  int m = 64;
  APReal s(0L, p);
  for (int k = 0; k < m; ++k) s += cos(2 * sin(pi * k / m));
  EXPECT_LT(absdiff(bessel_j0(APReal(2L, p), p), s / m), 1e-35);
}

TEST(BesselJ0, BoundedByOne) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-60, 60);
  for (int i = 0; i < 100; ++i) {
    APReal j = bessel_j0(APReal(d(rng), 128), 128);
    EXPECT_LE(abs(j), 1.0);
  }
  EXPECT_EQ(bessel_j0(APReal(0L, 64), 64), APReal(1L, 64));
}

TEST(APReal, PrecisionIsExplicit) {
  APReal a(1L, 100), b(1L, 300);
  EXPECT_EQ((a + b).prec(), 100);
  EXPECT_EQ(APReal::pi(512).prec(), 512);
  EXPECT_EQ(APReal::parse("0.25", 64).to_fixed(3), "0.250");
  EXPECT_THROW(APReal::parse("abc", 64), DomainError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  GaussLegendre<double> g(10, 0.0);
  double v = g.integrate([](double x) { return x * x * x * x * x * x * x * x; }, -1.0, 1.0);
  EXPECT_NEAR(v, 2.0 / 9, 1e-15);
  GaussLegendre<APReal> ga(20, APReal(0L, 200));
  APReal one(1L, 200);
  APReal va = ga.integrate([](const APReal& x) { return exp(x); }, -one, one);
  EXPECT_LT(absdiff(va, exp(one) - exp(-one)), 1e-50);
}
