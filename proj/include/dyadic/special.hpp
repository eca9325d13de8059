#pragma once

// Special values at arbitrary precision: half-argument polylogarithms,
// incomplete-gamma slices and the Bessel function J0.

#include <cmath>
#include <vector>

#include "apreal.hpp"

namespace dyadic {

// Li_L(1/2) = sum_{n>=1} 2^-n n^-L
inline APReal polylog_half(long L, int prec) {
  if (L < 0) throw DomainError("polylog_half needs L >= 0");
  int wp = prec + 32;
  APReal sum(0L, wp);
  APReal eps = ldexp(APReal(1L, wp), -(wp + 4));
  for (long n = 1;; ++n) {
    APReal t = ldexp(pow(APReal(n, wp), -L), -n);
    sum += t;
    if (t < eps) break;
  }
  return sum.with_prec(prec);
}

namespace detail {

// sum_{k<=n} x^k/k!
inline APReal exp_partial(long n, const APReal& x) {
  APReal s(0L, x.prec()), t(1L, x.prec());
  for (long k = 0; k <= n; ++k) {
    s += t;
    t = t * x / (k + 1);
  }
  return s;
}

// Bits lost to cancellation in e^-r E_n(r) - e^-(r+1) E_n(r+1).
inline int slice_guard_bits(long n, long r) {
  double lost = (std::lgamma(double(n) + 1) - n * std::log(double(r) + 1)) / std::log(2.0);
  return 48 + (lost > 0 ? static_cast<int>(lost) : 0);
}

}  // namespace detail

// integral_r^{r+1} t^n e^-t dt / n!, computed in closed form.
inline APReal gamma_slice_scaled(long n, long r, int prec) {
  if (n < 0 || r < 0) throw DomainError("gamma_slice needs n, r >= 0");
  int wp = prec + detail::slice_guard_bits(n, r);
  APReal a(r, wp), b(r + 1, wp);
  APReal v = exp(-a) * detail::exp_partial(n, a) - exp(-b) * detail::exp_partial(n, b);
  return v.with_prec(prec);
}

// integral_r^{r+1} t^n e^-t dt
inline APReal gamma_slice(long n, long r, int prec) {
  int wp = prec + 16;
  return (gamma_slice_scaled(n, r, wp) * APReal(factorial(n), wp)).with_prec(prec);
}

// J0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2 with guard bits for the
// alternating cancellation at large |x|.
inline APReal bessel_j0(const APReal& x, int prec) {
  double ax = std::fabs(x.to_double());
  int wp = prec + 24 + static_cast<int>(ax * 1.4426950408889634);
  APReal q = x.with_prec(wp);
  q = q * q / 4;
  APReal term(1L, wp), sum(1L, wp);
  APReal eps = ldexp(APReal(1L, wp), -(prec + 16));
  for (long k = 1;; ++k) {
    term = -term * q / (k * k);
    sum += term;
    if (k > ax && abs(term) < eps) break;
  }
  return sum.with_prec(prec);
}

// Gauss-Legendre rule on [-1, 1], nodes refined by Newton in the target type.
template <class R>
struct GaussLegendre {
  std::vector<R> x, w;

  GaussLegendre(int n, const R& like) {
    const double pi = 3.14159265358979323846;
    int m = (n + 1) / 2;
    x.assign(n, real_like(like, 0.0));
    w.assign(n, real_like(like, 0.0));
    for (int i = 0; i < m; ++i) {
      R z = real_like(like, std::cos(pi * (i + 0.75) / (n + 0.5)));
      R dp = real_like(like, 0.0);
      for (int it = 0; it < 100; ++it) {
        auto [p, d] = legendre(n, z);
        R dz = p / d;
        z = z - dz;
        dp = d;
        using std::abs;
        if (abs(to_double(dz)) < 1e-300 || is_tiny(dz, z)) {
          dp = legendre(n, z).second;
          break;
        }
      }
      R wi = real_like(like, 2.0) / ((real_like(like, 1.0) - z * z) * dp * dp);
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = wi;
      w[n - 1 - i] = wi;
    }
  }

  // integral over [a, b] of f
  template <class F>
  auto integrate(F&& f, const R& a, const R& b) const {
    R half = (b - a) / 2, mid = (a + b) / 2;
    auto acc = f(mid + half * x[0]) * w[0];
    for (size_t i = 1; i < x.size(); ++i) acc += f(mid + half * x[i]) * w[i];
    return acc * half;
  }

 private:
  static std::pair<R, R> legendre(int n, const R& z) {
    R p0 = real_like(z, 1.0), p1 = z;
    for (int k = 2; k <= n; ++k) {
      R p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    R d = n * (z * p1 - p0) / (z * z - 1);
    return {p1, d};
  }
  static bool is_tiny(const double& dz, const double& z) { return std::fabs(dz) <= 1e-17 * std::fabs(z); }
  static bool is_tiny(const APReal& dz, const APReal& z) {
    return dz.is_zero() || dz.exponent2() < z.exponent2() - z.prec() + 2;
  }
};

}  // namespace dyadic
