#pragma once

// Slice-by-slice Borel summation of sum_n a_n:
//   theta_r = sum_{n<=Nmax} a_n/n! int_r^{r+1} t^n e^-t dt,   sum_r theta_r.
// For m_2 the coefficients are Q_n'(-1).

#include <vector>

#include "qseries.hpp"
#include "special.hpp"

namespace dyadic {

struct BorelTheta {
  int r = 0;
  APReal value;
  int n_max = 0;
};

struct BorelResult {
  std::vector<BorelTheta> theta;
  APReal sum;
};

// The Borel transform of sum Q_n'(-1) t^n/n! has radius about 15
// (|Q_n'(-1)| < (cn)^n, c ~ 0.024); slices past it are not summable.
inline constexpr int kBorelMaxR = 13;

inline BorelResult borel_sum(const std::vector<Rational>& a, int Rmax, int prec) {
  if (Rmax < 0) throw DomainError("Rmax must be >= 0");
  BorelResult out{{}, APReal(0L, prec)};
  int Nmax = static_cast<int>(a.size()) - 1;
  for (int r = 0; r <= Rmax; ++r) {
    APReal th(0L, prec);
    for (int n = 0; n <= Nmax; ++n) {
      if (a[n] == 0) continue;
      th += APReal(a[n], prec + 64) * gamma_slice_scaled(n, r, prec + 64);
    }
    th = th.with_prec(prec);
    out.sum += th;
    out.theta.push_back({r, th, Nmax});
  }
  return out;
}

inline BorelResult borel_m2(int Nmax = 110, int Rmax = 11, int prec = 256) {
  if (Nmax < 0) throw DomainError("Nmax must be >= 0");
  if (Rmax > kBorelMaxR) throw RangeError("Borel slices beyond r = 13 lie outside the convergence disc");
  return borel_sum(q_derivatives_at_minus_one(Nmax), Rmax, prec);
}

// sum (-2)^n, whose Borel sum is 1/3. The slices decay like e^{-3r}, so
// Rmax = 12 leaves ~1e-17; Nmax = 120 resolves e^{-2t} up to t = 13.
inline APReal borel_toy(int Nmax = 120, int Rmax = 12, int prec = 256) {
  std::vector<Rational> a;
  Rational c = 1;
  for (int n = 0; n <= Nmax; ++n, c *= -2) a.push_back(c);
  return borel_sum(a, Rmax, prec).sum;
}

}  // namespace dyadic
