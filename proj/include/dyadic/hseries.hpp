#pragma once

// The rational functions H_n(z) = B_n(z) / (z - 2)^(n+1) whose alternating
// sum is the Stieltjes transform G(z) of the ? measure.
//
// H_n is fixed by a linear functional equation: the known lower terms give a
// polynomial k_n of degree <= n-1, and B_n solves Y_n B_n = k_n where Y_n is
// the matrix of P -> P(z+1) - P(2z)/2^(n+1) + (-1)^(n+1) z^(n-1) P(2/z)/2^(n+1)
// on polynomials of degree < n, written in descending coefficients.

#include <vector>

#include "matrix.hpp"
#include "ratfunc.hpp"

namespace dyadic {

// Y_n in the descending basis z^(n-1), ..., z, 1.
inline RationalMatrix lmap_matrix(int n) {
  if (n < 1) throw DomainError("lmap_matrix needs n >= 1");
  RationalMatrix y(n, n);
  Rational inv = pow2(-(n + 1));
  for (int ty = 1; ty <= n; ++ty)
    for (int tx = 1; tx <= ty; ++tx) y(ty - 1, tx - 1) = Rational(binomial(n - tx, n - ty));
  for (int t = 1; t <= n; ++t) y(t - 1, t - 1) -= pow2(n - t) * inv;
  Rational sgn = (n + 1) % 2 ? -1 : 1;
  for (int t = 1; t <= n; ++t) y(t - 1, n - t) += sgn * pow2(t - 1) * inv;
  return y;
}

// det Y_n = prod_{i=1}^m (4^i - 1) / 2^(m^2+m), m = floor(n/2)
inline Rational lmap_det(int n) {
  if (n < 1 || n > 30) throw RangeError("lmap_det needs 1 <= n <= 30");
  int m = n / 2;
  Rational d = 1;
  for (int i = 1; i <= m; ++i) d *= pow2(2 * i) - 1;
  return d * pow2(-(m * m + m));
}

class HSeries {
 public:
  HSeries() { B_.push_back(Polynomial{-1}); }

  // B_0..B_N available afterwards.
  void extend_to(int N) {
    if (N < 0) throw DomainError("negative order");
    while (static_cast<int>(B_.size()) <= N) next();
  }

  int size() const { return static_cast<int>(B_.size()); }
  const Polynomial& B(int n) {
    extend_to(n);
    return B_[n];
  }
  RationalFunction H(int n) { return {B(n), 2, n + 1}; }

  // H_n'(0)
  Rational dH0(int n) {
    const Polynomial& b = B(n);
    return (-2 * b.coeff(1) - (n + 1) * b.coeff(0)) / pow(Rational(-2), n + 2);
  }

  // k_n: the right-hand side of Y_n B_n = k_n, built from H_0..H_{n-1}.
  Polynomial k_poly(int n) {
    if (n < 1) throw DomainError("k_poly needs n >= 1");
    extend_to(n - 1);
    Polynomial zm1{-1, 1};
    Polynomial J;
    for (int j = 1; j <= n; ++j) J += scaled(n - j, j).shift_degree(j) * Rational(2);
    for (int j = 1; j <= n - 1; ++j) J += scaled(n - j - 1, j).shift_degree(j) * zm1;
    J += scaled(n - 1, 0) * zm1;
    J /= Rational(2);

    // k = J(z) - (-1)^(n+1) z^(n-1) J(1/z): exponents outside [0, n-1] must cancel.
    int d = J.degree();
    int lo = std::min(0, n - 1 - d), hi = std::max(d, n - 1);
    Rational sgn = (n + 1) % 2 ? -1 : 1;
    std::vector<Rational> k(n);
    for (int e = lo; e <= hi; ++e) {
      Rational v = J.coeff(e) - sgn * J.coeff(n - 1 - e);
      if (e < 0 || e >= n) {
        if (v != 0) throw NonPolynomialError("k_n is not a polynomial of degree < n");
      } else {
        k[e] = v;
      }
    }
    return Polynomial(std::move(k));
  }

 private:
  void next() {
    int n = size();
    Polynomial k = k_poly(n);
    std::vector<Rational> a(n);
    for (int t = 1; t <= n; ++t) a[t - 1] = k.coeff(n - t);
    auto b = mat_solve_exact(lmap_matrix(n), a);
    std::vector<Rational> c(n);
    for (int s = 1; s <= n; ++s) c[n - s] = b[s - 1];
    B_.push_back(Polynomial(std::move(c)));
  }

  // P_{m,j}(2z) / (2^(m+1+j) j!), where H_m^(j) = P_{m,j} / (z-2)^(m+1+j)
  const Polynomial& scaled(int m, int j) {
    if (static_cast<int>(deriv_.size()) <= m) {
      deriv_.resize(m + 1);
      scaled_.resize(m + 1);
    }
    auto& dm = deriv_[m];
    auto& sm = scaled_[m];
    if (dm.empty()) dm.push_back(B_[m]);
    while (static_cast<int>(dm.size()) <= j) {
      int jj = static_cast<int>(dm.size()) - 1;
      const Polynomial& p = dm.back();
      dm.push_back(p.derivative() * Polynomial{-2, 1} - p * Rational(m + 1 + jj));
    }
    while (static_cast<int>(sm.size()) <= j) {
      int jj = static_cast<int>(sm.size());
      sm.push_back(dm[jj].scale(2) / (pow2(m + 1 + jj) * Rational(factorial(jj))));
    }
    return sm[j];
  }

  std::vector<Polynomial> B_;
  std::vector<std::vector<Polynomial>> deriv_, scaled_;
};

// H_0..H_N
inline std::vector<RationalFunction> h_series(int N) {
  HSeries h;
  h.extend_to(N);
  std::vector<RationalFunction> out;
  for (int n = 0; n <= N; ++n) out.push_back(h.H(n));
  return out;
}

}  // namespace dyadic
