#pragma once

// The Laurent polynomials Q_n(z) attached to the expansion of G around z = 1,
// Q_0 = -1/(2z),
// Q_n = 1/2 sum_{j<n} Q_{n-j-1}^(j)(-1)/j! (z^j - z^-(j+2)),
// and the palindromic polynomials D_n = Q_n z^(n+1) / ((z+1)(z-1)).

#include <vector>

#include "rational.hpp"

namespace dyadic {

// sum_e c[e - lo] z^e
struct Laurent {
  int lo = 0;
  std::vector<Rational> c;

  Rational coeff(int e) const {
    int i = e - lo;
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rational(0);
  }
  void add(int e, const Rational& v) {
    if (c.empty()) {
      lo = e;
      c.push_back(v);
      return;
    }
    if (e < lo) {
      c.insert(c.begin(), static_cast<size_t>(lo - e), Rational(0));
      lo = e;
    }
    if (e - lo >= static_cast<int>(c.size())) c.resize(e - lo + 1);
    c[e - lo] += v;
  }
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }

  // Taylor coefficients at -1: t_j = f^(j)(-1)/j!, j = 0..jmax
  std::vector<Rational> taylor_at_minus_one(int jmax) const {
    std::vector<Rational> t(jmax + 1);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      long e = lo + static_cast<long>(i);
      // generalized binomial C(e, j) is an integer for every integer e
      BigInt b = 1;
      for (int j = 0; j <= jmax; ++j) {
        if (j > 0) {
          b *= e - (j - 1);
          mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(j));
        }
        if (b == 0) break;
        if (((e - j) % 2 + 2) % 2)
          t[j] -= c[i] * b;
        else
          t[j] += c[i] * b;
      }
    }
    return t;
  }
};

class QSeries {
 public:
  // Q_0..Q_N
  void extend_to(int N) {
    if (N < 0) throw DomainError("negative order");
    if (N + 1 > cap_) rebuild(N + 1);
  }
  int size() const { return static_cast<int>(q_.size()); }

  const Laurent& Q(int n) {
    extend_to(n);
    return q_[n];
  }

  // Q_n'(-1)
  Rational dQ_minus_one(int n) {
    extend_to(n);
    return taylor_[n].size() > 1 ? taylor_[n][1] : q_[n].taylor_at_minus_one(1)[1];
  }

  // D_n = Q_n z^(n+1) / (z^2 - 1), n >= 1
  Polynomial D(int n) {
    if (n < 1) throw DomainError("D_n needs n >= 1");
    const Laurent& q = Q(n);
    std::vector<Rational> p(static_cast<size_t>(q.hi() + n + 2));
    for (int e = q.lo; e <= q.hi(); ++e) {
      int k = e + n + 1;
      if (k < 0) {
        if (q.coeff(e) != 0) throw NonPolynomialError("z^(n+1) Q_n has a pole at 0");
        continue;
      }
      p[k] = q.coeff(e);
    }
    return Polynomial(std::move(p)).exact_div(Polynomial{-1, 0, 1});
  }

 private:
  // Taylor data at -1 must reach order N - n for Q_n, so a larger N recomputes it.
  void rebuild(int count) {
    cap_ = count;
    int N = count - 1;
    q_.clear();
    taylor_.clear();
    Laurent q0;
    q0.add(-1, make_rational(-1, 2));
    q_.push_back(q0);
    taylor_.push_back(q0.taylor_at_minus_one(std::max(N, 1)));
    for (int n = 1; n <= N; ++n) {
      Laurent q;
      for (int j = 0; j < n; ++j) {
        Rational a = taylor_[n - j - 1][j] / 2;
        if (a == 0) continue;
        q.add(j, a);
        q.add(-j - 2, -a);
      }
      q_.push_back(q);
      taylor_.push_back(q.taylor_at_minus_one(std::max(N - n, 1)));
    }
  }

  int cap_ = 0;
  std::vector<Laurent> q_;
  std::vector<std::vector<Rational>> taylor_;
};

// Q_n'(-1), n = 0..N
inline std::vector<Rational> q_derivatives_at_minus_one(int N) {
  QSeries q;
  q.extend_to(N);
  std::vector<Rational> out;
  for (int n = 0; n <= N; ++n) out.push_back(q.dQ_minus_one(n));
  return out;
}

}  // namespace dyadic
