#pragma once

// Moments m_L = int (x/(x+1))^L dF from the truncated infinite system
//   m_s = sum_{L>=0} (-1)^L c_{L+s} C(L+s-1, s-1) m_L,   c_k = Li_k(1/2),
// and the quantities built from them.

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "special.hpp"
#include "stieltjes.hpp"

namespace dyadic {

struct MomentVector {
  int order = 0;             // U: unknowns m_1..m_U
  int prec = 0;              // precision of the returned values in bits
  std::vector<APReal> m;     // m[0] = 1, m[1..order]
  double residual = 0;       // max |(I - K) m - b| after refinement
  double correction = 0;     // size of the refinement step on m_1..m_8
  const APReal& operator[](int L) const { return m.at(L); }
  int size() const { return static_cast<int>(m.size()); }
};

namespace detail {

// Dense LU with partial pivoting, in place; perm[i] = source row.
inline void lu_factor(std::vector<std::vector<APReal>>& a, std::vector<int>& perm) {
  int n = static_cast<int>(a.size());
  perm.resize(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int prec = a[0][0].prec();
  APReal t(prec);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (mpfr_cmpabs(a[i][k].raw(), a[piv][k].raw()) > 0) piv = i;
    if (a[piv][k].is_zero()) throw SingularMatrixError("moment system is singular at this truncation");
    std::swap(a[piv], a[k]);
    std::swap(perm[piv], perm[k]);
    for (int i = k + 1; i < n; ++i) {
      mpfr_div(a[i][k].raw(), a[i][k].raw(), a[k][k].raw(), MPFR_RNDN);
      mpfr_srcptr l = a[i][k].raw();
      if (mpfr_zero_p(l)) continue;
      auto& ri = a[i];
      const auto& rk = a[k];
      for (int j = k + 1; j < n; ++j) {
        mpfr_mul(t.raw(), l, rk[j].raw(), MPFR_RNDN);
        mpfr_sub(ri[j].raw(), ri[j].raw(), t.raw(), MPFR_RNDN);
      }
    }
  }
}

inline std::vector<APReal> lu_solve(const std::vector<std::vector<APReal>>& lu, const std::vector<int>& perm,
                                    const std::vector<APReal>& b) {
  int n = static_cast<int>(lu.size());
  std::vector<APReal> y(n, APReal(lu[0][0].prec()));
  for (int i = 0; i < n; ++i) {
    APReal s = b[perm[i]];
    for (int j = 0; j < i; ++j) s -= lu[i][j] * y[j];
    y[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    APReal s = y[i];
    for (int j = i + 1; j < n; ++j) s -= lu[i][j] * y[j];
    y[i] = s / lu[i][i];
  }
  return y;
}

}  // namespace detail

// c_1 .. c_kmax (index 0 unused)
inline std::vector<APReal> polylog_half_table(int kmax, int prec) {
  std::vector<APReal> c(kmax + 1, APReal(prec));
  for (int k = 1; k <= kmax; ++k) c[k] = polylog_half(k, prec);
  return c;
}

// Rows of I - K for s = 1..U, columns L = 1..U.
inline std::vector<std::vector<APReal>> moment_matrix(int U, const std::vector<APReal>& c, int prec) {
  std::vector<std::vector<APReal>> a(U, std::vector<APReal>(U, APReal(prec)));
  auto fill = [&](int s0, int s1) {
    for (int s = s0; s < s1; ++s) {
      BigInt bin = 1;  // C(L+s-1, s-1), L = 0
      for (int L = 1; L <= U; ++L) {
        bin *= L + s - 1;
        mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), static_cast<unsigned long>(L));
        APReal v = APReal(bin, prec) * c[L + s].with_prec(prec);
        if (L % 2) v = -v;
        a[s - 1][L - 1] = -v;
      }
      a[s - 1][s - 1] += 1L;
    }
  };
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  int chunk = (U + workers - 1) / workers;
  for (int s0 = 1; s0 <= U; s0 += chunk) jobs.push_back(std::async(std::launch::async, fill, s0, std::min(U + 1, s0 + chunk)));
  for (auto& j : jobs) j.get();
  return a;
}

// Extra working bits for the solve: the system loses roughly 1.4 U bits to
// cancellation (binomials reach 2^(2U)).
inline int moment_guard_bits(int U) { return 64 + 3 * U / 2; }

// Solve (I - K) m = b with one refinement step whose residual is formed at
// twice the working precision; values are returned at `prec` bits.
inline MomentVector moments_solve(int U = 325, int prec = 512) {
  if (U < 2) throw DomainError("moment truncation needs U >= 2");
  if (prec < 64) throw PrecisionError("precision below 64 bits");
  int out_prec = prec;
  prec += moment_guard_bits(U);
  int hp = 2 * prec;
  auto c = polylog_half_table(2 * U, hp);
  auto hi = moment_matrix(U, c, hp);
  std::vector<std::vector<APReal>> lu(U, std::vector<APReal>(U, APReal(prec)));
  for (int i = 0; i < U; ++i)
    for (int j = 0; j < U; ++j) lu[i][j] = hi[i][j].with_prec(prec);
  std::vector<int> perm;
  detail::lu_factor(lu, perm);
  std::vector<APReal> b(U, APReal(prec)), bh(U, APReal(hp));
  for (int s = 1; s <= U; ++s) {
    bh[s - 1] = c[s];
    b[s - 1] = c[s].with_prec(prec);
  }
  auto x = detail::lu_solve(lu, perm, b);

  auto residual = [&](const std::vector<APReal>& xs) {
    std::vector<APReal> r(U, APReal(hp));
    for (int i = 0; i < U; ++i) {
      APReal s = bh[i];
      for (int j = 0; j < U; ++j) s -= hi[i][j] * xs[j].with_prec(hp);
      r[i] = s;
    }
    return r;
  };
  auto r = residual(x);
  std::vector<APReal> rl(U, APReal(prec));
  for (int i = 0; i < U; ++i) rl[i] = r[i].with_prec(prec);
  auto d = detail::lu_solve(lu, perm, rl);
  MomentVector mv;
  mv.order = U;
  mv.prec = out_prec;
  mv.m.assign(1, APReal(1L, out_prec));
  std::vector<APReal> xr;
  for (int i = 0; i < U; ++i) {
    APReal v = x[i].with_prec(hp) + d[i].with_prec(hp);
    xr.push_back(v.with_prec(prec));
    mv.m.push_back(v.with_prec(out_prec));
    if (i < 8) mv.correction = std::max(mv.correction, std::fabs(d[i].to_double()));
  }
  for (const auto& v : residual(xr)) mv.residual = std::max(mv.residual, std::fabs(v.to_double()));
  // a large first correction means the LU solve itself had no correct digits
  if (mv.correction > std::ldexp(1.0, -out_prec / 4))
    throw PrecisionError("moment solve ill-conditioned; retry with about " + std::to_string(2 * prec) + " bits");
  return mv;
}

// m(t) = sum_L m_L t^L / L!, straight from the series (alternating for t < 0)
inline APReal mgen(const APReal& t, const MomentVector& mv) {
  APReal s(0L, t.prec()), term(1L, t.prec());
  for (int L = 0; L < mv.size(); ++L) {
    s += mv[L].with_prec(t.prec()) * term;
    term = term * t / (L + 1);
  }
  return s;
}

// m(-t) and m'(-t) for t >= 0 from positive series only:
// m(-t) = e^-t m(t), m'(-t) = e^-t sum (m_L - m_{L+1}) t^L / L!
inline std::pair<APReal, APReal> mgen_negative(const APReal& t, const MomentVector& mv) {
  if (t < 0.0) throw DomainError("mgen_negative needs t >= 0");
  int prec = t.prec();
  APReal a(0L, prec), d(0L, prec), term(1L, prec);
  for (int L = 0; L + 1 < mv.size(); ++L) {
    a += mv[L].with_prec(prec) * term;
    d += (mv[L] - mv[L + 1]).with_prec(prec) * term;
    term = term * t / (L + 1);
  }
  APReal e = exp(-t);
  return {a * e, d * e};
}

struct MGenValue {
  APReal m, M;  // m(t) and M(t) = m(t)/(2 - e^t)
};

inline MGenValue mgen_eval(const APReal& t, const MomentVector& mv) {
  APReal l2 = APReal::log2(t.prec());
  if (abs(t - l2) < 1e-6) throw PoleError("M(t) has a pole at t = log 2");
  APReal m = mgen(t, mv);
  return {m, m / (2 - exp(t))};
}

// c_0 = m(log 2) / (2 log 2)
inline APReal c0_constant(const MomentVector& mv) {
  APReal l2 = APReal::log2(mv.prec);
  return mgen(l2, mv) / (2 * l2);
}

// Number of leading moments trusted for a truncation U (accuracy degrades
// past roughly 0.38 U).
inline int accurate_moment_order(int U) { return std::max(2, static_cast<int>(0.38 * U)); }

struct AlphaValue {
  APReal alpha;
  int digits;  // estimated correct decimal digits
};

// alpha = log 2 / (2A), A = log 2 - sum_{L>=1} m_L / (L 2^L)
inline AlphaValue hausdorff_alpha(const MomentVector& mv) {
  if (mv.order < 40) throw DomainError("hausdorff_alpha needs at least 40 moments");
  int prec = mv.prec;
  APReal l2 = APReal::log2(prec), A = l2;
  for (int L = 1; L <= mv.order; ++L) A -= ldexp(mv[L], -L) / L;
  // error budget: m_1 accuracy and the untrusted tail past the accurate order
  int La = std::min(mv.order, accurate_moment_order(mv.order));
  double e1 = std::fabs((mv[1] - APReal(0.5, prec)).to_double());
  double tail = std::ldexp(mv[La].to_double(), -La) / La;
  double err = std::max({e1, tail, std::ldexp(1.0, -prec)});
  return {l2 / (2 * A), static_cast<int>(std::floor(-std::log10(err)))};
}

// ---------------------------------------------------------------- B_{L,T}(p)

// B_{L,T}(p) = sum_{n>=0} 2^-(n+1) p^(-Tn) W_n(p)^L, truncated
template <class R>
R blt_series(int L, int T, const R& p, int terms) {
  R one = p / p, s = one - one, half_pow = one / 2, pT = one / detail::ipow(p, T), pTn = one;
  for (int n = 0; n < terms; ++n) {
    R w = n == 0 ? one - one : wall_W(n, p);
    R wl = L == 0 ? one : detail::ipow(w, L);
    s += half_pow * pTn * wl;
    half_pow = half_pow / 2;
    pTn = pTn * pT;
  }
  return s;
}

// Exact closed form num(p)/den(p): expanding W_n = (1 - p^-n)/(p - 1),
// B_{L,T} = (p-1)^-L sum_k C(L,k) (-1)^k p^(T+k) / (2p^(T+k) - 1).
struct BltClosedForm {
  Polynomial num, den;
  Rational eval(const Rational& p) const {
    Rational d = den.eval(p);
    if (d == 0) throw PoleError("B_{L,T} pole");
    return num.eval(p) / d;
  }
  template <class R>
  R eval_as(const R& p) const {
    auto horner = [&](const Polynomial& q) {
      R s = p - p;
      for (int i = q.degree(); i >= 0; --i) s = s * p + real_like(p, q.coeff(i));
      return s;
    };
    return horner(num) / horner(den);
  }
};

inline BltClosedForm blt_closed_form(int L, int T) {
  if (L < 0 || T < 0) throw DomainError("B_{L,T} needs L, T >= 0");
  std::vector<Polynomial> f;
  for (int k = 0; k <= L; ++k) f.push_back(Polynomial::monomial(2, T + k) - Polynomial{1});
  Polynomial den{1}, num;
  for (const auto& q : f) den = den * q;
  for (int k = 0; k <= L; ++k) {
    Polynomial t = Polynomial::monomial(Rational(binomial(L, k)) * (k % 2 ? -1 : 1), T + k);
    for (int j = 0; j <= L; ++j)
      if (j != k) t = t * f[j];
    num += t;
  }
  num = num.exact_div(pow(Polynomial{-1, 1}, L));
  return {num, den};
}

// ----------------------------------------------------------- relation checks

struct RelationReport {
  double M1_formula = 0;   // |M_1(p) - (p^2+2)/(4p-2)|
  double prop43 = 0;       // max_L |M_L - sum_s C(L,s) m_s B_{L-s,s}|
  double symmetry = 0;     // max_L |m_L - sum_s C(L,s)(-1)^s m_s p^(L-s)|
};

// Moments m_0..m_Lmax and M_1..M_Lmax of the p-curve, any source.
inline RelationReport moment_relations(double p, const std::vector<double>& m, const std::vector<double>& M) {
  RelationReport r;
  int Lmax = static_cast<int>(m.size()) - 1;
  r.M1_formula = std::fabs(M[1] - (p * p + 2) / (4 * p - 2));
  for (int L = 1; L <= Lmax && L < static_cast<int>(M.size()); ++L) {
    double s = 0, sym = 0;
    for (int k = 0; k <= L; ++k) {
      double c = binomial(L, k).get_d();
      s += c * m[k] * blt_closed_form(L - k, k).eval_as(p);
      sym += c * (k % 2 ? -1 : 1) * m[k] * std::pow(p, L - k);
    }
    r.prop43 = std::max(r.prop43, std::fabs(M[L] - s));
    r.symmetry = std::max(r.symmetry, std::fabs(m[L] - sym));
  }
  return r;
}

// The same relations with moments from Stieltjes sums over N cells.
inline RelationReport moment_relations_check(double p, int Lmax = 4, int N = 4000) {
  auto g = stieltjes_grid(p, N);
  std::vector<double> m{1.0}, M{1.0};
  for (int L = 1; L <= Lmax; ++L) {
    double s = 0;
    for (size_t k = 0; k < g.x.size(); ++k) s += std::pow(g.x[k], L) * g.weight[k];
    m.push_back(2 * s);
    M.push_back(integrate_dFp(g, power_kernel(L)));
  }
  return moment_relations(p, m, M);
}

// ------------------------------------------------------------ asymptotics

struct AsymptRow {
  int L;
  double log_m_over_sqrt;  // log m_L / sqrt L
  double model_ratio;      // m_L / ((4 pi^2 log 2)^(1/4) c_0 L^(1/4) C^sqrt(L))
};

struct AsymptReport {
  double C = 0;  // fitted on [20, accurate order]
  std::vector<AsymptRow> rows;
};

inline AsymptReport asympt_report(const MomentVector& mv) {
  AsymptReport rep;
  double c0 = c0_constant(mv).to_double();
  double K = std::pow(4 * M_PI * M_PI * std::log(2.0), 0.25) * c0;
  int La = accurate_moment_order(mv.order);
  // least squares of log m_L - log K - log(L)/4 against sqrt(L), no intercept
  double sxy = 0, sxx = 0;
  for (int L = 20; L <= std::min(La, mv.order); ++L) {
    double x = std::sqrt(double(L)), y = std::log(mv[L].to_double()) - std::log(K) - 0.25 * std::log(double(L));
    sxy += x * y;
    sxx += x * x;
  }
  double logC = sxy / sxx;
  rep.C = std::exp(logC);
  for (int L = 1; L <= mv.order; ++L) {
    double v = mv[L].to_double();
    double model = K * std::pow(double(L), 0.25) * std::exp(logC * std::sqrt(double(L)));
    rep.rows.push_back({L, v > 0 ? std::log(v) / std::sqrt(double(L)) : NAN, v / model});
  }
  return rep;
}

}  // namespace dyadic
