#pragma once

// The dyadic period function G(z) = int dF(x)/(x + 1 - z), analytic off the
// cut [1, inf), by three routes: the H-series, functional-equation reduction
// to the Taylor series sum m_L z^(L-1), and Stieltjes sums. Also the
// functional-equation, contour and integral-equation checks.

#include <array>
#include <functional>
#include <limits>

#include "hseries.hpp"
#include "moments.hpp"

namespace dyadic {

inline APComplex apc(double re, double im, int prec) { return make_apcomplex(re, im, prec); }
inline APReal cabs(const APComplex& z) { return abs(z); }

// ----------------------------------------------------------------- H-series

struct HSum {
  APComplex value;
  std::vector<double> term_abs;  // |H_n(z)| for convergence diagnostics
};

template <class R>
Complex<R> eval_poly(const Polynomial& P, const Complex<R>& z) {
  Complex<R> s(real_like(z.re, 0.0));
  for (int i = P.degree(); i >= 0; --i) s = s * z + Complex<R>(real_like(z.re, P.coeff(i)));
  return s;
}

// sum_{n<=N} (-1)^n H_n(z)
inline HSum g_via_h(const APComplex& z, int N, HSeries& h) {
  APComplex zm2 = z - 2L;
  if (cabs(zm2) == APReal(0L, z.re.prec())) throw PoleError("H_n has a pole at z = 2");
  h.extend_to(N);
  HSum out{APComplex(APReal(0L, z.re.prec())), {}};
  APComplex den = zm2;
  for (int n = 0; n <= N; ++n) {
    APComplex t = eval_poly(h.B(n), z) / den;
    out.term_abs.push_back(cabs(t).to_double());
    out.value = n % 2 ? out.value - t : out.value + t;
    den = den * zm2;
  }
  return out;
}

inline HSum g_via_h(const APComplex& z, int N) {
  HSeries h;
  return g_via_h(z, N, h);
}

// --------------------------------------------------------------- reduction

struct GValue {
  APComplex value;
  double error = 0;  // estimate from the untrusted moment tail
  int max_depth = 0;
};

// Evaluates G from a MomentVector by mapping every argument into |w| <= rho
// with the rules
//   R1: G(z) = sum_{n>=0} 2^-(n+1) [1/(n+1-z) - G(-1/(n+1-z)) / (n+1-z)^2]
//   R2: G(z) = -G(z/(z-1)) / (z-1)^2 - 1/(z-1)
//   R3: G(z) = G(z-1)/2 + sum_{n>=1} 2^-(n+1) [n/a_n + G((z-1)/a_n)/a_n^2],
//       a_n = 1 + n(1-z)
//   A:  G(z) = G(z-1)/2 - G(1/(z-1)) / (2(z-1)^2) - 1/(2(z-1))
// (A is the three-term equation, R1 iterates it, R2 is the symmetry, R3 is
// R1 conjugated by R2), choosing at each step the rule whose arguments are
// smallest. Only A is regular at z = 2, which the others cycle around. R2 is
// an involution, so it is never applied twice in a row.
class GReducer {
 public:
  explicit GReducer(const MomentVector& mv, int prec = 0, double rho = 0.6)
      : mv_(mv), prec_(prec ? prec : mv.prec), rho_(rho) {
    for (int L = 1; L < mv.size(); ++L) m_.push_back(mv[L].with_prec(prec_));
    trusted_ = std::min(mv.order, accurate_moment_order(mv.order));
    terms_ = prec_ + 16;
  }

  GValue operator()(const APComplex& z0) {
    APComplex z{z0.re.with_prec(prec_), z0.im.with_prec(prec_)};
    if (z.im.is_zero() && z.re > 1.0) throw DomainError("z lies on the cut (1, inf) where G is not defined");
    rmax_ = 0;
    depth_ = 0;
    APComplex v = eval(z, 0, false);
    double err = m_[trusted_ - 1].to_double() * std::pow(rmax_, trusted_ - 1) / std::max(1e-300, 1 - rmax_);
    return {v, err, depth_};
  }

 private:
  static constexpr int kGuard = 64;

  APComplex taylor(const APComplex& w) {
    double r = cabs(w).to_double();
    rmax_ = std::max(rmax_, r);
    int n = static_cast<int>(m_.size());
    if (r > 0 && r < 1) {
      double need = (prec_ + 8) * std::log(2.0) / -std::log(r) + 2;
      n = std::min<int>(n, static_cast<int>(need));
    }
    APComplex s(APReal(0L, prec_));
    for (int i = n - 1; i >= 0; --i) s = s * w + APComplex(m_[i]);
    return s;
  }

  double score_r1(const CD& z) const {
    double best = std::numeric_limits<double>::infinity();
    long c = std::lround(z.re);
    for (long k = std::max(1L, c - 1); k <= std::max(1L, c + 1); ++k) best = std::min(best, abs(CD{k - z.re, -z.im}));
    return 1 / best;
  }
  double score_r3(const CD& z) const {
    CD u = z - CD{1, 0};
    double s = abs(u);
    for (int n = 1; n <= 64; ++n) s = std::max(s, abs(u) / abs(CD{1, 0} - u * double(n)));
    return s;
  }
  double score_r2(const CD& z) const { return abs(z) / abs(z - CD{1, 0}); }
  double score_a(const CD& z) const {
    double r = abs(z - CD{1, 0});
    return std::max(r, 1 / r);
  }

  APComplex eval(const APComplex& z, int depth, bool after_r2) {
    if (depth > kGuard) throw GuardError("G reduction did not terminate within 64 steps");
    depth_ = std::max(depth_, depth);
    CD zd = to_cd(z);
    if (abs(zd) <= rho_) return taylor(z);
    double s1 = score_r1(zd), s2 = after_r2 ? std::numeric_limits<double>::infinity() : score_r2(zd), s3 = score_r3(zd), sa = score_a(zd);
    APComplex one(APReal(1L, prec_));
    if (sa < s1 && sa < s2 && sa < s3) {
      APComplex u = z - one;
      APComplex iu = one / u;
      APReal half(0.5, prec_);
      return (eval(u, depth + 1, false) - eval(iu, depth + 1, false) * iu * iu - iu) * half;
    }
    if (s1 <= s2 && s1 <= s3) {
      APComplex s(APReal(0L, prec_));
      APReal w = ldexp(APReal(1L, prec_), -1);
      for (int n = 0; n < terms_; ++n) {
        APComplex a = APComplex(APReal(n + 1, prec_)) - z;
        APComplex ia = one / a;
        s += (ia - eval(-ia, depth + 1, false) * ia * ia) * w;
        w = ldexp(w, -1);
      }
      return s;
    }
    if (s2 <= s3) {
      APComplex u = z - one;
      APComplex iu = one / u;
      return -eval(z * iu, depth + 1, true) * iu * iu - iu;
    }
    APComplex u = z - one;
    APComplex s = eval(u, depth + 1, false) * APReal(0.5, prec_);
    APReal w = ldexp(APReal(1L, prec_), -2);
    for (int n = 1; n < terms_; ++n) {
      APComplex a = one - u * APReal(n, prec_);
      APComplex ia = one / a;
      s += (ia * APReal(n, prec_) + eval(u * ia, depth + 1, false) * ia * ia) * w;
      w = ldexp(w, -1);
    }
    return s;
  }

  const MomentVector& mv_;
  int prec_;
  double rho_;
  std::vector<APReal> m_;
  int trusted_ = 0, terms_ = 0;
  double rmax_ = 0;
  int depth_ = 0;
};

inline GValue g_reduce_eval(const APComplex& z, const MomentVector& mv, int prec = 0) {
  GReducer g(mv, prec);
  return g(z);
}

// ------------------------------------------------------- functional equations

using GEvaluator = std::function<APComplex(const APComplex&)>;

// |1/z + (p/z^2) G(p/z) + 2 G(z+1) - p G(pz)| and
// |G(z+1) + G(1/z + 1)/z^2 + 1/z|
inline std::array<APReal, 2> feq_residual(const APReal& p, const APComplex& z, const GEvaluator& G) {
  APComplex one(APReal(1L, z.re.prec()));
  APComplex iz = one / z;
  APComplex zp1 = z + one;
  APComplex g1 = G(zp1);
  APComplex three = iz + G(iz * p) * p * iz * iz + g1 * APReal(2L, z.re.prec()) - G(z * p) * p;
  APComplex sym = g1 + G(iz + one) * iz * iz + iz;
  return {cabs(three), cabs(sym)};
}

// G_2(z) = 1/(2 - z)
inline APComplex g_point_mass(const APComplex& z) { return APComplex(APReal(1L, z.re.prec())) / (APReal(2L, z.re.prec()) - z); }

// --------------------------------------------------------------- contour

// (1/(2 pi i)) int_{|z|=R} G(z) dz by the trapezoid rule on
// nodes 2 pi (k + 1/2)/M, which never sit on the positive real axis.
inline APComplex contour_integral(double R, int M, const GEvaluator& G, int prec) {
  if (M < 4) throw DomainError("contour needs M >= 4 nodes");
  APReal pi = APReal::pi(prec), Rr(R, prec);
  APComplex s(APReal(0L, prec));
  for (int k = 0; k < M; ++k) {
    APReal th = pi * (2 * k + 1) / M;
    APComplex z{Rr * cos(th), Rr * sin(th)};
    s += G(z) * z;  // dz = i z dtheta
  }
  return s / APReal(M, prec);
}

// Residue statement: -1 when the circle encloses the support of G_p. For p = 1
// the support [1, inf) is unbounded and the circle only encloses [1, R], so
// the trapezoid sum converges to -F(R - 1) instead.
inline APComplex contour_check(double p, double R, int M, const GEvaluator& G, int prec) {
  if (p != 1) {
    double far = p > 2 ? p : 1 + 1 / (p - 1);
    if (p == 2) far = 2;
    if (R <= far + 1e-3) throw DomainError("contour must enclose the curve");
  } else if (R * std::sin(3.14159265358979323846 / M) < 1e-3) {
    throw DomainError("contour nodes too close to the cut");
  }
  return contour_integral(R, M, G, prec);
}

// ------------------------------------------------------- integral equation

struct IntegralEqResult {
  APReal lhs, rhs;
  double residual = 0;
  double tail_bound = 0;  // (2e^s + 1) m(-Tmax) bounds the dropped tail
};

// m_p(-s) = int_0^inf m_p'(-t) (2 e^s J0(2 sqrt(p s t)) - J0(2 sqrt(s t))) dt
// for p = 1 (moments) and p = 2 (m_2(t) = e^t); t = u^2 with Gauss-Legendre panels.
inline IntegralEqResult integral_eq_residual(int p, double s, double Tmax, const MomentVector* mv, int prec = 128,
                                             int panels = 48, int nodes = 24) {
  if (p != 1 && p != 2) throw DomainError("integral equation check covers p = 1 and p = 2");
  if (!(s > 0)) throw DomainError("integral equation needs s > 0");
  if (p == 1 && !mv) throw DomainError("p = 1 needs a moment vector");
  APReal S(s, prec), one(1L, prec);
  auto mneg = [&](const APReal& t) -> std::pair<APReal, APReal> {
    if (p == 2) {
      APReal e = exp(-t);
      return {e, e};
    }
    return mgen_negative(t, *mv);
  };
  APReal es2 = 2 * exp(S);
  auto f = [&](const APReal& u) {
    APReal t = u * u;
    APReal dm = mneg(t).second;
    APReal a = bessel_j0(2 * sqrt(APReal(p, prec) * S * t), prec);
    APReal b = p == 1 ? a : bessel_j0(2 * sqrt(S * t), prec);
    return dm * (es2 * a - b) * 2 * u;
  };
  GaussLegendre<APReal> gl(nodes, one);
  APReal um = sqrt(APReal(Tmax, prec)), h = um / panels, rhs(0L, prec);
  for (int k = 0; k < panels; ++k) rhs += gl.integrate(f, h * k, h * (k + 1));
  IntegralEqResult r{mneg(S).first, rhs, 0, 0};
  r.residual = abs(r.lhs - r.rhs).to_double();
  r.tail_bound = ((es2 + 1) * mneg(APReal(Tmax, prec)).first).to_double();
  return r;
}

// -------------------------------------------------------------- dyadic double sum

// sum_{n,m>=0} (2^(n+m+2) - 2^(n+1) + 1)^-2
inline APReal dyadic_double_sum(int prec = 128) {
  APReal s(0L, prec), one(1L, prec);
  int lim = prec / 2 + 8;
  for (int n = 0; n <= lim; ++n)
    for (int m = 0; n + m <= lim; ++m) {
      APReal d = ldexp(one, n + m + 2) - ldexp(one, n + 1) + 1;
      s += one / (d * d);
    }
  return s;
}

}  // namespace dyadic
