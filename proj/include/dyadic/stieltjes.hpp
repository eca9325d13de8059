#pragma once

// Riemann-Stieltjes sums for integrals against dF_p. Since F_p(X(p,t)) = F(t),
//   int w(u) dF_p(u) = int_0^inf w(X(p,t)) dF(t),
// and t -> 1/t folds [1, inf) onto [0, 1] with X(p, 1/t) = 1/X(p, t).

#include <functional>
#include <vector>

#include "ptree.hpp"

namespace dyadic {

enum class Tag { Left, Mid, Right };

// Cells [k/N, (k+1)/N] of [0, 1] weighted by their F increments, with the
// X-value at the chosen tag of each cell.
struct StieltjesGrid {
  double p = 1;
  std::vector<double> weight, x;
};

inline StieltjesGrid stieltjes_grid(double p, int N, Tag tag = Tag::Mid) {
  if (N < 1) throw DomainError("partition needs N >= 1");
  if (!(p >= 1)) throw DomainError("Stieltjes sums need real p >= 1");
  StieltjesGrid g;
  g.p = p;
  Rational prev = 0;
  for (int k = 0; k < N; ++k) {
    Rational hi = make_rational(k + 1, N);
    Rational Fhi = qmark_F(hi);
    g.weight.push_back(Rational(Fhi - prev).get_d());
    prev = Fhi;
    Rational t = tag == Tag::Left ? make_rational(k, N) : tag == Tag::Right ? hi : make_rational(2 * k + 1, 2 * N);
    g.x.push_back(x_map(p, t));
  }
  return g;
}

// int_0^inf w(X(p,t)) dF(t) = sum_k weight_k [w(X_k) + w(1/X_k)]
template <class W>
auto integrate_dFp(const StieltjesGrid& g, W w) {
  using V = decltype(w(1.0));
  V s = w(1.0) * 0.0;
  for (size_t k = 0; k < g.x.size(); ++k) {
    double X = g.x[k];
    V a = X > 0 ? w(1 / X) : w(1e300) * 0.0;  // 1/X(0) only when p = 1, weight 0 there
    s = s + (w(X) + a) * g.weight[k];
  }
  return s;
}

// Kernels
inline auto power_kernel(int L) {
  return [L](double X) { return std::pow(X, L); };
}
inline auto resolvent_kernel(CD z) {
  return [z](double X) {
    CD d = CD{X + 1, 0} - z;
    if (abs(d) < 1e-3) throw DomainError("z lies on the integration curve");
    return CD{1, 0} / d;
  };
}
// exp(t pX/(X+1))
inline auto exp_kernel(double t, double p) {
  return [t, p](double X) { return std::exp(t * p * X / (X + 1)); };
}

// m_L(p) = 2 int_0^1 X(p,x)^L dF(x): only the lower half of the fold
inline double p_moment(double p, int L, int N = 4000) {
  if (L < 1) throw DomainError("p_moment needs L >= 1");
  auto g = stieltjes_grid(p, N);
  double s = 0;
  for (size_t k = 0; k < g.x.size(); ++k) s += std::pow(g.x[k], L) * g.weight[k];
  return 2 * s;
}

// G_p(z) = int 1/(X(p,x) + 1 - z) dF(x)
inline CD g_stieltjes(CD z, double p = 1, int N = 3560) {
  if (z.im == 0 && z.re > 1 && p == 1) throw DomainError("z on the cut (1, inf)");
  return integrate_dFp(stieltjes_grid(p, N), resolvent_kernel(z));
}

}  // namespace dyadic
