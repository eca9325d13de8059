#pragma once

// The p-deformed Calkin-Wilf tree Q_p generated from 1 by
// T(x) = (x+1)/p and U(x) = px/(x+1), its continued-fraction coordinates,
// and the map X(p, x) sending the ordinary tree (p = 1) onto Q_p.

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <vector>

#include "complex.hpp"
#include "qmark.hpp"

namespace dyadic {

constexpr long kInfinity = -1;  // stands for the quotient infinity

// ---------------------------------------------------------------- Stern polys

// T_1 = 1, T_2 = p, T_2n = p T_n,
// T_{2n-1} = T_{n-1} + p^(-e) T_n with e = 1 iff n is a power of two.
inline std::vector<Polynomial> stern_polys(long N) {
  if (N < 1) throw DomainError("stern_poly needs n >= 1");
  std::vector<Polynomial> t(N + 1);
  t[1] = Polynomial{1};
  if (N >= 2) t[2] = Polynomial{0, 1};
  for (long k = 3; k <= N; ++k) {
    if (k % 2 == 0) {
      t[k] = t[k / 2].shift_degree(1);
    } else {
      long n = (k + 1) / 2;
      Polynomial tn = t[n];
      if ((n & (n - 1)) == 0) {
        if (tn.coeff(0) != 0) throw NonPolynomialError("T_n not divisible by p");
        std::vector<Rational> c(tn.coeffs().begin() + 1, tn.coeffs().end());
        tn = Polynomial(std::move(c));
      }
      t[k] = t[n - 1] + tn;
    }
  }
  return t;
}

inline Polynomial stern_poly(long n) { return stern_polys(n)[n]; }

// Values of generation k of Q_p as (numerator, denominator) polynomials in p.
inline std::vector<std::pair<Polynomial, Polynomial>> symbolic_generation(int k) {
  std::vector<std::pair<Polynomial, Polynomial>> g{{Polynomial{1}, Polynomial{1}}};
  Polynomial p{0, 1};
  for (int i = 1; i < k; ++i) {
    std::vector<std::pair<Polynomial, Polynomial>> next;
    for (const auto& [n, d] : g) {
      next.push_back({p * n, n + d});  // U
      next.push_back({n + d, p * d});  // T
    }
    g.swap(next);
  }
  return g;
}

// ---------------------------------------------------------- Wall coefficients

namespace detail {
template <class S>
S ipow(const S& p, long e) {
  S one = p / p, r = one, b = p;
  bool neg = e < 0;
  unsigned long u = neg ? -e : e;
  while (u) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return neg ? one / r : r;
}
}  // namespace detail

// W_a = (p^a - 1)/(p^(a+1) - p^a) = p^-1 + ... + p^-a; W_a(1) = a.
// The sum form stays finite for large a (Re p >= 1 throughout).
template <class S>
S wall_W(long a, const S& p) {
  S one = p / p, q = one / p, s = one - one, t = q;
  for (long k = 0; k < a; ++k) {
    s += t;
    t = t * q;
  }
  return s;
}

// T_{a,b} = (p-1)^2 p^b / ((p^a - 1)(p^b - 1)) = p^-a / (W_a W_b);
// T_{a,inf} = (p-1)^2/(p^a - 1) = (p-1) p^-a / W_a.
template <class S>
S wall_T(long a, long b, const S& p) {
  if (a < 1 || (b < 1 && b != kInfinity)) throw DomainError("wall_T needs a, b >= 1");
  S pa = detail::ipow(p, -a);
  if (b == kInfinity) return (p - p / p) * pa / wall_W(a, p);
  return pa / (wall_W(a, p) * wall_W(b, p));
}

// ------------------------------------------------------------- mu(a, b)

struct MuOptions {
  int grid = 4096;
  double exclude_radius = 0;  // radius of the discs removed around 2 + e^(+-2 pi i/3)
};

// sup of |T_{a,b}(p)| - Re T_{a,b}(p) over the disc |p - 2| <= 1 (optionally
// with two small discs removed); the supremum sits on the boundary.
inline double mu_ab(long a, long b, MuOptions opt = {}) {
  if (opt.grid < 16) throw DomainError("grid too coarse");
  const double pi = 3.14159265358979323846, kInf = std::numeric_limits<double>::infinity();
  const CD chi{1.5, std::sqrt(3.0) / 2}, chib{1.5, -std::sqrt(3.0) / 2};
  double r = opt.exclude_radius;
  auto f = [&](const CD& p) {
    CD t = wall_T(a, b, p);
    return abs(t) - t.re;
  };
  // boundary pieces parametrised by angle; infeasible points score -inf
  auto outer = [&](double th) {
    CD p{2 + std::cos(th), std::sin(th)};
    if (r > 0 && (abs(p - chi) < r || abs(p - chib) < r)) return -kInf;
    return f(p);
  };
  auto around = [&](const CD& c) {
    return [&, c](double th) {
      CD p{c.re + r * std::cos(th), c.im + r * std::sin(th)};
      if (abs(p - CD{2.0, 0.0}) > 1) return -kInf;
      return f(p);
    };
  };
  auto best_on = [&](const std::function<double(double)>& g) {
    int n = opt.grid;
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = g(2 * pi * k / n);
    double best = -INFINITY;
    for (int k = 0; k < n; ++k) {
      double l = v[(k + n - 1) % n], c = v[k], rr = v[(k + 1) % n];
      if (!(c >= l && c >= rr) || c == -INFINITY) continue;
      // golden-section refinement on the bracketing cell
      double lo = 2 * pi * (k - 1) / n, hi = 2 * pi * (k + 1) / n;
      const double gr = 0.6180339887498949;
      double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
      double f1 = g(x1), f2 = g(x2);
      for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + gr * (hi - lo);
          f2 = g(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - gr * (hi - lo);
          f1 = g(x1);
        }
      }
      best = std::max({best, c, f1, f2});
    }
    return best;
  };
  double m = best_on(outer);
  if (r > 0) {
    m = std::max(m, best_on(around(chi)));
    m = std::max(m, best_on(around(chib)));
  }
  return m;
}

// mu(a, b) for b = 1..15 and infinity (rows) against a = 1..6 (columns).
inline std::vector<std::vector<double>> mu_table(MuOptions opt = {}, int bmax = 15, int amax = 6) {
  std::vector<std::vector<double>> t;
  for (long b = 1; b <= bmax + 1; ++b) {
    std::vector<double> row;
    for (long a = 1; a <= amax; ++a) row.push_back(mu_ab(a, b > bmax ? kInfinity : b, opt));
    t.push_back(row);
  }
  return t;
}

// max of mu(a,b) + mu(b,c) over the tabulated range (b <= amax as a first index).
inline double mu_chain_bound(const std::vector<std::vector<double>>& t) {
  int rows = static_cast<int>(t.size()), cols = static_cast<int>(t[0].size());
  double m = 0;
  for (int a = 1; a <= cols; ++a)
    for (int b = 1; b <= std::min(cols, rows - 1); ++b)
      for (int c = 1; c <= rows; ++c) m = std::max(m, t[b - 1][a - 1] + t[c - 1][b - 1]);
  return m;
}

// ------------------------------------------------------ p-continued fractions

struct PCF {
  CF quotients;
  bool terminated = false;  // reached the root value p - 1
};

// Inverse of X(p, .) on the real curve: while x lies in the T-image strip
// (between 1 and 1/(p-1)) apply x -> px - 1, otherwise x -> 1/x and start the
// next quotient. Stops at x = p - 1, which corresponds to 0.
inline PCF pcf_expand(const APReal& x0, const APReal& p, int max_iter = 64, int max_steps = 1 << 20) {
  if (p < 1.0 || p == APReal(2L, p.prec())) throw DomainError("pcf_expand needs real p >= 1, p != 2");
  int prec = std::min(x0.prec(), p.prec());
  APReal one(1L, prec), x = x0.with_prec(prec);
  APReal pm1 = p - one;
  bool big = p > 2.0;
  APReal lo = big ? one / pm1 : one, hi = big ? one : one / pm1;
  if (p == one) hi = APReal(1e300, prec);
  APReal tol = ldexp(one, -(prec / 2));
  APReal a_lo = big ? one / pm1 : pm1, a_hi = big ? pm1 : one / pm1;
  if (x < a_lo - tol || (p > 1.0 && x > a_hi + tol)) throw DomainError("x outside the p-curve range");
  PCF out;
  long count = 0;
  for (int steps = 0; steps < max_steps; ++steps) {
    if (abs(x - pm1) < tol) {
      out.quotients.push_back(count);
      out.terminated = true;
      return out;
    }
    if (x >= lo - tol && x <= hi + tol) {
      x = p * x - one;
      ++count;
    } else {
      out.quotients.push_back(count);
      if (static_cast<int>(out.quotients.size()) >= max_iter) return out;
      count = 0;
      x = one / x;
    }
  }
  throw GuardError("pcf_expand exceeded its step budget");
}

// ------------------------------------------------------------------- X(p, x)

template <class S>
struct XMapResult {
  S value;
  double tail_error = 0;  // estimated effect of truncating an infinite expansion
};

// X(p, [a0, a1, ...]) = W_{a0} + p^-a0 W_{a1}^-1 F(a1, a2, ...),
// F(a_i, ...) = 1 / (1 + T_{a_i, a_{i+1}} F(a_{i+1}, ...)).
// A terminating expansion ends in the quotient infinity; a truncated one
// starts the backward recurrence from F = 1.
template <class S>
XMapResult<S> x_map(const S& p, const CF& a, bool terminating) {
  detail::check_cf(a);
  S one = p / p;
  size_t k = a.size();
  auto q = [&](size_t i) { return i < k ? a[i] : kInfinity; };
  S W0 = wall_W(a[0], p), pa0 = detail::ipow(p, -a[0]);
  if (k == 1) {
    // x = a0 (terminating) or a truncated x with only a0 known
    return {W0 + pa0 * (p - one), terminating ? 0.0 : 1.0};
  }
  // backward recurrence for F over quotients a1..a_{k-1}
  S F = one;
  size_t last = k - 1;
  if (terminating) F = one / (one + wall_T(a[last], kInfinity, p));
  for (size_t i = last; i-- > 1;) F = one / (one + wall_T(a[i], q(i + 1), p) * F);

  double tail = 0;
  if (!terminating && k > 3) {
    // forward convergents of F to size the truncation error
    S A0 = one - one, A1 = one, B0 = one, B1 = one;  // convergents 0/1 and 1/1
    std::vector<double> d;
    S prev = A1 / B1;
    for (size_t i = 2; i < k; ++i) {
      S e = wall_T(a[i - 1], a[i], p);
      S A2 = A1 + e * A0, B2 = B1 + e * B0;
      A0 = A1;
      B0 = B1;
      A1 = A2;
      B1 = B2;
      S cur = A1 / B1;
      d.push_back(to_double(abs(to_cd(cur) - to_cd(prev))));
      prev = cur;
      S inv = one / B1;
      A0 = A0 * inv;
      A1 = A1 * inv;
      B0 = B0 * inv;
      B1 = one;
    }
    size_t n = d.size();
    double ratio = 0;
    for (size_t i = n >= 4 ? n - 4 : 1; i < n; ++i)
      if (d[i - 1] > 0) ratio = std::max(ratio, d[i] / d[i - 1]);
    if (ratio < 0.95) {
      tail = d.back() * ratio / (1 - ratio);
    } else {
      // slow (quadratic) convergence: |Q_v Q_v+1| > c v^2
      double c = INFINITY;
      for (size_t v = 1; v < std::min<size_t>(n, 10); ++v)
        if (d[v] > 0) c = std::min(c, 1.0 / (d[v] * double(v + 1) * double(v + 1)));
      tail = std::isfinite(c) ? 1.0 / (c * double(n)) : d.back();
    }
    tail *= to_double(abs(to_cd(pa0 / wall_W(a[1], p))));
  }
  return {W0 + pa0 / wall_W(a[1], p) * F, tail};
}

// X(p, x) for rational x >= 0 (exact expansion, terminating).
template <class S>
S x_map(const S& p, const Rational& x) {
  return x_map(p, cf_expand(x), true).value;
}

// chi_n = (p + p^(n-1) - 2) / (p^(n-1) (p-1)), the image of the integer n.
template <class S>
S chi_n(long n, const S& p) {
  S one = p / p;
  return (p + detail::ipow(p, n - 1) - one - one) / (detail::ipow(p, n - 1) * (p - one));
}

// Residuals of X(x+1) = (X(x)+1)/p, X(x/(x+1)) = pX/(X+1), X(1/x) = 1/X,
// with every argument expanded independently at the precision of x.
template <class S>
std::array<double, 3> x_map_feq_residual(const S& p, const APReal& x, int depth) {
  S one = p / p;
  auto X = [&](const APReal& y) {
    CF c = cf_expand(y, depth);
    return x_map(p, c, false).value;
  };
  APReal o(1L, x.prec());
  S v = X(x);
  return {to_double(abs(to_cd(X(x + o) - (v + one) / p))),
          to_double(abs(to_cd(X(x / (x + o)) - p * v / (v + one)))),
          to_double(abs(to_cd(X(o / x) - one / v)))};
}

// ----------------------------------------------------------------- curves

struct CurvePoint {
  CD value;
  Fraction cw;  // the p = 1 tree element at the same position
  CF address() const { return cf_expand(cw.to_rational()); }
};

// Generation `depth` of Q_p (depth 1 = {1}), left to right.
inline std::vector<CurvePoint> curve_sample(const CD& p, int depth) {
  if (depth < 1) throw DomainError("depth starts at 1");
  if (depth > kMaxGeneration) throw RangeError("curve_sample is limited to depth <= 24");
  CD one{1.0, 0.0};
  auto grow = [&](std::vector<CurvePoint> g, int gens) {
    for (int k = 0; k < gens; ++k) {
      std::vector<CurvePoint> next;
      next.reserve(g.size() * 2);
      for (const auto& c : g) {
        next.push_back({p * c.value / (c.value + one), {c.cw.num, c.cw.num + c.cw.den}});
        next.push_back({(c.value + one) / p, {c.cw.num + c.cw.den, c.cw.den}});
      }
      g.swap(next);
    }
    return g;
  };
  std::vector<CurvePoint> root{{one, {1, 1}}};
  if (depth <= 12) return grow(root, depth - 1);
  // split at generation 4 and grow the eight subtrees concurrently
  auto seeds = grow(root, 3);
  std::vector<std::future<std::vector<CurvePoint>>> jobs;
  for (const auto& s : seeds) jobs.push_back(std::async(std::launch::async, grow, std::vector<CurvePoint>{s}, depth - 4));
  std::vector<std::vector<CurvePoint>> parts;
  for (auto& j : jobs) parts.push_back(j.get());
  // interleave back into left-to-right order: subtree i occupies block i
  std::vector<CurvePoint> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace dyadic
