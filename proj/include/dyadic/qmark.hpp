#pragma once

// Continued fractions, the distribution function F(x) = ?(x)/2 of the
// Minkowski measure on [0, inf), and the Calkin-Wilf generations that
// approximate it.

#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

#include "apreal.hpp"

namespace dyadic {

using CF = std::vector<long>;  // [a0; a1, a2, ...], a0 >= 0, ai >= 1

inline CF cf_expand(const Rational& x) {
  if (x < 0) throw DomainError("continued fraction of a negative number");
  CF out;
  BigInt p = x.get_num(), q = x.get_den();
  while (q != 0) {
    BigInt a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (!a.fits_slong_p()) throw RangeError("partial quotient too large");
    out.push_back(a.get_si());
    p = q;
    q = r;
  }
  return out;
}

// Expansion of a real number. Stops when the fractional part drops below
// 2^(-prec/2), when the accumulated rounding error could change the next
// quotient, or at max_depth quotients.
inline CF cf_expand(const APReal& x, int max_depth = 100000) {
  if (x < 0.0) throw DomainError("continued fraction of a negative number");
  int prec = x.prec();
  APReal y = x, tiny = ldexp(APReal(1L, prec), -(prec / 2));
  double err = std::ldexp(1.0, -prec + 2) * std::max(1.0, y.to_double());
  CF out;
  while (static_cast<int>(out.size()) < max_depth) {
    APReal a = floor(y);
    if (a > 9.2e18) throw RangeError("partial quotient too large");
    out.push_back(static_cast<long>(a.to_double()));
    APReal f = y - a;
    if (f < tiny) break;
    double fd = f.to_double();
    err = err / (fd * fd);
    if (err > 1e-6 || !std::isfinite(err)) break;
    y = 1 / f;
  }
  return out;
}

// Rational with the given expansion.
inline Rational cf_value(const CF& a) {
  if (a.empty()) throw DomainError("empty continued fraction");
  Rational v = a.back();
  for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) {
    if (v == 0) throw DomainError("zero quotient inside continued fraction");
    v = Rational(a[i]) + Rational(1) / v;
  }
  return v;
}

namespace detail {
inline void check_cf(const CF& a) {
  if (a.empty()) throw DomainError("empty continued fraction");
  if (a[0] < 0) throw DomainError("negative leading quotient");
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] < 1) throw DomainError("partial quotients after the first must be >= 1");
}
}  // namespace detail

// F = 1 - 2^-a0 + 2^-(a0+a1) - ...  (exact dyadic for a finite expansion)
inline Rational qmark_exact(const CF& a) {
  detail::check_cf(a);
  Rational F = 1;
  long s = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    s += a[k];
    if (s > (1L << 26)) throw RangeError("quotient sum too large for an exact dyadic value");
    Rational t = pow2(-s);
    if (k % 2 == 0)
      F -= t;
    else
      F += t;
  }
  return F;
}

inline APReal qmark_eval(const CF& a, int prec) {
  detail::check_cf(a);
  APReal F(1L, prec), one(1L, prec);
  long s = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    s += a[k];
    if (s > prec + 64) break;
    APReal t = ldexp(one, -s);
    if (k % 2 == 0)
      F -= t;
    else
      F += t;
  }
  return F;
}

inline Rational qmark_F(const Rational& x) { return qmark_exact(cf_expand(x)); }
inline APReal qmark_F(const APReal& x) { return qmark_eval(cf_expand(x), x.prec()); }
// Minkowski's ?(x) = 2F(x) on [0, 1]
inline Rational minkowski_q(const Rational& x) { return 2 * qmark_F(x); }

// Positive fraction small enough for the Calkin-Wilf generations.
struct Fraction {
  std::uint64_t num = 0, den = 1;
  Rational to_rational() const {
    return make_rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
  }
  double to_double() const { return double(num) / double(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  // a/b < c/d
  friend bool operator<(const Fraction& x, const Fraction& y) {
    return static_cast<unsigned __int128>(x.num) * y.den < static_cast<unsigned __int128>(y.num) * x.den;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.num << "/" << f.den; }

constexpr int kMaxGeneration = 24;

// Generation n (1-based) of the Calkin-Wilf tree, left to right.
// a/b has children a/(a+b) and (a+b)/b.
inline std::vector<Fraction> cw_generation(int n) {
  if (n < 1) throw DomainError("generation index starts at 1");
  if (n > kMaxGeneration) throw RangeError("cw_generation is limited to n <= 24");
  std::vector<Fraction> g{{1, 1}};
  for (int k = 1; k < n; ++k) {
    std::vector<Fraction> next;
    next.reserve(g.size() * 2);
    for (const auto& f : g) {
      next.push_back({f.num, f.num + f.den});
      next.push_back({f.num + f.den, f.den});
    }
    g.swap(next);
  }
  return g;
}

// 2^(1-n) #{elements of generation n below x}
inline Rational empirical_cdf(int n, const Rational& x) {
  auto g = cw_generation(n);
  long count = 0;
  for (const auto& f : g)
    if (f.to_rational() < x) ++count;
  return Rational(count) * pow2(1 - n);
}

inline double empirical_cdf(int n, double x) {
  auto g = cw_generation(n);
  long count = 0;
  for (const auto& f : g)
    if (f.to_double() < x) ++count;
  return std::ldexp(double(count), 1 - n);
}

}  // namespace dyadic
