#pragma once

// Exact rationals (GMP mpq) and dense univariate polynomials over Q.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dyadic {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

// "num/den", denominator always written.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational '" + s + "'");
  }
}

inline Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw DomainError("zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(n, d);
}

inline Rational pow2(long e) {
  BigInt b(1);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), b) : Rational(b);
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Dense polynomial, ascending coefficients, no trailing zeros (zero polynomial = empty).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  Polynomial(std::initializer_list<Rational> c) : c_(c) { trim(); }
  static Polynomial constant(const Rational& a) { return Polynomial(std::vector<Rational>{a}); }
  static Polynomial monomial(const Rational& a, int k) {
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    c[k] = a;
    return Polynomial(std::move(c));
  }
  // (z - r)^k
  static Polynomial linear_power(const Rational& r, int k) {
    Polynomial p = constant(1);
    Polynomial f{-r, Rational(1)};
    for (int i = 0; i < k; ++i) p = p * f;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Horner in any scalar type; conv maps a coefficient into that type.
  template <class T, class Conv>
  T eval_as(const T& x, Conv conv) const {
    if (c_.empty()) return x * conv(Rational(0));
    T r = conv(c_.back());
    for (int i = degree() - 1; i >= 0; --i) r = r * x + conv(c_[i]);
    return r;
  }

  Polynomial derivative(int k = 1) const {
    if (k < 0) throw DomainError("negative derivative order");
    if (k == 0) return *this;
    if (degree() < k) return {};
    std::vector<Rational> d(c_.size() - k);
    for (size_t i = k; i < c_.size(); ++i) {
      BigInt f = 1;
      for (long j = 0; j < k; ++j) f *= static_cast<long>(i) - j;
      d[i - k] = c_[i] * f;
    }
    return Polynomial(std::move(d));
  }

  // P(z + 1)
  Polynomial shift1() const { return shift(Rational(1)); }

  // P(z + a), repeated synthetic division
  Polynomial shift(const Rational& a) const {
    std::vector<Rational> c = c_;
    int n = degree();
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j) c[j] += a * c[j + 1];
    return Polynomial(std::move(c));
  }

  // P(s z)
  Polynomial scale(const Rational& s) const {
    std::vector<Rational> c = c_;
    Rational f = 1;
    for (auto& x : c) {
      x *= f;
      f *= s;
    }
    return Polynomial(std::move(c));
  }

  // z^d P(s / z); requires d >= deg P
  Polynomial reverse_weighted(int d, const Rational& s = Rational(2)) const {
    if (d < degree()) throw DomainError("reverse weight below degree");
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    Rational f = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
      c[d - i] = c_[i] * f;
      f *= s;
    }
    return Polynomial(std::move(c));
  }

  Polynomial shift_degree(int k) const {  // z^k P
    if (c_.empty()) return {};
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  // Euclidean division; returns {quotient, remainder}
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = c_;
    int dn = d.degree();
    if (degree() < dn) return {Polynomial(), *this};
    std::vector<Rational> q(static_cast<size_t>(degree() - dn) + 1);
    Rational lead_inv = Rational(1) / d.leading();
    for (int i = degree(); i >= dn; --i) {
      if (r[i] == 0) continue;
      Rational f = r[i] * lead_inv;
      q[i - dn] = f;
      for (int j = 0; j <= dn; ++j) r[i - dn + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  // Division that must be exact.
  Polynomial exact_div(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw NonPolynomialError("inexact polynomial division");
    return q;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  Polynomial& operator/=(const Rational& s) {
    if (s == 0) throw DomainError("polynomial divided by zero scalar");
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Polynomial in the variable z, printed for humans.
  std::string to_string(const char* var = "z") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      Rational a = c_[i];
      bool neg = a < 0;
      if (neg) a = -a;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      bool unit = (a == 1 && i > 0);
      if (!unit) s += a.get_den() == 1 ? a.get_num().get_str() : "(" + a.get_str() + ")";
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial pow(const Polynomial& p, int k) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

// Least common multiple of all coefficient denominators.
inline BigInt denominator_lcm(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

inline bool is_power_of_two(const BigInt& n) {
  return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

}  // namespace dyadic
