#pragma once

// Arbitrary-precision reals on MPFR. Every value owns its precision; binary
// operations produce a result at the smaller of the operand precisions.
// There is no global default: constructors take the precision explicitly.

#include <mpfr.h>

#include <climits>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "rational.hpp"

namespace dyadic {

constexpr int kDefaultPrec = 256;
constexpr int kConstantsPrec = 512;

class APReal {
 public:
  explicit APReal(int prec = kDefaultPrec) {
    mpfr_init2(v_, check(prec));
    mpfr_set_zero(v_, 1);
  }
  APReal(double d, int prec) {
    mpfr_init2(v_, check(prec));
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  APReal(long n, int prec) {
    mpfr_init2(v_, check(prec));
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  APReal(int n, int prec) : APReal(static_cast<long>(n), prec) {}
  APReal(const BigInt& n, int prec) {
    mpfr_init2(v_, check(prec));
    mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
  }
  APReal(const Rational& q, int prec) {
    mpfr_init2(v_, check(prec));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  static APReal parse(const std::string& s, int prec) {
    APReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("cannot parse real '" + s + "'");
    return r;
  }

  APReal(const APReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  APReal(APReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  APReal& operator=(const APReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  APReal& operator=(APReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~APReal() { mpfr_clear(v_); }

  int prec() const { return static_cast<int>(mpfr_get_prec(v_)); }
  APReal with_prec(int prec) const {
    APReal r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent2() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(v_); }

  // Fixed-point decimal with `decimals` digits after the point.
  std::string to_fixed(int decimals) const { return format("%.*RNf", decimals); }
  // Scientific with `digits` significant digits.
  std::string to_sci(int digits) const { return format("%.*RNe", digits > 0 ? digits - 1 : 0); }

  APReal& operator+=(const APReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  APReal& operator-=(const APReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  APReal& operator*=(const APReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  APReal& operator/=(const APReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  APReal& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  APReal& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }
  APReal& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
  APReal& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }

#define DYADIC_AP_BINOP(op, fn)                                              \
  friend APReal operator op(const APReal& a, const APReal& b) {              \
    APReal r(std::min(a.prec(), b.prec()));                                  \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                         \
    return r;                                                                \
  }
  DYADIC_AP_BINOP(+, mpfr_add)
  DYADIC_AP_BINOP(-, mpfr_sub)
  DYADIC_AP_BINOP(*, mpfr_mul)
  DYADIC_AP_BINOP(/, mpfr_div)
#undef DYADIC_AP_BINOP

  friend APReal operator+(APReal a, long n) { return a += n; }
  friend APReal operator+(long n, APReal a) { return a += n; }
  friend APReal operator-(APReal a, long n) { return a -= n; }
  friend APReal operator-(long n, const APReal& a) {
    APReal r(a.prec());
    mpfr_si_sub(r.v_, n, a.v_, MPFR_RNDN);
    return r;
  }
  friend APReal operator*(APReal a, long n) { return a *= n; }
  friend APReal operator*(long n, APReal a) { return a *= n; }
  friend APReal operator/(APReal a, long n) { return a /= n; }
  friend APReal operator/(long n, const APReal& a) {
    APReal r(a.prec());
    mpfr_si_div(r.v_, n, a.v_, MPFR_RNDN);
    return r;
  }
  friend APReal operator-(const APReal& a) {
    APReal r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const APReal& a, const APReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const APReal& a, const APReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const APReal& a, const APReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const APReal& a, const APReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const APReal& a, const APReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const APReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const APReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const APReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const APReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

#define DYADIC_AP_FN(name, fn)                  \
  friend APReal name(const APReal& a) {         \
    APReal r(a.prec());                         \
    fn(r.v_, a.v_, MPFR_RNDN);                  \
    return r;                                   \
  }
  DYADIC_AP_FN(sqrt, mpfr_sqrt)
  DYADIC_AP_FN(exp, mpfr_exp)
  DYADIC_AP_FN(log, mpfr_log)
  DYADIC_AP_FN(abs, mpfr_abs)
  DYADIC_AP_FN(sin, mpfr_sin)
  DYADIC_AP_FN(cos, mpfr_cos)
  DYADIC_AP_FN(atan, mpfr_atan)
  DYADIC_AP_FN(expm1, mpfr_expm1)
  DYADIC_AP_FN(log1p, mpfr_log1p)
#undef DYADIC_AP_FN

  friend APReal floor(const APReal& a) {
    APReal r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend APReal atan2(const APReal& y, const APReal& x) {
    APReal r(std::min(y.prec(), x.prec()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend APReal pow(const APReal& a, long e) {
    APReal r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend APReal pow(const APReal& a, const APReal& e) {
    APReal r(std::min(a.prec(), e.prec()));
    mpfr_pow(r.v_, a.v_, e.v_, MPFR_RNDN);
    return r;
  }
  // 2^e * a
  friend APReal ldexp(const APReal& a, long e) {
    APReal r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  static APReal pi(int prec) {
    APReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static APReal log2(int prec) {
    APReal r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }

 private:
  static int check(int prec) {
    if (prec < MPFR_PREC_MIN || prec > (1 << 24)) throw DomainError("precision out of range");
    return prec;
  }
  std::string format(const char* fmt, int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }
  mpfr_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const APReal& x) { return os << x.to_sci(20); }

inline double to_double(double x) { return x; }
inline double to_double(const APReal& x) { return x.to_double(); }

// Constants and conversions in the precision of a reference value.
inline double real_like(double, double v) { return v; }
inline APReal real_like(const APReal& like, double v) { return APReal(v, like.prec()); }
inline double real_like(double, const Rational& q) { return q.get_d(); }
inline APReal real_like(const APReal& like, const Rational& q) { return APReal(q, like.prec()); }

// Decimal digits that a binary precision can carry.
inline int digits_for_bits(int bits) { return static_cast<int>(std::floor(bits * 0.30102999566398120)); }
inline int bits_for_digits(int digits) { return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 8; }

}  // namespace dyadic
