#pragma once

// Minimal complex arithmetic over double or APReal.

#include <cmath>
#include <string>
#include <type_traits>

#include "apreal.hpp"

namespace dyadic {

template <class R>
struct Complex {
  R re, im;

  Complex() : re(), im() {}
  Complex(R r) : re(r), im(real_like(r, 0.0)) {}
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator*(const Complex& a, const R& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const R& s, const Complex& a) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const R& s) { return {a.re / s, a.im / s}; }
  friend Complex operator+(const Complex& a, const R& s) { return {a.re + s, a.im}; }
  friend Complex operator-(const Complex& a, const R& s) { return {a.re - s, a.im}; }
  friend Complex operator-(const R& s, const Complex& a) { return {s - a.re, -a.im}; }
  friend Complex operator+(const Complex& a, long n)
    requires(!std::is_same_v<R, double>) { return {a.re + n, a.im}; }
  friend Complex operator-(const Complex& a, long n)
    requires(!std::is_same_v<R, double>) { return {a.re - n, a.im}; }
  friend Complex operator-(long n, const Complex& a)
    requires(!std::is_same_v<R, double>) { return {n - a.re, -a.im}; }
  friend Complex operator*(const Complex& a, long n)
    requires(!std::is_same_v<R, double>) { return {a.re * n, a.im * n}; }
  friend Complex operator*(long n, const Complex& a)
    requires(!std::is_same_v<R, double>) { return {a.re * n, a.im * n}; }
  friend Complex operator/(const Complex& a, long n)
    requires(!std::is_same_v<R, double>) { return {a.re / n, a.im / n}; }
  friend Complex operator/(long n, const Complex& a)
    requires(!std::is_same_v<R, double>) { return Complex(real_like(a.re, double(n))) / a; }

  friend R norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
  friend R abs(const Complex& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
  }
  friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
  friend Complex exp(const Complex& a) {
    using std::cos;
    using std::exp;
    using std::sin;
    R e = exp(a.re);
    return {e * cos(a.im), e * sin(a.im)};
  }
  friend R arg(const Complex& a) {
    using std::atan2;
    return atan2(a.im, a.re);
  }
  friend Complex pow(Complex a, long e) {
    if (e < 0) return pow(Complex(real_like(a.re, 1.0)) / a, -e);
    Complex r(real_like(a.re, 1.0));
    while (e) {
      if (e & 1) r = r * a;
      a = a * a;
      e >>= 1;
    }
    return r;
  }
};

using CD = Complex<double>;
using APComplex = Complex<APReal>;

inline APComplex make_apcomplex(double re, double im, int prec) {
  return {APReal(re, prec), APReal(im, prec)};
}

inline CD to_cd(double x) { return {x, 0.0}; }
inline CD to_cd(const APReal& x) { return {x.to_double(), 0.0}; }
inline CD to_cd(const CD& z) { return z; }
inline CD to_cd(const APComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

inline std::string format_complex(const APComplex& z, int decimals) {
  std::string im = z.im.to_fixed(decimals);
  if (im[0] != '-') im = "+" + im;
  return z.re.to_fixed(decimals) + im + "i";
}

}  // namespace dyadic
