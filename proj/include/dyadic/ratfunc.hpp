#pragma once

// Rational functions whose denominator is a power of one linear factor:
// num(z) / (z - root)^power.

#include "rational.hpp"

namespace dyadic {

struct RationalFunction {
  Polynomial num;
  Rational root = 0;
  int power = 0;

  RationalFunction() = default;
  RationalFunction(Polynomial n, Rational r, int k) : num(std::move(n)), root(std::move(r)), power(k) {
    if (k < 0) throw DomainError("negative denominator power");
  }

  Polynomial denominator() const { return Polynomial::linear_power(root, power); }

  // d/dz [N/(z-r)^k] = (N'(z-r) - kN)/(z-r)^(k+1)
  RationalFunction derivative(int order = 1) const {
    RationalFunction f = *this;
    for (int i = 0; i < order; ++i) {
      Polynomial lin{-f.root, Rational(1)};
      f.num = f.num.derivative() * lin - f.num * Rational(f.power);
      ++f.power;
    }
    return f;
  }

  Rational eval(const Rational& x) const {
    Rational d = x - root;
    if (d == 0 && power > 0) throw PoleError("evaluation at pole z = " + to_string(root));
    return num.eval(x) / pow(d, power);
  }

  // f(s z) as a rational function: N(sz)/(sz - r)^k = s^-k N(sz)/(z - r/s)^k
  RationalFunction scaled(const Rational& s) const {
    if (s == 0) throw DomainError("zero scale");
    return {num.scale(s) / pow(s, power), root / s, power};
  }
};

inline Rational ratfunc_eval(const RationalFunction& f, const Rational& x) { return f.eval(x); }

}  // namespace dyadic
