#pragma once

// Dense rational matrices; exact solve and determinant by fraction-free
// (Bareiss) elimination on the row-scaled integer matrix.

#include <vector>

#include "rational.hpp"

namespace dyadic {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c_) throw DomainError("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  std::vector<Rational> operator*(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != c_) throw DomainError("dimension mismatch");
    std::vector<Rational> y(r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

namespace detail {

// Row i of [A | extra] scaled to integers.
struct IntegerSystem {
  int n = 0, w = 0;
  std::vector<BigInt> a;  // n x w
  std::vector<BigInt> scale;
  BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * w + j]; }
};

// Rows of A are scaled by the lcm of their own denominators; the right-hand
// side then shares one common denominator, returned in `rhs_den`, so that
// large right-hand sides do not inflate the matrix entries.
inline IntegerSystem integerize(const RationalMatrix& A, const std::vector<Rational>* b,
                                BigInt* rhs_den = nullptr) {
  IntegerSystem s;
  s.n = A.rows();
  s.w = A.cols() + (b ? 1 : 0);
  s.a.resize(static_cast<size_t>(s.n) * s.w);
  s.scale.resize(s.n);
  std::vector<Rational> rhs;
  for (int i = 0; i < s.n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < A.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den_mpz_t());
    s.scale[i] = l;
    for (int j = 0; j < A.cols(); ++j) {
      Rational v = A(i, j) * l;
      s.at(i, j) = v.get_num();
    }
    if (b) rhs.push_back((*b)[i] * l);
  }
  if (b) {
    BigInt d = denominator_lcm(rhs);
    for (int i = 0; i < s.n; ++i) {
      Rational v = rhs[i] * d;
      s.at(i, A.cols()) = v.get_num();
    }
    if (rhs_den) *rhs_den = d;
  }
  return s;
}

// In-place Bareiss forward elimination on the first n columns.
// Returns the number of row swaps, or -1 if singular.
inline int bareiss_forward(IntegerSystem& s) {
  int swaps = 0;
  BigInt prev = 1;
  for (int k = 0; k < s.n; ++k) {
    int piv = k;
    while (piv < s.n && s.at(piv, k) == 0) ++piv;
    if (piv == s.n) return -1;
    if (piv != k) {
      for (int j = 0; j < s.w; ++j) std::swap(s.at(k, j), s.at(piv, j));
      ++swaps;
    }
    for (int i = k + 1; i < s.n; ++i) {
      for (int j = k + 1; j < s.w; ++j) {
        BigInt t = s.at(k, k) * s.at(i, j) - s.at(i, k) * s.at(k, j);
        mpz_divexact(s.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      s.at(i, k) = 0;
    }
    prev = s.at(k, k);
  }
  return swaps;
}

}  // namespace detail

inline Rational mat_det_exact(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw DomainError("determinant of non-square matrix");
  if (A.rows() == 0) return 1;
  auto s = detail::integerize(A, nullptr);
  int swaps = detail::bareiss_forward(s);
  if (swaps < 0) return 0;
  Rational d(s.at(s.n - 1, s.n - 1));
  for (const auto& l : s.scale) d /= Rational(l);
  return swaps % 2 ? Rational(-d) : d;
}

inline std::vector<Rational> mat_solve_exact(const RationalMatrix& A, const std::vector<Rational>& b) {
  if (A.rows() != A.cols() || static_cast<int>(b.size()) != A.rows())
    throw DomainError("solve needs a square system");
  BigInt d;
  auto s = detail::integerize(A, &b, &d);
  if (detail::bareiss_forward(s) < 0) throw SingularMatrixError("singular matrix in exact solve");
  int n = s.n;
  std::vector<Rational> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rational acc(s.at(i, n));
    for (int j = i + 1; j < n; ++j) acc -= Rational(s.at(i, j)) * x[j];
    x[i] = acc / Rational(s.at(i, i));
  }
  for (auto& v : x) v /= Rational(d);
  return x;
}

}  // namespace dyadic
