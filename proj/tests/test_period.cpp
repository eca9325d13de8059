#include <gtest/gtest.h>

#include <map>

#include "dyadic/hseries.hpp"
#include "dyadic/qseries.hpp"

using namespace dyadic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Rational factored(const char* num, std::initializer_list<std::pair<long, long>> den) {
  BigInt d = 1;
  for (auto [p, e] : den)
    for (long i = 0; i < e; ++i) d *= p;
  return make_rational(BigInt(num), d);
}

HSeries& shared_h() {
  static HSeries h = [] {
    HSeries s;
    s.extend_to(40);
    return s;
  }();
  return h;
}

// naive determinant by cofactor expansion over rationals, small n only
Rational cofactor_det(const RationalMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Rational d = 0;
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> c2 = cols;
    c2.erase(c2.begin() + j);
    std::vector<int> r2(rows.begin() + 1, rows.end());
    Rational t = m(rows[0], cols[j]) * cofactor_det(m, r2, c2);
    d += j % 2 ? -t : t;
  }
  return d;
}

}  // namespace

TEST(HSeries, InitialPolynomials) {
  HSeries& h = shared_h();
  EXPECT_EQ(h.B(0), Polynomial{-1});
  EXPECT_EQ(h.B(1), Polynomial{});
  EXPECT_EQ(h.B(2), (Polynomial{0, q(-1, 6)}));
  EXPECT_EQ(h.B(3), (Polynomial{0, q(-2, 9), q(1, 9)}));
  EXPECT_EQ(h.B(4), (Polynomial{0, q(-53, 270), q(53, 270), q(-2, 27)}));
  EXPECT_EQ(h.B(5), (Polynomial{0, q(-224, 2025), q(112, 675), q(-104, 675), q(4, 81)}));
  EXPECT_EQ(h.B(6), (Polynomial{0, q(787, 60750), q(-787, 30375), q(-1384, 14175), q(47029, 425250), q(-8, 243)}));
  EXPECT_EQ(h.B(7), (Polynomial{0, q(477802, 3189375), q(-238901, 637875), q(5392444, 22325625), q(272869, 22325625),
                                q(-1628392, 22325625), q(16, 729)}));
}

TEST(HSeries, DerivativeAtZeroTable) {
  HSeries& h = shared_h();
  std::vector<Rational> want{
      q(1, 4), 0, q(1, 48), q(-1, 72), q(53, 8640),
      factored("-7", {{2, 1}, {3, 4}, {5, 2}}),
      factored("-787", {{2, 8}, {3, 5}, {5, 3}}),
      factored("238901", {{2, 7}, {3, 6}, {5, 4}, {7, 1}}),
      factored("-181993843", {{2, 10}, {3, 7}, {5, 5}, {7, 2}}),
      factored("12965510861", {{2, 6}, {3, 8}, {5, 6}, {7, 3}, {17, 1}}),
      factored("-8026531718888633", {{2, 12}, {3, 9}, {5, 7}, {7, 4}, {11, 1}, {17, 2}}),
      factored("797209536976557079423", {{2, 11}, {3, 10}, {5, 8}, {7, 5}, {11, 2}, {17, 3}, {31, 1}}),
      factored("4198988799919158293319845971", {{2, 14}, {3, 11}, {5, 9}, {7, 6}, {11, 3}, {13, 1}, {17, 4}, {31, 2}}),
      factored("-12702956822417247965298252330349561",
               {{2, 10}, {3, 12}, {5, 10}, {7, 7}, {11, 4}, {13, 2}, {17, 5}, {31, 3}}),
      factored("7226191636013675292833514548603516395499899",
               {{2, 16}, {3, 13}, {5, 11}, {7, 8}, {11, 5}, {13, 3}, {17, 6}, {31, 4}}),
      factored("-129337183009042141853748450730581369733226857443915617",
               {{2, 15}, {3, 14}, {5, 12}, {7, 9}, {11, 6}, {13, 4}, {17, 7}, {31, 5}, {43, 1}, {127, 1}}),
      factored("31258186275777197041073243752715109842753785598306812028984213251",
               {{2, 18}, {3, 15}, {5, 13}, {7, 10}, {11, 7}, {13, 5}, {17, 8}, {31, 6}, {43, 2}, {127, 2}}),
      factored("-3282520501229639755997762022707321704397776888948469860959830459774414444483",
               {{2, 12}, {3, 16}, {5, 14}, {7, 11}, {11, 8}, {13, 6}, {17, 9}, {31, 7}, {43, 3}, {127, 3}, {257, 1}}),
  };
  for (int n = 0; n < static_cast<int>(want.size()); ++n) {
    EXPECT_EQ(h.dH0(n), want[n]) << n;
    // independent route: differentiate the rational function and evaluate
    EXPECT_EQ(h.H(n).derivative(1).eval(0), want[n]) << n;
  }
  EXPECT_NEAR(want[15].get_d(), -0.000025804822076, 1e-15);
  EXPECT_NEAR(want[17].get_d(), -0.000010917558446, 1e-15);
}

TEST(HSeries, AlternatingSumOfDerivatives) {
  HSeries& h = shared_h();
  Rational s = 0;
  for (int n = 0; n <= 40; ++n) {
    s += n % 2 ? -h.dH0(n) : h.dH0(n);
    if (n == 17) {
      EXPECT_NEAR(s.get_d(), 0.290925586237, 1e-11);
    }
  }
  EXPECT_NEAR(s.get_d(), 0.290926487975, 1e-11);
}

TEST(HSeries, ValueAtOneIsGeometric) {
  HSeries& h = shared_h();
  for (int n = 2; n <= 30; ++n) {
    Rational v = h.H(n).eval(1);
    Rational want = q(1, 6) * pow(q(2, 3), n - 2);
    EXPECT_EQ(n % 2 ? -v : v, want) << n;
  }
}

TEST(HSeries, Reciprocity) {
  HSeries& h = shared_h();
  for (int n = 1; n <= 40; ++n) {
    const Polynomial& b = h.B(n);
    EXPECT_EQ(b.coeff(0), 0) << n;
    if (n < 2) continue;
    // B(z+1) = (-1)^n z^(n-1) B(1/z + 1): reverse of the shifted polynomial
    Polynomial s = b.shift1();
    std::vector<Rational> rev(n);
    for (int k = 0; k < n; ++k) rev[k] = s.coeff(n - 1 - k);
    Polynomial r(std::move(rev));
    EXPECT_EQ(s, n % 2 ? r * Rational(-1) : r) << n;
  }
}

TEST(HSeries, DegreeBound) {
  HSeries& h = shared_h();
  for (int n = 2; n <= 40; ++n) EXPECT_LE(h.B(n).degree(), n - 1) << n;
}

TEST(LinearMap, DeterminantFormula) {
  EXPECT_EQ(mat_det_exact(lmap_matrix(2)), q(3, 4));
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(mat_det_exact(lmap_matrix(n)), lmap_det(n)) << n;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    EXPECT_EQ(cofactor_det(lmap_matrix(n), idx, idx), lmap_det(n)) << n;
  }
  EXPECT_THROW(lmap_det(31), RangeError);
}

TEST(LinearMap, SolvedPolynomialSatisfiesTheMap) {
  // P(z+1) - P(2z)/2^(n+1) + (-1)^(n+1) z^(n-1) P(2/z)/2^(n+1) = k_n
  HSeries& h = shared_h();
  for (int n = 2; n <= 14; ++n) {
    const Polynomial& b = h.B(n);
    Rational inv = pow2(-(n + 1));
    Polynomial lhs = b.shift1() - b.scale(2) * inv;
    Polynomial rw = b.reverse_weighted(n - 1, 2) * inv;
    lhs = n % 2 ? lhs + rw : lhs - rw;
    EXPECT_EQ(lhs, h.k_poly(n)) << n;
  }
}

TEST(QSeries, DerivativeTable) {
  std::vector<Rational> want{
      q(1, 2), q(-1, 2), 1, q(-5, 2), q(25, 4), -16, 43, q(-971, 8), q(1417, 4), q(-8431, 8), q(50899, 16),
      -9751, 30365, q(-3069719, 32), q(1227099, 4), q(-31719165, 32), q(206836175, 64), q(-339942899, 32),
      q(1125752909, 32), make_rational(BigInt("-15014220659"), 128), make_rational(BigInt("25188552721"), 64),
      make_rational(BigInt("-170016460947"), 128), make_rational(BigInt("1153784184807"), 256),
      make_rational(BigInt("-983668214037"), 64), make_rational(BigInt("1685121707817"), 32),
      make_rational(BigInt("-92779913448103"), 512), make_rational(BigInt("80142274019997"), 128),
      make_rational(BigInt("-1111839248032133"), 512), make_rational(BigInt("7740056893342455"), 1024),
      make_rational(BigInt("-13515970598654393"), 512), make_rational(BigInt("47354245650630005"), 512),
      make_rational(BigInt("-665632101181145115"), 2048)};
  auto got = q_derivatives_at_minus_one(31);
  for (int n = 0; n <= 31; ++n) EXPECT_EQ(got[n], want[n]) << n;
}

TEST(QSeries, PalindromicPolynomials) {
  QSeries qs;
  EXPECT_EQ(qs.D(1), Polynomial{q(1, 4)});
  EXPECT_EQ(qs.D(2), (Polynomial{q(1, 4), 0, q(1, 4)}));
  EXPECT_EQ(qs.D(3), (Polynomial{q(1, 4), q(-1, 4), q(1, 4), q(-1, 4), q(1, 4)}));
  EXPECT_EQ(qs.D(4), (Polynomial{2, -3, 6, -3, 6, -3, 2}) * q(1, 8));
  EXPECT_EQ(qs.D(5), (Polynomial{1, -2, 4, -7, 4, -7, 4, -2, 1}) * q(1, 4));
  EXPECT_EQ(qs.D(6), (Polynomial{2, -5, 12, -20, 37, -20, 37, -20, 12, -5, 2}) * q(1, 8));
  for (int n = 1; n <= 40; ++n) {
    Polynomial d = qs.D(n);
    ASSERT_EQ(d.degree(), 2 * n - 2) << n;
    for (int k = 0; k <= 2 * n - 2; ++k) {
      EXPECT_EQ(d.coeff(k), d.coeff(2 * n - 2 - k)) << n;
      EXPECT_TRUE(is_power_of_two(d.coeff(k).get_den())) << n;
    }
    Rational v = d.eval(-1);
    EXPECT_EQ(qs.dQ_minus_one(n), 2 * (n % 2 ? -v : v)) << n;
  }
  EXPECT_THROW(qs.D(0), DomainError);
}

TEST(QSeries, RecurrenceHoldsForLaurentForm) {
  // Q_n(z) z^(n+1) = (z+1)(z-1) D_n(z): rebuild Q_n from D_n and compare coefficients
  QSeries qs;
  for (int n = 1; n <= 25; ++n) {
    Polynomial full = qs.D(n) * Polynomial{-1, 0, 1};
    const Laurent& l = qs.Q(n);
    for (int e = -n - 1; e <= n - 1; ++e) EXPECT_EQ(l.coeff(e), full.coeff(e + n + 1)) << n << " " << e;
  }
}

TEST(QSeries, ExtendingKeepsEarlierTerms) {
  QSeries a, b;
  a.extend_to(10);
  Rational v = a.dQ_minus_one(10);
  b.extend_to(30);
  EXPECT_EQ(b.dQ_minus_one(10), v);
  a.extend_to(30);
  EXPECT_EQ(a.dQ_minus_one(10), v);
}
