#pragma once

// Verification checks shared by `dyadic verify` and the acceptance binary.
// Every tolerance lives here.

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dyadic/dyadic.hpp"

namespace verify {

using namespace dyadic;

struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::string detail;
  bool timing = false;  // residual is a wall-clock time, left out of reports
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  bool experimental = false;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

inline Check near(std::string name, double residual, double tol, std::string detail = "") {
  return {std::move(name), residual, tol, residual <= tol, std::move(detail)};
}
inline Check exact(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)};
}
inline Check timing(std::string name, double seconds, double limit) {
  Check c = near(std::move(name), seconds, limit);
  c.timing = true;
  return c;
}
inline double secs_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Shared expensive state, built on first use.
class Context {
 public:
  int moment_order = 325, moment_prec = 512;
  double moment_seconds = 0;

  const MomentVector& moments() {
    if (!mv_) {
      auto t = std::chrono::steady_clock::now();
      mv_ = moments_solve(moment_order, moment_prec);
      moment_seconds = secs_since(t);
    }
    return *mv_;
  }
  HSeries& h() { return h_; }

 private:
  std::optional<MomentVector> mv_;
  HSeries h_;
};

namespace ref {

inline Rational q(long a, long b = 1) { return make_rational(a, b); }
inline Rational big(const char* a, long b) { return make_rational(BigInt(a), BigInt(b)); }
inline Rational factored(const char* num, std::initializer_list<std::pair<long, long>> den) {
  BigInt d = 1;
  for (auto [p, e] : den)
    for (long i = 0; i < e; ++i) d *= p;
  return make_rational(BigInt(num), d);
}

inline std::vector<Polynomial> b_table() {
  return {Polynomial{-1},
          Polynomial{},
          Polynomial{0, q(-1, 6)},
          Polynomial{0, q(-2, 9), q(1, 9)},
          Polynomial{0, q(-53, 270), q(53, 270), q(-2, 27)},
          Polynomial{0, q(-224, 2025), q(112, 675), q(-104, 675), q(4, 81)},
          Polynomial{0, q(787, 60750), q(-787, 30375), q(-1384, 14175), q(47029, 425250), q(-8, 243)},
          Polynomial{0, q(477802, 3189375), q(-238901, 637875), q(5392444, 22325625), q(272869, 22325625),
                     q(-1628392, 22325625), q(16, 729)}};
}

inline std::vector<Rational> dh0_table() {
  return {
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
}

inline std::vector<Polynomial> d_table() {
  return {Polynomial{q(1, 4)},
          Polynomial{q(1, 4), 0, q(1, 4)},
          Polynomial{q(1, 4), q(-1, 4), q(1, 4), q(-1, 4), q(1, 4)},
          Polynomial{2, -3, 6, -3, 6, -3, 2} * q(1, 8),
          Polynomial{1, -2, 4, -7, 4, -7, 4, -2, 1} * q(1, 4),
          Polynomial{2, -5, 12, -20, 37, -20, 37, -20, 12, -5, 2} * q(1, 8)};
}

inline std::vector<Rational> dq_table() {
  return {q(1, 2), q(-1, 2), 1, q(-5, 2), q(25, 4), -16, 43, q(-971, 8), q(1417, 4), q(-8431, 8), q(50899, 16),
          -9751, 30365, q(-3069719, 32), q(1227099, 4), q(-31719165, 32), q(206836175, 64), q(-339942899, 32),
          q(1125752909, 32), big("-15014220659", 128), big("25188552721", 64), big("-170016460947", 128),
          big("1153784184807", 256), big("-983668214037", 64), big("1685121707817", 32),
          big("-92779913448103", 512), big("80142274019997", 128), big("-1111839248032133", 512),
          big("7740056893342455", 1024), big("-13515970598654393", 512), big("47354245650630005", 512),
          big("-665632101181145115", 2048)};
}

inline const double theta[12] = {0.2327797875, 0.0471561089, 0.0085133626, 0.0005892453, -0.0001872357, 0.0002058729,
                                 0.0004701146, 0.0004980015, 0.0004005270, 0.0002722002, 0.0001607897, 0.0000812407};

// rows b = 1..15, infinity; columns a = 1..6
inline const double mu[16][6] = {
    {0.25000000, 0.01250000, 0.00780868, 0.03343231, 0.05778002, 0.07712952},
    {0.29846114, 0.03125000, 0.00159908, 0.01212467, 0.02539758, 0.03645721},
    {0.35999295, 0.05097235, 0.00647895, 0.00676996, 0.01624300, 0.02437494},
    {0.41433340, 0.07007201, 0.01316542, 0.00500146, 0.01287728, 0.01963810},
    {0.45590757, 0.08747624, 0.02069451, 0.00437252, 0.01163446, 0.01781467},
    {0.48390408, 0.10255189, 0.02845424, 0.00812804, 0.01125132, 0.01728395},
    {0.49985799, 0.11503743, 0.03601828, 0.01200557, 0.01120308, 0.01729854},
    {0.50642035, 0.12494927, 0.04309384, 0.01611126, 0.01125789, 0.01748823},
    {0.50681483, 0.13248892, 0.04949922, 0.02025219, 0.01132055, 0.01767914},
    {0.50452450, 0.13796512, 0.05514483, 0.02427779, 0.01136245, 0.01780892},
    {0.50218322, 0.14173414, 0.06001269, 0.02807992, 0.01138335, 0.01787452},
    {0.50070286, 0.14415527, 0.06413550, 0.03158969, 0.01139099, 0.01789618},
    {0.49999979, 0.14555794, 0.06757752, 0.03477145, 0.01139235, 0.01789583},
    {0.49977304, 0.14622041, 0.07041891, 0.03761547, 0.01139159, 0.01788837},
    {0.49977361, 0.14636154, 0.07274403, 0.04013040, 0.01139057, 0.01788111},
    {0.50000000, 0.12500000, 0.05479177, 0.03097495, 0.01138938, 0.01787406}};

// published digits are truncated, not rounded
inline const char* m2 = "0.2909264764293087363806977627391202900804371021955943665492";
inline const char* m3 = "0.1863897146439631045710466441086804351206556532933915498238";
inline const char* m4 = "0.1269922584074431352028922278802116388411851457617257181016";
inline const char* alpha = "0.874716305108211142215152904219159757";
inline const char* c0 = "1.03019956338269462315600411256447867669415885918240";

}  // namespace ref

// |x - t| where t is the midpoint of the truncation interval [ref, ref + 10^-digits)
inline double truncated_miss(const APReal& x, const char* reference) {
  std::string s(reference);
  int digits = static_cast<int>(s.size() - s.find('.') - 1);
  int prec = x.prec();
  APReal r = APReal::parse(s, prec) + APReal::parse("5e-" + std::to_string(digits + 1), prec);
  return abs(x - r).to_double();
}
inline double half_ulp(const char* reference) {
  std::string s(reference);
  return 0.5 * std::pow(10.0, -static_cast<double>(s.size() - s.find('.') - 1));
}

// ------------------------------------------------------------ criteria

inline Criterion crit_htable(Context& ctx) {
  Criterion c{1, "exact B_n table (h_series(7))", {}};
  auto t = std::chrono::steady_clock::now();
  auto hs = h_series(7);
  auto want = ref::b_table();
  bool all = true;
  std::string bad;
  for (int n = 0; n <= 7; ++n)
    if (hs[n].num != want[n] || hs[n].power != n + 1 || hs[n].root != 2) {
      all = false;
      bad += " n=" + std::to_string(n);
    }
  double s = secs_since(t);
  c.checks.push_back(exact("B_0..B_7 equal the table", all, bad));
  c.checks.push_back(timing("runtime seconds", s, 10.0));
  ctx.h().extend_to(7);
  return c;
}

inline Criterion crit_dh0(Context& ctx) {
  Criterion c{2, "exact H_n'(0) table, n <= 17; generation to n = 60", {}};
  auto want = ref::dh0_table();
  bool all = true;
  std::string bad;
  auto t = std::chrono::steady_clock::now();
  HSeries& h = ctx.h();
  for (int n = 0; n < static_cast<int>(want.size()); ++n)
    if (h.dH0(n) != want[n]) {
      all = false;
      bad += " n=" + std::to_string(n);
    }
  c.checks.push_back(exact("H_n'(0) n <= 17 incl. factored denominators", all, bad));
  h.extend_to(60);
  c.checks.push_back(timing("generation to n = 60, seconds", secs_since(t), 120.0));
  return c;
}

inline Criterion crit_partial(Context& ctx) {
  Criterion c{3, "partial sums of (-1)^n H_n'(0)", {}};
  HSeries& h = ctx.h();
  Rational s = 0;
  std::map<int, double> want{{17, 0.2909255862}, {40, 0.2909264880}, {50, 0.2909264784}};
  for (int n = 0; n <= 50; ++n) {
    s += n % 2 ? -h.dH0(n) : h.dH0(n);
    if (want.count(n)) {
      double v = Rational(s).get_d();
      c.checks.push_back(near("N=" + std::to_string(n), std::fabs(v - want[n]), 1e-9, fixed(v, 12)));
    }
  }
  return c;
}

inline Criterion crit_det() {
  Criterion c{4, "det Y_n closed form, n <= 30", {}};
  bool all = true;
  std::string bad;
  for (int n = 1; n <= 30; ++n)
    if (mat_det_exact(lmap_matrix(n)) != lmap_det(n)) {
      all = false;
      bad += " n=" + std::to_string(n);
    }
  c.checks.push_back(exact("exact determinant equals product formula", all, bad));
  return c;
}

inline Criterion crit_moments(Context& ctx) {
  Criterion c{5, "moments U=325 at 512 bits", {}};
  const MomentVector& mv = ctx.moments();
  c.checks.push_back(near("m_2 all 58 digits", truncated_miss(mv[2], ref::m2), half_ulp(ref::m2)));
  c.checks.push_back(near("m_3 all 58 digits", truncated_miss(mv[3], ref::m3), half_ulp(ref::m3)));
  c.checks.push_back(near("m_4 all 58 digits", truncated_miss(mv[4], ref::m4), half_ulp(ref::m4)));
  APReal half(0.5, mv.prec);
  c.checks.push_back(near("m_1 = 1/2", abs(mv[1] - half).to_double(), 1e-50));
  c.checks.push_back(near("3 m_2 - 2 m_3 = 1/2", abs(3 * mv[2] - 2 * mv[3] - half).to_double(), 1e-50));
  c.checks.push_back(timing("solve seconds", ctx.moment_seconds, 600.0));
  return c;
}

inline Criterion crit_constants(Context& ctx) {
  Criterion c{6, "alpha and c_0", {}};
  const MomentVector& mv = ctx.moments();
  AlphaValue a = hausdorff_alpha(mv);
  c.checks.push_back(near("alpha 36 digits", truncated_miss(a.alpha, ref::alpha), half_ulp(ref::alpha),
                          a.alpha.to_fixed(40) + " (est. " + std::to_string(a.digits) + " digits)"));
  double ad = a.alpha.to_double();
  c.checks.push_back(exact("alpha in (0.8746, 0.8749)", ad > 0.8746 && ad < 0.8749));
  APReal c0 = c0_constant(mv);
  c.checks.push_back(near("c_0 >= 25 digits", abs(c0 - APReal::parse(ref::c0, mv.prec)).to_double(), 1e-25,
                          c0.to_fixed(40)));
  return c;
}

inline APComplex z0(int prec) { return {APReal(make_rational(2, 3), prec), APReal(4L, prec)}; }

inline Criterion crit_gcross(Context& ctx) {
  Criterion c{7, "G(2/3 + 4i) three ways", {}};
  const MomentVector& mv = ctx.moments();
  GValue r = g_reduce_eval(z0(256), mv, 256);
  CD vr = to_cd(r.value);
  auto miss = [](CD a, CD b) { return std::max(std::fabs(a.re - b.re), std::fabs(a.im - b.im)); };
  c.checks.push_back(near("reduction vs 0.078083+0.205424i", miss(vr, {0.078083, 0.205424}), 5e-7,
                          format_complex(r.value, 12)));
  HSum hs = g_via_h(z0(256), 60, ctx.h());
  CD vh = to_cd(hs.value);
  c.checks.push_back(near("H-series N=60 vs 0.078090+0.205427i", miss(vh, {0.078090, 0.205427}), 1e-6,
                          format_complex(hs.value, 12)));
  CD vs = g_stieltjes(to_cd(z0(64)), 1, 3560);
  c.checks.push_back(near("Stieltjes N=3560 vs reduction, 4 decimals", miss(vs, vr), 5e-5,
                          fixed(vs.re, 8) + (vs.im < 0 ? "" : "+") + fixed(vs.im, 8) + "i"));
  return c;
}

inline Criterion crit_qside() {
  Criterion c{8, "Q-side tables and Borel sums", {}};
  QSeries qs;
  auto D = ref::d_table();
  bool dok = true;
  for (int n = 1; n <= 6; ++n) dok = dok && qs.D(n) == D[n - 1];
  c.checks.push_back(exact("D_1..D_6", dok));
  auto want = ref::dq_table();
  auto got = q_derivatives_at_minus_one(31);
  bool qok = true;
  std::string bad;
  for (int n = 0; n <= 31; ++n)
    if (got[n] != want[n]) {
      qok = false;
      bad += " n=" + std::to_string(n);
    }
  c.checks.push_back(exact("Q_n'(-1), n <= 31", qok, bad));
  BorelResult b = borel_m2();
  double worst = 0;
  for (int r = 0; r <= 11; ++r) worst = std::max(worst, std::fabs(b.theta[r].value.to_double() - ref::theta[r]));
  c.checks.push_back(near("theta_0..theta_11 (Nmax=110)", worst, 1e-8));
  c.checks.push_back(near("sum theta_r = 0.2909400155", std::fabs(b.sum.to_double() - 0.2909400155), 1e-9,
                          b.sum.to_fixed(10)));
  c.checks.push_back(near("toy (-2)^n -> 1/3", std::fabs(borel_toy().to_double() - 1.0 / 3), 1e-10));
  c.experimental = true;
  return c;
}

inline Criterion crit_mu() {
  Criterion c{9, "mu(a,b) table and chain bound", {}};
  auto t = mu_table();
  double worst = 0;
  std::string bad;
  for (int b = 0; b < 16; ++b)
    for (int a = 0; a < 6; ++a) {
      double d = std::fabs(t[b][a] - ref::mu[b][a]);
      worst = std::max(worst, d);
      if (d > 1e-6)
        bad += " (a=" + std::to_string(a + 1) + ",b=" + (b == 15 ? std::string("inf") : std::to_string(b + 1)) +
               ": " + fixed(t[b][a], 8) + ")";
    }
  c.checks.push_back(near("96 cells to 1e-6", worst, 1e-6, bad));
  double chain = mu_chain_bound(t);
  c.checks.push_back(near("chain bound < 0.76", chain, 0.76, fixed(chain, 6)));
  return c;
}

inline Criterion crit_pcf() {
  Criterion c{10, "p-continued fraction examples", {}};
  int prec = 256;
  APReal p = APReal::parse("1.5", prec);
  APReal x = (1 + sqrt(1 + 4 * p)) / (2 * p);
  c.checks.push_back(exact("(1+sqrt(1+4p))/(2p) at p=3/2 is all ones", pcf_expand(x, p, 12).quotients == CF(12, 1)));
  CF s3{4, 2, 1, 10, 1, 1, 2, 1, 5, 1, 1, 2, 1, 2, 1, 1, 2, 1, 3, 7, 4};
  CF got = pcf_expand(sqrt(APReal(3L, prec)), p, 21).quotients;
  c.checks.push_back(exact("sqrt 3 at p = 3/2, 21 quotients", got == s3, address_string(got)));
  CF two{4, 1, 1};
  for (int i = 0; i < 5; ++i) two.insert(two.end(), {2, 1, 1});
  two.push_back(2);
  CF g2 = pcf_expand(APReal(2L, prec), sqrt(APReal(2L, prec)), 19).quotients;
  c.checks.push_back(exact("2 at p = sqrt 2, period (2,1,1)", g2 == two, address_string(g2)));
  return c;
}

// 20 points off the real axis, so that z, z+1, 1/z + 1, pz and p/z avoid the cut.
inline std::vector<CD> feq_grid() {
  std::vector<CD> g;
  for (double r : {0.25, 0.6, 1.2, 2.5})
    for (double th : {0.3, 1.2, 2.0, 2.8, -1.6}) g.push_back({r * std::cos(th), r * std::sin(th)});
  return g;
}

inline Criterion crit_feq(Context& ctx) {
  Criterion c{11, "functional equation suites", {}};
  const MomentVector& mv = ctx.moments();
  int prec = 256;
  GReducer G(mv, prec);
  GEvaluator g1 = [&](const APComplex& z) { return G(z).value; };
  double w1 = 0, w2 = 0;
  for (CD z : feq_grid()) {
    APComplex za = make_apcomplex(z.re, z.im, prec);
    auto r = feq_residual(APReal(1L, prec), za, g1);
    w1 = std::max({w1, r[0].to_double(), r[1].to_double()});
    auto r2 = feq_residual(APReal(2L, prec), za, g_point_mass);
    w2 = std::max({w2, r2[0].to_double(), r2[1].to_double()});
  }
  c.checks.push_back(near("p=1 via reduction, 20 points", w1, 1e-30));
  c.checks.push_back(near("p=2 closed form, 20 points", w2, 1e-30));
  for (double p : {1.5, 3.0}) {
    auto grid = stieltjes_grid(p, 4000);
    GEvaluator gs = [&](const APComplex& z) {
      CD v = integrate_dFp(grid, resolvent_kernel(to_cd(z)));
      return make_apcomplex(v.re, v.im, 64);
    };
    double w = 0;
    for (CD z : feq_grid()) {
      auto r = feq_residual(APReal(p, 64), make_apcomplex(z.re, z.im, 64), gs);
      w = std::max({w, r[0].to_double(), r[1].to_double()});
    }
    c.checks.push_back(near("p=" + fixed(p, 1) + " via Stieltjes N=4000, 20 points", w, 1e-3));
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 1);
  double wx = 0;
  for (int i = 0; i < 20; ++i) {
    double r = std::sqrt(u(rng)), th = 2 * M_PI * u(rng);
    APComplex p = make_apcomplex(2 + r * std::cos(th), r * std::sin(th), 512);
    APReal x(0.05 + 8 * u(rng), 512);
    auto res = x_map_feq_residual(p, x, 60);
    wx = std::max(wx, *std::max_element(res.begin(), res.end()));
  }
  c.checks.push_back(near("x_map equations, 20 random (p, x)", wx, 1e-8));
  for (double p : {1.0, 1.5, 3.0}) {
    auto grid = stieltjes_grid(p, 4000);
    double m1 = 0;
    for (size_t k = 0; k < grid.x.size(); ++k) m1 += grid.x[k] * grid.weight[k];
    m1 *= 2;
    double M1 = integrate_dFp(grid, power_kernel(1));
    c.checks.push_back(near("m_1(" + fixed(p, 1) + ") = p/2", std::fabs(m1 - p / 2), 1e-3));
    c.checks.push_back(near("M_1(" + fixed(p, 1) + ") = (p^2+2)/(4p-2)", std::fabs(M1 - (p * p + 2) / (4 * p - 2)), 1e-3));
  }
  return c;
}

inline Criterion crit_analysis(Context& ctx) {
  Criterion c{12, "contour, integral equation, double sum bound", {}};
  const MomentVector& mv = ctx.moments();
  auto c2 = contour_check(2, 10, 2048, g_point_mass, 128);
  c.checks.push_back(near("contour p=2 = -1", cabs(c2 + 1L).to_double(), 1e-30));
  GReducer G(mv, 128);
  GEvaluator g1 = [&](const APComplex& z) { return G(z).value; };
  auto c1 = contour_check(1, 10, 2048, g1, 128);
  c.checks.push_back(near("contour p=1, R=10, M=2048 = -1", cabs(c1 + 1L).to_double(), 1e-6, format_complex(c1, 12)));
  auto grid = stieltjes_grid(1.5, 3560);
  GEvaluator gs = [&](const APComplex& z) {
    CD v = integrate_dFp(grid, resolvent_kernel(to_cd(z)));
    return make_apcomplex(v.re, v.im, 64);
  };
  auto c15 = contour_check(1.5, 8, 1024, gs, 64);
  c.checks.push_back(near("contour p=1.5, R=8, M=1024 = -1", cabs(c15 + 1L).to_double(), 1e-2, format_complex(c15, 8)));
  for (double s : {0.5, 1.0, 2.0}) {
    auto r2 = integral_eq_residual(2, s, 80, nullptr);
    c.checks.push_back(near("integral equation p=2, s=" + fixed(s, 1), r2.residual, 1e-10));
    auto r1 = integral_eq_residual(1, s, 80, &mv);
    c.checks.push_back(near("integral equation p=1, s=" + fixed(s, 1), r1.residual, 1e-4,
                            "tail bound " + sci(r1.tail_bound, 2)));
  }
  double l = dyadic_double_sum().to_double();
  c.checks.push_back(near("double-sum constant 0.20453", std::fabs(l - 0.20453), 5e-6, fixed(l, 10)));
  return c;
}

inline std::vector<std::function<Criterion(Context&)>> acceptance_criteria() {
  return {crit_htable, crit_dh0, crit_partial, [](Context&) { return crit_det(); }, crit_moments, crit_constants,
          crit_gcross, [](Context&) { return crit_qside(); }, [](Context&) { return crit_mu(); },
          [](Context&) { return crit_pcf(); }, crit_feq, crit_analysis};
}

inline Criterion run_timed(const std::function<Criterion(Context&)>& f, Context& ctx) {
  auto t = std::chrono::steady_clock::now();
  Criterion c;
  try {
    c = f(ctx);
  } catch (const std::exception& e) {
    c.checks.push_back({"exception", 1, 0, false, e.what()});
  }
  c.seconds = secs_since(t);
  return c;
}

// ------------------------------------------------------- invariant suites

inline Criterion inv_exact_series() {
  Criterion c{0, "exact series invariants", {}};
  HSeries h;
  bool recip = true, deg = true;
  for (int n = 1; n <= 60; ++n) {
    const Polynomial& b = h.B(n);
    deg = deg && b.degree() <= n - 1 && b.coeff(0) == 0;
    if (n < 2) continue;
    Polynomial s = b.shift1();
    std::vector<Rational> rev(n);
    for (int k = 0; k < n; ++k) rev[k] = s.coeff(n - 1 - k);
    Polynomial r(std::move(rev));
    recip = recip && s == (n % 2 ? r * Rational(-1) : r);
  }
  c.checks.push_back(exact("B_n reciprocity, n <= 60", recip));
  c.checks.push_back(exact("B_n(0) = 0 and deg B_n <= n-1, n <= 60", deg));
  QSeries qs;
  bool pal = true, pow2den = true, link = true;
  for (int n = 1; n <= 60; ++n) {
    Polynomial d = qs.D(n);
    int m = 2 * n - 2;
    pal = pal && d.degree() == m;
    for (int k = 0; k <= m && pal; ++k) pal = d.coeff(k) == d.coeff(m - k);
    for (const auto& x : d.coeffs()) {
      BigInt den = x.get_den();
      pow2den = pow2den && (den & (den - 1)) == 0;
    }
    Rational dm1 = d.eval(-1);
    link = link && qs.dQ_minus_one(n) == 2 * (n % 2 ? -dm1 : dm1);
  }
  c.checks.push_back(exact("D_n palindromic of degree 2n-2, n <= 60", pal));
  c.checks.push_back(exact("D_n denominators are powers of 2, n <= 60", pow2den));
  c.checks.push_back(exact("Q_n'(-1) = 2(-1)^n D_n(-1), n <= 60", link));
  return c;
}

inline Criterion inv_moments(Context& ctx) {
  Criterion c{0, "moment relations", {}};
  const MomentVector& mv = ctx.moments();
  for (double p : {1.5, 3.0}) {
    RelationReport r = moment_relations_check(p, 4, 4000);
    c.checks.push_back(near("B_{L,T} relation p=" + fixed(p, 1), r.prop43, 1e-3));
    c.checks.push_back(near("symmetry relation p=" + fixed(p, 1), r.symmetry, 1e-3));
  }
  double w = 0;
  for (int L = 0; L <= 4; ++L)
    for (int T = 0; T <= 4; ++T)
      for (const char* ps : {"1.5", "2", "3"}) {
        APReal p = APReal::parse(ps, 256);
        BltClosedForm f = blt_closed_form(L, T);
        w = std::max(w, abs(blt_series(L, T, p, 400) - f.eval_as(p)).to_double());
      }
  c.checks.push_back(near("B_{L,T} series vs closed form", w, 1e-30));
  GValue g1 = g_reduce_eval(make_apcomplex(1, 0, 256), mv, 256);
  c.checks.push_back(near("G(1) = M_1 = 3/2", cabs(g1.value - APComplex(APReal(1.5, 256))).to_double(), 1e-40));
  return c;
}

inline std::vector<std::function<Criterion(Context&)>> invariant_suites() {
  return {[](Context&) { return inv_exact_series(); }, inv_moments};
}

}  // namespace verify
