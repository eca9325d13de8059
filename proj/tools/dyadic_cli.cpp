// dyadic: command-line front end. Exit codes: 0 ok, 1 usage or input error,
// 2 a verification tolerance failed.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

#include "verify_suite.hpp"

using namespace dyadic;

namespace {

struct Config {
  int prec = 256;
  int order = 325;
  int depth = 10;
  std::optional<int> n_terms;    // per command: H/Q series 60, Borel 110
  std::optional<int> partition;  // Stieltjes cells 3560, mu-table grid 4096
  int rmax = 11;
  std::string z = "0.6666666667+4i";
  std::string p = "1";
  std::string x = "1/2";
  std::string out;
  std::optional<std::string> format;  // json, except mu-table and curve
  std::string method = "all";
  std::string suite = "full";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

APComplex parse_apcomplex(const std::string& s, int prec) {
  ComplexText t = parse_complex_text(s);
  auto part = [&](const std::string& u) {
    return u.find('/') == std::string::npos ? APReal::parse(u, prec) : APReal(parse_rational(u), prec);
  };
  return {part(t.re), part(t.im)};
}

bool is_rational_text(const std::string& s) {
  return !s.empty() && s.find_first_not_of("+-0123456789/") == std::string::npos;
}

APReal parse_real(const std::string& s, int prec) {
  return is_rational_text(s) ? APReal(parse_rational(s), prec) : APReal::parse(s, prec);
}

// Sends an artifact to --out/<name> or stdout.
void emit(const Config& cfg, const std::string& name, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::create_directories(cfg.out);
  std::string path = (std::filesystem::path(cfg.out) / name).string();
  write_file(path, content.back() == '\n' ? content : content + "\n");
  std::cout << "wrote " << path << "\n";
}

std::string dump(const json& j) { return j.dump(2); }

bool csv(const Config& cfg, const char* fallback = "json") { return cfg.format.value_or(fallback) == "csv"; }

std::string complex_json_text(const CD& v, int decimals) {
  return fixed(v.re, decimals) + (v.im < 0 ? "-" : "+") + fixed(std::fabs(v.im), decimals) + "i";
}

// ------------------------------------------------------------------ commands

int cmd_qmark(const Config& cfg) {
  if (csv(cfg)) {
    emit(cfg, "qmark_gen" + std::to_string(cfg.depth) + ".csv", qmark_generation_csv(cfg.depth));
    return 0;
  }
  json j;
  if (is_rational_text(cfg.x)) {
    Rational x = parse_rational(cfg.x);
    j = {{"x", to_string(x)}, {"cf", cf_expand(x)}, {"F", to_string(qmark_F(x))}, {"minkowski", to_string(minkowski_q(x))}};
  } else {
    APReal x = APReal::parse(cfg.x, cfg.prec);
    CF a = cf_expand(x);
    j = {{"x", cfg.x}, {"cf_terms", a.size()}, {"F", qmark_F(x).to_sci(digits_for_bits(cfg.prec) - 2)}};
  }
  emit(cfg, "qmark.json", dump(j));
  return 0;
}

int cmd_tree(const Config& cfg) {
  json gen = json::array();
  for (auto& [n, d] : symbolic_generation(cfg.depth)) gen.push_back({{"num", poly_json(n)}, {"den", poly_json(d)}});
  json stern = json::array();
  auto sp = stern_polys(1L << std::min(cfg.depth, 10));
  for (size_t n = 1; n < sp.size(); ++n) stern.push_back({{"n", n}, {"coeffs", poly_json(sp[n])}});
  emit(cfg, "tree.json", dump({{"generation", cfg.depth}, {"elements", gen}, {"stern", stern}}));
  return 0;
}

int cmd_pcf(const Config& cfg) {
  APReal x = parse_real(cfg.x, cfg.prec), p = parse_real(cfg.p, cfg.prec);
  PCF r = pcf_expand(x, p, cfg.depth);
  emit(cfg, "pcf.json", dump({{"x", cfg.x}, {"p", cfg.p}, {"quotients", r.quotients}, {"terminated", r.terminated}}));
  return 0;
}

int cmd_xmap(const Config& cfg) {
  APComplex p = parse_apcomplex(cfg.p, cfg.prec);
  json j{{"x", cfg.x}, {"p", cfg.p}};
  if (is_rational_text(cfg.x)) {
    Rational x = parse_rational(cfg.x);
    APComplex v = x_map(p, cf_expand(x), true).value;
    j["value"] = format_complex(v, digits_for_bits(cfg.prec) - 2);
    j["tail_error"] = 0.0;
  } else {
    auto r = x_map(p, cf_expand(APReal::parse(cfg.x, cfg.prec), cfg.depth), false);
    j["value"] = format_complex(r.value, digits_for_bits(cfg.prec) - 2);
    j["tail_error"] = r.tail_error;
  }
  emit(cfg, "xmap.json", dump(j));
  return 0;
}

int cmd_curve(const Config& cfg) {
  CD p = to_cd(parse_apcomplex(cfg.p, 64));
  auto pts = curve_sample(p, cfg.depth);
  if (csv(cfg, "csv")) {
    emit(cfg, "curve.csv", curve_csv(pts));
    return 0;
  }
  json a = json::array();
  for (const auto& c : pts) a.push_back({{"re", fixed(c.value.re, 15)}, {"im", fixed(c.value.im, 15)}, {"address", c.address()}});
  emit(cfg, "curve.json", dump({{"p", cfg.p}, {"depth", cfg.depth}, {"points", a}}));
  return 0;
}

int cmd_mu_table(const Config& cfg) {
  MuOptions opt;
  opt.grid = cfg.partition.value_or(4096);
  auto t = mu_table(opt);
  if (csv(cfg, "csv")) {
    emit(cfg, "mu_table.csv", mu_table_csv(t));
    return 0;
  }
  json rows = json::array();
  for (size_t b = 0; b < t.size(); ++b) {
    json r = json::array();
    for (double v : t[b]) r.push_back(fixed(v, 8));
    rows.push_back({{"b", b + 1 == t.size() ? std::string("inf") : std::to_string(b + 1)}, {"mu", r}});
  }
  emit(cfg, "mu_table.json", dump({{"rows", rows}, {"chain_bound", fixed(mu_chain_bound(t), 8)}}));
  return 0;
}

int cmd_hseries(const Config& cfg) {
  emit(cfg, "hseries.json", dump(hseries_json(cfg.n_terms.value_or(60))));
  return 0;
}

int cmd_qseries(const Config& cfg) {
  emit(cfg, "qseries.json", dump(qseries_json(cfg.n_terms.value_or(60))));
  return 0;
}

int cmd_moments(const Config& cfg) {
  MomentVector mv = moments_solve(cfg.order, cfg.prec);
  int digits = digits_for_bits(cfg.prec) - 2;
  if (csv(cfg)) {
    std::string s = "L,m_L\n";
    for (int L = 0; L < mv.size(); ++L) s += std::to_string(L) + "," + mv[L].to_sci(digits) + "\n";
    emit(cfg, "moments.csv", s);
    return 0;
  }
  json m = json::array();
  for (int L = 0; L < mv.size(); ++L) m.push_back(mv[L].to_sci(digits));
  emit(cfg, "moments.json",
       dump({{"order", mv.order}, {"prec", mv.prec}, {"accurate_order", accurate_moment_order(mv.order)},
             {"residual", sci(mv.residual, 3)}, {"correction", sci(mv.correction, 3)}, {"m", m}}));
  return 0;
}

int cmd_constants(const Config& cfg) {
  MomentVector mv = moments_solve(cfg.order, cfg.prec);
  AlphaValue a = hausdorff_alpha(mv);
  json j{{"m_1", mv[1].to_fixed(60)},
         {"m_2", mv[2].to_fixed(58)},
         {"m_3", mv[3].to_fixed(58)},
         {"m_4", mv[4].to_fixed(58)},
         {"alpha", a.alpha.to_fixed(std::max(36, a.digits))},
         {"alpha_digits", a.digits},
         {"c_0", c0_constant(mv).to_fixed(50)},
         {"order", cfg.order},
         {"prec", cfg.prec}};
  emit(cfg, "constants.json", dump(j));
  return 0;
}

int cmd_gvalue(const Config& cfg) {
  APComplex z = parse_apcomplex(cfg.z, cfg.prec);
  bool all = cfg.method == "all";
  json j{{"z", cfg.z}};
  if (all || cfg.method == "reduce") {
    MomentVector mv = moments_solve(cfg.order, std::max(cfg.prec, 256));
    GValue g = g_reduce_eval(z, mv, cfg.prec);
    j["reduce"] = {{"value", format_complex(g.value, std::min(40, digits_for_bits(cfg.prec) - 2))},
                   {"error_estimate", sci(g.error, 2)}};
  }
  if (all || cfg.method == "hseries") {
    int n = cfg.n_terms.value_or(60);
    HSum h = g_via_h(z, n);
    json mags = json::array();
    for (double t : h.term_abs) mags.push_back(sci(t, 3));
    j["hseries"] = {{"value", format_complex(h.value, 15)}, {"n_terms", n}, {"term_magnitudes", mags}};
  }
  if (all || cfg.method == "stieltjes") {
    double p = parse_real(cfg.p, 64).to_double();
    int cells = cfg.partition.value_or(3560);
    CD v = g_stieltjes(to_cd(z), p, cells);
    j["stieltjes"] = {{"value", complex_json_text(v, 10)}, {"partition", cells}, {"p", cfg.p}};
  }
  if (!j.contains("reduce") && !j.contains("hseries") && !j.contains("stieltjes"))
    throw UsageError("--method must be reduce, hseries, stieltjes or all");
  emit(cfg, "gvalue.json", dump(j));
  return 0;
}

int cmd_borel(const Config& cfg) {
  int nmax = cfg.n_terms.value_or(110);
  BorelResult b = borel_m2(nmax, cfg.rmax, cfg.prec);
  json th = json::array();
  for (const auto& t : b.theta) th.push_back({{"r", t.r}, {"theta", t.value.to_fixed(12)}});
  emit(cfg, "borel.json",
       dump({{"label", "experimental"}, {"n_max", nmax}, {"r_max", cfg.rmax}, {"theta", th}, {"sum", b.sum.to_fixed(12)},
             {"toy_sum", borel_toy().to_fixed(15)}}));
  return 0;
}

int cmd_verify(const Config& cfg) {
  std::vector<std::function<verify::Criterion(verify::Context&)>> suite;
  if (cfg.suite == "acceptance" || cfg.suite == "full") suite = verify::acceptance_criteria();
  if (cfg.suite == "invariants" || cfg.suite == "full")
    for (auto& f : verify::invariant_suites()) suite.push_back(f);
  if (suite.empty()) throw UsageError("--suite must be acceptance, invariants or full");
  verify::Context ctx;
  ctx.moment_order = cfg.order;
  ctx.moment_prec = std::max(cfg.prec, 512);
  json report = json::array();
  bool ok = true;
  for (auto& f : suite) {
    verify::Criterion c = verify::run_timed(f, ctx);
    ok = ok && c.pass();
    std::cerr << (c.pass() ? "PASS " : "FAIL ") << (c.id ? "criterion " + std::to_string(c.id) + ": " : "") << c.title << "\n";
    for (const auto& k : c.checks) {
      json e{{"check", k.name}, {"tolerance", sci(k.tolerance, 3)}, {"pass", k.pass}, {"group", c.title}};
      if (!k.timing) e["residual"] = sci(k.residual, 3);
      if (c.id) e["criterion"] = c.id;
      if (!k.detail.empty()) e["detail"] = k.detail;
      if (c.experimental) e["label"] = "experimental";
      report.push_back(e);
    }
  }
  emit(cfg, "verify_report.json", dump(report));
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski question mark function, dyadic period function and related constants"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--prec", cfg.prec, "precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--order", cfg.order, "moment truncation U")->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.depth, "tree generation or expansion length")->check(CLI::PositiveNumber);
  app.add_option("--n-terms", cfg.n_terms, "series length N")->check(CLI::NonNegativeNumber);
  app.add_option("--partition", cfg.partition, "Stieltjes cells N, or mu-table grid")->check(CLI::PositiveNumber);
  app.add_option("--rmax", cfg.rmax, "last Borel slice")->check(CLI::NonNegativeNumber);
  app.add_option("--z", cfg.z, "complex argument a+bi");
  app.add_option("--p", cfg.p, "parameter p (real, rational, or a+bi where allowed)");
  app.add_option("--x", cfg.x, "argument x (num/den or decimal)");
  app.add_option("--out", cfg.out, "output directory (default: stdout)");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--method", cfg.method, "reduce, hseries, stieltjes or all")
      ->check(CLI::IsMember({"reduce", "hseries", "stieltjes", "all"}));
  app.add_option("--suite", cfg.suite, "acceptance, invariants or full")
      ->check(CLI::IsMember({"acceptance", "invariants", "full"}));

  std::map<std::string, std::function<int(const Config&)>> cmds{
      {"qmark", cmd_qmark},       {"tree", cmd_tree},         {"pcf", cmd_pcf},       {"xmap", cmd_xmap},
      {"curve", cmd_curve},       {"mu-table", cmd_mu_table}, {"hseries", cmd_hseries}, {"qseries", cmd_qseries},
      {"moments", cmd_moments},   {"constants", cmd_constants}, {"gvalue", cmd_gvalue}, {"borel", cmd_borel},
      {"verify", cmd_verify}};
  const std::map<std::string, std::string> help{
      {"qmark", "F(x) = ?(x)/2; --format csv exports a Calkin-Wilf generation"},
      {"tree", "symbolic generation of the p-tree and Stern polynomials"},
      {"pcf", "p-continued fraction of --x"},
      {"xmap", "X(p, x)"},
      {"curve", "generation --depth of the p-tree at complex --p"},
      {"mu-table", "mu(a, b) table"},
      {"hseries", "exact H_n, n <= --n-terms"},
      {"qseries", "exact Q_n and D_n, n <= --n-terms"},
      {"moments", "moments m_L from the truncated linear system"},
      {"constants", "m_2..m_4, alpha, c_0"},
      {"gvalue", "G(--z) by reduction, H-series and Stieltjes sums"},
      {"borel", "Borel slices theta_r of the Q-side series (experimental)"},
      {"verify", "run a verification suite; exit 2 on any failure"}};
  for (auto& [name, _] : cmds) app.add_subcommand(name, help.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    for (auto* sub : app.get_subcommands()) return cmds.at(sub->get_name())(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
