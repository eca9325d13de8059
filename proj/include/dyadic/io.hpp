#pragma once

// Serialization: JSON for exact series and reports, CSV for tables and
// samples. Output is byte-stable: keys sorted (nlohmann::json default),
// fixed decimal counts, no locale.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hseries.hpp"
#include "ptree.hpp"
#include "qseries.hpp"

namespace dyadic {

using json = nlohmann::json;

struct IOError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

inline json poly_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

inline json ratfunc_json(int n, const RationalFunction& f) {
  return {{"n", n}, {"numerator_coeffs", poly_json(f.num)}, {"denominator", {{"root", to_string(f.root)}, {"power", f.power}}}};
}

inline json hseries_json(int N) {
  HSeries h;
  json out = json::array();
  for (int n = 0; n <= N; ++n) out.push_back(ratfunc_json(n, h.H(n)));
  return out;
}

// Q_0 = -1/(2z); Q_n = (z^2 - 1) D_n / z^(n+1), with D_n also listed.
inline json qseries_json(int N) {
  QSeries q;
  json out = json::array();
  out.push_back(ratfunc_json(0, {Polynomial{make_rational(-1, 2)}, 0, 1}));
  for (int n = 1; n <= N; ++n) {
    Polynomial d = q.D(n);
    json t = ratfunc_json(n, {d * Polynomial{-1, 0, 1}, 0, n + 1});
    t["D"] = poly_json(d);
    t["dQ_at_minus_one"] = to_string(q.dQ_minus_one(n));
    out.push_back(t);
  }
  out[0]["dQ_at_minus_one"] = to_string(q.dQ_minus_one(0));
  return out;
}

inline std::string fixed(double v, int decimals) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.setf(std::ios::fixed);
  s.precision(decimals);
  s << v;
  return s.str();
}

inline std::string sci(double v, int digits = 6) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.setf(std::ios::scientific);
  s.precision(digits);
  s << v;
  return s.str();
}

// Rows b = 1..bmax then "inf", columns a = 1..amax.
inline std::string mu_table_csv(const std::vector<std::vector<double>>& t) {
  std::string s = "b\\a";
  for (size_t a = 1; a <= t[0].size(); ++a) s += "," + std::to_string(a);
  s += "\n";
  for (size_t b = 0; b < t.size(); ++b) {
    s += b + 1 == t.size() ? "inf" : std::to_string(b + 1);
    for (double v : t[b]) s += "," + fixed(v, 8);
    s += "\n";
  }
  return s;
}

inline std::string address_string(const CF& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
  return s;
}

inline std::string curve_csv(const std::vector<CurvePoint>& pts) {
  std::string s = "re,im,address\n";
  for (const auto& c : pts) s += fixed(c.value.re, 15) + "," + fixed(c.value.im, 15) + "," + address_string(c.address()) + "\n";
  return s;
}

// (rational, F) for every element of a Calkin-Wilf generation, sorted.
inline std::string qmark_generation_csv(int n) {
  auto g = cw_generation(n);
  std::sort(g.begin(), g.end());
  std::string s = "x,F\n";
  for (const auto& f : g) {
    Rational x = f.to_rational();
    s += to_string(x) + "," + to_string(qmark_F(x)) + "\n";
  }
  return s;
}

// "a+bi", "a-bi", "a", "bi" with decimal or n/d parts; kept as text so the
// caller can parse at any precision.
struct ComplexText {
  std::string re = "0", im = "0";
};

inline ComplexText parse_complex_text(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto bad = [&] { return DomainError("cannot parse complex number '" + s + "' (expected a+bi)"); };
  if (s.empty()) throw bad();
  auto number = [](const std::string& t) {
    if (t.empty() || t == "+" || t == "-") return false;
    if (auto slash = t.find('/'); slash != std::string::npos) {
      size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
      auto digits = [](const std::string& u) {
        return !u.empty() && std::all_of(u.begin(), u.end(), [](unsigned char c) { return std::isdigit(c); });
      };
      return digits(t.substr(i, slash - i)) && digits(t.substr(slash + 1));
    }
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    bool digit = false, dot = false, exp = false;
    for (; i < t.size(); ++i) {
      char c = t[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digit = true;
      } else if (c == '.' && !dot && !exp) {
        dot = true;
      } else if ((c == 'e' || c == 'E') && digit && !exp && i + 1 < t.size()) {
        exp = true;
        if (t[i + 1] == '+' || t[i + 1] == '-') ++i;
      } else {
        return false;
      }
    }
    return digit;
  };
  ComplexText z;
  if (s.back() != 'i') {
    if (!number(s)) throw bad();
    z.re = s;
    return z;
  }
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not the leading one or part of an exponent
  size_t cut = std::string::npos;
  for (size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  std::string re = cut == std::string::npos ? "0" : body.substr(0, cut);
  std::string im = cut == std::string::npos ? body : body.substr(cut);
  if (im.empty() || im == "+" || im == "-") im += "1";
  if (!number(re) || !number(im)) throw bad();
  z.re = re;
  z.im = im[0] == '+' ? im.substr(1) : im;
  return z;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw IOError("write to " + path + " failed");
}

}  // namespace dyadic
