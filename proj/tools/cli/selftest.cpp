#include "selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "leroy/asymptotics.hpp"
#include "leroy/errors.hpp"
#include "leroy/fox_wright.hpp"
#include "leroy/laplace.hpp"
#include "leroy/leroy_series.hpp"
#include "leroy/mellin_barnes.hpp"
#include "leroy/numerics/gamma.hpp"

namespace leroy::cli {

namespace {

struct Point {
  std::string label;
  double log10_residual;  // -inf for an exact match
};

struct Suite {
  std::string name;
  std::string description;
  double threshold_log10;
  std::function<std::vector<Point>(int digits)> run;
};

PrecisionConfig digits_config(int target) {
  PrecisionConfig pc;
  pc.target_digits = target;
  return pc;
}

BigComplex cz(const char* re, const char* im) {
  Precision p = Precision::from_digits(50);
  return BigComplex(BigReal::parse(re, p), BigReal::parse(im, p));
}

// log10(|a - b| / max(1, |b|))
double rel(const BigComplex& a, const BigComplex& b) {
  BigComplex d = a - b;
  if (d.is_zero()) return -INFINITY;
  return d.log10_abs() - (b.is_zero() ? 0.0 : std::max(0.0, b.log10_abs()));
}

std::vector<Point> normalization(int digits) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> d(1, 400);
  std::vector<Point> out;
  for (int i = 0; i < 20; ++i) {
    auto dec = [&] { return Decimal(mpq_class(d(rng), 100)); };
    Params p(dec(), dec(), dec());
    Precision wp = Precision::from_digits(digits + 10);
    BigComplex f = eval_series(p, BigComplex(wp), digits_config(digits)).value;
    BigReal g = numerics::exp(numerics::log_gamma_positive(p.beta().to_big(wp), wp) * p.gamma().to_big(wp));
    out.push_back({p.describe(), rel(f * g, BigComplex(BigReal(1L, wp)))});
  }
  return out;
}

std::vector<Point> classical(int digits) {
  Params p = Params::parse("1", "1", "1");
  std::vector<Point> out;
  for (const char* x : {"-5", "-1", "0.5", "3", "10"}) {
    BigComplex z = cz(x, "0");
    BigComplex f = eval_series(p, z, digits_config(digits)).value;
    BigComplex e = numerics::exp(BigComplex(z, Precision::from_digits(digits + 20)));
    out.push_back({std::string("x=") + x, (f - e).log10_abs() - e.log10_abs()});
  }
  return out;
}

std::vector<Point> wright(int digits) {
  std::vector<Point> out;
  const Decimal one = Decimal::parse("1");
  for (auto [a, b, g] : {std::tuple{"0.5", "0.75", "4"}, {"0.6", "0.8", "3"}, {"1", "1", "1"}, {"0.7", "1", "2"},
                         {"1.5", "0.5", "2"}}) {
    Params p = Params::parse(a, b, g);
    long m = p.gamma().rational().get_num().get_si();
    WrightParams w{{GammaPair{one, one}}, std::vector<GammaPair>(static_cast<std::size_t>(m), {p.alpha(), p.beta()})};
    for (auto [re, im] : {std::pair{"-20", "0"}, {"-3", "0"}, {"0.5", "0"}, {"4", "0"}, {"1", "2"}}) {
      BigComplex z = cz(re, im);
      BigComplex s = eval_series(p, z, digits_config(digits)).value;
      BigComplex f = eval_wright(w, z, digits_config(digits)).value;
      BigComplex d = s - f;
      out.push_back({p.describe() + " z=" + re + "+" + im + "i",
                     d.is_zero() ? -INFINITY : d.log10_abs() - s.log10_abs()});
    }
  }
  return out;
}

std::vector<Point> contour(int) {
  struct Case {
    const char *a, *b, *g, *re, *im;
    bool plus;
  };
  const Case cases[] = {
      {"1", "1", "1", "1", "0", true},          {"0.6", "0.8", "3", "2", "1", true},
      {"0.8", "1", "2.5", "0", "1", true},      {"1", "1", "1", "-1", "0", false},
      {"0.5", "0.75", "4", "-10", "0", false},  {"0.6", "0.8", "3", "-2", "2", true},
      {"0.6", "0.8", "3", "-2", "2", false},    {"0.7", "0.9", "2", "3", "-1.5", true},
      {"0.7", "0.9", "2", "-4", "0", false},    {"0.8", "1", "2.5", "-1.5", "-0.5", false},
  };
  std::vector<Point> out;
  for (const auto& c : cases) {
    Params p = Params::parse(c.a, c.b, c.g);
    BigComplex z = cz(c.re, c.im);
    BigComplex ref = eval_series(p, z, digits_config(25)).value;
    BigComplex v = c.plus ? eval_contour_plus(p, z, Contour::right_loop(), digits_config(12)).value
                          : eval_contour_minus(p, z, Contour::left_loop(), digits_config(12)).value;
    out.push_back({std::string(c.plus ? "plus " : "minus ") + p.describe() + " z=" + c.re + "+" + c.im + "i",
                   rel(v, ref)});
  }
  return out;
}

std::vector<Point> extension(int) {
  std::vector<Point> out;
  Params p4 = Params::parse("0.5", "0.75", "4"), p3 = Params::parse("0.6", "0.8", "3");
  for (auto [p, re, im] : {std::tuple{&p4, "1.5", "0"}, {&p4, "-2", "0"}, {&p4, "0", "3"}, {&p4, "5", "0"},
                           {&p4, "-7", "2"}, {&p3, "10", "0"}, {&p3, "-20", "0"}, {&p3, "35", "35"},
                           {&p3, "0", "-60"}, {&p3, "100", "0"}}) {
    BigComplex z = cz(re, im);
    Precision wp = Precision::from_digits(40);
    BigComplex ext = eval_extension_contour(*p, z, Contour::left_loop(), digits_config(15)).value;
    BigComplex f = eval_series(*p, BigComplex(BigReal(1L, wp)) / z, digits_config(30)).value;
    BigReal lead = numerics::exp(-(numerics::log_gamma_positive(p->beta().to_big(wp), wp) * p->gamma().to_big(wp)));
    BigComplex r = ext - lead + f;
    double scale = std::log10(1.0 + abs(f).to_double());
    out.push_back({p->describe() + " z=" + re + "+" + im + "i", r.is_zero() ? -INFINITY : r.log10_abs() - scale});
  }
  return out;
}

std::vector<Point> laplace(int) {
  std::vector<Point> out;
  for (const auto& c : run_laplace_suite(digits_config(12)))
    out.push_back({c.point.label, c.relative_residual > 0 ? std::log10(c.relative_residual) : -INFINITY});
  return out;
}

std::vector<Point> residue(int) {
  ResidueCheck rc = residue_bookkeeping(Params::parse("0.6", "0.8", "3"), cz("2", "1"), 5, digits_config(12));
  return {{"N=5 z=2+1i", rel(rc.contour_difference, rc.partial_sum)}};
}

std::vector<Point> order(int) {
  std::vector<Point> out;
  for (auto [a, b, g] : {std::tuple{"0.5", "1", "4"}, {"1", "1", "1"}, {"0.6", "0.8", "3"}, {"0.7", "1", "2.5"},
                         {"1.5", "0.5", "2"}}) {
    Params p = Params::parse(a, b, g);
    OrderTypeEstimate e = estimate_order_type(p, 2000);
    out.push_back({p.describe(), std::log10(std::abs(e.rho_est - e.rho_exact) / e.rho_exact)});
  }
  return out;
}

std::vector<Point> asymptotic(int) {
  // algebraic regime far out, where the exponentially small pair has died away
  Params p = Params::parse("0.6", "0.8", "3");
  Precision wp = Precision::from_digits(30);
  BigReal t(640L, wp);
  BigComplex f = eval_series(p, BigComplex(-t), digits_config(20)).value;
  BigComplex h(expand_negative_axis(p, t, wp).value);
  return {{"H_10 alpha m=1.8 t=640", (h - f).log10_abs() - f.log10_abs()}};
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"normalization", "F(0) Gamma(beta)^gamma = 1", 0.0, normalization},
      {"classical", "F_{1,1}^{(1)} = exp", 0.0, classical},
      {"wright", "series against the 1Psi_m form", 0.0, wright},
      {"contour", "loop integrals against the series", -8.0, contour},
      {"extension", "E(z) - Gamma(beta)^-gamma + F(1/z) = 0", -12.0, extension},
      {"laplace", "time-domain quadrature against the closed forms", -6.0, laplace},
      {"residue", "pushed contour against the partial sum", -8.0, residue},
      {"order", "relative error of the order estimate", std::log10(0.05), order},
      {"asymptotic", "negative-axis expansion against the series", -4.0, asymptotic},
  };
  return all;
}

double threshold_for(const Suite& s, int digits) {
  if (s.name == "normalization") return -(digits - 2.0);
  if (s.name == "classical" || s.name == "wright") return -(digits - 5.0);
  return s.threshold_log10;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

json run_selftest(const std::vector<std::string>& wanted, int digits, bool& pass) {
  json report{{"schema", kSchema}, {"command", "selftest"}, {"digits", digits}, {"suites", json::array()}};
  pass = true;
  for (const auto& s : suites()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), s.name) == wanted.end()) continue;
    const double threshold = threshold_for(s, digits);
    json entry{{"name", s.name}, {"description", s.description}, {"threshold", "1e" + fmt(threshold, 4)}};
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst = -INFINITY;
    json points = json::array();
    try {
      for (const auto& pt : s.run(digits)) {
        bool good = pt.log10_residual <= threshold;
        ok = ok && good;
        worst = std::max(worst, pt.log10_residual);
        points.push_back({{"label", pt.label},
                          {"residual", std::isinf(pt.log10_residual) ? "0" : fmt(std::pow(10.0, pt.log10_residual), 4)},
                          {"pass", good}});
      }
    } catch (const std::exception& e) {
      ok = false;
      entry["error"] = e.what();
    }
    entry["max_residual"] = std::isinf(worst) ? "0" : fmt(std::pow(10.0, worst), 4);
    entry["pass"] = ok;
    entry["seconds"] = fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 3);
    entry["points"] = std::move(points);
    report["suites"].push_back(std::move(entry));
    pass = pass && ok;
  }
  report["pass"] = pass;
  return report;
}

}  // namespace leroy::cli
