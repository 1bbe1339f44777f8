#include "cli.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "leroy/asymptotics.hpp"
#include "leroy/errors.hpp"
#include "leroy/laplace.hpp"
#include "leroy/leroy_series.hpp"
#include "leroy/mellin_barnes.hpp"
#include "report.hpp"
#include "selftest.hpp"

namespace leroy::cli {

namespace {

// Bad flag values found after parsing; exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Decimal decimal_flag(const std::string& name, const std::string& text) {
  try {
    return Decimal::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": not a decimal number: " + text);
  }
}

Params params_flags(const std::string& a, const std::string& b, const std::string& g) {
  try {
    return Params(decimal_flag("alpha", a), decimal_flag("beta", b), decimal_flag("gamma", g));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

PrecisionConfig precision_flags(int digits) {
  if (digits < 1 || digits > 10000) throw UsageError("--digits must lie in [1, 10000]");
  PrecisionConfig pc;
  pc.target_digits = digits;
  return pc;
}

struct Flags {
  int digits = 30;
  // eval
  std::string alpha = "1", beta = "1", gamma = "1", z_re = "0", z_im = "0", method = "series";
  std::size_t max_terms = 2'000'000;
  int K = kDefaultAsymptoticOrder;
  // figure / probe
  int figure = 0;
  std::optional<std::string> t_min, t_max;
  int points = 50;
  std::string spacing;
  // selftest
  std::vector<std::string> suites;
  // order-type
  long n_max = 2000;
  // laplace-verify
  std::string lambda = "1", s_re = "1", s_im = "0", form = "identity";
  bool laplace_suite = false;
  // conjecture-probe: F(-t) needs ~ gamma t^{1/(alpha gamma)} log10 e extra digits
  int max_digits = 1000;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_eval(const Flags& f, std::ostream& out) {
  Params p = params_flags(f.alpha, f.beta, f.gamma);
  PrecisionConfig pc = precision_flags(f.digits);
  const Precision zp = pc.working(10);
  BigComplex z(decimal_flag("z-re", f.z_re).to_big(zp), decimal_flag("z-im", f.z_im).to_big(zp));

  json record{{"schema", kSchema}, {"command", "eval"}};
  record["input"] = params_json(p);
  record["input"]["z"] = json{{"re", f.z_re}, {"im", f.z_im}};
  record["input"]["method"] = f.method;
  record["input"]["digits"] = f.digits;

  EvalResult r;
  json diagnostics;
  if (f.method == "series") {
    r = LeroySeries(p).evaluate(z, pc, f.max_terms);
  } else if (f.method == "contour-plus" || f.method == "contour-minus") {
    ContourReport rep;
    bool plus = f.method == "contour-plus";
    r = plus ? eval_contour_plus(p, z, Contour::right_loop(), pc, &rep)
             : eval_contour_minus(p, z, Contour::left_loop(), pc, &rep);
    diagnostics["reach"] = fmt(rep.reach, 6);
    diagnostics["peak_log10"] = fmt(rep.peak_log10, 6);
    diagnostics["panels"] = rep.panels;
    diagnostics["refinements"] = rep.refinements;
    diagnostics["branch"] = rep.branch;
  } else {
    if (!z.im().is_zero() || z.re().sign() >= 0)
      throw Error(ErrorKind::domain, "asymptotic method needs z on the negative real axis");
    record["input"]["K"] = f.K;
    NegativeAxisOptions opt;
    opt.K = f.K;
    NegativeAxisExpansion e = expand_negative_axis(p, -z.re(), pc.working(), opt);
    r.value = BigComplex(e.value);
    r.abs_err_estimate = BigReal(Precision{64});  // no rigorous bound for a divergent expansion
    r.method = Method::asymptotic;
    r.working_digits = pc.target_digits + pc.guard_digits;
    diagnostics["regime"] = to_string(e.regime.label);
    diagnostics["alpha_m"] = e.regime.alpha_m.to_string();
    diagnostics["P"] = e.regime.P;
  }
  record["value"] = complex_json(r.value);
  record["abs_err_estimate"] = r.method == Method::asymptotic ? json("unavailable") : json(r.abs_err_estimate.to_string(3));
  diagnostics["method"] = to_string(r.method);
  diagnostics["terms_used"] = r.terms_used;
  diagnostics["working_digits"] = r.working_digits;
  record["diagnostics"] = diagnostics;
  emit(out, record);
  return 0;
}

struct Preset {
  const char *alpha, *beta, *gamma, *t_min, *t_max;
  bool log;
};

const Preset& preset(int n) {
  static const Preset table[] = {
      {"0.6", "0.8", "3", "5", "100", false},  {"0.5", "0.75", "4", "5", "200", false},
      {"0.5", "0.5", "4", "5", "200", false},  {"0.7", "1", "3", "5", "100", false},
      {"0.7", "1", "3", "10", "10000", true},
  };
  if (n < 1 || n > 5) throw UsageError("--figure must be 1..5");
  return table[n - 1];
}

std::vector<BigReal> grid(const Decimal& lo, const Decimal& hi, int points, bool log, Precision p) {
  if (points < 1) throw UsageError("--points must be positive");
  if (!(lo.rational() > 0) || !(hi.rational() >= lo.rational())) throw UsageError("need 0 < t-min <= t-max");
  std::vector<BigReal> out;
  BigReal a = lo.to_big(p), b = hi.to_big(p);
  for (int i = 0; i < points; ++i) {
    if (points == 1) {
      out.push_back(a);
      continue;
    }
    BigReal frac = BigReal(static_cast<long>(i), p) / static_cast<long>(points - 1);
    out.push_back(log ? numerics::exp(numerics::log(a) + (numerics::log(b) - numerics::log(a)) * frac)
                      : a + (b - a) * frac);
  }
  return out;
}

// Rows computed in parallel, written in order.
template <class Row>
bool parallel_rows(std::size_t n, Row row, std::ostream& out, std::ostream& err) {
  std::vector<std::string> lines(n), problems(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      lines[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i), problems[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      problems[static_cast<std::size_t>(i)] = e.what();
    }
  }
  bool clean = true;
  for (std::size_t i = 0; i < n; ++i) {
    out << lines[i] << '\n';
    if (!problems[i].empty()) {
      err << "row " << i << ": " << problems[i] << '\n';
      clean = false;
    }
  }
  return clean;
}

int cmd_figure(const Flags& f, std::ostream& out, std::ostream& err) {
  std::string a = f.alpha, b = f.beta, g = f.gamma, lo = "5", hi = "100";
  bool log = false;
  if (f.figure) {
    const Preset& pr = preset(f.figure);
    a = pr.alpha, b = pr.beta, g = pr.gamma, lo = pr.t_min, hi = pr.t_max, log = pr.log;
  }
  if (f.t_min) lo = *f.t_min;
  if (f.t_max) hi = *f.t_max;
  if (!f.spacing.empty()) log = f.spacing == "log";
  Params p = params_flags(a, b, g);
  if (!p.m()) throw UsageError("figures need integer gamma");
  PrecisionConfig pc = precision_flags(f.digits);
  const Precision wp = pc.working();
  auto ts = grid(decimal_flag("t-min", lo), decimal_flag("t-max", hi), f.points, log, wp);
  NegativeAxisOptions opt;
  opt.K = f.K;

  out << "t,F_series,F_asym,rel_diff\n";
  bool clean = parallel_rows(
      ts.size(),
      [&](std::size_t i, std::string& problem) {
        const BigReal& t = ts[i];
        std::string line = t.to_string(12);
        std::optional<BigReal> fs, fa;
        try {
          fs = eval_series(p, BigComplex(-t), pc).value.re();
        } catch (const std::exception& e) {
          problem = e.what();
        }
        try {
          fa = expand_negative_axis(p, t, wp, opt).value;
        } catch (const std::exception& e) {
          problem = e.what();
        }
        line += "," + (fs ? fs->to_string(f.digits) : "NA") + "," + (fa ? fa->to_string(f.digits) : "NA");
        if (fs && fa && !fs->is_zero())
          line += "," + (abs(*fs - *fa) / abs(*fs)).to_string(6);
        else
          line += ",NA";
        return line;
      },
      out, err);
  return clean ? 0 : 3;
}

int cmd_order_type(const Flags& f, std::ostream& out) {
  Params p = params_flags(f.alpha, f.beta, f.gamma);
  if (f.n_max < 10) throw UsageError("--n-max must be at least 10");
  OrderTypeEstimate e = estimate_order_type(p, f.n_max);
  json record{{"schema", kSchema}, {"command", "order-type"}, {"input", params_json(p)}};
  record["input"]["n_max"] = f.n_max;
  record["rho_est"] = fmt(e.rho_est);
  record["rho_target"] = fmt(e.rho_exact);
  record["rho_limsup"] = fmt(e.rho_limsup);
  record["type_est"] = fmt(e.type_est);
  json table = json::array();
  for (const auto& row : e.table) table.push_back({{"n", row.n}, {"rho_n", fmt(row.rho_n)}, {"type_n", fmt(row.type_n)}});
  record["convergence_table"] = table;
  emit(out, record);
  return 0;
}

json check_json(const LaplaceCheck& c) {
  json j{{"label", c.point.label}, {"params", params_json(c.point.params)}};
  if (!c.point.wright_form) j["lambda"] = exact(c.point.lambda);
  j["s"] = complex_json(c.point.s);
  j["form"] = c.point.wright_form ? "wright" : "identity";
  j["lhs"] = complex_json(c.lhs);
  j["rhs"] = complex_json(c.rhs);
  if (c.alternative) j["rhs_alternative"] = complex_json(*c.alternative);
  j["residual"] = c.residual.to_string(4);
  j["relative_residual"] = fmt(c.relative_residual, 4);
  j["truncation"] = fmt(c.quadrature.truncation, 6);
  j["nodes"] = c.quadrature.nodes;
  j["evaluations"] = c.quadrature.evaluations;
  return j;
}

int cmd_laplace(const Flags& f, std::ostream& out) {
  PrecisionConfig pc = precision_flags(f.digits);
  json record{{"schema", kSchema}, {"command", "laplace-verify"}, {"digits", f.digits}};
  if (f.laplace_suite) {
    json checks = json::array();
    for (const auto& c : run_laplace_suite(pc)) checks.push_back(check_json(c));
    record["checks"] = checks;
  } else {
    Params p = params_flags(f.alpha, f.beta, f.gamma);
    const Precision wp = pc.working(10);
    BigComplex s(decimal_flag("s-re", f.s_re).to_big(wp), decimal_flag("s-im", f.s_im).to_big(wp));
    if (f.form != "identity" && f.form != "wright") throw UsageError("--form must be identity or wright");
    LaplacePoint pt{"cli", p, decimal_flag("lambda", f.lambda).to_big(wp), s, f.form == "wright"};
    record["checks"] = json::array({check_json(check_laplace(pt, pc))});
  }
  emit(out, record);
  return 0;
}

int cmd_probe(const Flags& f, std::ostream& out, std::ostream& err) {
  Params p = params_flags(f.alpha, f.beta, f.gamma);
  // window 0 < gamma (beta - 1/2) < 1, exactly
  mpq_class w = p.gamma().rational() * (p.beta().rational() - mpq_class(1, 2));
  if (!(w > 0 && w < 1)) throw UsageError("conjecture window needs 0 < gamma (beta - 1/2) < 1, got " + Decimal(w).to_string());
  PrecisionConfig pc = precision_flags(f.digits);
  if (f.max_digits < pc.target_digits + pc.guard_digits) throw UsageError("--max-digits below digits + guard");
  pc.max_working_digits = f.max_digits;
  const Precision wp = pc.working();
  auto ts = grid(decimal_flag("t-min", f.t_min.value_or("100")), decimal_flag("t-max", f.t_max.value_or("1000000")),
                 f.points, f.spacing != "linear", wp);
  // exponent (1/2 - gamma (beta - 1/2)) / (alpha gamma)
  mpq_class e = (mpq_class(1, 2) - w) / (p.alpha().rational() * p.gamma().rational());
  const BigReal expo = Decimal(e).to_big(wp);

  out << "t,F,ratio\n";
  parallel_rows(
      ts.size(),
      [&](std::size_t i, std::string& problem) {
        const BigReal& t = ts[i];
        try {
          BigReal v = eval_series(p, BigComplex(-t), pc).value.re();
          BigReal ratio = v * numerics::log(t) / numerics::exp(numerics::log(t) * expo);
          return t.to_string(12) + "," + v.to_string(f.digits) + "," + ratio.to_string(f.digits);
        } catch (const std::exception& ex) {
          problem = ex.what();
          return t.to_string(12) + ",NA,NA";
        }
      },
      out, err);
  // exploratory: rows beyond the precision budget are marked NA, not an error
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Le Roy type function F_{alpha,beta}^{(gamma)}(z)", "leroy"};
  app.require_subcommand(1);
  auto digits = [&](CLI::App* sub) {
    sub->add_option("--digits", f.digits, "target decimal digits")->envname("LEROY_DIGITS");
  };
  auto param_opts = [&](CLI::App* sub) {
    sub->add_option("--alpha", f.alpha);
    sub->add_option("--beta", f.beta);
    sub->add_option("--gamma", f.gamma);
  };

  auto* eval = app.add_subcommand("eval", "evaluate F at one point");
  param_opts(eval);
  digits(eval);
  eval->add_option("--z-re", f.z_re);
  eval->add_option("--z-im", f.z_im);
  eval->add_option("--method", f.method)->check(CLI::IsMember({"series", "contour-plus", "contour-minus", "asym"}));
  eval->add_option("--max-terms", f.max_terms);
  eval->add_option("--K", f.K)->check(CLI::Range(0, 500));

  auto* figure = app.add_subcommand("figure", "CSV of F(-t) against its asymptotic expansion");
  param_opts(figure);
  digits(figure);
  figure->add_option("--figure", f.figure)->check(CLI::Range(1, 5));
  figure->add_option("--t-min", f.t_min);
  figure->add_option("--t-max", f.t_max);
  figure->add_option("--points", f.points);
  figure->add_option("--spacing", f.spacing)->check(CLI::IsMember({"linear", "log"}));
  figure->add_option("--K", f.K)->check(CLI::Range(0, 500));

  auto* selftest = app.add_subcommand("selftest", "run the verification suites");
  digits(selftest);
  selftest->add_option("--suite", f.suites)->check(CLI::IsMember(suite_names()));

  auto* order = app.add_subcommand("order-type", "estimate order and type from the coefficients");
  param_opts(order);
  order->add_option("--n-max", f.n_max);

  auto* laplace = app.add_subcommand("laplace-verify", "check the Laplace transform identities");
  param_opts(laplace);
  digits(laplace);
  laplace->add_option("--lambda", f.lambda);
  laplace->add_option("--s-re", f.s_re);
  laplace->add_option("--s-im", f.s_im);
  laplace->add_option("--form", f.form)->check(CLI::IsMember({"identity", "wright"}));
  laplace->add_flag("--suite", f.laplace_suite, "run the fixed nine-point suite");

  auto* probe = app.add_subcommand("conjecture-probe", "F(-t) log t / t^e over a range of t");
  param_opts(probe);
  digits(probe);
  probe->add_option("--t-min", f.t_min);
  probe->add_option("--t-max", f.t_max);
  probe->add_option("--points", f.points);
  probe->add_option("--spacing", f.spacing)->check(CLI::IsMember({"linear", "log"}));
  probe->add_option("--max-digits", f.max_digits, "working-digit budget per row; rows beyond it print NA");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(f, out);
    if (figure->parsed()) return cmd_figure(f, out, err);
    if (order->parsed()) return cmd_order_type(f, out);
    if (laplace->parsed()) return cmd_laplace(f, out);
    if (probe->parsed()) return cmd_probe(f, out, err);
    if (selftest->parsed()) {
      precision_flags(f.digits);
      bool pass = false;
      emit(out, run_selftest(f.suites, f.digits, pass));
      return pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace leroy::cli
