#include "leroy/laplace.hpp"

#include <cmath>

#include "leroy/errors.hpp"
#include "leroy/fox_wright.hpp"
#include "leroy/leroy_series.hpp"
#include "leroy/numerics/gamma.hpp"
#include "leroy/series_engine.hpp"

namespace leroy {

namespace {

constexpr double kLn10 = 2.302585092994046;

// Time-domain integrand e^{-st} t^{power-1} F(scale * t^exponent).
struct Kernel {
  double power;     // beta for the identity, 1 for the plain transform
  double exponent;  // alpha, or 1
  double scale;     // |lambda|, or 1
};

// Upper bound for log |e^{-st} t^{power-1} F(x)|, with log F(x) <= gamma x^{1/(alpha gamma)} + c log(2 + x).
double log_bound(const Params& p, const Kernel& k, double re_s, double t) {
  const double a = p.alpha().to_double(), b = p.beta().to_double(), g = p.gamma().to_double();
  double x = k.scale * std::pow(t, k.exponent);
  double growth = 0.0;
  if (x > 0) growth = g * std::pow(x, 1.0 / (a * g)) + ((g * std::abs(b - 0.5) + 1.0) / (a * g) + 1.0) * std::log(2.0 + x);
  return -re_s * t + (k.power - 1.0) * std::log(t) + growth + 5.0 * kLn10;
}

double choose_truncation(const Params& p, const Kernel& k, double re_s, int target) {
  const double goal = -(target + 2.0) * kLn10;
  for (double t = 1.0; t < 1e7; t *= 1.05) {
    // below the goal here and at 2t: past the growth hump
    if (log_bound(p, k, re_s, t) < goal && log_bound(p, k, re_s, 2 * t) < log_bound(p, k, re_s, t)) return t;
  }
  throw Error(ErrorKind::divergent, "transform does not converge for given s");
}

void check_s(const BigComplex& s) {
  if (!(s.re().sign() > 0)) throw Error(ErrorKind::domain, "Laplace transform needs Re s > 0");
}

BigComplex integrate_kernel(const Params& p, const Kernel& k, const BigReal& lambda, const BigComplex& s,
                            const PrecisionConfig& prec, LaplaceQuadrature* info, quadrature::Execution execution) {
  prec.validate();
  check_s(s);
  const double T = choose_truncation(p, k, s.re().to_double(), prec.target_digits);
  const Precision wp = quantized_precision(prec.target_digits + prec.guard_digits);

  // t = u^{1/power} removes t^{power-1} when power < 1
  const bool substitute = k.power < 1.0;
  const Decimal power_dec = k.power == 1.0 ? Decimal::parse("1") : p.beta();
  const BigReal power = power_dec.to_big(wp);
  const BigReal inv_power = BigReal(1L, wp) / power;
  const BigReal exponent = k.exponent == 1.0 ? BigReal(1L, wp) : p.alpha().to_big(wp);
  const BigComplex sw(s, wp);
  const BigReal lam(lambda, wp);
  PrecisionConfig inner = prec;
  inner.target_digits = prec.target_digits + 5;

  quadrature::Integrand f = [&](const BigComplex& node) {
    BigReal u = node.re();
    BigReal t = substitute ? numerics::exp(numerics::log(u) * inv_power) : u;
    BigReal x = lam.is_zero() ? BigReal(wp) : lam * numerics::exp(numerics::log(t) * exponent);
    BigComplex fx = eval_series(p, BigComplex(x), inner).value;
    BigComplex v = numerics::exp(-(sw * t)) * fx;
    if (substitute) return v * inv_power;
    if (!power_dec.is_integer() || power_dec.rational() != 1)
      v *= numerics::exp(numerics::log(t) * (power - 1L));
    return v;
  };

  const double U = substitute ? std::pow(T, k.power) : T;
  const double u1 = U > 2.0 ? 1.0 : U / 2.0;
  // geometric panels towards 0 (ratio 4), then unit-ish panels out to U
  const int graded = static_cast<int>(std::ceil((prec.target_digits + 4) * kLn10 / std::log(4.0)));
  std::vector<quadrature::Panel> panels;
  double hi = u1;
  std::vector<double> cuts{u1};
  for (int j = 0; j < graded; ++j) cuts.push_back(hi /= 4.0);
  panels.push_back({BigComplex(wp), BigComplex(BigReal(cuts.back(), wp))});
  for (std::size_t j = cuts.size() - 1; j > 0; --j)
    panels.push_back({BigComplex(BigReal(cuts[j], wp)), BigComplex(BigReal(cuts[j - 1], wp))});
  int uniform = std::max(1, static_cast<int>(std::ceil((U - u1) * std::max(1.0, s.re().to_double()))));
  for (auto& pan : quadrature::uniform_panels(BigComplex(BigReal(u1, wp)), BigComplex(BigReal(U, wp)), uniform))
    panels.push_back(pan);

  quadrature::Options opt;
  opt.precision = wp;
  opt.nodes = std::clamp(static_cast<int>(std::ceil(0.6 * prec.target_digits)) + 6, 12, 80);
  opt.max_refinements = 5;
  opt.tol_log10 = -static_cast<double>(prec.target_digits);
  opt.execution = execution;
  quadrature::Result q = quadrature::integrate(std::move(panels), f, opt);
  if (!q.converged) throw Error(ErrorKind::quadrature, "Laplace quadrature failed");
  if (info) {
    info->truncation = T;
    info->nodes = opt.nodes;
    info->panels = q.panels;
    info->evaluations = q.evaluations;
    info->error = q.error;
  }
  return q.value;
}

std::vector<GammaPair> copies(const Params& p, long n) {
  return std::vector<GammaPair>(static_cast<std::size_t>(n), GammaPair{p.alpha(), p.beta()});
}

long integer_gamma(const Params& p, const char* what) {
  if (!p.gamma_is_integer()) throw Error(ErrorKind::invalid_argument, std::string(what) + " needs integer gamma");
  return p.gamma().rational().get_num().get_si();
}

}  // namespace

BigComplex laplace_lhs(const Params& p, const BigReal& lambda, const BigComplex& s, const PrecisionConfig& prec,
                       LaplaceQuadrature* info, quadrature::Execution execution) {
  if (!(p.gamma().rational() > 1)) throw Error(ErrorKind::invalid_argument, "Laplace identity needs gamma > 1");
  Kernel k{p.beta().to_double(), p.alpha().to_double(), std::abs(lambda.to_double())};
  return integrate_kernel(p, k, lambda, s, prec, info, execution);
}

BigComplex laplace_plain_lhs(const Params& p, const BigComplex& s, const PrecisionConfig& prec, LaplaceQuadrature* info,
                             quadrature::Execution execution) {
  Kernel k{1.0, 1.0, 1.0};
  return integrate_kernel(p, k, BigReal(1L, Precision{64}), s, prec, info, execution);
}

BigComplex laplace_rhs(const Params& p, const BigReal& lambda, const BigComplex& s, const PrecisionConfig& prec) {
  if (!(p.gamma().rational() > 1)) throw Error(ErrorKind::invalid_argument, "Laplace identity needs gamma > 1");
  check_s(s);
  const Precision wp = prec.working(5);
  BigComplex log_s = numerics::log(BigComplex(s, wp));
  BigComplex x = numerics::exp(-(log_s * p.alpha().to_big(wp))) * BigReal(lambda, wp);
  Params reduced(p.alpha(), p.beta(), Decimal(p.gamma().rational() - 1));
  BigComplex f = eval_series(reduced, x, prec).value;
  return BigComplex(numerics::exp(-(log_s * p.beta().to_big(wp))) * f, prec.working());
}

BigComplex laplace_rhs_multi_index(const Params& p, const BigReal& lambda, const BigComplex& s,
                                   const PrecisionConfig& prec) {
  long m = integer_gamma(p, "multi-index right-hand side");
  if (m < 2) throw Error(ErrorKind::invalid_argument, "Laplace identity needs gamma > 1");
  check_s(s);
  const Precision wp = prec.working(5);
  BigComplex log_s = numerics::log(BigComplex(s, wp));
  BigComplex x = numerics::exp(-(log_s * p.alpha().to_big(wp))) * BigReal(lambda, wp);
  BigComplex e = eval_multi_index_ml(copies(p, m - 1), x, prec).value;
  return BigComplex(numerics::exp(-(log_s * p.beta().to_big(wp))) * e, prec.working());
}

BigComplex laplace_wright_form(const Params& p, const BigComplex& s, const PrecisionConfig& prec) {
  long m = integer_gamma(p, "Wright form");
  check_s(s);
  const Precision wp = prec.working(5);
  const Decimal one = Decimal::parse("1");
  WrightParams w{{GammaPair{one, one}, GammaPair{one, one}}, copies(p, m)};
  BigComplex inv = BigComplex(BigReal(1L, wp)) / BigComplex(s, wp);
  return BigComplex(inv * eval_wright(w, inv, prec).value, prec.working());
}

BigComplex laplace_termwise(const Params& p, const BigComplex& s, const PrecisionConfig& prec) {
  check_s(s);
  const Precision wp = prec.working(10);
  const BigReal a = p.alpha().to_big(wp), b = p.beta().to_big(wp), g = p.gamma().to_big(wp);
  const BigComplex inv = BigComplex(BigReal(1L, wp)) / BigComplex(s, wp);
  BigComplex sum(wp), power = inv;
  double prev = std::numeric_limits<double>::infinity();
  int falling = 0;
  for (long k = 0; k < 1'000'000; ++k) {
    BigReal lc = numerics::log_gamma_positive(BigReal(k + 1, wp), wp) - numerics::log_gamma_positive(a * k + b, wp) * g;
    BigComplex term = power * numerics::exp(lc);
    sum += term;
    power *= inv;
    double lt = term.is_zero() ? -1e300 : term.log10_abs();
    double scale = sum.is_zero() ? 0.0 : std::max(0.0, sum.log10_abs());
    falling = lt < prev ? falling + 1 : 0;
    prev = lt;
    if (falling >= 3 && lt < scale - prec.target_digits - prec.guard_digits) return BigComplex(sum, prec.working());
  }
  throw Error(ErrorKind::term_budget, "term budget exhausted");
}

LaplaceCheck check_laplace(const LaplacePoint& point, const PrecisionConfig& prec, quadrature::Execution execution) {
  LaplaceCheck c{point, {}, {}, {}, {}, 0.0, {}};
  const Params& p = point.params;
  if (point.wright_form) {
    c.lhs = laplace_plain_lhs(p, point.s, prec, &c.quadrature, execution);
    c.rhs = laplace_wright_form(p, point.s, prec);
    c.alternative = laplace_termwise(p, point.s, prec);
  } else {
    c.lhs = laplace_lhs(p, point.lambda, point.s, prec, &c.quadrature, execution);
    c.rhs = laplace_rhs(p, point.lambda, point.s, prec);
    if (p.gamma_is_integer()) c.alternative = laplace_rhs_multi_index(p, point.lambda, point.s, prec);
  }
  c.residual = abs(c.lhs - c.rhs);
  double num = c.residual.is_zero() ? -1e300 : c.residual.log10_abs();
  double den = std::log10(1.0 + abs(c.rhs).to_double());
  c.relative_residual = std::pow(10.0, num - den);
  return c;
}

std::vector<LaplacePoint> laplace_suite() {
  const Precision p = Precision::from_digits(40);
  auto point = [&](const char* label, const char* g, const char* a, const char* b, const char* lambda, const char* s,
                   bool wright) {
    return LaplacePoint{label, Params::parse(a, b, g), BigReal::parse(lambda, p), BigComplex(BigReal::parse(s, p)),
                        wright};
  };
  return {
      point("exp", "2", "1", "1", "-1", "1", false),
      point("mittag-leffler", "2", "0.5", "1", "-1", "2", false),
      point("four-parameter", "3", "0.5", "0.75", "1", "4", false),
      point("beta<1", "2", "0.8", "0.6", "2", "3", false),
      point("beta>1", "3", "0.6", "1.5", "-2", "1.5", false),
      point("non-integer", "2.5", "0.7", "0.9", "-1", "2", false),
      point("wright m=1", "1", "1", "1", "0", "2", true),
      point("wright m=3", "3", "0.6", "0.8", "0", "3", true),
      point("wright m=4", "4", "0.5", "0.5", "0", "10", true),
  };
}

std::vector<LaplaceCheck> run_laplace_suite(const PrecisionConfig& prec, quadrature::Execution execution) {
  const auto points = laplace_suite();
  std::vector<std::optional<LaplaceCheck>> slots(points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (execution == quadrature::Execution::parallel)
  for (long i = 0; i < static_cast<long>(points.size()); ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = check_laplace(points[static_cast<std::size_t>(i)], prec, execution);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<LaplaceCheck> out;
  for (auto& c : slots) out.push_back(std::move(*c));
  return out;
}

}  // namespace leroy
