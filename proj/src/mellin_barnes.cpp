#include "leroy/mellin_barnes.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "leroy/errors.hpp"
#include "leroy/leroy_series.hpp"
#include "leroy/numerics/gamma.hpp"
#include "leroy/series_engine.hpp"

namespace leroy {

namespace {

using cd = std::complex<double>;
constexpr double kLn10 = 2.302585092994046;

enum class Kernel {
  plus,       // -pi/sin(pi s) * Gamma(alpha s + beta)^-gamma * (-z)^s
  minus,      //  pi/sin(pi s) * Gamma(-alpha s + beta)^-gamma * (-z)^-s
  extension,  // -pi/sin(pi s) * Gamma(-alpha s + beta)^-gamma * (-z)^s
};

// Real part of log Gamma in double precision, for sizing only.
double re_log_gamma(cd w) {
  double shift = 0.0;
  while (w.real() < 10.0) {
    shift += std::log(std::abs(w));
    w += 1.0;
  }
  cd s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * M_PI) + 1.0 / (12.0 * w) - 1.0 / (360.0 * w * w * w);
  return s.real() - shift;
}

struct Setup {
  Kernel kernel;
  double alpha, beta, gamma;
  cd log_mz;  // principal log(-z)
};

// log10 |integrand(s)|
double log10_magnitude(const Setup& k, cd s) {
  double sin_mag = std::sqrt(std::pow(std::sinh(M_PI * s.imag()), 2) + std::pow(std::sin(M_PI * s.real()), 2));
  double l = std::log(M_PI) - std::log(std::max(sin_mag, 1e-300));
  if (k.kernel == Kernel::plus) {
    l += -k.gamma * re_log_gamma(k.alpha * s + k.beta) + (s * k.log_mz).real();
  } else if (k.kernel == Kernel::minus) {
    l += -k.gamma * re_log_gamma(-k.alpha * s + k.beta) - (s * k.log_mz).real();
  } else {
    l += -k.gamma * re_log_gamma(-k.alpha * s + k.beta) + (s * k.log_mz).real();
  }
  return l / kLn10;
}

void validate(const Contour& c) {
  if (!(c.phi1 < 0.0 && c.phi2 > 0.0)) throw Error(ErrorKind::invalid_argument, "contour needs phi1 < 0 < phi2");
  if (c.orientation == Orientation::right_loop && !(c.c > 0.0))
    throw Error(ErrorKind::invalid_argument, "right loop must cross the real axis right of 0");
  if (c.orientation == Orientation::left_loop && !(c.c > -1.0 && c.c < 0.0))
    throw Error(ErrorKind::invalid_argument, "left loop must cross the real axis in (-1, 0)");
  if (c.reach < 0.0) throw Error(ErrorKind::invalid_argument, "contour reach must be non-negative");
}

EvalResult loop_integral(const Params& p, const BigComplex& z, Kernel kernel, const Contour& contour,
                         const PrecisionConfig& prec, ContourReport* report) {
  prec.validate();
  validate(contour);
  if (!z.re().is_finite() || !z.im().is_finite()) throw Error(ErrorKind::domain, "argument must be finite");

  const double dir = contour.orientation == Orientation::right_loop ? 1.0 : -1.0;
  cd zd(z.re().to_double(), z.im().to_double());
  Setup k{kernel, p.alpha().to_double(), p.beta().to_double(), p.gamma().to_double(), std::log(-zd)};
  if (std::abs(zd) == 0.0) {
    // below double range but nonzero: sizing by log10 |z|
    k.log_mz = cd(z.log10_abs() * kLn10, std::arg(-zd));
  }

  // Reach: walk along both arms until the integrand stays below 10^-(target+5).
  const double floor_log10 = -(prec.target_digits + 5.0);
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 8; ++i) {
    double y = contour.phi1 + (contour.phi2 - contour.phi1) * i / 8.0;
    peak = std::max(peak, log10_magnitude(k, cd(contour.c, y)));
  }
  double reach = contour.reach;
  int below = 0;
  double u = 0.0;
  for (; u < 1e5; u += 1.0) {
    double x = contour.c + dir * u;
    double l = std::max(log10_magnitude(k, cd(x, contour.phi1)), log10_magnitude(k, cd(x, contour.phi2)));
    peak = std::max(peak, l);
    if (contour.reach > 0.0) {
      if (u >= contour.reach) break;
      continue;
    }
    below = l < floor_log10 ? below + 1 : 0;
    if (below >= 3) {
      reach = u;
      break;
    }
  }
  if (reach <= 0.0) throw Error(ErrorKind::quadrature, "contour quadrature failed: integrand does not decay");

  // cancellation between the integrand's peak and an O(1) result
  int extra = static_cast<int>(std::ceil(std::max(0.0, peak + std::log10(reach + 2.0))));
  int digits = prec.target_digits + prec.guard_digits + extra;
  if (digits > prec.max_working_digits) throw Error(ErrorKind::precision_budget, "precision budget exhausted");
  const Precision wp = quantized_precision(digits);

  const BigReal alpha = p.alpha().to_big(wp), beta = p.beta().to_big(wp), gamma = p.gamma().to_big(wp);
  const BigComplex log_mz = numerics::log(-BigComplex(z, wp));
  const BigReal pi = BigReal::pi(wp);

  quadrature::Integrand f = [&](const BigComplex& s) {
    BigComplex w = kernel == Kernel::plus ? s * alpha + beta : -(s * alpha) + beta;
    BigComplex expo = -(numerics::log_gamma_complex(w, wp) * gamma);
    if (kernel == Kernel::minus)
      expo -= s * log_mz;
    else
      expo += s * log_mz;
    BigComplex v = numerics::exp(expo) / numerics::sin_pi(s) * pi;
    return kernel == Kernel::minus ? v : -v;
  };

  const BigReal c(contour.c, wp), y1(contour.phi1, wp), y2(contour.phi2, wp);
  const BigReal far = c + BigReal(dir * reach, wp);
  const BigComplex lower_far(far, y1), lower_near(c, y1), upper_near(c, y2), upper_far(far, y2);
  const int arm_panels = static_cast<int>(std::ceil(reach));
  const int chord_panels = static_cast<int>(std::ceil(contour.phi2 - contour.phi1));
  // loop runs from the far end of the lower arm, up the chord, out along the upper arm
  std::vector<quadrature::Panel> panels = quadrature::uniform_panels(lower_far, lower_near, arm_panels);
  for (auto& pan : quadrature::uniform_panels(lower_near, upper_near, chord_panels)) panels.push_back(pan);
  for (auto& pan : quadrature::uniform_panels(upper_near, upper_far, arm_panels)) panels.push_back(pan);

  quadrature::Options opt;
  opt.precision = wp;
  opt.nodes = contour.nodes > 0 ? contour.nodes
                                : std::clamp(static_cast<int>(std::ceil(0.8 * (prec.target_digits + 5))), 16, 120);
  opt.max_refinements = contour.max_refinements;
  opt.tol_log10 = -(prec.target_digits + 2.0);
  opt.execution = contour.execution;
  quadrature::Result q = quadrature::integrate(std::move(panels), f, opt);
  if (!q.converged) throw Error(ErrorKind::quadrature, "contour quadrature failed");

  // divide by 2 pi i
  BigComplex two_pi_i(BigReal(wp), pi * 2L);
  EvalResult r;
  r.value = q.value / two_pi_i;
  r.abs_err_estimate = q.error / BigReal(2.0 * M_PI, Precision{64});
  r.terms_used = q.evaluations;
  r.working_digits = digits;
  r.method = Method::contour;
  if (report) {
    report->reach = reach;
    report->peak_log10 = peak;
    report->panels = q.panels;
    report->refinements = q.refinements;
    report->evaluations = q.evaluations;
  }
  return r;
}

BigReal leading_term(const Params& p, Precision wp) {
  return numerics::exp(-(numerics::log_gamma_positive(p.beta().to_big(wp), wp) * p.gamma().to_big(wp)));
}

void finish(EvalResult& r, const Params& p, const PrecisionConfig& prec) {
  Precision wp = r.value.precision();
  r.value = BigComplex(r.value + leading_term(p, wp), prec.working());
}

}  // namespace

EvalResult right_loop_integral(const Params& p, const BigComplex& z, const Contour& contour,
                               const PrecisionConfig& prec, ContourReport* report) {
  if (contour.orientation != Orientation::right_loop)
    throw Error(ErrorKind::invalid_argument, "right-loop integral needs a right loop");
  if (z.is_zero()) throw Error(ErrorKind::domain, "contour representation requires z != 0");
  return loop_integral(p, z, Kernel::plus, contour, prec, report);
}

EvalResult eval_contour_plus(const Params& p, const BigComplex& z, const Contour& contour,
                             const PrecisionConfig& prec, ContourReport* report) {
  if (contour.orientation != Orientation::right_loop || !(contour.c < 1.0))
    throw Error(ErrorKind::invalid_argument, "plus representation needs a right loop with 0 < c < 1");
  if (z.im().is_zero() && z.re().sign() <= 0)
    throw Error(ErrorKind::domain, "z on the cut (-inf, 0] of the right-loop representation");
  EvalResult r = loop_integral(p, z, Kernel::plus, contour, prec, report);
  finish(r, p, prec);
  return r;
}

EvalResult eval_contour_minus(const Params& p, const BigComplex& z, const Contour& contour,
                              const PrecisionConfig& prec, ContourReport* report) {
  if (contour.orientation != Orientation::left_loop)
    throw Error(ErrorKind::invalid_argument, "minus representation needs a left loop");
  if (z.im().is_zero() && z.re().sign() >= 0)
    throw Error(ErrorKind::domain, "z on the cut [0, inf) of the left-loop representation");
  EvalResult r = loop_integral(p, z, Kernel::minus, contour, prec, report);
  finish(r, p, prec);
  return r;
}

EvalResult eval_extension_contour(const Params& p, const BigComplex& z, const Contour& contour,
                                  const PrecisionConfig& prec, ContourReport* report) {
  if (contour.orientation != Orientation::left_loop)
    throw Error(ErrorKind::invalid_argument, "extension needs a left loop");
  if (z.is_zero()) throw Error(ErrorKind::domain, "extension requires z != 0");
  EvalResult r = loop_integral(p, z, Kernel::extension, contour, prec, report);
  r.value = BigComplex(r.value, prec.working());
  return r;
}

ResidueCheck residue_bookkeeping(const Params& p, const BigComplex& z, int N, const PrecisionConfig& prec,
                                 quadrature::Execution execution) {
  if (N < 1) throw Error(ErrorKind::invalid_argument, "residue bookkeeping needs N >= 1");
  Contour near = Contour::right_loop();
  near.execution = execution;
  Contour pushed = near;
  pushed.c = N + 0.5;
  EvalResult a = right_loop_integral(p, z, near, prec);
  EvalResult b = right_loop_integral(p, z, pushed, prec);

  const Precision wp = prec.working(10);
  ResidueCheck out;
  out.contour_difference = a.value - b.value;
  out.error_estimate = a.abs_err_estimate + b.abs_err_estimate;

  // Res_{s=k} Gamma(-s) = -(-1)^k / k!, the other factors are regular at s = k
  BigComplex mz = -BigComplex(z, wp);
  BigComplex power(BigReal(1L, wp), BigReal(wp));
  out.residue_sum = BigComplex(wp);
  out.partial_sum = BigComplex(wp);
  LeroySeries series(p);
  BigComplex zw(z, wp), zpow(BigReal(1L, wp), BigReal(wp));
  for (int k = 1; k <= N; ++k) {
    power *= mz;
    zpow *= zw;
    BigReal kfact = numerics::gamma_real(BigReal(static_cast<long>(k + 1), wp), wp).value;
    BigReal res_gamma = (k % 2 == 0 ? -1L : 1L) / kfact;
    BigComplex g = numerics::recip_gamma_power(BigComplex(p.alpha().to_big(wp) * static_cast<long>(k) + p.beta().to_big(wp)),
                                               p.gamma().to_big(wp), wp);
    BigComplex residue = power * g * (res_gamma * kfact);
    out.residue_sum -= residue;
    out.partial_sum += zpow * series.coefficient(static_cast<std::size_t>(k), quantized_precision(prec.target_digits + prec.guard_digits + 10)).value;
  }
  return out;
}

}  // namespace leroy
