#include "leroy/fox_wright.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leroy/errors.hpp"
#include "leroy/numerics/gamma.hpp"

namespace leroy {

namespace {

constexpr double kLn10 = 2.302585092994046;

mpq_class gamma_argument(const GammaPair& g, std::size_t k) {
  return g.scale.rational() * static_cast<unsigned long>(k) + g.shift.rational();
}

bool is_pole(const mpq_class& q) { return q.get_den() == 1 && q <= 0; }

// Factors after cancelling one upper (1,1) against k!.
struct Factors {
  std::vector<GammaPair> upper, lower;
};

Factors reduce(const WrightParams& w) {
  Factors f{w.upper, w.lower};
  auto unit = std::find_if(f.upper.begin(), f.upper.end(), [](const GammaPair& g) {
    return g.scale == Decimal(1) && g.shift == Decimal(1);
  });
  if (unit != f.upper.end())
    f.upper.erase(unit);
  else
    f.lower.push_back({Decimal(1), Decimal(1)});
  return f;
}

double log_gamma_double(const mpq_class& q) { return std::lgamma(q.get_d()); }

Coefficient wright_coefficient(const Factors& f, std::size_t k, Precision wp) {
  Coefficient c;
  for (const auto& g : f.lower)
    if (is_pole(gamma_argument(g, k))) {
      c.zero = true;
      c.value = BigReal(wp);
      c.log_abs = BigReal(wp);
      return c;
    }
  double mag = 2.0;
  for (const auto& g : f.upper) mag += std::fabs(log_gamma_double(gamma_argument(g, k)));
  for (const auto& g : f.lower) mag += std::fabs(log_gamma_double(gamma_argument(g, k)));
  Precision hp = wp.plus_bits(16 + static_cast<long>(std::ceil(std::log2(mag + 1.0))));
  BigReal la(hp);
  int sign = 1;
  auto accumulate = [&](const GammaPair& g, int dir) {
    int s = 1;
    BigReal l = numerics::log_abs_gamma(BigReal(gamma_argument(g, k), hp), hp, &s);
    if (dir > 0)
      la += l;
    else
      la -= l;
    sign *= s;
  };
  for (const auto& g : f.upper) accumulate(g, +1);
  for (const auto& g : f.lower) accumulate(g, -1);
  BigReal v = numerics::exp(la);
  if (sign < 0) v = -v;
  c.sign = sign;
  c.value = BigReal(v, wp);
  c.log_abs = BigReal(la, wp);
  c.log10_abs = la.to_double() / kLn10;
  return c;
}

// Double-precision scan of log10|c_k z^k|: returns (largest term, its index).
std::pair<double, std::size_t> scan_terms(const Factors& f, double log10_z, double drop) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < 10'000'000; ++k) {
    double l = 0.0;
    bool zero = false;
    for (const auto& g : f.lower) {
      mpq_class a = gamma_argument(g, k);
      if (is_pole(a)) zero = true;
      l -= log_gamma_double(a);
    }
    for (const auto& g : f.upper) l += log_gamma_double(gamma_argument(g, k));
    if (zero) continue;
    l = l / kLn10 + static_cast<double>(k) * log10_z;
    if (l > best) {
      best = l;
      best_k = k;
    } else if (l < best - drop && k > 2 * best_k + 8) {
      break;
    }
  }
  return {best, best_k};
}

}  // namespace

Decimal WrightParams::kappa() const {
  Decimal k(1);
  for (const auto& g : lower) k = k + g.scale;
  for (const auto& g : upper) k = k - g.scale;
  return k;
}

double WrightParams::radius_when_kappa_zero() const {
  double log_r = 0.0;
  for (const auto& g : upper) log_r -= g.scale.to_double() * std::log(g.scale.to_double());
  for (const auto& g : lower) log_r += g.scale.to_double() * std::log(g.scale.to_double());
  return std::exp(log_r);
}

WrightSeries::WrightSeries(WrightParams w) : params_(std::move(w)) {
  for (const auto& g : params_.upper)
    if (g.scale.sign() <= 0) throw Error(ErrorKind::invalid_argument, "upper scale factors must be positive");
  for (const auto& g : params_.lower)
    if (g.scale.sign() <= 0) throw Error(ErrorKind::invalid_argument, "lower scale factors must be positive");
  if (params_.kappa().sign() < 0) throw Error(ErrorKind::divergent, "divergent parameter set");
  // rho > 0, so only finitely many k can put an upper factor on a pole
  for (const auto& g : params_.upper) {
    mpq_class kmax = -g.shift.rational() / g.scale.rational();
    for (long k = 0; k <= kmax; ++k)
      if (is_pole(gamma_argument(g, static_cast<std::size_t>(k))))
        throw Error(ErrorKind::undefined_term, "undefined term: upper gamma factor at a pole for k=" + std::to_string(k));
  }
  Factors f = reduce(params_);
  table_ = std::make_shared<const CoefficientTable>(
      [f](std::size_t k, Precision wp) { return wright_coefficient(f, k, wp); });
}

EvalResult WrightSeries::evaluate(const BigComplex& z, const PrecisionConfig& prec) const {
  if (!z.re().is_finite() || !z.im().is_finite()) throw Error(ErrorKind::domain, "argument must be finite");
  prec.validate();
  SeriesOptions opt;
  opt.method = Method::fox_wright;
  bool kappa_zero = params_.kappa().sign() == 0;
  if (kappa_zero) {
    double r = params_.radius_when_kappa_zero();
    if (!(z.log10_abs() < std::log10(r)) && !z.is_zero())
      throw Error(ErrorKind::divergent, "divergent parameter set: kappa = 0 and |z| outside the disc of convergence");
    opt.ratio_limit = 1.0;
  }
  if (!z.is_zero()) {
    auto [largest, index] = scan_terms(reduce(params_), z.log10_abs(), prec.target_digits + prec.guard_digits + 20.0);
    opt.cancellation_digits = std::max(0, static_cast<int>(std::ceil(largest)));
    opt.min_index = index;
  }
  return sum_series(*table_, z, prec, opt);
}

EvalResult eval_wright(const WrightParams& w, const BigComplex& z, const PrecisionConfig& prec) {
  return WrightSeries(w).evaluate(z, prec);
}

EvalResult eval_multi_index_ml(const std::vector<GammaPair>& pairs, const BigComplex& z,
                               const PrecisionConfig& prec) {
  for (const auto& g : pairs)
    if (g.scale.sign() <= 0) throw Error(ErrorKind::invalid_argument, "alpha_j must be positive");
  WrightParams w;
  w.upper = {{Decimal(1), Decimal(1)}};
  w.lower = pairs;
  return eval_wright(w, z, prec);
}

}  // namespace leroy
