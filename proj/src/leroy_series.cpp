#include "leroy/leroy_series.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "leroy/errors.hpp"
#include "leroy/numerics/gamma.hpp"

namespace leroy {

namespace {

constexpr double kLn10 = 2.302585092994046;

Coefficient leroy_coefficient(const Params& p, std::size_t k, Precision wp) {
  mpq_class arg = p.alpha().rational() * static_cast<unsigned long>(k) + p.beta().rational();
  // log_abs is about gamma * x log x; it needs wp bits after the binary point
  double x = arg.get_d();
  double mag = p.gamma().to_double() * x * std::log(x + 2.0) + 2.0;
  Precision hp = wp.plus_bits(16 + static_cast<long>(std::ceil(std::log2(mag + 1.0))));
  BigReal lg = numerics::log_gamma_positive(BigReal(arg, hp), hp);
  BigReal la = -(lg * p.gamma().to_big(hp));
  Coefficient c;
  c.value = BigReal(numerics::exp(la), wp);
  c.log10_abs = la.to_double() / kLn10;
  c.log_abs = BigReal(la, wp);
  return c;
}

std::shared_ptr<const CoefficientTable> shared_table(const Params& p) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const CoefficientTable>> registry;
  std::string key = p.alpha().rational().get_str() + "|" + p.beta().rational().get_str() + "|" +
                    p.gamma().rational().get_str();
  std::lock_guard lock(mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  if (registry.size() >= 64) registry.clear();
  auto table = std::make_shared<const CoefficientTable>(
      [p](std::size_t k, Precision wp) { return leroy_coefficient(p, k, wp); });
  registry.emplace(key, table);
  return table;
}

}  // namespace

LeroySeries::LeroySeries(Params p) : params_(std::move(p)), table_(shared_table(params_)) {}

int LeroySeries::cancellation_digits(const BigComplex& z) const {
  if (z.is_zero() || (z.im().is_zero() && z.re().sign() > 0)) return 0;
  double log10_z = z.log10_abs();
  double ag = params_.alpha().to_double() * params_.gamma().to_double();
  // gamma |z|^(1/(alpha gamma)) log10(e)
  double e = std::log10(params_.gamma().to_double()) + log10_z / ag + std::log10(1.0 / kLn10);
  double d = std::pow(10.0, e);
  if (!std::isfinite(d) || d > 1e9) return 1000000000;
  return static_cast<int>(std::ceil(d));
}

EvalResult LeroySeries::evaluate(const BigComplex& z, const PrecisionConfig& prec, std::size_t max_terms) const {
  if (!z.re().is_finite() || !z.im().is_finite()) throw Error(ErrorKind::domain, "argument must be finite");
  SeriesOptions opt;
  opt.max_terms = max_terms;
  opt.cancellation_digits = cancellation_digits(z);
  return sum_series(*table_, z, prec, opt);
}

EvalResult LeroySeries::evaluate_extension(const BigComplex& z, const PrecisionConfig& prec) const {
  if (z.is_zero()) throw Error(ErrorKind::domain, "extension requires z != 0");
  if (!z.re().is_finite() || !z.im().is_finite()) throw Error(ErrorKind::domain, "argument must be finite");
  prec.validate();
  SeriesOptions opt;
  opt.first_index = 1;
  // 1/z at a precision that covers the largest cancellation the sum can need
  BigComplex w0 = numerics::reciprocal(BigComplex(z, Precision{64}));
  opt.cancellation_digits = cancellation_digits(w0);
  Precision wp = quantized_precision(prec.target_digits + prec.guard_digits + opt.cancellation_digits + 20);
  BigComplex w = numerics::reciprocal(BigComplex(z, wp));
  EvalResult r = sum_series(*table_, w, prec, opt);
  r.value = -r.value;
  return r;
}

BigReal LeroySeries::leading_coefficient(Precision p) const { return BigReal(table_->at(0, p).value, p); }

EvalResult eval_series(const Params& p, const BigComplex& z, const PrecisionConfig& prec) {
  return LeroySeries(p).evaluate(z, prec);
}

EvalResult eval_extension(const Params& p, const BigComplex& z, const PrecisionConfig& prec) {
  return LeroySeries(p).evaluate_extension(z, prec);
}

EvalResult eval_mittag_leffler(const Decimal& alpha, const Decimal& beta, const BigComplex& z,
                               const PrecisionConfig& prec) {
  return eval_series(Params(alpha, beta, Decimal(1)), z, prec);
}

EvalResult eval_leroy_classical(const Decimal& rho, const BigComplex& z, const PrecisionConfig& prec) {
  return eval_series(Params(Decimal(1), Decimal(2), rho), z, prec);
}

}  // namespace leroy
