#include "leroy/series_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "leroy/errors.hpp"

namespace leroy {

namespace {

constexpr double kLog10Of2 = 0.30102999566398120;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log10_or_ninf(const BigComplex& z) { return z.is_zero() ? kNegInf : z.log10_abs(); }

}  // namespace

const Coefficient& CoefficientTable::at(std::size_t k, Precision p) const {
  {
    std::shared_lock lock(mutex_);
    auto it = levels_.find(p.bits);
    if (it != levels_.end() && k < it->second.size()) return it->second[k];
  }
  std::unique_lock lock(mutex_);
  auto& level = levels_[p.bits];
  // grow in blocks so that concurrent readers rarely wait
  std::size_t want = std::max(k + 1, level.size() + level.size() / 4);
  while (level.size() < want) level.push_back(fn_(level.size(), p));
  return level[k];
}

Precision quantized_precision(int digits) {
  mpfr_prec_t bits = Precision::from_digits(digits).bits;
  return Precision{(bits + 63) / 64 * 64};
}

EvalResult sum_series(const CoefficientTable& table, const BigComplex& z, const PrecisionConfig& prec,
                      const SeriesOptions& options) {
  prec.validate();
  const double target = prec.target_digits;
  const double log10_ratio_limit = std::log10(options.ratio_limit);
  int digits = prec.target_digits + prec.guard_digits + std::max(0, options.cancellation_digits);

  for (;;) {
    if (digits > prec.max_working_digits) throw Error(ErrorKind::precision_budget, "precision budget exhausted");
    const Precision wp = quantized_precision(digits);
    const BigComplex zw(z, wp);
    const double log10_z = log10_or_ninf(zw);

    BigComplex power(BigReal(1L, wp), BigReal(wp));
    for (std::size_t j = 0; j < options.first_index; ++j) power *= zw;
    BigComplex sum(wp);
    double max_term = kNegInf, tail = kNegInf;
    std::size_t used = 0;

    for (std::size_t k = options.first_index;; ++k) {
      if (used >= options.max_terms) throw Error(ErrorKind::term_budget, "term budget exhausted");
      const Coefficient& c = table.at(k, wp);
      double lt = kNegInf;
      if (!c.zero) {
        BigComplex term = power * c.value;
        sum += term;
        lt = log10_or_ninf(term);
        max_term = std::max(max_term, lt);
      }
      ++used;

      if (log10_z == kNegInf) {
        // z = 0: only the leading coefficient contributes
        if (!c.zero || k > options.first_index + 64) break;
      } else if (!c.zero && k >= options.min_index) {
        const Coefficient& next = table.at(k + 1, wp);
        if (!next.zero) {
          double lq = log10_z + next.log10_abs - c.log10_abs;
          if (lq < log10_ratio_limit) {
            double q = std::pow(10.0, lq);
            double lt_tail = lt + lq - std::log10(1.0 - q);
            double threshold = -target + std::max(0.0, log10_or_ninf(sum));
            if (lt < threshold && lt_tail < threshold) {
              tail = lt_tail;
              break;
            }
          }
        }
      }
      power *= zw;
    }

    // rounding: every term carries a relative error of a few ulps
    double rounding = max_term + std::log10(4.0 * static_cast<double>(used)) - static_cast<double>(wp.bits) * kLog10Of2;
    double threshold = -target + std::max(0.0, log10_or_ninf(sum));
    if (rounding > threshold - 1.0) {
      digits += static_cast<int>(std::ceil(rounding - threshold)) + 5;
      continue;
    }

    EvalResult r;
    const Precision out = prec.working();
    r.value = BigComplex(sum, out);
    double final_rounding = log10_or_ninf(sum) - static_cast<double>(out.bits) * kLog10Of2;
    BigReal err = pow10(tail, Precision{64});
    err += pow10(rounding, Precision{64});
    err += pow10(final_rounding, Precision{64});
    r.abs_err_estimate = err;
    r.terms_used = used;
    r.working_digits = digits;
    r.method = options.method;
    return r;
  }
}

}  // namespace leroy
