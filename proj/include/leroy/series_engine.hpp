#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>

#include "leroy/params.hpp"

namespace leroy {

/// One Taylor coefficient c_k = sign * exp(log_abs), or an exact zero.
struct Coefficient {
  bool zero = false;
  int sign = 1;
  BigReal log_abs;  // meaningless when zero
  double log10_abs = 0.0;  // same, for ratio tests
  BigReal value;
};

using CoefficientFn = std::function<Coefficient(std::size_t k, Precision p)>;

/// Lazily grown coefficient sequence, one level per working precision.
/// Entries depend only on (k, precision), so sharing a table between
/// evaluations (and threads) never changes a result.
class CoefficientTable {
 public:
  explicit CoefficientTable(CoefficientFn fn) : fn_(std::move(fn)) {}
  CoefficientTable(const CoefficientTable&) = delete;
  CoefficientTable& operator=(const CoefficientTable&) = delete;

  /// Reference stays valid for the lifetime of the table.
  const Coefficient& at(std::size_t k, Precision p) const;

 private:
  CoefficientFn fn_;
  mutable std::shared_mutex mutex_;
  mutable std::map<mpfr_prec_t, std::deque<Coefficient>> levels_;
};

struct SeriesOptions {
  std::size_t first_index = 0;
  std::size_t max_terms = 2'000'000;
  /// Initial extra digits for cancellation among terms.
  int cancellation_digits = 0;
  /// Truncation requires the term ratio q below this bound.
  double ratio_limit = 0.5;
  /// Do not stop before this index (used when early ratios are not monotone).
  std::size_t min_index = 0;
  Method method = Method::series;
};

/// Truncation and precision-escalation engine shared by every power-series
/// front end: sums sum_{k >= first_index} c_k z^k.
///
/// Stops once the current term and the geometric tail bound term*q/(1-q)
/// (q = |z| |c_{k+1}/c_k| < ratio_limit) fall below
/// 10^-target * max(1, |sum|). The rounding error estimate
/// (terms * max|term| * 2^-bits) must meet the same threshold; otherwise the
/// working precision is raised and the sum recomputed.
EvalResult sum_series(const CoefficientTable& table, const BigComplex& z, const PrecisionConfig& prec,
                      const SeriesOptions& options);

/// Working precision for `digits`, rounded up to whole limbs so that nearby
/// requests share a coefficient level.
Precision quantized_precision(int digits);

}  // namespace leroy
