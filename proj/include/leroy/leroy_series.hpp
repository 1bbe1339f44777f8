#pragma once

#include <memory>

#include "leroy/params.hpp"
#include "leroy/series_engine.hpp"

namespace leroy {

/// Power-series evaluator for F_{alpha,beta}^{(gamma)}(z) = sum z^k / Gamma(alpha k + beta)^gamma.
/// Instances with equal parameters share one synchronized coefficient table.
class LeroySeries {
 public:
  explicit LeroySeries(Params p);

  const Params& params() const { return params_; }

  /// Throws Error(term_budget) when more than max_terms terms are needed.
  EvalResult evaluate(const BigComplex& z, const PrecisionConfig& prec,
                      std::size_t max_terms = SeriesOptions{}.max_terms) const;

  /// -sum_{k>=1} z^-k / Gamma(alpha k + beta)^gamma, the continuation to
  /// negative first parameter.
  EvalResult evaluate_extension(const BigComplex& z, const PrecisionConfig& prec) const;

  /// c_k = Gamma(alpha k + beta)^-gamma at working precision p.
  const Coefficient& coefficient(std::size_t k, Precision p) const { return table_->at(k, p); }

  /// Extra digits for the cancellation among terms of size up to
  /// exp(gamma |z|^(1/(alpha gamma))); zero on the positive axis.
  int cancellation_digits(const BigComplex& z) const;

  /// Gamma(beta)^-gamma.
  BigReal leading_coefficient(Precision p) const;

 private:
  Params params_;
  std::shared_ptr<const CoefficientTable> table_;
};

EvalResult eval_series(const Params& p, const BigComplex& z, const PrecisionConfig& prec);
EvalResult eval_extension(const Params& p, const BigComplex& z, const PrecisionConfig& prec);
/// E_{alpha,beta}(z).
EvalResult eval_mittag_leffler(const Decimal& alpha, const Decimal& beta, const BigComplex& z,
                               const PrecisionConfig& prec);
/// R_rho(z) = sum z^k / ((k+1)!)^rho.
EvalResult eval_leroy_classical(const Decimal& rho, const BigComplex& z, const PrecisionConfig& prec);

}  // namespace leroy
