#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "leroy/params.hpp"
#include "leroy/series_engine.hpp"

namespace leroy {

/// A gamma factor Gamma(scale * k + shift).
struct GammaPair {
  Decimal scale;
  Decimal shift;
};

/// Generalized Wright function
///   sum_k z^k / k! * prod_upper Gamma(rho k + a) / prod_lower Gamma(sigma k + b).
struct WrightParams {
  std::vector<GammaPair> upper;
  std::vector<GammaPair> lower;

  /// kappa = 1 + sum sigma - sum rho.
  Decimal kappa() const;
  /// Radius of convergence when kappa = 0: prod rho^-rho * prod sigma^sigma.
  double radius_when_kappa_zero() const;
};

class WrightSeries {
 public:
  /// Throws Error(divergent) for kappa < 0 and Error(undefined_term) when an
  /// upper gamma factor hits a pole.
  explicit WrightSeries(WrightParams w);

  const WrightParams& params() const { return params_; }

  /// kappa = 0 is accepted inside the disc of convergence.
  EvalResult evaluate(const BigComplex& z, const PrecisionConfig& prec) const;

  const Coefficient& coefficient(std::size_t k, Precision p) const { return table_->at(k, p); }

 private:
  WrightParams params_;
  std::shared_ptr<const CoefficientTable> table_;
};

EvalResult eval_wright(const WrightParams& w, const BigComplex& z, const PrecisionConfig& prec);

/// sum_k z^k / prod_j Gamma(alpha_j k + beta_j).
EvalResult eval_multi_index_ml(const std::vector<GammaPair>& pairs, const BigComplex& z,
                               const PrecisionConfig& prec);

}  // namespace leroy
