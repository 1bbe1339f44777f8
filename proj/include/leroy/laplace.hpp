#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leroy/params.hpp"
#include "leroy/quadrature.hpp"

namespace leroy {

/// What the time-domain quadrature used.
struct LaplaceQuadrature {
  double truncation = 0.0;  // T, the integral runs over [0, T]
  int nodes = 0;
  std::size_t panels = 0;
  std::size_t evaluations = 0;
  BigReal error;
};

/// int_0^inf e^{-st} t^{beta-1} F(lambda t^alpha) dt by composite Gauss-Legendre on [0, T].
/// Requires gamma > 1, Re s > 0 and real lambda. Throws Error(divergent,
/// "transform does not converge for given s") when the growth of F is not
/// beaten by e^{-st}.
BigComplex laplace_lhs(const Params& p, const BigReal& lambda, const BigComplex& s, const PrecisionConfig& prec,
                       LaplaceQuadrature* info = nullptr,
                       quadrature::Execution execution = quadrature::Execution::parallel);

/// s^-beta F_{alpha,beta}^{(gamma-1)}(lambda s^-alpha), principal powers.
BigComplex laplace_rhs(const Params& p, const BigReal& lambda, const BigComplex& s, const PrecisionConfig& prec);

/// Same right-hand side for integer gamma >= 2 through the multi-index
/// Mittag-Leffler function with (gamma - 1) copies of (alpha, beta).
BigComplex laplace_rhs_multi_index(const Params& p, const BigReal& lambda, const BigComplex& s,
                                   const PrecisionConfig& prec);

/// s^-1 2Psi_m[(1,1),(1,1); (alpha,beta) x m; 1/s], integer gamma = m.
BigComplex laplace_wright_form(const Params& p, const BigComplex& s, const PrecisionConfig& prec);

/// int_0^inf e^{-st} F(t) dt by quadrature (the left side of the Wright form).
BigComplex laplace_plain_lhs(const Params& p, const BigComplex& s, const PrecisionConfig& prec,
                             LaplaceQuadrature* info = nullptr,
                             quadrature::Execution execution = quadrature::Execution::parallel);

/// sum_k k! / (Gamma(alpha k + beta)^gamma s^{k+1}), summed term by term.
BigComplex laplace_termwise(const Params& p, const BigComplex& s, const PrecisionConfig& prec);

struct LaplacePoint {
  std::string label;
  Params params;
  BigReal lambda;  // unused for the Wright form
  BigComplex s;
  bool wright_form = false;
};

struct LaplaceCheck {
  LaplacePoint point;
  BigComplex lhs, rhs;
  /// Second right-hand side: multi-index path (integer gamma >= 2) or the
  /// term-wise sum (Wright form).
  std::optional<BigComplex> alternative;
  BigReal residual;  // |lhs - rhs|
  double relative_residual = 0.0;  // |lhs - rhs| / (1 + |rhs|)
  LaplaceQuadrature quadrature;
};

LaplaceCheck check_laplace(const LaplacePoint& point, const PrecisionConfig& prec,
                           quadrature::Execution execution = quadrature::Execution::parallel);

/// Fixed nine-point suite: six identity points with gamma in {2, 2.5, 3} and
/// the Wright form at m = 1, 3, 4.
std::vector<LaplacePoint> laplace_suite();

/// Runs the suite; points in parallel, results in suite order.
std::vector<LaplaceCheck> run_laplace_suite(const PrecisionConfig& prec,
                                            quadrature::Execution execution = quadrature::Execution::parallel);

}  // namespace leroy
