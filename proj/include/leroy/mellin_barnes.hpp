#pragma once

#include <string>

#include "leroy/params.hpp"
#include "leroy/quadrature.hpp"

namespace leroy {

enum class Orientation { right_loop, left_loop };

/// Three-segment loop: arms at heights phi1 < 0 < phi2 joined by a vertical
/// chord through c. A right loop opens to +infinity, a left loop to -infinity.
struct Contour {
  Orientation orientation = Orientation::right_loop;
  double c = 0.5;
  double phi1 = -1.0;
  double phi2 = 1.0;
  /// Arm length measured from the chord; 0 selects it from the decay of the integrand.
  double reach = 0.0;
  /// Gauss-Legendre nodes per panel; 0 picks from the target digits.
  int nodes = 0;
  int max_refinements = 6;
  quadrature::Execution execution = quadrature::Execution::parallel;

  static Contour right_loop() { return Contour{}; }
  static Contour left_loop() {
    Contour k;
    k.orientation = Orientation::left_loop;
    k.c = -0.5;
    return k;
  }
};

/// What the quadrature actually used.
struct ContourReport {
  double reach = 0.0;
  double peak_log10 = 0.0;  // largest |integrand| seen while choosing the reach
  std::size_t panels = 0;
  int refinements = 0;
  std::size_t evaluations = 0;
  /// arg(-z) is taken in (-pi, pi].
  std::string branch = "principal";
};

/// F(z) = (1/2 pi i) int Gamma(-s) Gamma(1+s) / Gamma(alpha s + beta)^gamma (-z)^s ds + Gamma(beta)^-gamma
/// over a right loop with 0 < c < 1; z outside (-inf, 0].
EvalResult eval_contour_plus(const Params& p, const BigComplex& z, const Contour& contour,
                             const PrecisionConfig& prec, ContourReport* report = nullptr);

/// F(z) = (1/2 pi i) int Gamma(s) Gamma(1-s) / Gamma(-alpha s + beta)^gamma (-z)^-s ds + Gamma(beta)^-gamma
/// over a left loop with -1 < c < 0; z outside [0, inf).
EvalResult eval_contour_minus(const Params& p, const BigComplex& z, const Contour& contour,
                              const PrecisionConfig& prec, ContourReport* report = nullptr);

/// Continuation to negative first parameter,
/// (1/2 pi i) int Gamma(-s) Gamma(1+s) / Gamma(-alpha s + beta)^gamma (-z)^s ds over a left
/// loop, equal to -sum_{k>=1} z^-k / Gamma(alpha k + beta)^gamma; any z != 0.
EvalResult eval_extension_contour(const Params& p, const BigComplex& z, const Contour& contour,
                                  const PrecisionConfig& prec, ContourReport* report = nullptr);

/// The right-loop integral without the constant term, with the chord at c.
EvalResult right_loop_integral(const Params& p, const BigComplex& z, const Contour& contour,
                               const PrecisionConfig& prec, ContourReport* report = nullptr);

/// Pushing the right loop from c = 1/2 to c = N + 1/2 releases the poles s = 1..N.
struct ResidueCheck {
  BigComplex contour_difference;  // I(1/2) - I(N + 1/2)
  BigComplex residue_sum;         // -sum_{k=1}^N Res_{s=k}
  BigComplex partial_sum;         // sum_{k=1}^N z^k / Gamma(alpha k + beta)^gamma
  BigReal error_estimate;         // quadrature error of the difference
};

ResidueCheck residue_bookkeeping(const Params& p, const BigComplex& z, int N, const PrecisionConfig& prec,
                                 quadrature::Execution execution = quadrature::Execution::parallel);

}  // namespace leroy
