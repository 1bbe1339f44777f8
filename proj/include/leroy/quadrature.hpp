#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "leroy/numerics/big_complex.hpp"
#include "leroy/numerics/precision.hpp"

namespace leroy::quadrature {

using numerics::BigComplex;
using numerics::BigReal;
using numerics::Precision;

/// How integrand values at the quadrature nodes are produced. Both modes sum
/// in the same fixed order, so results are bit-identical.
enum class Execution { serial, parallel };

/// n-point Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct GaussLegendreRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};

/// Cached per (n, precision); safe to call concurrently.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n, Precision p);

/// Straight segment of a path in the complex plane.
struct Panel {
  BigComplex a, b;
};

/// `count` equal panels from a to b.
std::vector<Panel> uniform_panels(const BigComplex& a, const BigComplex& b, int count);

/// Panels from a to b whose lengths grow geometrically by `ratio` away from a.
std::vector<Panel> graded_panels(const BigComplex& a, const BigComplex& b, int count, double ratio);

using Integrand = std::function<BigComplex(const BigComplex& s)>;

struct Options {
  int nodes = 20;
  /// Panel halvings after the first pass.
  int max_refinements = 6;
  /// Converged when successive passes differ by less than 10^tol_log10 * max(1, |I|).
  double tol_log10 = -20.0;
  Precision precision;
  Execution execution = Execution::parallel;
};

struct Result {
  BigComplex value;
  /// max(last refinement difference, rounding floor 2^-bits * sum |w f|).
  BigReal error;
  int refinements = 0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  bool converged = false;
};

/// One composite Gauss-Legendre pass over the panels.
BigComplex apply_rule(const std::vector<Panel>& panels, const Integrand& f, int nodes, Precision p,
                      Execution execution, double* log10_abs_sum = nullptr);

/// Composite rule with global panel halving until two passes agree.
Result integrate(std::vector<Panel> panels, const Integrand& f, const Options& options);

}  // namespace leroy::quadrature
