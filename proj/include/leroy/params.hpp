#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "leroy/numerics/big_complex.hpp"
#include "leroy/numerics/decimal.hpp"

namespace leroy {

using numerics::BigComplex;
using numerics::BigReal;
using numerics::Decimal;
using numerics::Precision;
using numerics::PrecisionConfig;

/// Parameter triple (alpha, beta, gamma) of F_{alpha,beta}^{(gamma)}, all
/// strictly positive and stored exactly.
class Params {
 public:
  Params(Decimal alpha, Decimal beta, Decimal gamma);
  static Params parse(std::string_view alpha, std::string_view beta, std::string_view gamma);

  const Decimal& alpha() const { return alpha_; }
  const Decimal& beta() const { return beta_; }
  const Decimal& gamma() const { return gamma_; }

  bool gamma_is_integer() const { return gamma_.is_integer(); }
  /// gamma as a positive integer m, when it is one.
  std::optional<long> m() const { return gamma_.as_integer(); }

  std::string describe() const;

 private:
  Decimal alpha_, beta_, gamma_;
};

enum class Method { series, contour, asymptotic, fox_wright };

std::string to_string(Method m);

/// Value with an absolute error estimate and the diagnostics of how it was
/// obtained.
struct EvalResult {
  BigComplex value;
  BigReal abs_err_estimate;
  std::size_t terms_used = 1;
  int working_digits = 0;
  Method method = Method::series;
};

}  // namespace leroy
