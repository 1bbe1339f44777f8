#pragma once

#include "leroy/numerics/big_complex.hpp"
#include "leroy/numerics/big_real.hpp"
#include "leroy/numerics/precision.hpp"

namespace leroy::numerics {

/// Gamma function value on the real line. `log_abs` stays available when the
/// value itself overflows the exponent range.
struct GammaValue {
  BigReal value;
  BigReal log_abs;
  int sign = 1;
  bool is_pole = false;
  bool overflow = false;

  /// 1/Gamma(x); exactly zero at poles.
  BigReal reciprocal() const;
};

// Every routine below is pure: precision is an argument, there is no shared
// mutable state other than an internally synchronized table of Stirling
// coefficients, whose entries are correctly rounded from exact rationals.

GammaValue gamma_real(const BigReal& x, const PrecisionConfig& prec);
GammaValue gamma_real(const BigReal& x, Precision p);

/// log Gamma(x) for x > 0.
BigReal log_gamma_positive(const BigReal& x, Precision p);

/// log|Gamma(x)| for real non-pole x; `sign` receives the sign of Gamma(x).
/// Throws Error(pole) at nonpositive integers.
BigReal log_abs_gamma(const BigReal& x, Precision p, int* sign = nullptr);

/// 1/Gamma(x), exactly zero at poles (1/Gamma is entire).
BigReal recip_gamma_real(const BigReal& x, Precision p);

/// Principal branch of log Gamma(z): real on the positive axis, analytic on
/// the plane cut along (-inf, 0]; on the cut itself the limit from above.
/// Throws Error(pole) at nonpositive integers.
BigComplex log_gamma_complex(const BigComplex& z, Precision p);
BigComplex log_gamma_complex(const BigComplex& z, const PrecisionConfig& prec);

/// [Gamma(w)]^gamma := exp(gamma * log_gamma_complex(w)). Throws at poles.
BigComplex gamma_power(const BigComplex& w, const BigReal& gamma, Precision p);
BigComplex gamma_power(const BigComplex& w, const BigReal& gamma, const PrecisionConfig& prec);

/// [Gamma(w)]^-gamma; exactly zero at poles.
BigComplex recip_gamma_power(const BigComplex& w, const BigReal& gamma, Precision p);

/// Rising factorial x (x+1) ... (x+j-1); empty product is 1.
BigReal pochhammer(const BigReal& x, unsigned long j);

/// True when z is exactly a nonpositive integer.
bool is_gamma_pole(const BigReal& x);
bool is_gamma_pole(const BigComplex& z);

}  // namespace leroy::numerics
