#pragma once

// Independent reference values for tests: fixed-length partial sums at a fixed
// high precision using MPFR's own log-gamma, sharing nothing with the library's
// gamma kernel or truncation logic.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "leroy/numerics/big_complex.hpp"

namespace oracle {

using leroy::numerics::BigComplex;
using leroy::numerics::BigReal;
using leroy::numerics::Precision;

inline BigReal lngamma(const mpq_class& x, Precision p) {
  BigReal r(p), xr(x, p);
  int sign = 0;
  mpfr_lgamma(r.raw(), &sign, xr.raw(), MPFR_RNDN);
  return r;
}

/// sum_{k=first}^{first+terms-1} z^k * exp(-gamma * lngamma(alpha k + beta)), real z.
inline BigReal leroy_partial_sum_real(const mpq_class& alpha, const mpq_class& beta, const mpq_class& gamma,
                                      const mpq_class& z, int digits, int terms, int first = 0) {
  Precision p = Precision::from_digits(digits);
  BigReal sum(p), zr(z, p), g(gamma, p);
  BigReal power(1L, p);
  for (int k = 0; k < first; ++k) power *= zr;
  for (int k = first; k < first + terms; ++k) {
    BigReal lg = lngamma(alpha * k + beta, p);
    BigReal c(p);
    BigReal e = -(lg * g);
    mpfr_exp(c.raw(), e.raw(), MPFR_RNDN);
    sum += power * c;
    power *= zr;
  }
  return sum;
}

/// Same for complex z = (re, im).
inline std::pair<BigReal, BigReal> leroy_partial_sum_complex(const mpq_class& alpha, const mpq_class& beta,
                                                             const mpq_class& gamma, const mpq_class& re,
                                                             const mpq_class& im, int digits, int terms) {
  Precision p = Precision::from_digits(digits);
  BigReal sr(p), si(p), pr(1L, p), pi(p), zr(re, p), zi(im, p), g(gamma, p);
  for (int k = 0; k < terms; ++k) {
    BigReal lg = lngamma(alpha * k + beta, p);
    BigReal c(p);
    BigReal e = -(lg * g);
    mpfr_exp(c.raw(), e.raw(), MPFR_RNDN);
    sr += pr * c;
    si += pi * c;
    BigReal nr = pr * zr - pi * zi;
    BigReal ni = pr * zi + pi * zr;
    pr = nr;
    pi = ni;
  }
  return {sr, si};
}

/// sum_k z^k / prod_j Gamma(a_j k + b_j) with signs, real z, by brute force.
inline BigReal multi_index_partial_sum(const std::vector<std::pair<mpq_class, mpq_class>>& pairs, const mpq_class& z,
                                       int digits, int terms) {
  Precision p = Precision::from_digits(digits);
  BigReal sum(p), zr(z, p), power(1L, p);
  for (int k = 0; k < terms; ++k) {
    BigReal c(1L, p);
    for (auto& [a, b] : pairs) {
      BigReal g(p), x(mpq_class(a * k + b), p);
      mpfr_gamma(g.raw(), x.raw(), MPFR_RNDN);
      c /= g;
    }
    sum += power * c;
    power *= zr;
  }
  return sum;
}

/// |a - b| / max(1, |b|) as log10.
inline double rel_log10(const BigReal& a, const BigReal& b) {
  BigReal d = a - b;
  if (d.is_zero()) return -1e9;
  double scale = b.is_zero() ? 0.0 : std::max(0.0, b.log10_abs());
  return d.log10_abs() - scale;
}

inline double rel_log10(const BigComplex& a, const BigComplex& b) {
  BigComplex d = a - b;
  if (d.is_zero()) return -1e9;
  double scale = b.is_zero() ? 0.0 : std::max(0.0, b.log10_abs());
  return d.log10_abs() - scale;
}

}  // namespace oracle
