#pragma once

#include <string>

#include "leroy/numerics/big_real.hpp"

namespace leroy::numerics {

/// Extended-precision complex number (pair of BigReal at a common precision).
/// Multiplication and division use fused two-product operations so that
/// conj(x*y) == conj(x)*conj(y) holds bit-for-bit.
class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(Precision p) : re_(p), im_(p) {}
  BigComplex(BigReal re, BigReal im);
  explicit BigComplex(const BigReal& re) : re_(re), im_(re.precision()) {}
  BigComplex(double re, double im, Precision p) : re_(re, p), im_(im, p) {}
  BigComplex(const BigComplex& other, Precision p) : re_(other.re_, p), im_(other.im_, p) {}

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  BigReal& re() { return re_; }
  BigReal& im() { return im_; }
  Precision precision() const { return re_.precision(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  /// log10|z| in double precision (robust for huge/tiny magnitudes).
  double log10_abs() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigReal& o);

  static BigComplex i(Precision p) { return BigComplex(BigReal(p), BigReal(1L, p)); }

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator+(const BigComplex& a, const BigReal& b);
BigComplex operator-(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);
inline BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
inline BigComplex operator+(const BigReal& a, const BigComplex& b) { return b + a; }
BigComplex operator*(const BigComplex& a, long b);

bool operator==(const BigComplex& a, const BigComplex& b);

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm, Im in (-pi, pi].
BigComplex log(const BigComplex& z);
/// Principal power exp(w log z).
BigComplex pow(const BigComplex& z, const BigComplex& w);
BigComplex pow(const BigComplex& z, const BigReal& w);
BigComplex sin(const BigComplex& z);
/// sin(pi z) with exact reduction of Re z modulo 2.
BigComplex sin_pi(const BigComplex& z);
BigComplex reciprocal(const BigComplex& z);

std::string to_string(const BigComplex& z, int digits = 0);

}  // namespace leroy::numerics
