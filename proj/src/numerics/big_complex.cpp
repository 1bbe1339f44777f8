#include "leroy/numerics/big_complex.hpp"

#include <algorithm>
#include <cmath>

namespace leroy::numerics {

namespace {

Precision max_prec(const BigComplex& a, const BigComplex& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
  // keep both parts at one precision
  if (re_.precision() < im_.precision()) {
    re_ = BigReal(re_, im_.precision());
  } else if (im_.precision() < re_.precision()) {
    im_ = BigReal(im_, re_.precision());
  }
}

double BigComplex::log10_abs() const {
  if (is_zero()) return -HUGE_VAL;
  double a = re_.log10_abs();
  double b = im_.log10_abs();
  double hi = std::max(a, b), lo = std::min(a, b);
  if (!std::isfinite(lo)) return hi;
  return hi + 0.5 * std::log10(1.0 + std::pow(10.0, 2.0 * (lo - hi)));
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigReal& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re() + b.re(), a.im() + b.im());
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re() - b.re(), a.im() - b.im());
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  Precision p = max_prec(a, b);
  BigReal re(p), im(p);
  mpfr_fmms(re.raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fmma(im.raw(), a.re().raw(), b.im().raw(), a.im().raw(), b.re().raw(), MPFR_RNDN);
  return BigComplex(std::move(re), std::move(im));
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.im().is_zero()) return a / b.re();
  Precision p = max_prec(a, b).plus_bits(8);
  BigReal den(p), re(p), im(p);
  mpfr_fmma(den.raw(), b.re().raw(), b.re().raw(), b.im().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fmma(re.raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fmms(im.raw(), a.im().raw(), b.re().raw(), a.re().raw(), b.im().raw(), MPFR_RNDN);
  Precision out = max_prec(a, b);
  return BigComplex(BigReal(re / den, out), BigReal(im / den, out));
}
BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re(), -a.im()); }
BigComplex operator+(const BigComplex& a, const BigReal& b) { return BigComplex(a.re() + b, BigReal(a.im(), std::max(a.precision(), b.precision()))); }
BigComplex operator-(const BigComplex& a, const BigReal& b) { return BigComplex(a.re() - b, BigReal(a.im(), std::max(a.precision(), b.precision()))); }
BigComplex operator*(const BigComplex& a, const BigReal& b) { return BigComplex(a.re() * b, a.im() * b); }
BigComplex operator/(const BigComplex& a, const BigReal& b) { return BigComplex(a.re() / b, a.im() / b); }
BigComplex operator*(const BigComplex& a, long b) { return BigComplex(a.re() * b, a.im() * b); }

bool operator==(const BigComplex& a, const BigComplex& b) { return a.re() == b.re() && a.im() == b.im(); }

BigComplex conj(const BigComplex& z) { return BigComplex(z.re(), -z.im()); }
BigReal abs(const BigComplex& z) { return hypot(z.re(), z.im()); }
BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
  Precision p = z.precision();
  BigReal mag = exp(z.re());
  if (z.im().is_zero()) return BigComplex(std::move(mag), BigReal(p));
  BigReal s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return BigComplex(mag * c, mag * s);
}

BigComplex log(const BigComplex& z) {
  if (z.im().is_zero() && z.re().sign() > 0) return BigComplex(log(z.re()), BigReal(z.precision()));
  return BigComplex(log(abs(z)), arg(z));
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) return BigComplex(z.precision());
  return exp(w * log(z));
}
BigComplex pow(const BigComplex& z, const BigReal& w) {
  if (z.is_zero()) return BigComplex(z.precision());
  return exp(log(z) * w);
}

BigComplex sin(const BigComplex& z) {
  Precision p = z.precision();
  BigReal s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  return BigComplex(s * cosh(z.im()), c * sinh(z.im()));
}

BigComplex sin_pi(const BigComplex& z) {
  // sin(pi(x+iy)) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)
  Precision p = z.precision();
  BigReal py = BigReal::pi(p) * z.im();
  return BigComplex(sin_pi(z.re()) * cosh(py), cos_pi(z.re()) * sinh(py));
}

BigComplex reciprocal(const BigComplex& z) {
  BigComplex one(BigReal(1L, z.precision()));
  return one / z;
}

std::string to_string(const BigComplex& z, int digits) {
  return "(" + z.re().to_string(digits) + ", " + z.im().to_string(digits) + ")";
}

}  // namespace leroy::numerics
