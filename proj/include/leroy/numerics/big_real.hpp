#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "leroy/numerics/precision.hpp"

namespace leroy::numerics {

/// Extended-precision real number. Each value owns its precision; binary
/// operations round to the larger of the two operand precisions (RNDN).
class BigReal {
 public:
  BigReal() : BigReal(Precision{}) {}
  explicit BigReal(Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_zero(v_, 1);
  }
  BigReal(long v, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  BigReal(int v, Precision p) : BigReal(static_cast<long>(v), p) {}
  BigReal(double v, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
  }
  BigReal(const mpq_class& q, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  /// Correctly rounded copy of `other` at precision `p`.
  BigReal(const BigReal& other, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  /// Parses a decimal string (as accepted by mpfr_set_str, base 10).
  static BigReal parse(std::string_view text, Precision p);

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  Precision precision() const { return Precision{mpfr_get_prec(v_)}; }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1 (meaningless for 0).
  long exponent() const { return mpfr_get_exp(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// log10|x| in double precision, valid far outside the double range.
  double log10_abs() const;
  /// Scientific decimal string with `digits` significant digits;
  /// digits == 0 picks enough digits to round-trip at this precision.
  std::string to_string(int digits = 0) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  BigReal& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  static BigReal pi(Precision p) {
    BigReal r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static BigReal euler(Precision p) {
    BigReal r(p);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

// Arithmetic: result precision is the max of the operand precisions.
BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
inline BigReal operator+(long a, const BigReal& b) { return b + a; }
inline BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator-(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);

inline int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal floor(const BigReal& x);
BigReal round(const BigReal& x);
/// sin(pi x) with exact argument reduction modulo 2.
BigReal sin_pi(const BigReal& x);
/// cos(pi x) with exact argument reduction modulo 2.
BigReal cos_pi(const BigReal& x);
/// 10^e for a double exponent; +0 for e = -inf.
BigReal pow10(double e, Precision p);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);

}  // namespace leroy::numerics
