#include "leroy/numerics/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leroy/errors.hpp"

namespace leroy::numerics {

namespace {

Precision max_prec(const BigReal& a, const BigReal& b) {
  return Precision{std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()))};
}

}  // namespace

BigReal BigReal::parse(std::string_view text, Precision p) {
  BigReal r(p);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorKind::invalid_argument, "not a decimal number: '" + s + "'");
  }
  return r;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -HUGE_VAL;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";
  std::size_t n = digits > 0 ? static_cast<std::size_t>(digits) : 0;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, n, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mant holds d1 d2 ... with value 0.d1d2... * 10^e
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long exp10 = static_cast<long>(e) - 1;
  out += "e" + std::string(exp10 < 0 ? "-" : "+") + (std::labs(exp10) < 10 ? "0" : "") +
         std::to_string(std::labs(exp10));
  return out;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(max_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(max_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(max_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(max_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

#define LEROY_UNARY(name, fn)                 \
  BigReal name(const BigReal& x) {            \
    BigReal r(x.precision());                 \
    fn(r.raw(), x.raw(), MPFR_RNDN);          \
    return r;                                 \
  }

LEROY_UNARY(abs, mpfr_abs)
LEROY_UNARY(sqrt, mpfr_sqrt)
LEROY_UNARY(exp, mpfr_exp)
LEROY_UNARY(log, mpfr_log)
LEROY_UNARY(sin, mpfr_sin)
LEROY_UNARY(cos, mpfr_cos)
LEROY_UNARY(sinh, mpfr_sinh)
LEROY_UNARY(cosh, mpfr_cosh)
#undef LEROY_UNARY

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}
BigReal round(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_round(r.raw(), x.raw());
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(max_prec(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(max_prec(x, y));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(max_prec(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
BigReal pow10(double e, Precision p) {
  BigReal r(p);
  if (std::isinf(e) && e < 0) return r;
  BigReal ew(e, p);
  mpfr_exp10(r.raw(), ew.raw(), MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

namespace {

// x mod 2 in [-1, 1], exact.
BigReal reduce_mod2(const BigReal& x) {
  BigReal r(x.precision());
  BigReal two(2L, Precision{8});
  mpfr_remainder(r.raw(), x.raw(), two.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal sin_pi(const BigReal& x) {
  if (x.is_integer()) return BigReal(x.precision());
  BigReal r = reduce_mod2(x);
  // sin(pi r) = sin(pi (1 - r)) keeps |argument| <= pi/2
  if (r > BigReal(0.5, Precision{8})) {
    r = 1L - r;
  } else if (r < BigReal(-0.5, Precision{8})) {
    r = -1L - r;
  }
  return BigReal(sin(BigReal::pi(x.precision().plus_bits(8)) * r), x.precision());
}

BigReal cos_pi(const BigReal& x) {
  BigReal half(0.5, Precision{8});
  return sin_pi(x + half);
}

void PrecisionConfig::validate() const {
  if (target_digits < 1) throw Error(ErrorKind::invalid_argument, "target_digits must be >= 1");
  if (guard_digits < 0) throw Error(ErrorKind::invalid_argument, "guard_digits must be >= 0");
  if (max_working_digits < target_digits + guard_digits) {
    throw Error(ErrorKind::invalid_argument, "max_working_digits must be >= target_digits + guard_digits");
  }
}

}  // namespace leroy::numerics
