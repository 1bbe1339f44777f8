#include "leroy/numerics/gamma.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "leroy/errors.hpp"

namespace leroy::numerics {

namespace {

// ---------------------------------------------------------------------------
// Stirling coefficients B_{2n} / (2n (2n-1)), exact, via tangent numbers.

std::vector<mpq_class> exact_stirling_coefficients(std::size_t count) {
  // Tangent numbers T_1..T_count (Brent & Harvey, in-place integer recurrence).
  std::vector<mpz_class> t(count + 1);
  if (count >= 1) t[1] = 1;
  for (std::size_t k = 2; k <= count; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
  for (std::size_t k = 2; k <= count; ++k) {
    for (std::size_t j = k; j <= count; ++j) {
      t[j] = t[j - 1] * static_cast<unsigned long>(j - k) + t[j] * static_cast<unsigned long>(j - k + 2);
    }
  }
  std::vector<mpq_class> out(count + 1);
  for (std::size_t n = 1; n <= count; ++n) {
    // B_{2n} = (-1)^{n-1} 2n T_n / (2^{2n} (2^{2n} - 1))
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
    mpq_class b2n(mpz_class(t[n] * static_cast<unsigned long>(2 * n)), mpz_class(four_n * (four_n - 1)));
    b2n.canonicalize();
    if (n % 2 == 0) b2n = -b2n;
    mpq_class c = b2n / mpq_class(static_cast<unsigned long>(2 * n * (2 * n - 1)));
    c.canonicalize();
    out[n] = c;
  }
  return out;
}

struct StirlingTable {
  std::vector<BigReal> coeff;  // coeff[n], n >= 1
  BigReal half_log_2pi;
};

class StirlingCache {
 public:
  std::shared_ptr<const StirlingTable> get(Precision p, std::size_t terms) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = tables_[p.bits];
    if (slot && slot->coeff.size() > terms) return slot;
    std::size_t want = std::max<std::size_t>(terms + 1, 2 * (slot ? slot->coeff.size() : 32));
    if (exact_.size() < want) exact_ = exact_stirling_coefficients(std::max(want, 2 * exact_.size()));
    auto table = std::make_shared<StirlingTable>();
    table->coeff.reserve(want);
    table->coeff.emplace_back(p);
    for (std::size_t n = 1; n < want; ++n) table->coeff.emplace_back(exact_[n], p);
    BigReal two_pi = BigReal::pi(p.plus_bits(8)) * 2L;
    table->half_log_2pi = BigReal(log(two_pi) / 2L, p);
    slot = std::move(table);
    return slot;
  }

 private:
  std::mutex mutex_;
  std::vector<mpq_class> exact_;
  std::map<mpfr_prec_t, std::shared_ptr<const StirlingTable>> tables_;
};

StirlingCache& stirling_cache() {
  static StirlingCache cache;
  return cache;
}

// Stirling series is used once |w| >= r0 and Re w >= r0.
double stirling_radius(Precision p) { return 0.22 * static_cast<double>(p.bits) + 4.0; }

long bit_length(double v) { return v < 2.0 ? 1 : static_cast<long>(std::ceil(std::log2(v))); }

// Bits needed on top of p so that the terms of magnitude ~ w log w cancel
// down to a result correct to p bits absolute.
Precision working_for(Precision p, double shift, double wmag) {
  double scale = std::max(2.0, wmag * std::log(std::max(wmag, 2.0)));
  return Precision{p.bits + 24 + bit_length(shift + 2.0) + bit_length(scale)};
}

// sum_{n>=1} c_n w^{1-2n}, real w > 0
BigReal stirling_tail_real(const BigReal& w, const BigReal& lead, Precision wp) {
  auto table = stirling_cache().get(wp, 64);
  BigReal inv = 1L / w;
  BigReal inv2 = inv * inv;
  BigReal pw = inv;
  BigReal sum(wp);
  long target = lead.exponent() - static_cast<long>(wp.bits) - 4;
  for (std::size_t n = 1;; ++n) {
    if (n >= table->coeff.size()) table = stirling_cache().get(wp, 2 * n);
    BigReal term = table->coeff[n] * pw;
    sum += term;
    if (term.is_zero() || term.exponent() < target) break;
    pw *= inv2;
    if (n > 100000) throw Error(ErrorKind::domain, "Stirling series failed to converge");
  }
  return sum;
}

}  // namespace

bool is_gamma_pole(const BigReal& x) { return x.is_integer() && x.sign() <= 0; }
bool is_gamma_pole(const BigComplex& z) { return z.im().is_zero() && is_gamma_pole(z.re()); }

BigReal log_gamma_positive(const BigReal& x, Precision p) {
  if (x.sign() <= 0) throw Error(ErrorKind::domain, "log_gamma_positive requires x > 0");
  if (x == BigReal(1L, Precision{8}) || x == BigReal(2L, Precision{8})) return BigReal(p);
  double xd = x.to_double();
  double r0 = stirling_radius(p);
  long shift = xd >= r0 ? 0 : static_cast<long>(std::ceil(r0 - xd));
  Precision wp = working_for(p, static_cast<double>(shift), std::max(xd, r0));
  BigReal xw(x, wp);
  BigReal w = xw + shift;

  auto table = stirling_cache().get(wp, 64);
  BigReal half(0.5, Precision{8});
  BigReal lead = (w - half) * log(w) - w + table->half_log_2pi;
  BigReal result = lead + stirling_tail_real(w, lead, wp);
  if (shift > 0) {
    BigReal prod(xw);
    for (long j = 1; j < shift; ++j) prod *= (xw + j);
    result -= log(prod);
  }
  return BigReal(result, p);
}

BigReal log_abs_gamma(const BigReal& x, Precision p, int* sign) {
  if (is_gamma_pole(x)) throw Error(ErrorKind::pole, "log-gamma pole");
  if (x.sign() > 0) {
    if (sign) *sign = 1;
    return log_gamma_positive(x, p);
  }
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  double mag = std::fabs(x.to_double());
  Precision wp = p.plus_bits(16 + bit_length(mag + 2.0));
  BigReal xw(x, wp);
  BigReal s = sin_pi(xw);
  if (sign) *sign = s.sign() > 0 ? 1 : -1;
  BigReal r = log(BigReal::pi(wp)) - log(abs(s)) - log_gamma_positive(1L - xw, wp);
  return BigReal(r, p);
}

GammaValue gamma_real(const BigReal& x, Precision p) {
  GammaValue g;
  g.value = BigReal(p);
  g.log_abs = BigReal(p);
  if (!x.is_finite()) throw Error(ErrorKind::domain, "gamma_real requires finite x");
  if (is_gamma_pole(x)) {
    g.is_pole = true;
    mpfr_set_inf(g.value.raw(), 1);
    mpfr_set_inf(g.log_abs.raw(), 1);
    return g;
  }
  int sign = 1;
  // extra bits so exp() of a large logarithm keeps p relative bits
  double approx = std::fabs(x.to_double());
  Precision wp = p.plus_bits(8 + bit_length(approx * std::log(approx + 2.0) + 2.0));
  BigReal la = log_abs_gamma(x, wp, &sign);
  g.sign = sign;
  g.log_abs = BigReal(la, p);
  // largest finite value is ~ 2^emax
  double limit = static_cast<double>(mpfr_get_emax()) * 0.6931471805599453;
  if (la.to_double() >= limit) {
    g.overflow = true;
    mpfr_set_inf(g.value.raw(), sign);
    return g;
  }
  BigReal v = exp(la);
  if (sign < 0) v = -v;
  g.value = BigReal(v, p);
  return g;
}

GammaValue gamma_real(const BigReal& x, const PrecisionConfig& prec) {
  prec.validate();
  return gamma_real(x, prec.working());
}

BigReal GammaValue::reciprocal() const {
  Precision p = value.precision();
  if (is_pole) return BigReal(p);
  BigReal r = exp(-BigReal(log_abs, p.plus_bits(16)));
  if (sign < 0) r = -r;
  return BigReal(r, p);
}

BigReal recip_gamma_real(const BigReal& x, Precision p) {
  if (is_gamma_pole(x)) return BigReal(p);
  double approx = std::fabs(x.to_double());
  Precision wp = p.plus_bits(8 + bit_length(approx * std::log(approx + 2.0) + 2.0));
  int sign = 1;
  BigReal la = log_abs_gamma(x, wp, &sign);
  BigReal r = exp(-la);
  if (sign < 0) r = -r;
  return BigReal(r, p);
}

BigComplex log_gamma_complex(const BigComplex& z, Precision p) {
  if (is_gamma_pole(z)) throw Error(ErrorKind::pole, "log-gamma pole");
  if (z.im().is_zero()) {
    if (z.re().sign() > 0) return BigComplex(log_gamma_positive(z.re(), p), BigReal(p));
    // Limit from above the cut: each negative factor of the shift product
    // contributes +i*pi to its logarithm.
    int sign = 1;
    BigReal re = log_abs_gamma(z.re(), p, &sign);
    long negatives = -floor(z.re()).to_long();
    BigReal im = BigReal::pi(p) * (-negatives);
    return BigComplex(std::move(re), std::move(im));
  }

  double xd = z.re().to_double();
  double r0 = stirling_radius(p);
  long shift = xd >= r0 ? 0 : static_cast<long>(std::ceil(r0 - xd));
  double wmag = std::hypot(std::max(xd + static_cast<double>(shift), r0), z.im().to_double());
  Precision wp = working_for(p, static_cast<double>(shift), wmag);
  BigComplex zw(z, wp);
  BigComplex w = zw + BigReal(shift, wp);

  auto table = stirling_cache().get(wp, 64);
  BigReal half(0.5, Precision{8});
  BigComplex lw = log(w);
  BigComplex lead = (w - half) * lw - w + table->half_log_2pi;

  // Remainder bound for |arg w| = theta < pi/2 carries sec^2(theta/2)^(n+1).
  double theta = std::fabs(std::atan2(w.im().to_double(), w.re().to_double()));
  double growth_bits = -2.0 * std::log2(std::cos(theta / 2.0));
  BigComplex inv = reciprocal(w);
  BigComplex inv2 = inv * inv;
  BigComplex pw = inv;
  BigComplex tail(wp);
  double lead_log2 = lead.log10_abs() * 3.321928094887362;
  for (std::size_t n = 1;; ++n) {
    if (n >= table->coeff.size()) table = stirling_cache().get(wp, 2 * n);
    BigComplex term = pw * table->coeff[n];
    tail += term;
    double tl = term.log10_abs() * 3.321928094887362 + growth_bits * static_cast<double>(n + 1);
    if (term.is_zero() || tl < lead_log2 - static_cast<double>(wp.bits) - 4.0) break;
    pw *= inv2;
    if (n > 100000) throw Error(ErrorKind::domain, "Stirling series failed to converge");
  }
  BigComplex result = lead + tail;

  if (shift > 0) {
    // log of the shift product, branch fixed by the summed principal arguments
    BigComplex prod(zw);
    double arg_sum = std::atan2(z.im().to_double(), xd);
    for (long j = 1; j < shift; ++j) {
      prod *= (zw + BigReal(j, wp));
      arg_sum += std::atan2(z.im().to_double(), xd + static_cast<double>(j));
    }
    BigComplex lp = log(prod);
    double principal = lp.im().to_double();
    double turns = std::nearbyint((arg_sum - principal) / (2.0 * M_PI));
    if (turns != 0.0) lp.im() += BigReal::pi(wp) * static_cast<long>(2.0 * turns);
    result -= lp;
  }
  return BigComplex(result, p);
}

BigComplex log_gamma_complex(const BigComplex& z, const PrecisionConfig& prec) {
  prec.validate();
  return log_gamma_complex(z, prec.working());
}

BigComplex gamma_power(const BigComplex& w, const BigReal& gamma, Precision p) {
  if (is_gamma_pole(w)) throw Error(ErrorKind::pole, "gamma_power evaluated at a pole");
  Precision wp = p.plus_bits(64);
  BigComplex lg = log_gamma_complex(w, wp);
  return BigComplex(exp(lg * BigReal(gamma, wp)), p);
}

BigComplex gamma_power(const BigComplex& w, const BigReal& gamma, const PrecisionConfig& prec) {
  prec.validate();
  return gamma_power(w, gamma, prec.working());
}

BigComplex recip_gamma_power(const BigComplex& w, const BigReal& gamma, Precision p) {
  if (is_gamma_pole(w)) return BigComplex(p);
  Precision wp = p.plus_bits(64);
  BigComplex lg = log_gamma_complex(w, wp);
  return BigComplex(exp(-(lg * BigReal(gamma, wp))), p);
}

BigReal pochhammer(const BigReal& x, unsigned long j) {
  Precision p = x.precision();
  Precision wp = p.plus_bits(8 + bit_length(static_cast<double>(j) + 1.0));
  BigReal acc(1L, wp);
  BigReal xw(x, wp);
  for (unsigned long i = 0; i < j; ++i) acc *= (xw + static_cast<long>(i));
  return BigReal(acc, p);
}

}  // namespace leroy::numerics
