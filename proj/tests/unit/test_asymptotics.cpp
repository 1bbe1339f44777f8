#include <cmath>

#include "../support/oracle.hpp"
#include "doctest.h"
#include "leroy/asymptotics.hpp"
#include "leroy/errors.hpp"
#include "leroy/leroy_series.hpp"
#include "leroy/numerics/gamma.hpp"

using namespace leroy;
using numerics::Precision;

namespace {

const Precision P50 = Precision::from_digits(50);

Params params(const char* a, const char* b, const char* g) { return Params::parse(a, b, g); }

BigReal series_at_minus(const Params& p, double t, int digits) {
  PrecisionConfig pc;
  pc.target_digits = digits;
  return eval_series(p, BigComplex(BigReal(-t, P50)), pc).value.re();
}

}  // namespace

TEST_CASE("regimes of the figure presets") {
  auto r1 = regime_of(params("0.6", "0.8", "3"));
  CHECK(r1.label == RegimeLabel::algebraic);
  CHECK(r1.P == 0);
  auto r2 = regime_of(params("0.5", "0.75", "4"));
  CHECK(r2.label == RegimeLabel::boundary);
  CHECK(r2.P == 1);
  auto r4 = regime_of(params("0.7", "1.0", "3"));
  CHECK(r4.label == RegimeLabel::oscillatory);
  CHECK(r4.P == 1);
  CHECK(r4.alpha_m == Decimal::parse("2.1"));
  CHECK_THROWS_WITH_AS(regime_of(params("0.6", "0.8", "2.5")), "asymptotics undefined for non-integer γ", Error);
}

TEST_CASE("P formula agrees with the odd-integer search") {
  for (const char* am : {"2", "2.1", "3", "5.9", "6", "9.9", "10", "14.2"}) {
    CAPTURE(am);
    Decimal x = Decimal::parse(am);
    Params p(x, Decimal(1), Decimal(1));
    CHECK(regime_of(p).P == p_by_search(x));
  }
}

TEST_CASE("a0 closed form") {
  auto x1 = build_expansion(params("0.35", "0.9", "1"), 3, P50);
  CHECK(oracle::rel_log10(x1.a0 * BigReal::parse("0.35", P50), BigReal(1L, P50)) < -45);
  auto x3 = build_expansion(params("0.7", "1", "3"), 3, P50);
  // (2 pi)^-1 / (0.7 sqrt 3) = 0.1312684...
  CHECK(std::abs(x3.a0.to_double() - 0.1312684) < 1e-6);
  CHECK(x3.a0 > 0L);
  CHECK(x3.theta_prime == Decimal(2));
}

TEST_CASE("H_K values") {
  // single term: 1/(Gamma(1/2) t)
  BigReal t(7L, P50);
  BigReal h = eval_H(params("0.5", "1", "1"), t, 1, P50);
  CHECK(oracle::rel_log10(h, 1L / (numerics::sqrt(BigReal::pi(P50)) * t)) < -45);
  // alpha = beta: the k=1 coefficient is exactly zero
  auto x = build_expansion(params("0.7", "0.7", "2"), 10, P50);
  CHECK(x.h[0].is_zero());
  CHECK_FALSE(x.h[1].is_zero());
  CHECK_THROWS_AS(eval_H(params("0.7", "0.7", "2"), BigReal(-1L, P50), 10, P50), Error);

  // term-by-term independent summation with MPFR's gamma
  BigReal t50(50L, P50);
  BigReal ref(P50);
  for (int k = 1; k <= 10; ++k) {
    BigReal g(P50), arg(mpq_class(mpq_class(4, 5) - mpq_class(3, 5) * k), P50);
    if (arg.is_integer() && arg <= 0L) continue;  // 1/Gamma vanishes at poles
    mpfr_gamma(g.raw(), arg.raw(), MPFR_RNDN);
    BigReal term = 1L / (g * g * g);
    BigReal tp(P50);
    mpfr_pow_si(tp.raw(), t50.raw(), -k, MPFR_RNDN);
    ref -= (k % 2 ? -1L : 1L) * (term * tp);
  }
  CHECK(oracle::rel_log10(eval_H(params("0.6", "0.8", "3"), t50, 10, P50), ref) < -45);
}

TEST_CASE("G_r domain and closed-form re-evaluation") {
  Params fig4 = params("0.7", "1.0", "3");
  CHECK_THROWS_AS(eval_G_r(fig4, BigReal(10L, P50), 2, P50), Error);
  CHECK_THROWS_AS(eval_G_r(params("0.6", "0.8", "3"), BigReal(10L, P50), 1, P50), Error);

  // independent re-evaluation in double-free form at 60 digits
  const Precision p = Precision::from_digits(60);
  BigReal t(1000L, p), am(2.1, p), m(3L, p);
  am = BigReal::parse("2.1", p);
  BigReal a0 = numerics::pow(BigReal::pi(p) * 2L, BigReal(-1L, p)) / (BigReal::parse("0.7", p) * numerics::sqrt(m));
  BigReal e = (m + 1L - m * 2L) / (am * 2L);
  BigReal u = numerics::pow(t, 1L / am);
  BigReal th = BigReal::pi(p) / am;
  BigReal expect = a0 * 2L * numerics::pow(t, e) * numerics::exp(m * u * numerics::cos(th)) *
                   numerics::cos(BigReal::pi(p) * e + m * u * numerics::sin(th));
  CHECK(oracle::rel_log10(eval_G_r(fig4, BigReal(1000L, P50), 1, P50), expect) < -45);

  // alpha m = 2: cos(pi/2) = 0, no exponential growth
  auto x = build_expansion(params("0.5", "0.75", "4"), 10, P50);
  CHECK(numerics::abs(x.g[0].growth) < BigReal(1e-45, P50));
}

TEST_CASE("E leading term") {
  // m = 1: a0 z^{(1-beta)/alpha} e^{z^{1/alpha}}, compare with the direct formula
  BigComplex z(BigReal(3L, P50), BigReal(1L, P50));
  BigComplex e = eval_E_leading(params("0.5", "1", "1"), z, P50);
  BigComplex expect = numerics::exp(z * z) * BigReal(2L, P50);
  CHECK(oracle::rel_log10(e, expect) < -45);

  // ratio test on the positive axis, inside the sector
  Params g = params("0.3", "1", "2");
  for (double x : {100.0, 200.0}) {
    BigComplex zx(BigReal(x, P50));
    PrecisionConfig pc;
    pc.target_digits = 15;
    BigComplex f = eval_series(g, zx, pc).value;
    GerholdLeading ger = eval_E_gerhold(g, zx, P50);
    CHECK(ger.in_sector);
    double ratio = (f.re() / ger.value.re()).to_double();
    CAPTURE(x);
    CHECK(std::abs(ratio - 1.0) < 0.1);
    // integer gamma: both forms coincide
    CHECK(oracle::rel_log10(eval_E_leading(g, zx, P50), ger.value) < -45);
  }
  GerholdLeading outside = eval_E_gerhold(g, BigComplex(BigReal(-5L, P50), BigReal(1L, P50)), P50);
  CHECK_FALSE(outside.in_sector);
  CHECK(std::abs(outside.sector - 0.3 * M_PI) < 1e-5);
}

TEST_CASE("algebraic regime: the conjugate pair accounts for the H_K error") {
  Params fig1 = params("0.6", "0.8", "3");
  BigReal f = series_at_minus(fig1, 50, 30);
  auto plain = expand_negative_axis(fig1, BigReal(50L, P50), P50);
  NegativeAxisOptions with_pair;
  with_pair.include_exponentially_small = true;
  auto full = expand_negative_axis(fig1, BigReal(50L, P50), P50, with_pair);
  CHECK(plain.G.empty());
  CHECK(full.G.size() == 1);
  double err_plain = numerics::abs((plain.value - f) / f).to_double();
  double err_full = numerics::abs((full.value - f) / f).to_double();
  CHECK(err_full < 1e-3);
  CHECK(err_full < err_plain);
  // far out H_K alone takes over
  BigReal f640 = series_at_minus(fig1, 640, 30);
  auto far = expand_negative_axis(fig1, BigReal(640L, P50), P50);
  CHECK(numerics::abs((far.value - f640) / f640).to_double() < 1e-4);
}

TEST_CASE("boundary regime: a predicted zero brackets a sign change") {
  Params fig2 = params("0.5", "0.75", "4");
  // phase of G_1: pi e + m sqrt(t) sin(pi/2), e = (m+1-2m beta)/(2 alpha m) = -1/4
  // zeros at 4 sqrt(t) - pi/4 = pi/2 + j pi
  int j = 30;
  double s = (M_PI / 2 + j * M_PI + M_PI / 4) / 4.0;
  double t0 = s * s;
  BigReal lo = series_at_minus(fig2, t0 * 0.98, 20);
  BigReal hi = series_at_minus(fig2, t0 * 1.02, 20);
  CHECK(lo.sign() * hi.sign() < 0);
}

TEST_CASE("oscillatory regime keeps all P terms") {
  Params big = params("2", "1", "3");  // alpha m = 6, P = 2
  auto all = expand_negative_axis(big, BigReal(5L, P50), P50);
  CHECK(all.regime.P == 2);
  CHECK(all.G.size() == 2);
  NegativeAxisOptions one;
  one.g1_only = true;
  auto first = expand_negative_axis(big, BigReal(5L, P50), P50, one);
  CHECK(first.G.size() == 1);
  CHECK(oracle::rel_log10(all.value, first.value + all.G[1]) < -45);
}

TEST_CASE("oscillatory regime tracks F(-t)") {
  // alpha m = 3, single G_1; relative agreement improves along the crests
  Params p = params("1", "1", "3");
  auto err_at = [&](double t) {
    BigReal f = series_at_minus(p, t, 20);
    BigReal g = expand_negative_axis(p, BigReal(t, P50), P50).value;
    return numerics::abs(f - g).to_double() / numerics::abs(f).to_double();
  };
  // crest of cos(pi e + 3 t^{1/3} sin(pi/3)), e = -1/3: phase = 2 pi j
  auto crest = [](int j) {
    double u = (2 * M_PI * j + M_PI / 3) / (3 * std::sin(M_PI / 3));
    return u * u * u;
  };
  CHECK(err_at(crest(6)) < 0.05);
  CHECK(err_at(crest(12)) < err_at(crest(6)));
}

TEST_CASE("order and type estimates") {
  auto e = estimate_order_type(params("1", "1", "1"), 2000);
  CHECK(std::abs(e.rho_est - 1.0) < 0.01);
  CHECK(std::abs(e.type_est - 1.0) < 0.01);
  auto q = estimate_order_type(params("0.5", "1", "4"), 2000);
  CHECK(std::abs(q.rho_est / 0.5 - 1.0) < 0.05);
  CHECK(q.rho_limsup > q.rho_est);  // the literal estimator converges slowly from above
  CHECK(q.table.size() == 4);
  CHECK(q.table.back().n == 2000);
  CHECK_THROWS_AS(estimate_order_type(params("1", "1", "1"), 5), Error);
}

TEST_CASE("Olver's printed estimate versus G_1 for sum z^k/(k!)^3") {
  // The printed phase pi/rho does not match; G_1 of F_{1,1}^{(3)} does.
  Params p = params("1", "1", "3");
  double t = 14.0;
  BigReal T(t * t * t, P50);
  BigReal f = series_at_minus(p, t * t * t, 20);
  BigReal g1 = expand_negative_axis(p, T, P50).value;
  BigReal ol = olver_estimate(Decimal(3), BigReal(t, P50), P50);
  double err_g1 = numerics::abs((g1 - f) / f).to_double();
  double err_ol = numerics::abs((ol - f) / f).to_double();
  CHECK(err_g1 < 0.02);
  CHECK(err_ol > 0.5);
  CHECK_THROWS_AS(olver_estimate(Decimal(2), BigReal(1L, P50), P50), Error);
}
