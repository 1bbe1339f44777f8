#include "leroy/asymptotics.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "leroy/errors.hpp"
#include "leroy/numerics/gamma.hpp"

namespace leroy {

namespace {

long integer_gamma(const Params& p) {
  auto m = p.m();
  if (!m) throw Error(ErrorKind::domain, "asymptotics undefined for non-integer γ");
  return *m;
}

BigReal require_positive(const BigReal& t, Precision prec) {
  if (!(t > 0L) || !t.is_finite()) throw Error(ErrorKind::domain, "asymptotic expansion requires t > 0");
  return BigReal(t, prec);
}

Decimal half(const Decimal& d) { return d / Decimal(2); }

}  // namespace

std::string to_string(RegimeLabel r) {
  switch (r) {
    case RegimeLabel::algebraic: return "algebraic";
    case RegimeLabel::boundary: return "boundary";
    case RegimeLabel::oscillatory: return "oscillatory";
  }
  return "unknown";
}

Regime regime_of(const Params& p) {
  long m = integer_gamma(p);
  Regime r;
  r.alpha_m = p.alpha() * Decimal(m);
  if (r.alpha_m < Decimal(2))
    r.label = RegimeLabel::algebraic;
  else if (r.alpha_m == Decimal(2))
    r.label = RegimeLabel::boundary;
  else
    r.label = RegimeLabel::oscillatory;
  r.P = r.label == RegimeLabel::algebraic ? 0 : numerics::floor_of(half(half(r.alpha_m) + Decimal(1)));
  return r;
}

long p_by_search(const Decimal& alpha_m) {
  Decimal limit = half(alpha_m);
  long odd = 1;
  while (!(Decimal(odd) > limit)) odd += 2;
  return (odd - 1) / 2;
}

AsymptoticExpansion build_expansion(const Params& p, int K, Precision prec) {
  if (K < 1) throw Error(ErrorKind::domain, "truncation order K must be at least 1");
  long m = integer_gamma(p);
  Precision wp = prec.plus_bits(32);
  AsymptoticExpansion x;
  x.regime = regime_of(p);
  x.K = K;
  Decimal md(m);
  x.theta_prime = md * p.beta() - half(md - Decimal(1));
  x.exponent = (md + Decimal(1) - Decimal(2) * md * p.beta()) / (Decimal(2) * p.alpha() * md);

  BigReal two_pi = BigReal::pi(wp) * 2L;
  BigReal a0 = numerics::pow(two_pi, BigReal(mpq_class(1 - m, 2), wp)) /
               (p.alpha().to_big(wp) * numerics::sqrt(BigReal(m, wp)));
  x.a0 = BigReal(a0, prec);

  for (int k = 1; k <= K; ++k) {
    mpq_class arg = p.beta().rational() - p.alpha().rational() * k;
    BigReal r = numerics::recip_gamma_real(BigReal(arg, wp), wp);
    BigReal rm(wp);
    mpfr_pow_ui(rm.raw(), r.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
    x.h.push_back(BigReal(rm, prec));
  }

  long count = std::max<long>(x.regime.P, 1);
  BigReal am = x.regime.alpha_m.to_big(wp);
  for (long r = 1; r <= count; ++r) {
    BigReal th = BigReal::pi(wp) * (2 * r - 1) / am;
    AsymptoticExpansion::GTerm g{r, BigReal(numerics::cos(th) * m, prec), BigReal(numerics::sin(th) * m, prec),
                                 BigReal(BigReal::pi(wp) * (2 * r - 1) * x.exponent.to_big(wp), prec)};
    x.g.push_back(std::move(g));
  }
  return x;
}

BigReal eval_H(const Params& p, const BigReal& t, int K, Precision prec) {
  Precision wp = prec.plus_bits(32);
  BigReal tw = require_positive(t, wp);
  AsymptoticExpansion x = build_expansion(p, K, wp);
  BigReal sum(wp);
  BigReal inv = 1L / tw;
  BigReal power = inv;
  for (int k = 1; k <= K; ++k) {
    BigReal term = power * x.h[static_cast<std::size_t>(k - 1)];
    if (k % 2 == 0)
      sum -= term;
    else
      sum += term;
    power *= inv;
  }
  return BigReal(sum, prec);
}

BigReal eval_conjugate_pair(const Params& p, const BigReal& t, long r, Precision prec) {
  if (r < 1) throw Error(ErrorKind::domain, "G_r requires r >= 1");
  long m = integer_gamma(p);
  // phase m t^{1/(alpha m)} sin th grows with t; carry its integer part as extra bits
  double approx = std::pow(t.to_double(), 1.0 / (p.alpha().to_double() * static_cast<double>(m)));
  Precision wp = prec.plus_bits(32 + static_cast<long>(std::log2(static_cast<double>(m) * approx + 2.0)));
  BigReal tw = require_positive(t, wp);
  Decimal am = p.alpha() * Decimal(m);
  Decimal e = (Decimal(m + 1) - Decimal(2 * m) * p.beta()) / (Decimal(2) * am);
  BigReal two_pi = BigReal::pi(wp) * 2L;
  BigReal a0 = numerics::pow(two_pi, BigReal(mpq_class(1 - m, 2), wp)) /
               (p.alpha().to_big(wp) * numerics::sqrt(BigReal(m, wp)));
  BigReal u = numerics::pow(tw, 1L / am.to_big(wp));
  BigReal th = BigReal::pi(wp) * (2 * r - 1) / am.to_big(wp);
  BigReal growth = u * numerics::cos(th) * m;
  BigReal phase = BigReal::pi(wp) * (2 * r - 1) * e.to_big(wp) + u * numerics::sin(th) * m;
  BigReal v = a0 * 2L * numerics::pow(tw, e.to_big(wp)) * numerics::exp(growth) * numerics::cos(phase);
  return BigReal(v, prec);
}

BigReal eval_G_r(const Params& p, const BigReal& t, long r, Precision prec) {
  Regime reg = regime_of(p);
  if (r < 1 || r > reg.P)
    throw Error(ErrorKind::domain, "G_r requires 1 <= r <= P (P = " + std::to_string(reg.P) + ")");
  return eval_conjugate_pair(p, t, r, prec);
}

BigComplex eval_E_leading(const Params& p, const BigComplex& z, Precision prec) {
  long m = integer_gamma(p);
  if (z.is_zero()) throw Error(ErrorKind::domain, "E(z) requires z != 0");
  Precision wp = prec.plus_bits(64);
  BigComplex zw(z, wp);
  Decimal am = p.alpha() * Decimal(m);
  Decimal e = (Decimal(m + 1) - Decimal(2 * m) * p.beta()) / (Decimal(2) * am);
  BigReal a0 = numerics::pow(BigReal::pi(wp) * 2L, BigReal(mpq_class(1 - m, 2), wp)) /
               (p.alpha().to_big(wp) * numerics::sqrt(BigReal(m, wp)));
  BigComplex v = numerics::pow(zw, e.to_big(wp)) * numerics::exp(numerics::pow(zw, 1L / am.to_big(wp)) * m) * a0;
  return BigComplex(v, prec);
}

GerholdLeading eval_E_gerhold(const Params& p, const BigComplex& z, Precision prec, double epsilon) {
  if (z.is_zero()) throw Error(ErrorKind::domain, "E(z) requires z != 0");
  Precision wp = prec.plus_bits(64);
  BigComplex zw(z, wp);
  BigReal g = p.gamma().to_big(wp), a = p.alpha().to_big(wp), b = p.beta().to_big(wp);
  BigReal ag = a * g;
  BigReal coef = numerics::pow(BigReal::pi(wp) * 2L, (1L - g) / 2L) / (a * numerics::sqrt(g));
  BigReal e = (g - b * g * 2L + 1L) / (ag * 2L);
  BigComplex v = numerics::pow(zw, e) * numerics::exp(numerics::pow(zw, 1L / ag) * g) * coef;

  GerholdLeading out;
  out.value = BigComplex(v, prec);
  double agd = (p.alpha() * p.gamma()).to_double();
  Decimal agx = p.alpha() * p.gamma();
  if (agx < Decimal(2))
    out.sector = 0.5 * agd * M_PI - epsilon;
  else if (agx < Decimal(4))
    out.sector = (2.0 - 0.5 * agd) * M_PI - epsilon;
  else
    out.sector = 0.0;
  double arg = std::fabs(numerics::arg(z).to_double());
  out.in_sector = arg <= out.sector || (out.sector == 0.0 && z.im().is_zero() && z.re().sign() > 0);
  return out;
}

NegativeAxisExpansion expand_negative_axis(const Params& p, const BigReal& t, Precision prec,
                                           const NegativeAxisOptions& options) {
  NegativeAxisExpansion out;
  out.regime = regime_of(p);
  BigReal tw = require_positive(t, prec);
  out.value = BigReal(prec);
  out.H = BigReal(prec);
  switch (out.regime.label) {
    case RegimeLabel::algebraic:
      out.H = eval_H(p, tw, options.K, prec);
      out.value = out.H;
      if (options.include_exponentially_small) {
        out.G.push_back(eval_conjugate_pair(p, tw, 1, prec));
        out.value += out.G.back();
      }
      break;
    case RegimeLabel::boundary:
      out.H = eval_H(p, tw, options.K, prec);
      out.G.push_back(eval_G_r(p, tw, 1, prec));
      out.value = out.G.back() + out.H;
      break;
    case RegimeLabel::oscillatory: {
      long last = options.g1_only ? 1 : out.regime.P;
      for (long r = 1; r <= last; ++r) {
        out.G.push_back(eval_G_r(p, tw, r, prec));
        out.value += out.G.back();
      }
      break;
    }
  }
  return out;
}

OrderTypeEstimate estimate_order_type(const Params& p, long N) {
  if (N < 10) throw Error(ErrorKind::domain, "order estimate requires N >= 10");
  const Precision wp{128};
  const double gamma = p.gamma().to_double();
  auto log_inv_coeff = [&](long n) {
    mpq_class arg = p.alpha().rational() * n + p.beta().rational();
    return (numerics::log_gamma_positive(BigReal(arg, wp), wp) * p.gamma().to_big(wp)).to_double();
  };
  OrderTypeEstimate est;
  est.rho_exact = 1.0 / (p.alpha().to_double() * gamma);
  const double rho = est.rho_exact;
  auto type_at = [&](long n, double L) {
    double ln = std::log(static_cast<double>(n));
    return std::exp(ln - rho * L / static_cast<double>(n) - 1.0 - std::log(rho));
  };

  long lo = N / 2;
  Eigen::MatrixXd A(N - lo + 1, 4);
  Eigen::VectorXd y(N - lo + 1);
  est.rho_limsup = 0.0;
  for (long n = lo; n <= N; ++n) {
    double L = log_inv_coeff(n);
    double nd = static_cast<double>(n), ln = std::log(nd);
    // columns scaled to comparable magnitude
    A.row(n - lo) << nd * ln / (N * std::log(N)), nd / N, ln / std::log(N), 1.0;
    y(n - lo) = L;
    if (L > 0) est.rho_limsup = std::max(est.rho_limsup, nd * ln / L);
  }
  Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
  double a = coef(0) / (static_cast<double>(N) * std::log(static_cast<double>(N)));
  est.rho_est = 1.0 / a;

  for (long n : {N / 8, N / 4, N / 2, N}) {
    if (n < 2) continue;
    double L = log_inv_coeff(n);
    est.table.push_back({n, L > 0 ? static_cast<double>(n) * std::log(static_cast<double>(n)) / L : 0.0, type_at(n, L)});
  }
  est.type_est = est.table.back().type_n;
  return est;
}

BigReal olver_estimate(const Decimal& rho, const BigReal& t, Precision prec) {
  if (!(rho > Decimal(2))) throw Error(ErrorKind::domain, "Olver estimate applies to rho > 2");
  Precision wp = prec.plus_bits(32 + static_cast<long>(std::log2(t.to_double() * rho.to_double() + 2.0)));
  BigReal tw = require_positive(t, wp);
  BigReal r = rho.to_big(wp);
  BigReal th = BigReal::pi(wp) / r;
  BigReal a0 = numerics::pow(BigReal::pi(wp) * 2L, (1L - r) / 2L) * 2L / numerics::sqrt(r);
  BigReal v = a0 * numerics::pow(tw, (1L - r) / 2L) * numerics::exp(r * tw * numerics::cos(th)) *
              numerics::sin(th + tw * r * numerics::sin(th));
  return BigReal(v, prec);
}

}  // namespace leroy
