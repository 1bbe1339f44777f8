#include <cmath>

#include "../support/oracle.hpp"
#include "doctest.h"
#include "leroy/errors.hpp"
#include "leroy/laplace.hpp"
#include "leroy/leroy_series.hpp"

using namespace leroy;
using numerics::Precision;

namespace {

PrecisionConfig digits(int target) {
  PrecisionConfig pc;
  pc.target_digits = target;
  return pc;
}

const Precision P40 = Precision::from_digits(40);

BigComplex real(const char* s) { return BigComplex(BigReal::parse(s, P40)); }

// sum_k k! / (Gamma(alpha k + beta)^m s^{k+1}) with MPFR's gamma, real s.
BigReal termwise_oracle(const mpq_class& alpha, const mpq_class& beta, long m, const mpq_class& s, int terms) {
  Precision p = Precision::from_digits(50);
  BigReal sum(p), inv(mpq_class(1 / s), p), power(inv);
  for (long k = 0; k < terms; ++k) {
    BigReal fact(p), g(p), x(mpq_class(alpha * k + beta), p);
    mpfr_fac_ui(fact.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_gamma(g.raw(), x.raw(), MPFR_RNDN);
    BigReal gm(1L, p);
    for (long j = 0; j < m; ++j) gm *= g;
    sum += power * fact / gm;
    power *= inv;
  }
  return sum;
}

}  // namespace

TEST_CASE("exponential case: both sides equal 1/e") {
  Params p = Params::parse("1", "1", "2");
  BigReal lambda = BigReal::parse("-1", P40);
  BigComplex lhs = laplace_lhs(p, lambda, real("1"), digits(14));
  BigComplex rhs = laplace_rhs(p, lambda, real("1"), digits(20));
  BigReal e = numerics::exp(BigReal(-1L, P40));
  CHECK(oracle::rel_log10(rhs, BigComplex(e)) < -18);
  CHECK(oracle::rel_log10(lhs, BigComplex(e)) < -8);
}

TEST_CASE("Mittag-Leffler and four-parameter right-hand sides") {
  Params p = Params::parse("0.5", "1", "2");
  BigReal lambda = BigReal::parse("-1", P40);
  BigComplex lhs = laplace_lhs(p, lambda, real("2"), digits(14));
  // s^-1 E_{1/2,1}(-s^-1/2) through the Mittag-Leffler front end
  BigComplex x = real("-1") / numerics::sqrt(BigReal(2L, P40));
  BigComplex ml = eval_mittag_leffler(Decimal::parse("0.5"), Decimal::parse("1"), x, digits(20)).value / real("2");
  CHECK(oracle::rel_log10(lhs, ml) < -8);

  Params q = Params::parse("0.5", "0.75", "3");
  BigReal one = BigReal::parse("1", P40);
  BigComplex a = laplace_rhs(q, one, real("4"), digits(25));
  BigComplex b = laplace_rhs_multi_index(q, one, real("4"), digits(25));
  CHECK(oracle::rel_log10(a, b) < -23);
  CHECK(oracle::rel_log10(laplace_lhs(q, one, real("4"), digits(14)), a) < -8);
}

TEST_CASE("lambda = 0 gives 1/s for beta = 1") {
  Params p = Params::parse("1", "1", "1.5");
  BigReal zero(P40);
  for (const char* s : {"0.5", "3"}) {
    BigComplex rhs = laplace_rhs(p, zero, real(s), digits(20));
    CHECK(oracle::rel_log10(rhs, real("1") / real(s)) < -19);
  }
}

TEST_CASE("Wright form against the term-wise oracle") {
  Params m1 = Params::parse("1", "1", "1");
  CHECK(oracle::rel_log10(laplace_wright_form(m1, real("2"), digits(20)), real("1")) < -18);

  Params m3 = Params::parse("0.6", "0.8", "3");
  BigComplex w3 = laplace_wright_form(m3, real("3"), digits(30));
  CHECK(oracle::rel_log10(w3, BigComplex(termwise_oracle(mpq_class(3, 5), mpq_class(4, 5), 3, 3, 120))) < -20);
  CHECK(oracle::rel_log10(laplace_termwise(m3, real("3"), digits(30)), w3) < -20);

  Params m4 = Params::parse("0.5", "0.5", "4");
  BigComplex w4 = laplace_wright_form(m4, real("10"), digits(30));
  CHECK(oracle::rel_log10(w4, BigComplex(termwise_oracle(mpq_class(1, 2), mpq_class(1, 2), 4, 10, 80))) < -20);
  CHECK(oracle::rel_log10(laplace_plain_lhs(m4, real("10"), digits(14)), w4) < -8);
}

TEST_CASE("suite residuals") {
  auto checks = run_laplace_suite(digits(12));
  REQUIRE(checks.size() == 9);
  int wright = 0;
  for (auto& c : checks) {
    CAPTURE(c.point.label);
    CHECK(c.relative_residual < 1e-8);
    CHECK(c.quadrature.truncation > 0);
    if (c.alternative) CHECK(oracle::rel_log10(*c.alternative, c.rhs) < -11);
    wright += c.point.wright_form;
  }
  CHECK(wright == 3);
}

TEST_CASE("serial and parallel quadrature agree bit for bit") {
  Params p = Params::parse("0.8", "0.6", "2");
  BigReal lambda = BigReal::parse("2", P40);
  BigComplex a = laplace_lhs(p, lambda, real("3"), digits(12), nullptr, quadrature::Execution::serial);
  BigComplex b = laplace_lhs(p, lambda, real("3"), digits(12), nullptr, quadrature::Execution::parallel);
  CHECK(a == b);
}

TEST_CASE("complex s") {
  Params p = Params::parse("0.5", "1", "2");
  BigReal lambda = BigReal::parse("-1", P40);
  BigComplex s(BigReal::parse("2", P40), BigReal::parse("1.5", P40));
  CHECK(oracle::rel_log10(laplace_lhs(p, lambda, s, digits(12)), laplace_rhs(p, lambda, s, digits(20))) < -8);
}

TEST_CASE("Laplace argument checks") {
  Params p = Params::parse("1", "1", "2");
  BigReal lambda = BigReal::parse("1", P40);
  CHECK_THROWS_AS(laplace_lhs(p, lambda, real("0"), digits(10)), Error);
  CHECK_THROWS_AS(laplace_lhs(Params::parse("1", "1", "1"), lambda, real("2"), digits(10)), Error);
  CHECK_THROWS_AS(laplace_wright_form(Params::parse("1", "1", "2.5"), real("2"), digits(10)), Error);
  // e^t against e^{-t/2}
  try {
    laplace_plain_lhs(Params::parse("1", "1", "1"), real("0.5"), digits(10));
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergent);
    CHECK(std::string(e.what()) == "transform does not converge for given s");
  }
}
