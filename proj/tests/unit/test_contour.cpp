#include <cmath>

#include "../support/oracle.hpp"
#include "doctest.h"
#include "leroy/errors.hpp"
#include "leroy/leroy_series.hpp"
#include "leroy/mellin_barnes.hpp"
#include "leroy/numerics/gamma.hpp"

using namespace leroy;
using numerics::Precision;

namespace {

PrecisionConfig digits(int target) {
  PrecisionConfig pc;
  pc.target_digits = target;
  return pc;
}

const Precision P60 = Precision::from_digits(60);

BigComplex cplx(const char* re, const char* im) { return BigComplex(BigReal::parse(re, P60), BigReal::parse(im, P60)); }

Params params(const char* a, const char* b, const char* g) { return Params::parse(a, b, g); }

BigComplex series_oracle(const char* a, const char* b, const char* g, const char* re, const char* im, int terms) {
  auto [sr, si] = oracle::leroy_partial_sum_complex(mpq_class(Decimal::parse(a).rational()),
                                                    mpq_class(Decimal::parse(b).rational()),
                                                    mpq_class(Decimal::parse(g).rational()),
                                                    mpq_class(Decimal::parse(re).rational()),
                                                    mpq_class(Decimal::parse(im).rational()), 60, terms);
  return BigComplex(sr, si);
}

}  // namespace

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  Precision p = Precision::from_digits(40);
  auto rule = quadrature::gauss_legendre(7, p);
  for (int deg = 0; deg <= 13; ++deg) {
    BigReal s(p);
    for (std::size_t i = 0; i < 7; ++i) s += rule->weights[i] * numerics::pow(rule->nodes[i], BigReal(static_cast<long>(deg), p));
    BigReal exact = deg % 2 ? BigReal(p) : BigReal(2L, p) / static_cast<long>(deg + 1);
    CHECK(oracle::rel_log10(s, exact) < -38);
  }
}

TEST_CASE("quadrature of exp along a complex segment") {
  Precision p = Precision::from_digits(30);
  quadrature::Options opt;
  opt.precision = p;
  opt.tol_log10 = -25;
  BigComplex a(0.0, 0.0, p), b(1.0, 2.0, p);
  auto r = quadrature::integrate(quadrature::uniform_panels(a, b, 2), [](const BigComplex& s) { return numerics::exp(s); }, opt);
  CHECK(r.converged);
  BigComplex exact = numerics::exp(b) - BigComplex(BigReal(1L, p));
  CHECK(oracle::rel_log10(r.value, exact) < -24);
}

TEST_CASE("plus contour reproduces exp") {
  ContourReport rep;
  auto r = eval_contour_plus(params("1", "1", "1"), cplx("1", "0"), Contour::right_loop(), digits(14), &rep);
  BigReal e = numerics::exp(BigReal(1L, P60));
  CHECK(oracle::rel_log10(r.value, BigComplex(e)) < -12);
  CHECK(r.method == Method::contour);
  CHECK(rep.reach > 0);
}

TEST_CASE("plus contour against the series oracle") {
  auto r = eval_contour_plus(params("0.6", "0.8", "3"), cplx("2", "1"), Contour::right_loop(), digits(14));
  CHECK(oracle::rel_log10(r.value, series_oracle("0.6", "0.8", "3", "2", "1", 120)) < -10);
  // non-integer gamma
  auto q = eval_contour_plus(params("0.8", "1", "2.5"), cplx("0", "1"), Contour::right_loop(), digits(14));
  CHECK(oracle::rel_log10(q.value, series_oracle("0.8", "1", "2.5", "0", "1", 120)) < -10);
}

TEST_CASE("minus contour") {
  auto r = eval_contour_minus(params("1", "1", "1"), cplx("-1", "0"), Contour::left_loop(), digits(14));
  BigReal e = numerics::exp(BigReal(-1L, P60));
  CHECK(oracle::rel_log10(r.value, BigComplex(e)) < -10);

  auto q = eval_contour_minus(params("0.5", "0.75", "4"), cplx("-10", "0"), Contour::left_loop(), digits(12));
  BigReal ref = oracle::leroy_partial_sum_real(mpq_class(1, 2), mpq_class(3, 4), mpq_class(4), mpq_class(-10), 200,
                                               400);
  CHECK(oracle::rel_log10(q.value, BigComplex(ref)) < -8);
}

TEST_CASE("plus and minus contours agree off both cuts") {
  Params p = params("0.6", "0.8", "3");
  BigComplex z = cplx("-2", "2");
  auto a = eval_contour_plus(p, z, Contour::right_loop(), digits(12));
  auto b = eval_contour_minus(p, z, Contour::left_loop(), digits(12));
  CHECK(oracle::rel_log10(a.value, b.value) < -8);
}

TEST_CASE("extension contour") {
  auto r = eval_extension_contour(params("1", "1", "1"), cplx("2", "0"), Contour::left_loop(), digits(14));
  BigReal expect = 1L - numerics::exp(BigReal::parse("0.5", P60));
  CHECK(oracle::rel_log10(r.value, BigComplex(expect)) < -12);

  Params p = params("0.5", "0.75", "4");
  auto q = eval_extension_contour(p, cplx("3", "0"), Contour::left_loop(), digits(14));
  auto s = eval_extension(p, cplx("3", "0"), digits(40));
  CHECK(oracle::rel_log10(q.value, s.value) < -10);

  // E(z) + F(1/z) = Gamma(beta)^-gamma
  BigComplex z = cplx("5", "0");
  auto ext = eval_extension_contour(p, z, Contour::left_loop(), digits(12));
  auto f = eval_series(p, BigComplex(BigReal(1L, P60)) / z, digits(30));
  BigReal lead = numerics::exp(-(numerics::log_gamma_positive(BigReal::parse("0.75", P60), P60) * 4L));
  CHECK((ext.value - lead + f.value).log10_abs() < -8);
}

TEST_CASE("contour independence within the reported error") {
  Params p = params("0.6", "0.8", "3");
  BigComplex z = cplx("2", "1");
  auto base = eval_contour_plus(p, z, Contour::right_loop(), digits(12));
  Contour moved = Contour::right_loop();
  moved.c = 0.3;
  moved.phi1 = -0.7;
  moved.phi2 = 1.4;
  auto other = eval_contour_plus(p, z, moved, digits(12));
  BigReal bound = base.abs_err_estimate + other.abs_err_estimate;
  CHECK(abs(base.value - other.value) <= bound);

  ContourReport rep;
  eval_contour_plus(p, z, Contour::right_loop(), digits(12), &rep);
  Contour longer = Contour::right_loop();
  longer.reach = 2 * rep.reach;
  auto far = eval_contour_plus(p, z, longer, digits(12));
  CHECK(abs(base.value - far.value) <= base.abs_err_estimate + far.abs_err_estimate);
}

TEST_CASE("serial and parallel quadrature are bit-identical") {
  Params p = params("0.8", "1", "2.5");
  BigComplex z = cplx("0.5", "1.5");
  Contour a = Contour::right_loop(), b = Contour::right_loop();
  a.execution = quadrature::Execution::serial;
  b.execution = quadrature::Execution::parallel;
  auto ra = eval_contour_plus(p, z, a, digits(12));
  auto rb = eval_contour_plus(p, z, b, digits(12));
  CHECK(ra.value == rb.value);
}

TEST_CASE("residue bookkeeping") {
  Params p = params("0.6", "0.8", "3");
  ResidueCheck rc = residue_bookkeeping(p, cplx("2", "1"), 5, digits(12));
  CHECK(oracle::rel_log10(rc.residue_sum, rc.partial_sum) < -20);
  CHECK(oracle::rel_log10(rc.contour_difference, rc.partial_sum) < -8);
}

TEST_CASE("contour domains and arguments") {
  Params p = params("0.6", "0.8", "3");
  CHECK_THROWS_AS(eval_contour_plus(p, cplx("-3", "0"), Contour::right_loop(), digits(10)), Error);
  CHECK_THROWS_AS(eval_contour_plus(p, cplx("0", "0"), Contour::right_loop(), digits(10)), Error);
  CHECK_THROWS_AS(eval_contour_minus(p, cplx("3", "0"), Contour::left_loop(), digits(10)), Error);
  CHECK_THROWS_AS(eval_extension_contour(p, cplx("0", "0"), Contour::left_loop(), digits(10)), Error);
  Contour bad = Contour::right_loop();
  bad.c = 1.5;
  CHECK_THROWS_AS(eval_contour_plus(p, cplx("1", "0"), bad, digits(10)), Error);
  CHECK_THROWS_AS(eval_contour_plus(p, cplx("1", "0"), Contour::left_loop(), digits(10)), Error);
  Contour flat = Contour::left_loop();
  flat.phi1 = 0.1;
  CHECK_THROWS_AS(eval_contour_minus(p, cplx("-1", "0"), flat, digits(10)), Error);
  try {
    eval_contour_plus(p, cplx("-1", "0"), Contour::right_loop(), digits(10));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
}
