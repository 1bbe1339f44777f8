#include <benchmark/benchmark.h>

#include "leroy/laplace.hpp"
#include "leroy/mellin_barnes.hpp"

using namespace leroy;

namespace {

PrecisionConfig digits(int target) {
  PrecisionConfig pc;
  pc.target_digits = target;
  return pc;
}

quadrature::Execution mode(const benchmark::State& state) {
  return state.range(0) ? quadrature::Execution::parallel : quadrature::Execution::serial;
}

void BM_ContourPlus(benchmark::State& state) {
  Params p = Params::parse("0.6", "0.8", "3");
  BigComplex z(2.0, 1.0, Precision::from_digits(40));
  Contour c = Contour::right_loop();
  c.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(eval_contour_plus(p, z, c, digits(static_cast<int>(state.range(1)))));
}
BENCHMARK(BM_ContourPlus)->ArgNames({"parallel", "digits"})->Args({0, 12})->Args({1, 12})->Args({0, 30})->Args({1, 30})
    ->Unit(benchmark::kMillisecond);

void BM_LaplaceLhs(benchmark::State& state) {
  Params p = Params::parse("0.8", "0.6", "2");
  const Precision wp = Precision::from_digits(40);
  BigReal lambda(2L, wp);
  BigComplex s(BigReal(3L, wp));
  for (auto _ : state) benchmark::DoNotOptimize(laplace_lhs(p, lambda, s, digits(12), nullptr, mode(state)));
}
BENCHMARK(BM_LaplaceLhs)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GaussLegendreRule(benchmark::State& state) {
  // cold rule construction at a fresh precision each pass is what the cache saves
  int bits = 256;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature::gauss_legendre(static_cast<int>(state.range(0)), Precision{bits}));
    bits += 64;
  }
}
BENCHMARK(BM_GaussLegendreRule)->Arg(24)->Arg(64)->Iterations(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
