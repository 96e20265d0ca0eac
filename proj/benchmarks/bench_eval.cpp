#include <benchmark/benchmark.h>

#include <nonsin/analysis.hpp>
#include <nonsin/quasisin.hpp>

namespace {

void BM_EvalPeriodic(benchmark::State& state) {
  auto f = nonsin::PiecewiseFunction::from_text("P[-1|-1|-1/2|1|1/2|-1|1]");
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval_periodic(x));
    x += 0.37;
  }
}
BENCHMARK(BM_EvalPeriodic);

void BM_PartialSum(benchmark::State& state) {
  auto x2 = nonsin::PiecewiseFunction::from_text("P[-1|x^2|1]");
  auto tri = nonsin::PiecewiseFunction::from_text("P[-1|-x-1/2|0|x-1/2|1]");
  const int n = static_cast<int>(state.range(0));
  auto basis = nonsin::GeneratorBasis::from_piecewise(tri, std::nullopt, n);
  auto s = nonsin::expand_even(nonsin::compute_spectrum(x2, n), basis, n);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonsin::eval_partial_sum(s, n, x));
    x += 0.013;
  }
}
BENCHMARK(BM_PartialSum)->Arg(8)->Arg(32)->Arg(64);

void BM_GramSchmidt(benchmark::State& state) {
  nonsin::Generator gen;
  auto fn = nonsin::PiecewiseFunction::from_text("P[-1|-1|0|1|1]");
  gen.spec = nonsin::compute_spectrum(fn, 64);
  gen.mean = 0.0;
  gen.fn = fn;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonsin::gram_schmidt(gen, nonsin::Parity::Odd, n));
  }
}
BENCHMARK(BM_GramSchmidt)->Arg(4)->Arg(8);

}  // namespace
