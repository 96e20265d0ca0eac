#include <benchmark/benchmark.h>

#include <nonsin/spectrum.hpp>

namespace {

void BM_ComputeSpectrumSmooth(benchmark::State& state) {
  auto f = nonsin::PiecewiseFunction::from_text("P[-1|x^2|1]");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonsin::compute_spectrum(f, n));
  }
}
BENCHMARK(BM_ComputeSpectrumSmooth)->Arg(8)->Arg(32)->Arg(128);

void BM_ComputeSpectrumDiscontinuous(benchmark::State& state) {
  auto f = nonsin::PiecewiseFunction::from_text("P[-1|-1|0|1|1]");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonsin::compute_spectrum(f, n));
  }
}
BENCHMARK(BM_ComputeSpectrumDiscontinuous)->Arg(8)->Arg(32)->Arg(128);

}  // namespace
