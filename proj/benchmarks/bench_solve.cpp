#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <nonsin/convert.hpp>

namespace {

std::vector<double> random_sequence(int n, std::uint64_t seed, bool generator) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = unit(rng);
  if (generator) v[0] = 1.0 + std::abs(v[0]);
  return v;
}

void BM_DirichletSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> target = random_sequence(n, 1, false);
  std::vector<double> gen = random_sequence(n, 2, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonsin::dirichlet_solve(target, gen, n));
  }
}
BENCHMARK(BM_DirichletSolve)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_DirichletConvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> a = random_sequence(n, 3, false);
  std::vector<double> gen = random_sequence(n, 4, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonsin::dirichlet_convolve(a, gen, n));
  }
}
BENCHMARK(BM_DirichletConvolve)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
