#include <benchmark/benchmark.h>

#include "mre/closedform.hpp"
#include "mre/decomp.hpp"

using namespace mre;

static void BM_hermitian_eigensystem(benchmark::State& state) {
  CMatrix m = werner(0.37).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(m));
}
BENCHMARK(BM_hermitian_eigensystem);

static void BM_relative_entropy(benchmark::State& state) {
  DensityMatrix rho = werner(0.8);
  DensityMatrix sigma = werner_relative_state(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(relative_entropy(rho, sigma));
}
BENCHMARK(BM_relative_entropy);

static void BM_relative_state_pure(benchmark::State& state) {
  Eigen::Vector4cd v;
  v << 0.6, Complex(0.1, 0.3), 0.2, Complex(0.5, -0.3);
  PureState psi{v.normalized()};
  for (auto _ : state) benchmark::DoNotOptimize(relative_state_pure(psi));
}
BENCHMARK(BM_relative_state_pure);

static void BM_mre_of_decomposition(benchmark::State& state) {
  DensityMatrix rho = werner(0.6);
  Decomposition d = werner_ensemble(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(mre_of_decomposition(rho, d));
}
BENCHMARK(BM_mre_of_decomposition);

static void BM_wootters_ensemble(benchmark::State& state) {
  DensityMatrix rho = werner(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(wootters_ensemble(rho));
}
BENCHMARK(BM_wootters_ensemble);

static void BM_optimize_mre_small(benchmark::State& state) {
  DensityMatrix rho = werner(0.6);
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iterations = 100;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_mre(rho, cfg));
}
BENCHMARK(BM_optimize_mre_small)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
