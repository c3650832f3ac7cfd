#include <benchmark/benchmark.h>

#include "hhverify/harness.hpp"
#include "hhverify/sampling.hpp"

using namespace hhverify;

static void BM_SpectralDecompose(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto a = random_hermitian(dim, {0, 1}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
}
BENCHMARK(BM_SpectralDecompose)->RangeMultiplier(2)->Range(1, 32);

static void BM_RandomHermitian(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_hermitian(dim, {0, 1}, ++seed));
}
BENCHMARK(BM_RandomHermitian)->RangeMultiplier(2)->Range(1, 32);

static void BM_OperatorIntegral(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto a = random_hermitian(dim, {0.5, 2}, 1);
  const auto b = random_hermitian(dim, {0.5, 2}, 2);
  const auto f = find_function("xlogx");
  for (auto _ : state) benchmark::DoNotOptimize(integrate_operator_segment(f, a, b));
}
BENCHMARK(BM_OperatorIntegral)->RangeMultiplier(2)->Range(1, 16);

static void BM_PairContext(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto a = random_hermitian(dim, {0, 1}, 1);
  const auto b = random_hermitian(dim, {0, 1}, 2);
  const auto f = find_function("identity");
  const auto g = find_function("square");
  for (auto _ : state) benchmark::DoNotOptimize(PairContext(f, g, a, b));
}
BENCHMARK(BM_PairContext)->RangeMultiplier(2)->Range(1, 16);

static void BM_ProbeChecks(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const PairContext ctx(find_function("identity"), find_function("square"), random_hermitian(dim, {0, 1}, 1),
                        random_hermitian(dim, {0, 1}, 2));
  const auto x = random_unit_vector(dim, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_product_upper(ctx, x));
    benchmark::DoNotOptimize(check_midpoint_product(ctx, x));
    benchmark::DoNotOptimize(check_cross_product(ctx, x));
  }
}
BENCHMARK(BM_ProbeChecks)->RangeMultiplier(2)->Range(1, 16);

static void BM_SmallSuite(benchmark::State& state) {
  SuiteConfig c;
  c.suites = {"all"};
  c.dims = {2, 4};
  c.trials = 2;
  c.probes = 4;
  c.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(c));
}
BENCHMARK(BM_SmallSuite)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
