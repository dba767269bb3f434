#include <benchmark/benchmark.h>

#include <numeric>

#include "cubicbh/circle.hpp"
#include "cubicbh/harness.hpp"
#include "cubicbh/singular.hpp"

using namespace cubicbh;

static void BM_Sieve(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    SieveTables s(n);
    benchmark::DoNotOptimize(s.primes().size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

static void BM_S2Sum(benchmark::State& state) {
  const u64 x = static_cast<u64>(state.range(0));
  const unsigned workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(s2_sum(0.6180339887, x, workers));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_S2Sum)->Args({10'000, 1})->Args({100'000, 1})->Args({100'000, 4});

static void BM_S1Sum(benchmark::State& state) {
  const u64 z = static_cast<u64>(state.range(0));
  const SieveTables sieve(z);
  for (auto _ : state) benchmark::DoNotOptimize(s1_sum(0.6180339887, z, sieve));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_S1Sum)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_SigmaQ(benchmark::State& state) {
  const u64 q = static_cast<u64>(state.range(0));
  std::vector<i64> ks(50);
  std::iota(ks.begin(), ks.end(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_q_batch(ks, q));
}
BENCHMARK(BM_SigmaQ)->Arg(91)->Arg(2989)->Arg(30'030);

static void BM_SigmaQDirect(benchmark::State& state) {
  const u64 q = static_cast<u64>(state.range(0));
  std::vector<i64> ks(50);
  std::iota(ks.begin(), ks.end(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_q_direct_batch(ks, q));
}
BENCHMARK(BM_SigmaQDirect)->Arg(91)->Arg(2989);

static void BM_SingularSeries(benchmark::State& state) {
  const u64 p_max = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singular_series(2, p_max).value);
}
BENCHMARK(BM_SingularSeries)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_SingularSeriesBatch(benchmark::State& state) {
  const i64 count = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(singular_series_range(1, count + 1, 100'000));
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_SingularSeriesBatch)->Arg(8000)->Arg(64'000)->Unit(benchmark::kMillisecond);

static void BM_SecondMoment(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.x = static_cast<u64>(state.range(0));
  cfg.y = cfg.x * cfg.x * cfg.x;
  cfg.p_max = 100'000;
  for (auto _ : state) benchmark::DoNotOptimize(second_moment(cfg).normalized_moment);
}
BENCHMARK(BM_SecondMoment)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
