#include <benchmark/benchmark.h>

#include "dmimo/schemes.hpp"
#include "dmimo/waterfill.hpp"
#include "sweep.hpp"

using namespace dmimo;

static void BM_WaterfillPartialBand(benchmark::State& state) {
  const auto d = SnrDensity::plain(ChannelSpec::from_alpha2(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(waterfill(d, 10.0).rate);
}
BENCHMARK(BM_WaterfillPartialBand);

static void BM_WaterfillNearNull(benchmark::State& state) {
  const auto d = SnrDensity::plain(ChannelSpec(0.999));
  for (auto _ : state) benchmark::DoNotOptimize(waterfill(d, 1.0).rate);
}
BENCHMARK(BM_WaterfillNearNull);

static void BM_RateDc(benchmark::State& state) {
  const auto spec = ChannelSpec::from_alpha2(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(rate_dc(spec, {10.0, kUnlimited, 4.0}).rate);
}
BENCHMARK(BM_RateDc);

static void BM_RateQwDc(benchmark::State& state) {
  const auto spec = ChannelSpec::from_alpha2(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(rate_qw_dc(spec, {10.0, 4.0, 4.0}).rate);
}
BENCHMARK(BM_RateQwDc);

static void BM_Figure2(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::figure2_rows(threads).size());
}
BENCHMARK(BM_Figure2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
