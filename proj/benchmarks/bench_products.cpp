#include <benchmark/benchmark.h>

#include "qhf/cli.hpp"
#include "qhf/fusion_ring.hpp"
#include "qhf/qh_ring.hpp"

namespace {

using namespace qhf;

void BM_QHProduct(benchmark::State& state) {
  const auto alg = kExactGWAlgorithms[state.range(0)];
  state.SetLabel(std::string(to_string(alg)));
  for (auto _ : state) benchmark::DoNotOptimize(qh_product({2, 2, 1}, {3, 3, 2, 1}, Box(4, 3), alg));
}
BENCHMARK(BM_QHProduct)->DenseRange(0, std::size(kExactGWAlgorithms) - 1);

void BM_QHProductBVI(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qh_product({2, 2, 1}, {3, 3, 2, 1}, Box(4, 3), GWAlgorithm::bvi));
}
BENCHMARK(BM_QHProductBVI);

void BM_FusionProduct(benchmark::State& state) {
  const auto alg = kExactFusionAlgorithms[state.range(0)];
  state.SetLabel(std::string(to_string(alg)));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_product({3, 1}, {3, 2}, FusionLevel(3, 4), alg));
}
BENCHMARK(BM_FusionProduct)->DenseRange(0, std::size(kExactFusionAlgorithms) - 1);

void BM_Verlinde(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verlinde_numeric({3, 1}, {3, 2}, {2, 1}, FusionLevel(3, 4)));
}
BENCHMARK(BM_Verlinde);

void BM_Verify(benchmark::State& state) {
  cli::VerifyOptions opts;
  opts.max_sites = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::verify(opts));
}
BENCHMARK(BM_Verify)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
