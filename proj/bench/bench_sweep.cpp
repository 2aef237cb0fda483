// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "reed/corpus.hpp"
#include "reed/patterns.hpp"

using namespace reed;

namespace {

const std::vector<Graph>& corpus8() {
  static const auto graphs = enumerate_graphs(8);
  return graphs;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto family = named_family("p5-flagc");
  SweepOptions options;
  options.audit = state.range(0) != 0;
  const auto& graphs = corpus8();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_serial(graphs, family, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus8().size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto family = named_family("p5-flagc");
  SweepOptions options;
  options.audit = state.range(0) != 0;
  options.workers = static_cast<int>(state.range(1));
  const auto& graphs = corpus8();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_parallel(graphs, family, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus8().size()));
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(state.range(0))));
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_graphs_parallel(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}

} // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->ArgsProduct({{0, 1}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{7, 8}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
