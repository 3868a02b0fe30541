// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <atomic>

#include "wpc/constructions.hpp"
#include "wpc/enumerate.hpp"
#include "wpc/parallel.hpp"
#include "wpc/spectrum.hpp"

namespace {

using namespace wpc;

const EnumFilter kDense9{.order = 9, .size_min = 18, .nonbipartite_only = true};

void BM_EnumerateSerial(benchmark::State& state) {
  const EnumFilter f{.order = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(f, [](const Graph&) {}));
}
BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateSharded(benchmark::State& state) {
  const EnumFilter f{.order = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    // building the plan walks the top of the tree, so it is timed too
    const ShardPlan plan(f);
    auto counts = map_shards<std::uint64_t>(plan, 0, [&](std::size_t s, std::uint64_t& out) {
      out = plan.run(s, [](const Graph&) {});
    });
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_EnumerateSharded)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

// The f(9) inner loop: existence of a weakly pancyclic vertex over a dense stratum.
void BM_WpScanSerial(benchmark::State& state) {
  for (auto _ : state) {
    const ShardPlan plan(kDense9);
    auto hits = map_shards_serial<std::uint64_t>(plan, [&](std::size_t s, std::uint64_t& out) {
      plan.run(s, [&](const Graph& g) { out += has_weakly_pancyclic_vertex(g); });
    });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_WpScanSerial)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_WpScanParallel(benchmark::State& state) {
  for (auto _ : state) {
    const ShardPlan plan(kDense9);
    auto hits = map_shards<std::uint64_t>(plan, 0, [&](std::size_t s, std::uint64_t& out) {
      plan.run(s, [&](const Graph& g) { out += has_weakly_pancyclic_vertex(g); });
    });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_WpScanParallel)->Unit(benchmark::kMillisecond)->Iterations(1)->UseRealTime();

void BM_CycleSpectrum(benchmark::State& state) {
  const Graph g = bt(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cycle_spectrum(g));
}
BENCHMARK(BM_CycleSpectrum)->Arg(9)->Arg(14)->Arg(20);

void BM_ClassifyPancyclicity(benchmark::State& state) {
  const Graph g = gn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_pancyclicity(g));
}
BENCHMARK(BM_ClassifyPancyclicity)->Arg(9)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
