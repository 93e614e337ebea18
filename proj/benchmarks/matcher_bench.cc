#include <benchmark/benchmark.h>

#include <map>

#include "pmlg/bench.hpp"
#include "pmlg/matcher.hpp"
#include "pmlg/reduction.hpp"
#include "pmlg/transform.hpp"

namespace {

const pmlg::ReductionArtifacts& cached_instance(int n, int k, bool satisfiable) {
  static std::map<std::tuple<int, int, bool>, pmlg::ReductionArtifacts> cache;
  auto key = std::make_tuple(n, k, satisfiable);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, pmlg::build_full_graph(pmlg::bench_formula(n, k, satisfiable))).first;
  }
  return it->second;
}

void BM_MatchExactBase(benchmark::State& state) {
  const auto& art = cached_instance(static_cast<int>(state.range(0)), 8, state.range(1) == 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmlg::match_exact(art.graph, art.pattern));
  }
  state.counters["m"] = static_cast<double>(art.stats.m);
  state.counters["edges"] = static_cast<double>(art.stats.edges);
}
BENCHMARK(BM_MatchExactBase)
    ->ArgsProduct({{8, 10, 12, 14}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_BuildFullGraph(benchmark::State& state) {
  const pmlg::CnfFormula f =
      pmlg::bench_formula(static_cast<int>(state.range(0)), 8, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmlg::build_full_graph(f));
  }
}
BENCHMARK(BM_BuildFullGraph)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_TransformPipeline(benchmark::State& state) {
  const auto& base = cached_instance(static_cast<int>(state.range(0)), 8, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmlg::orient_dag(pmlg::encode_binary(pmlg::to_degree3(base))));
  }
}
BENCHMARK(BM_TransformPipeline)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
