// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "lian/harness.hpp"
#include "lian/theta_search.hpp"
#include "lian/urban_map.hpp"

namespace {

lian::Grid urban(int side) {
  lian::UrbanMapParams p;
  p.height = side;
  p.width = side;
  return lian::generate_urban_map(11, p);
}

void BM_ObstacleWeightsSerial(benchmark::State& state) {
  const lian::Grid g = urban(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lian::compute_obstacle_weights_serial(g, {}));
}

void BM_ObstacleWeightsParallel(benchmark::State& state) {
  const lian::Grid g = urban(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lian::compute_obstacle_weights(g, {}));
  state.counters["threads"] = omp_get_max_threads();
}

BENCHMARK(BM_ObstacleWeightsSerial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObstacleWeightsParallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

struct Suite {
  lian::MapSet maps;
  std::vector<lian::TaskSpec> tasks;
};

const Suite& suite() {
  static const Suite s = [] {
    Suite out;
    for (std::uint64_t k = 0; k < 4; ++k) {
      const std::string id = "m" + std::to_string(k);
      out.maps.emplace(id, urban(128));
      lian::TaskSampling ts;
      ts.count = 4;
      for (auto [a, b] : lian::sample_tasks(out.maps.at(id), 50 + k, ts)) out.tasks.push_back({id, a, b});
    }
    return out;
  }();
  return s;
}

void BM_SuiteSerial(benchmark::State& state) {
  lian::AlgorithmConfig cfg;
  lian::SuiteOptions opts;
  opts.cutoff_s = 10;
  for (auto _ : state) benchmark::DoNotOptimize(lian::run_suite_serial(suite().maps, suite().tasks, cfg, opts));
}

void BM_SuiteParallel(benchmark::State& state) {
  lian::AlgorithmConfig cfg;
  lian::SuiteOptions opts;
  opts.cutoff_s = 10;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lian::run_suite(suite().maps, suite().tasks, cfg, opts));
}

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
