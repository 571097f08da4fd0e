// Copyright 2026 The metdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "metdim/characterize.hpp"
#include "metdim/distance.hpp"
#include "metdim/enumerate.hpp"
#include "metdim/extremal.hpp"
#include "metdim/families.hpp"
#include "metdim/graph.hpp"
#include "metdim/metric.hpp"

namespace {

using namespace metdim;

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    b.add_edge(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

void BM_AllPairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 4.0 / static_cast<double>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairs)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_MetricDimension(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 0.15, 2);
  const DistanceMatrix dm(g);
  for (auto _ : state) benchmark::DoNotOptimize(metric_dimension(g, dm));
}
BENCHMARK(BM_MetricDimension)->DenseRange(10, 30, 5)->Unit(benchmark::kMicrosecond);

void BM_MetricDimensionJobs(benchmark::State& state) {
  const Graph g = random_graph(40, 0.1, 3);
  const DistanceMatrix dm(g);
  const SolverOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(metric_dimension(g, dm, opts));
}
BENCHMARK(BM_MetricDimensionJobs)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_dimension(g));
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);

void BM_ConnectedGraphs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(n));
}
BENCHMARK(BM_ConnectedGraphs)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? petersen_graph() : random_graph(10, 0.4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(0)->Arg(1);

void BM_DecideMinOrder(benchmark::State& state) {
  const Graph g = build_broom(4, static_cast<Distance>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_min_order(g));
}
BENCHMARK(BM_DecideMinOrder)->Arg(5)->Arg(50);

void BM_VerifyCharacterization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_characterization(n));
}
BENCHMARK(BM_VerifyCharacterization)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_BuildMaxGraph(benchmark::State& state) {
  const auto beta = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<Distance>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_max_graph(beta, d));
}
BENCHMARK(BM_BuildMaxGraph)
    ->Args({2, 6})
    ->Args({3, 6})
    ->Args({4, 9})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
