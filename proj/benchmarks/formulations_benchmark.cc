// Copyright 2026 The extform Authors.
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

#include <vector>

#include "extform/formulations/disjunctive.h"
#include "extform/formulations/flows.h"
#include "extform/formulations/gomory_hu.h"
#include "extform/formulations/trees.h"
#include "extform/graphs/algorithms.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/simplex.h"
#include "extform/verify/random_instances.h"

namespace extform {
namespace {

graphs::Graph BenchGraph(int n, std::uint64_t seed = 1) {
  verify::Rng rng(seed);
  verify::GraphOptions options;
  options.num_nodes = n;
  return verify::RandomConnectedGraph(rng, options);
}

void BM_HullSolve(benchmark::State& state) {
  verify::Rng rng(7);
  const verify::HullInstance instance = verify::RandomHullInstance(rng);
  const formulations::FormulationHandle h =
      formulations::BuildBalasHull(instance.polys, instance.w, instance.sense);
  for (auto _ : state) benchmark::DoNotOptimize(ratlp::Solve(h.model));
}
BENCHMARK(BM_HullSolve);

void BM_TreeExtensionSolve(benchmark::State& state) {
  const graphs::Graph g = BenchGraph(static_cast<int>(state.range(0)));
  const formulations::FormulationHandle h = formulations::BuildTreeExtension(g);
  for (auto _ : state) benchmark::DoNotOptimize(ratlp::Solve(h.model));
  state.counters["rows"] = h.model.num_constraints();
}
BENCHMARK(BM_TreeExtensionSolve)->DenseRange(3, 7, 2);

void BM_ArborescenceSolve(benchmark::State& state) {
  const graphs::Graph g = BenchGraph(static_cast<int>(state.range(0)));
  const formulations::FormulationHandle h =
      formulations::BuildArborescenceExtension(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(ratlp::Solve(h.model));
  state.counters["rows"] = h.model.num_constraints();
}
BENCHMARK(BM_ArborescenceSolve)->DenseRange(3, 7, 2);

void BM_SteinerSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const graphs::Graph g = BenchGraph(n);
  const std::vector<int> terminals = {0, 1, n - 1};
  const formulations::FormulationHandle h =
      formulations::BuildSteinerApprox(g, terminals);
  for (auto _ : state) benchmark::DoNotOptimize(ratlp::Solve(h.model));
  state.counters["rows"] = h.model.num_constraints();
}
BENCHMARK(BM_SteinerSolve)->DenseRange(4, 8, 2);

void BM_GomoryHuSolve(benchmark::State& state) {
  const graphs::Graph g = BenchGraph(static_cast<int>(state.range(0)));
  const formulations::FormulationHandle h = formulations::BuildGomoryHuLp(g);
  for (auto _ : state) benchmark::DoNotOptimize(formulations::SolveGomoryHuLp(h));
  state.counters["rows"] = h.model.num_constraints();
}
BENCHMARK(BM_GomoryHuSolve)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

void BM_TCutBuild(benchmark::State& state) {
  const graphs::Graph g = BenchGraph(static_cast<int>(state.range(0)));
  const std::vector<int> terminals = {0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(formulations::BuildTCutLp(g, terminals));
  }
}
BENCHMARK(BM_TCutBuild)->DenseRange(3, 4, 1)->Unit(benchmark::kMillisecond);

void BM_KruskalOracle(benchmark::State& state) {
  const graphs::Graph g = BenchGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graphs::Kruskal(g));
}
BENCHMARK(BM_KruskalOracle)->Arg(7)->Arg(20);

void BM_GusfieldOracle(benchmark::State& state) {
  const graphs::Graph g = BenchGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graphs::GusfieldTree(g));
}
BENCHMARK(BM_GusfieldOracle)->Arg(6)->Arg(20);

}  // namespace
}  // namespace extform

BENCHMARK_MAIN();
