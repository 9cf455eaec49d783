// Copyright 2026 The kempe Authors
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

#include "kempe/kempe.hpp"

namespace {

using namespace kempe;

void BM_ChromaticIndexPetersen(benchmark::State& state) {
  const Multigraph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_index(g).chi);
}
BENCHMARK(BM_ChromaticIndexPetersen);

void BM_MaxSubgraphFatCycle(benchmark::State& state) {
  const Multigraph g = fat_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_delta_subgraph(g).size);
  state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_MaxSubgraphFatCycle)->DenseRange(1, 3);

void BM_MaxSubgraphChain(benchmark::State& state) {
  const Multigraph g = hr_chain(1);
  for (auto _ : state) benchmark::DoNotOptimize(max_delta_subgraph(g).size);
}
BENCHMARK(BM_MaxSubgraphChain);

void BM_RPrimePetersen(benchmark::State& state) {
  const Multigraph g = petersen();
  const auto chi = chromatic_index(g);
  for (auto _ : state) benchmark::DoNotOptimize(r_prime(g, chi));
}
BENCHMARK(BM_RPrimePetersen);

void BM_ExtendTwoFactors(benchmark::State& state) {
  const Multigraph g = petersen();
  const auto cert = max_delta_subgraph(g);
  const auto factors = two_factors(g);
  for (auto _ : state) {
    for (const auto& f : factors) benchmark::DoNotOptimize(extend_two_factor(g, f, cert).size);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(factors.size()));
}
BENCHMARK(BM_ExtendTwoFactors);

void BM_AssignCyclesFatCycle(benchmark::State& state) {
  const Multigraph g = fat_cycle(3);
  const auto cert = max_delta_subgraph(g);
  for (auto _ : state) benchmark::DoNotOptimize(assign_disjoint_cycles(g, cert).entries.size());
}
BENCHMARK(BM_AssignCyclesFatCycle);

void BM_CutConditionChain(benchmark::State& state) {
  const Multigraph g = hr_chain(1);
  const auto cert = max_delta_subgraph(g);
  for (auto _ : state) benchmark::DoNotOptimize(check_cut_condition(g, cert).outcome);
}
BENCHMARK(BM_CutConditionChain)->Unit(benchmark::kMillisecond);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(n, 1).size());
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
