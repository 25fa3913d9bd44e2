// Copyright 2026 The bptol Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "bptol/random_graph.hpp"
#include "bptol/replacement_edges.hpp"
#include "bptol/spanning_tree.hpp"
#include "bptol/tolerance_oracle.hpp"
#include "bptol/tree_index.hpp"

namespace bptol {
namespace {

constexpr std::size_t kVertices = 100'000;

CapacitatedGraph make_graph(std::size_t m) {
  std::mt19937_64 rng(7);
  return random_connected_graph(kVertices, m, rng);
}

void BM_Preprocess(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(11);
  const auto pairs = random_pairs(kVertices, 1000, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ToleranceOracle::preprocess(graph, pairs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Preprocess)->Arg(250'000)->Arg(500'000)->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_MaxSpanningTree(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_max_spanning_tree(graph));
}
BENCHMARK(BM_MaxSpanningTree)->Arg(500'000)->Unit(benchmark::kMillisecond);

void BM_Replacements(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  const auto tree = build_max_spanning_tree(graph);
  const RootedTreeIndex index(graph, tree);
  for (auto _ : state) benchmark::DoNotOptimize(compute_replacements(graph, tree, index));
}
BENCHMARK(BM_Replacements)->Arg(500'000)->Unit(benchmark::kMillisecond);

// Per-edge query over k pairs; should not grow with m.
void BM_QueryEdge(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(13);
  const auto oracle = ToleranceOracle::preprocess(make_graph(m), random_pairs(kVertices, k, rng));
  std::vector<EdgeTolerances> out(k);
  std::uint32_t e = 0;
  for (auto _ : state) {
    oracle.query_edge(EdgeId{e}, out);
    benchmark::DoNotOptimize(out.data());
    e = (e + 7919) % static_cast<std::uint32_t>(m);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_QueryEdge)
    ->Args({250'000, 1000})
    ->Args({500'000, 1000})
    ->Args({1'000'000, 1000})
    ->Args({500'000, 100});

}  // namespace
}  // namespace bptol

BENCHMARK_MAIN();
