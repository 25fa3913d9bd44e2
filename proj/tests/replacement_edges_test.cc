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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "bptol/fixtures.hpp"
#include "bptol/reference_oracle.hpp"
#include "bptol/replacement_edges.hpp"
#include "test_util.hpp"

namespace bptol {
namespace {

using testing::edge_id;
using Table = std::vector<std::optional<EdgeId>>;

struct Built {
  CapacitatedGraph graph;
  SpanningTree tree;
  RootedTreeIndex index;
  ReplacementTables tables;
};

Built build(CapacitatedGraph g) {
  auto tree = build_max_spanning_tree(g);
  RootedTreeIndex idx(g, tree);
  auto tables = compute_replacements(g, tree, idx);
  return {std::move(g), std::move(tree), std::move(idx), std::move(tables)};
}

TEST(ReplacementEdgesTest, Triangle) {
  const auto b = build(fixtures::triangle());
  const Table upper{std::nullopt, std::nullopt, edge_id(2)};
  const Table lower{edge_id(3), edge_id(3), std::nullopt};
  EXPECT_EQ(b.tables.upper, upper);
  EXPECT_EQ(b.tables.lower, lower);
  EXPECT_EQ(reference::naive_upper_replacements(b.graph, b.tree.edges), upper);
  EXPECT_EQ(reference::naive_lower_replacements(b.graph, b.tree.edges), lower);
}

TEST(ReplacementEdgesTest, Diamond) {
  const auto b = build(fixtures::diamond());
  const Table upper{std::nullopt, std::nullopt, std::nullopt, edge_id(2), edge_id(3)};
  const Table lower{edge_id(4), edge_id(4), edge_id(5), std::nullopt, std::nullopt};
  EXPECT_EQ(b.tables.upper, upper);
  EXPECT_EQ(b.tables.lower, lower);
  EXPECT_EQ(reference::naive_upper_replacements(b.graph, b.tree.edges), upper);
  EXPECT_EQ(reference::naive_lower_replacements(b.graph, b.tree.edges), lower);
}

TEST(ReplacementEdgesTest, TreeInputHasNoReplacements) {
  std::mt19937_64 rng(8);
  const auto b = build(random_connected_graph(25, 24, rng));
  EXPECT_TRUE(std::all_of(b.tables.upper.begin(), b.tables.upper.end(),
                          [](const auto& x) { return !x; }));
  EXPECT_TRUE(std::all_of(b.tables.lower.begin(), b.tables.lower.end(),
                          [](const auto& x) { return !x; }));
}

TEST(ReplacementEdgesTest, PathGraphEdgesAreBridges) {
  const auto b = build(CapacitatedGraph(3, {testing::edge(1, 2, 4), testing::edge(2, 3, 9)}));
  EXPECT_EQ(b.tables.lower, (Table{std::nullopt, std::nullopt}));
}

TEST(ReplacementEdgesPropertyTest, MatchNaiveDefinitions) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const auto b = build(testing::random_small_graph(rng, 2, 8));
    ASSERT_EQ(b.tables.upper, reference::naive_upper_replacements(b.graph, b.tree.edges))
        << serialize(b.graph);
    ASSERT_EQ(b.tables.lower, reference::naive_lower_replacements(b.graph, b.tree.edges))
        << serialize(b.graph);
  }
}

TEST(ReplacementEdgesPropertyTest, MatchNaiveDefinitionsOnLargerGraphs) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 20 + uniform_below(rng, 60);
    const std::size_t m = (n - 1) + uniform_below(rng, 3 * n);
    const auto b = build(random_connected_graph(n, m, rng));
    ASSERT_EQ(b.tables.upper, reference::naive_upper_replacements(b.graph, b.tree.edges));
    ASSERT_EQ(b.tables.lower, reference::naive_lower_replacements(b.graph, b.tree.edges));
  }
}

// Each tree edge is contracted at most once, and exactly the covered ones are.
TEST(ReplacementEdgesPropertyTest, WalkContractsEachTreeEdgeOnce) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 40);
    const std::size_t max_m = n * (n - 1) / 2;
    const std::size_t m = (n - 1) + uniform_below(rng, std::min<std::size_t>(max_m - n + 2, 3 * n));
    const auto g = random_connected_graph(n, m, rng);
    const auto tree = build_max_spanning_tree(g);
    const RootedTreeIndex idx(g, tree);
    LowerWalkStats stats;
    const auto lower = compute_lower_replacements(g, tree, idx, &stats);
    const auto assigned = static_cast<std::size_t>(
        std::count_if(lower.begin(), lower.end(), [](const auto& x) { return x.has_value(); }));
    ASSERT_EQ(stats.contractions, assigned);
    ASSERT_LE(stats.contractions, n - 1);
    ASSERT_LE(stats.half_edges, 2 * (m - (n - 1)));
  }
}

Capacity total(const CapacitatedGraph& g, const std::vector<EdgeId>& edges) {
  Capacity sum = 0;
  for (EdgeId e : edges) sum += g.capacity(e);
  return sum;
}

bool contains(const std::vector<EdgeId>& edges, EdgeId e) {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

// Swapping an edge with its replacement gives the best spanning tree that
// contains (non-tree edge) or avoids (tree edge) it.
TEST(ReplacementEdgesPropertyTest, ExchangeProperty) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = build(testing::random_small_graph(rng, 2, 6));
    const auto& g = b.graph;
    const auto trees = reference::enumerate_spanning_trees(g);
    for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
      const EdgeId e{i};
      auto swapped = b.tree.edges;
      bool want_member = false;
      if (b.tree.contains(e)) {
        const auto& replacement = b.tables.lower[i];
        if (!replacement) {
          // Bridge: every spanning tree uses it.
          for (const auto& t : trees) ASSERT_TRUE(contains(t, e));
          continue;
        }
        std::replace(swapped.begin(), swapped.end(), e, *replacement);
      } else {
        const EdgeId replacement = *b.tables.upper[i];
        std::replace(swapped.begin(), swapped.end(), replacement, e);
        want_member = true;
      }
      std::sort(swapped.begin(), swapped.end());
      ASSERT_TRUE(std::find(trees.begin(), trees.end(), swapped) != trees.end())
          << "swap is not a spanning tree\n" << serialize(g);
      Capacity best = INT64_MIN;
      for (const auto& t : trees) {
        if (contains(t, e) == want_member) best = std::max(best, total(g, t));
      }
      ASSERT_EQ(total(g, swapped), best) << serialize(g);
    }
  }
}

}  // namespace
}  // namespace bptol
