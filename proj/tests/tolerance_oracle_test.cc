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
#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "bptol/error.hpp"
#include "bptol/fixtures.hpp"
#include "bptol/reference_oracle.hpp"
#include "bptol/tolerance_oracle.hpp"
#include "test_util.hpp"

namespace bptol {
namespace {

using testing::edge_id;
using testing::vertex;

const Tolerance kInf = Tolerance::infinite();
Tolerance fin(Capacity v) { return Tolerance::finite(v); }

QueryPair pair(std::uint32_t s, std::uint32_t t) { return {vertex(s), vertex(t)}; }

TEST(ToleranceTest, Basics) {
  EXPECT_TRUE(kInf.is_infinite());
  EXPECT_EQ(kInf.to_string(), "inf");
  EXPECT_EQ(fin(-3).to_string(), "-3");
  EXPECT_EQ(fin(2).value(), 2);
  EXPECT_NE(fin(0), kInf);
}

TEST(ToleranceOracleTest, TrianglePairOneThree) {
  const auto oracle = ToleranceOracle::preprocess(fixtures::triangle(), {pair(1, 3)});
  EXPECT_EQ(oracle.bottleneck_value(0), 3);
  EXPECT_EQ(oracle.context(0).bottleneck_edge, edge_id(2));
  EXPECT_EQ(oracle.query_edge(edge_id(1)), (std::vector<EdgeTolerances>{{fin(4), kInf}}));
  EXPECT_EQ(oracle.query_edge(edge_id(2)), (std::vector<EdgeTolerances>{{fin(2), kInf}}));
  EXPECT_EQ(oracle.query_edge(edge_id(3)), (std::vector<EdgeTolerances>{{kInf, fin(2)}}));
}

TEST(ToleranceOracleTest, DiamondPairOneFour) {
  const auto oracle = ToleranceOracle::preprocess(fixtures::diamond(), {pair(1, 4)});
  EXPECT_EQ(oracle.bottleneck_value(0), 6);
  const std::vector<EdgeTolerances> expected{
      {fin(6), kInf},  // f1: best path avoiding it is 1-3-4 at 4
      {fin(4), kInf},  // f2
      {fin(4), kInf},  // f3: 1-2-4 and 1-3-2-4 both bottleneck at 2
      {kInf, kInf},    // f4
      {kInf, fin(4)},  // f5
  };
  for (std::uint32_t e = 1; e <= 5; ++e) {
    EXPECT_EQ(oracle.query_edge_for_pair(edge_id(e), 0),
              reference::brute_tolerances(oracle.graph(), vertex(1), vertex(4), edge_id(e)))
        << "f" << e;
  }
  for (std::uint32_t e = 1; e <= 5; ++e) {
    EXPECT_EQ(oracle.query_edge_for_pair(edge_id(e), 0), expected[e - 1]) << "f" << e;
  }
}

TEST(ToleranceOracleTest, MultiplePairsAndDuplicates) {
  const auto g = fixtures::diamond();
  const auto oracle = ToleranceOracle::preprocess(g, {pair(1, 4), pair(2, 3), pair(1, 4)});
  ASSERT_EQ(oracle.pair_count(), 3u);
  EXPECT_EQ(oracle.bottleneck_value(1), 8);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const auto answers = oracle.query_edge(EdgeId{e});
    EXPECT_EQ(answers[0], answers[2]);
    EXPECT_EQ(answers[1], reference::brute_tolerances(g, vertex(2), vertex(3), EdgeId{e}));
  }
}

TEST(ToleranceOracleTest, BottleneckValues) {
  EXPECT_EQ(ToleranceOracle::preprocess(fixtures::diamond(), {pair(4, 1)}).bottleneck_value(0), 6);
  EXPECT_EQ(ToleranceOracle::preprocess(fixtures::single_edge(), {pair(1, 2)}).bottleneck_value(0),
            7);
  EXPECT_EQ(ToleranceOracle::preprocess(fixtures::triangle(), {pair(1, 2)}).bottleneck_value(0), 5);
}

TEST(ToleranceOracleTest, SingleEdgeIsABridge) {
  const auto oracle = ToleranceOracle::preprocess(fixtures::single_edge(), {pair(1, 2)});
  EXPECT_EQ(oracle.query_edge_for_pair(edge_id(1), 0), (EdgeTolerances{kInf, kInf}));
}

TEST(ToleranceOracleTest, NoPairs) {
  const auto oracle = ToleranceOracle::preprocess(fixtures::triangle(), {});
  EXPECT_EQ(oracle.pair_count(), 0u);
  EXPECT_TRUE(oracle.query_edge(edge_id(1)).empty());
}

TEST(ToleranceOracleTest, RejectsBadInput) {
  EXPECT_THROW(ToleranceOracle::preprocess(fixtures::triangle(), {pair(2, 2)}), UsageError);
  EXPECT_THROW(ToleranceOracle::preprocess(fixtures::triangle(), {pair(1, 4)}), UsageError);
  const auto oracle = ToleranceOracle::preprocess(fixtures::triangle(), {pair(1, 3)});
  EXPECT_THROW(oracle.query_edge_for_pair(edge_id(4), 0), UsageError);
  EXPECT_THROW(oracle.query_edge_for_pair(edge_id(1), 1), UsageError);
  std::vector<EdgeTolerances> wrong_size(2);
  EXPECT_THROW(oracle.query_edge(edge_id(1), wrong_size), UsageError);
}

TEST(ToleranceOracleTest, QueriesArePure) {
  const auto oracle = ToleranceOracle::preprocess(fixtures::diamond(), {pair(1, 4), pair(2, 3)});
  std::vector<std::vector<EdgeTolerances>> first;
  for (std::uint32_t e = 0; e < 5; ++e) first.push_back(oracle.query_edge(EdgeId{e}));
  for (std::uint32_t e = 5; e-- > 0;) EXPECT_EQ(oracle.query_edge(EdgeId{e}), first[e]);
}

void expect_matches_reference(const CapacitatedGraph& g, const std::vector<QueryPair>& pairs) {
  const auto oracle = ToleranceOracle::preprocess(g, pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto brute = reference::brute_bottleneck(g, pairs[i].source, pairs[i].target);
    ASSERT_EQ(oracle.bottleneck_value(i), brute.value);
    const auto paths = reference::enumerate_simple_paths(g, pairs[i].source, pairs[i].target);
    const std::size_t w = reference::canonical_witness(g, paths);
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      const auto fast = oracle.query_edge_for_pair(EdgeId{e}, i);
      ASSERT_EQ(fast, reference::formula_tolerances(g, paths, w, EdgeId{e}))
          << serialize(g) << "pair " << i << " edge " << e + 1;
      ASSERT_FALSE(fast.lower.is_finite() && fast.upper.is_finite());
      if (fast.lower.is_finite()) ASSERT_GT(fast.lower.value(), 0);
      if (fast.upper.is_finite()) ASSERT_GT(fast.upper.value(), 0);
    }
  }
}

std::vector<QueryPair> all_pairs(std::size_t n) {
  std::vector<QueryPair> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = s + 1; t < n; ++t) out.push_back({VertexId{s}, VertexId{t}});
  }
  return out;
}

// Every connected labelled graph on up to 5 vertices, with random distinct
// capacities.
TEST(ToleranceOraclePropertyTest, ExhaustiveSmallGraphs) {
  std::mt19937_64 rng(113);
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) slots.push_back({u, v});
    }
    for (std::uint32_t mask = 1; mask < (1U << slots.size()); ++mask) {
      std::vector<Capacity> caps;
      for (std::size_t i = 0; i < slots.size(); ++i) caps.push_back(static_cast<Capacity>(i) - 4);
      shuffle(caps, rng);
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask & (1U << i)) edges.push_back({VertexId{slots[i].first}, VertexId{slots[i].second}, caps[i]});
      }
      CapacitatedGraph g(n, edges);
      if (validate(g)) continue;  // disconnected
      ++graphs;
      expect_matches_reference(g, all_pairs(n));
      if (HasFatalFailure()) return;
    }
  }
  EXPECT_EQ(graphs, 1u + 4u + 38u + 728u);  // connected labelled graphs, n = 2..5
}

TEST(ToleranceOraclePropertyTest, RandomGraphsUpToEight) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = testing::random_small_graph(rng, 2, 8);
    const std::size_t k = 1 + uniform_below(rng, 6);
    expect_matches_reference(g, random_pairs(g.vertex_count(), k, rng));
    if (HasFatalFailure()) return;
  }
}

TEST(ToleranceOracleTest, ConcurrentQueriesAgree) {
  std::mt19937_64 rng(131);
  const auto g = random_connected_graph(2000, 8000, rng);
  const auto oracle = ToleranceOracle::preprocess(g, random_pairs(2000, 50, rng));
  std::vector<std::vector<EdgeTolerances>> expected;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) expected.push_back(oracle.query_edge(EdgeId{e}));
  std::atomic<std::size_t> mismatches{0};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      std::vector<EdgeTolerances> buffer(oracle.pair_count());
      for (std::uint32_t e = w; e < g.edge_count(); e += 3) {
        oracle.query_edge(EdgeId{e}, buffer);
        if (buffer != expected[e]) ++mismatches;
      }
    });
  }
  for (auto& t : workers) t.join();
  EXPECT_EQ(mismatches.load(), 0u);
}

}  // namespace
}  // namespace bptol
