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

#ifndef BPTOL_TESTS_TEST_UTIL_HPP_
#define BPTOL_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bptol/graph.hpp"
#include "bptol/random_graph.hpp"

namespace bptol::testing {

inline Edge edge(std::uint32_t u, std::uint32_t v, Capacity c) {
  return {VertexId{u - 1}, VertexId{v - 1}, c};
}
inline VertexId vertex(std::uint32_t one_based) { return VertexId{one_based - 1}; }
inline EdgeId edge_id(std::uint32_t one_based) { return EdgeId{one_based - 1}; }

// Random connected graph with n in [min_n, max_n] and a random edge count.
inline CapacitatedGraph random_small_graph(std::mt19937_64& rng, std::size_t min_n,
                                           std::size_t max_n) {
  const std::size_t n = min_n + uniform_below(rng, max_n - min_n + 1);
  const std::size_t max_m = n * (n - 1) / 2;
  const std::size_t m = (n - 1) + uniform_below(rng, max_m - (n - 1) + 1);
  const auto spread = static_cast<Capacity>(4 * m + 4);
  return random_connected_graph(n, m, rng, {-spread, spread});
}

// Rooted tree walked the slow way: BFS parents, then step-by-step climbs.
class NaiveRootedTree {
 public:
  NaiveRootedTree(const CapacitatedGraph& graph, const std::vector<EdgeId>& tree_edges,
                  VertexId root)
      : graph_(&graph),
        parent_(graph.vertex_count()),
        parent_edge_(graph.vertex_count()),
        depth_(graph.vertex_count(), 0) {
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(graph.vertex_count());
    for (EdgeId e : tree_edges) {
      adj[index(graph.edge(e).u)].push_back({graph.edge(e).v, e});
      adj[index(graph.edge(e).v)].push_back({graph.edge(e).u, e});
    }
    std::vector<char> seen(graph.vertex_count(), 0);
    std::vector<VertexId> queue{root};
    seen[index(root)] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto [w, e] : adj[index(queue[h])]) {
        if (seen[index(w)]) continue;
        seen[index(w)] = 1;
        parent_[index(w)] = queue[h];
        parent_edge_[index(w)] = e;
        depth_[index(w)] = depth_[index(queue[h])] + 1;
        queue.push_back(w);
      }
    }
  }

  std::uint32_t depth(VertexId v) const { return depth_[index(v)]; }

  VertexId lca(VertexId x, VertexId y) const {
    while (depth(x) > depth(y)) x = *parent_[index(x)];
    while (depth(y) > depth(x)) y = *parent_[index(y)];
    while (x != y) {
      x = *parent_[index(x)];
      y = *parent_[index(y)];
    }
    return x;
  }

  std::vector<EdgeId> path_edges(VertexId s, VertexId t) const {
    const VertexId z = lca(s, t);
    std::vector<EdgeId> edges;
    for (VertexId v = s; v != z; v = *parent_[index(v)]) edges.push_back(*parent_edge_[index(v)]);
    for (VertexId v = t; v != z; v = *parent_[index(v)]) edges.push_back(*parent_edge_[index(v)]);
    return edges;
  }

  EdgeId path_min_edge(VertexId s, VertexId t) const {
    const auto edges = path_edges(s, t);
    EdgeId best = edges.front();
    for (EdgeId e : edges) {
      if (graph_->capacity(e) < graph_->capacity(best)) best = e;
    }
    return best;
  }

 private:
  const CapacitatedGraph* graph_;
  std::vector<std::optional<VertexId>> parent_;
  std::vector<std::optional<EdgeId>> parent_edge_;
  std::vector<std::uint32_t> depth_;
};

}  // namespace bptol::testing

#endif  // BPTOL_TESTS_TEST_UTIL_HPP_
