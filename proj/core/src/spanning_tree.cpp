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

#include "bptol/spanning_tree.hpp"

#include <ranges>

#include "bptol/error.hpp"
#include "bptol/union_find.hpp"

namespace bptol {

SpanningTree build_max_spanning_tree(const CapacitatedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  SpanningTree tree;
  tree.member.assign(graph.edge_count(), 0);
  if (n == 0) return tree;
  tree.edges.reserve(n - 1);

  auto sets = DisjointSets::singletons(n);
  for (EdgeId e : graph.edges_by_rank() | std::views::reverse) {
    const Edge& edge = graph.edge(e);
    const std::size_t x = sets.find(index(edge.u));
    const std::size_t y = sets.find(index(edge.v));
    if (x == y) continue;
    sets.join(x, y);
    tree.edges.push_back(e);
    tree.member[index(e)] = 1;
    if (tree.edges.size() == n - 1) break;
  }
  if (tree.edges.size() != n - 1) {
    throw UsageError("maximum spanning tree: graph is disconnected");
  }
  return tree;
}

}  // namespace bptol
