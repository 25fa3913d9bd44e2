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

#include "bptol/replacement_edges.hpp"

#include <algorithm>
#include <stdexcept>

#include "bptol/union_find.hpp"

namespace bptol {

std::vector<std::optional<EdgeId>> compute_upper_replacements(
    const CapacitatedGraph& graph, const SpanningTree& tree,
    const RootedTreeIndex& tree_index) {
  std::vector<std::optional<EdgeId>> upper(graph.edge_count());
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    const EdgeId e{i};
    if (tree.contains(e)) continue;
    upper[i] = tree_index.path_min_edge(graph.edge(e).u, graph.edge(e).v);
  }
  return upper;
}

std::vector<std::optional<EdgeId>> compute_lower_replacements(
    const CapacitatedGraph& graph, const SpanningTree& tree,
    const RootedTreeIndex& tree_index, LowerWalkStats* stats) {
  struct Half {
    VertexId descendant;
    VertexId ancestor;
    EdgeId edge;
  };

  std::vector<Half> halves;
  halves.reserve(2 * (graph.edge_count() - tree.size()));
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    const EdgeId e{i};
    if (tree.contains(e)) continue;
    const Edge& edge = graph.edge(e);
    const VertexId z = tree_index.lca(edge.u, edge.v);
    if (edge.u != z) halves.push_back({edge.u, z, e});
    if (edge.v != z) halves.push_back({edge.v, z, e});
  }
  // Both halves of one edge share a rank; stable order keeps them adjacent.
  std::stable_sort(halves.begin(), halves.end(), [&](const Half& a, const Half& b) {
    return graph.ranks_above(a.edge, b.edge);
  });

  const std::size_t n = graph.vertex_count();
  auto sets = DisjointSets::singletons(n);
  std::vector<std::uint32_t> top(n);
  for (std::uint32_t v = 0; v < n; ++v) top[v] = v;

  std::vector<std::optional<EdgeId>> lower(graph.edge_count());
  std::size_t contractions = 0;
  for (const Half& half : halves) {
    const std::size_t target = sets.find(index(half.ancestor));
    std::size_t current = sets.find(index(half.descendant));
    while (current != target) {
      // The set of the descendant is a connected subtree that does not reach
      // the ancestor, so its top vertex has a parent edge on T(d, a).
      const VertexId head{top[current]};
      const EdgeId crossed = *tree_index.parent_edge(head);
      if (lower[index(crossed)]) {
        throw std::logic_error("lower replacement assigned twice");
      }
      lower[index(crossed)] = half.edge;
      ++contractions;
      const std::size_t above = sets.find(index(*tree_index.parent(head)));
      const std::uint32_t above_top = top[above];
      current = sets.join(current, above);
      top[current] = above_top;
      if (above == target) break;
    }
  }

  if (stats != nullptr) {
    stats->half_edges = halves.size();
    stats->contractions = contractions;
  }
  return lower;
}

ReplacementTables compute_replacements(const CapacitatedGraph& graph,
                                       const SpanningTree& tree,
                                       const RootedTreeIndex& tree_index) {
  return {compute_upper_replacements(graph, tree, tree_index),
          compute_lower_replacements(graph, tree, tree_index)};
}

}  // namespace bptol
