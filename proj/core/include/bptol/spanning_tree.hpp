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

#ifndef BPTOL_SPANNING_TREE_HPP_
#define BPTOL_SPANNING_TREE_HPP_

#include <vector>

#include "bptol/graph.hpp"

namespace bptol {

struct SpanningTree {
  // Tree edges in the order Kruskal accepted them (descending rank).
  std::vector<EdgeId> edges;
  // Indexed by EdgeId.
  std::vector<char> member;

  bool contains(EdgeId e) const { return member[index(e)] != 0; }
  std::size_t size() const noexcept { return edges.size(); }
};

// Kruskal over descending rank. Under injective capacities the maximum
// spanning tree is unique, so the result does not depend on input edge order.
// Throws UsageError if the graph is disconnected.
SpanningTree build_max_spanning_tree(const CapacitatedGraph& graph);

}  // namespace bptol

#endif  // BPTOL_SPANNING_TREE_HPP_
