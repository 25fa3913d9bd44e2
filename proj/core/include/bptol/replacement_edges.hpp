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

#ifndef BPTOL_REPLACEMENT_EDGES_HPP_
#define BPTOL_REPLACEMENT_EDGES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bptol/graph.hpp"
#include "bptol/spanning_tree.hpp"
#include "bptol/tree_index.hpp"

namespace bptol {

// Per-edge replacement edges of a maximum spanning tree T, indexed by EdgeId;
// std::nullopt means "no replacement".
//
//   upper[e], e not in T: the minimum-rank tree edge on T(x, y) for e = xy.
//   lower[e], e in T:     the maximum-rank non-tree edge x'y' whose tree path
//                         T(x', y') contains e; nullopt if e is a bridge.
//
// upper is nullopt on tree edges and lower is nullopt on non-tree edges.
struct ReplacementTables {
  std::vector<std::optional<EdgeId>> upper;
  std::vector<std::optional<EdgeId>> lower;
};

// One path_min_edge query per non-tree edge; O(m log n).
std::vector<std::optional<EdgeId>> compute_upper_replacements(
    const CapacitatedGraph& graph, const SpanningTree& tree,
    const RootedTreeIndex& tree_index);

struct LowerWalkStats {
  std::size_t half_edges = 0;    // ancestor-descendant halves after splitting
  std::size_t contractions = 0;  // tree edges contracted (= assignments made)
};

// Contraction walk. Each non-tree edge xy is split at z = lca(x, y) into the
// halves xz and yz (a half with z as both ends is dropped); halves are
// scanned in descending rank. A disjoint-set forest over the tree vertices
// represents the contracted tree, each set remembering its topmost vertex.
// For a half (d, a) with a an ancestor of d, the set of d is repeatedly
// merged into the set above its top vertex until it meets the set of a, and
// every tree edge crossed on the way gets the current non-tree edge as its
// replacement. Every tree edge is contracted at most once, so the walk is
// O(m log m) for the sort plus near-linear for the walk itself.
std::vector<std::optional<EdgeId>> compute_lower_replacements(
    const CapacitatedGraph& graph, const SpanningTree& tree,
    const RootedTreeIndex& tree_index, LowerWalkStats* stats = nullptr);

ReplacementTables compute_replacements(const CapacitatedGraph& graph,
                                       const SpanningTree& tree,
                                       const RootedTreeIndex& tree_index);

}  // namespace bptol

#endif  // BPTOL_REPLACEMENT_EDGES_HPP_
