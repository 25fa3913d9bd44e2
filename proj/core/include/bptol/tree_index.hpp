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

#ifndef BPTOL_TREE_INDEX_HPP_
#define BPTOL_TREE_INDEX_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "bptol/graph.hpp"
#include "bptol/spanning_tree.hpp"

namespace bptol {

// A spanning tree rooted at a fixed vertex, indexed for
//  - lowest common ancestors in O(1) (Euler tour + sparse table),
//  - minimum-rank edge on a tree path in O(log n) (binary lifting),
//  - "is tree edge e on T(s, t)" in O(1).
//
// Tree edges are oriented child -> parent at build time: lower_endpoint(e) is
// the deeper endpoint y, and e lies on T(s, t) iff exactly one of s, t is in
// the subtree of y, i.e. exactly one of lca(s, y) == y, lca(t, y) == y.
//
// Self-contained after construction (keeps no reference to the graph) and
// immutable; all queries are safe to call concurrently.
class RootedTreeIndex {
 public:
  RootedTreeIndex() = default;
  RootedTreeIndex(const CapacitatedGraph& graph, const SpanningTree& tree,
                  VertexId root = VertexId{0});

  std::size_t vertex_count() const noexcept { return depth_.size(); }
  VertexId root() const noexcept { return root_; }

  std::optional<VertexId> parent(VertexId v) const;
  std::optional<EdgeId> parent_edge(VertexId v) const;
  std::uint32_t depth(VertexId v) const { return depth_[index(v)]; }

  bool is_tree_edge(EdgeId e) const {
    return index(e) < lower_endpoint_.size() && lower_endpoint_[index(e)] != kNone;
  }
  // Deeper endpoint of a tree edge. Throws UsageError for non-tree edges.
  VertexId lower_endpoint(EdgeId e) const;

  VertexId lca(VertexId x, VertexId y) const;
  // Same predicate as lca(v, ancestor) == ancestor, read off the Euler
  // intervals directly.
  bool is_ancestor(VertexId ancestor, VertexId v) const {
    const std::uint32_t a = index(ancestor);
    const std::uint32_t x = first_[index(v)];
    return first_[a] <= x && x <= last_[a];
  }

  // Minimum-rank edge on T(s, t). Throws UsageError if s == t.
  EdgeId path_min_edge(VertexId s, VertexId t) const;
  // Throws UsageError if e is not a tree edge.
  bool edge_on_path(EdgeId e, VertexId s, VertexId t) const;

  // Explicit vertex sequence s ... t, O(path length). For display only.
  std::vector<VertexId> path(VertexId s, VertexId t) const;

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  struct Lift {
    std::uint32_t ancestor;  // 2^j-th ancestor, clamped at the root
    std::uint32_t min_rank;  // kNone when the jump covers no edge
    std::uint32_t min_edge;
  };

  const Lift& lift(std::uint32_t level, std::uint32_t v) const {
    return lift_[static_cast<std::size_t>(level) * depth_.size() + v];
  }
  // Min-rank edge over the first `steps` edges above v, folded into best.
  std::uint32_t climb(std::uint32_t v, std::uint32_t steps, Lift& best) const;

  VertexId root_{0};
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_edge_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> lower_endpoint_;  // per EdgeId

  std::vector<std::uint32_t> euler_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> last_;
  std::vector<std::vector<std::uint32_t>> sparse_;  // sparse_[j][i]: argmin depth of euler_[i, i + 2^j)

  std::uint32_t levels_ = 0;
  std::vector<Lift> lift_;
};

}  // namespace bptol

#endif  // BPTOL_TREE_INDEX_HPP_
