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

#include "bptol/tree_index.hpp"

#include <algorithm>
#include <bit>

#include "bptol/error.hpp"

namespace bptol {

RootedTreeIndex::RootedTreeIndex(const CapacitatedGraph& graph,
                                 const SpanningTree& tree, VertexId root)
    : root_(root) {
  const std::size_t n = graph.vertex_count();
  if (!graph.contains(root)) throw UsageError("tree index: root out of range");
  if (tree.size() + 1 != n) throw UsageError("tree index: not a spanning tree");

  // Tree adjacency in CSR form.
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (EdgeId e : tree.edges) {
    ++offsets[index(graph.edge(e).u) + 1];
    ++offsets[index(graph.edge(e).v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Incidence> adjacency(offsets.back());
  {
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (EdgeId e : tree.edges) {
      const Edge& edge = graph.edge(e);
      adjacency[cursor[index(edge.u)]++] = {edge.v, e};
      adjacency[cursor[index(edge.v)]++] = {edge.u, e};
    }
  }

  // Depths and parents by BFS.
  parent_.assign(n, kNone);
  parent_edge_.assign(n, kNone);
  depth_.assign(n, 0);
  lower_endpoint_.assign(graph.edge_count(), kNone);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  order.push_back(index(root));
  std::vector<char> seen(n, 0);
  seen[index(root)] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t x = order[head];
    for (std::uint32_t k = offsets[x]; k < offsets[x + 1]; ++k) {
      const std::uint32_t y = index(adjacency[k].neighbor);
      if (seen[y]) continue;
      seen[y] = 1;
      parent_[y] = x;
      parent_edge_[y] = index(adjacency[k].edge);
      depth_[y] = depth_[x] + 1;
      lower_endpoint_[index(adjacency[k].edge)] = y;
      order.push_back(y);
    }
  }
  if (order.size() != n) throw UsageError("tree index: tree does not span the graph");

  // Euler tour, iterative DFS.
  euler_.reserve(2 * n - 1);
  first_.assign(n, 0);
  last_.assign(n, 0);
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;  // (vertex, next adjacency slot)
    stack.emplace_back(index(root), offsets[index(root)]);
    first_[index(root)] = 0;
    euler_.push_back(index(root));
    while (!stack.empty()) {
      auto& [x, slot] = stack.back();
      if (slot == offsets[x + 1]) {
        last_[x] = static_cast<std::uint32_t>(euler_.size() - 1);
        stack.pop_back();
        if (!stack.empty()) euler_.push_back(stack.back().first);
        continue;
      }
      const std::uint32_t y = index(adjacency[slot++].neighbor);
      if (y == parent_[x]) continue;
      first_[y] = static_cast<std::uint32_t>(euler_.size());
      euler_.push_back(y);
      stack.emplace_back(y, offsets[y]);
    }
  }

  const std::size_t len = euler_.size();
  sparse_.emplace_back(euler_);
  for (std::size_t width = 2; width <= len; width *= 2) {
    const auto& prev = sparse_.back();
    std::vector<std::uint32_t> row(len - width + 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::uint32_t a = prev[i];
      const std::uint32_t b = prev[i + width / 2];
      row[i] = depth_[a] <= depth_[b] ? a : b;
    }
    sparse_.push_back(std::move(row));
  }

  // Binary lifting; 2^levels_ exceeds every depth.
  levels_ = static_cast<std::uint32_t>(std::bit_width(n));
  lift_.resize(static_cast<std::size_t>(levels_) * n);
  for (std::uint32_t v = 0; v < n; ++v) {
    Lift& entry = lift_[v];
    if (parent_[v] == kNone) {
      entry = {v, kNone, kNone};
    } else {
      entry = {parent_[v], graph.rank(EdgeId{parent_edge_[v]}), parent_edge_[v]};
    }
  }
  for (std::uint32_t j = 1; j < levels_; ++j) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const Lift& low = lift(j - 1, v);
      const Lift& high = lift(j - 1, low.ancestor);
      Lift& entry = lift_[static_cast<std::size_t>(j) * n + v];
      entry.ancestor = high.ancestor;
      if (low.min_rank <= high.min_rank) {
        entry.min_rank = low.min_rank;
        entry.min_edge = low.min_edge;
      } else {
        entry.min_rank = high.min_rank;
        entry.min_edge = high.min_edge;
      }
    }
  }
}

std::optional<VertexId> RootedTreeIndex::parent(VertexId v) const {
  const std::uint32_t p = parent_[index(v)];
  if (p == kNone) return std::nullopt;
  return VertexId{p};
}

std::optional<EdgeId> RootedTreeIndex::parent_edge(VertexId v) const {
  const std::uint32_t e = parent_edge_[index(v)];
  if (e == kNone) return std::nullopt;
  return EdgeId{e};
}

VertexId RootedTreeIndex::lower_endpoint(EdgeId e) const {
  if (!is_tree_edge(e)) {
    throw UsageError("tree index: edge " + std::to_string(external(e)) +
                     " is not a tree edge");
  }
  return VertexId{lower_endpoint_[index(e)]};
}

VertexId RootedTreeIndex::lca(VertexId x, VertexId y) const {
  std::uint32_t lo = first_[index(x)];
  std::uint32_t hi = first_[index(y)];
  if (lo > hi) std::swap(lo, hi);
  const std::uint32_t span = hi - lo + 1;
  const auto level = static_cast<std::uint32_t>(std::bit_width(span) - 1);
  const std::uint32_t a = sparse_[level][lo];
  const std::uint32_t b = sparse_[level][hi + 1 - (1U << level)];
  return VertexId{depth_[a] <= depth_[b] ? a : b};
}

std::uint32_t RootedTreeIndex::climb(std::uint32_t v, std::uint32_t steps,
                                     Lift& best) const {
  for (std::uint32_t j = 0; steps != 0; ++j, steps >>= 1) {
    if ((steps & 1U) == 0) continue;
    const Lift& jump = lift(j, v);
    if (jump.min_rank < best.min_rank) {
      best.min_rank = jump.min_rank;
      best.min_edge = jump.min_edge;
    }
    v = jump.ancestor;
  }
  return v;
}

EdgeId RootedTreeIndex::path_min_edge(VertexId s, VertexId t) const {
  if (s == t) throw UsageError("path_min_edge: empty path (s == t)");
  const std::uint32_t z = depth_[index(lca(s, t))];
  Lift best{0, kNone, kNone};
  climb(index(s), depth_[index(s)] - z, best);
  climb(index(t), depth_[index(t)] - z, best);
  return EdgeId{best.min_edge};
}

bool RootedTreeIndex::edge_on_path(EdgeId e, VertexId s, VertexId t) const {
  const VertexId y = lower_endpoint(e);
  return is_ancestor(y, s) != is_ancestor(y, t);
}

std::vector<VertexId> RootedTreeIndex::path(VertexId s, VertexId t) const {
  const VertexId z = lca(s, t);
  std::vector<VertexId> up;
  for (VertexId v = s; v != z; v = VertexId{parent_[index(v)]}) up.push_back(v);
  up.push_back(z);
  std::vector<VertexId> down;
  for (VertexId v = t; v != z; v = VertexId{parent_[index(v)]}) down.push_back(v);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace bptol
