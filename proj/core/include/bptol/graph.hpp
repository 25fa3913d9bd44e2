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

#ifndef BPTOL_GRAPH_HPP_
#define BPTOL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bptol {

// Vertex and edge handles are 0-based internally. The text formats are
// 1-based; conversion happens only at the I/O boundary (see external()).
enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

using Capacity = std::int64_t;

constexpr std::uint32_t index(VertexId v) noexcept {
  return static_cast<std::uint32_t>(v);
}
constexpr std::uint32_t index(EdgeId e) noexcept {
  return static_cast<std::uint32_t>(e);
}
constexpr std::uint64_t external(VertexId v) noexcept { return index(v) + 1ULL; }
constexpr std::uint64_t external(EdgeId e) noexcept { return index(e) + 1ULL; }

struct Edge {
  VertexId u;
  VertexId v;
  Capacity capacity;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

struct QueryPair {
  VertexId source;
  VertexId target;
  friend bool operator==(const QueryPair&, const QueryPair&) = default;
};

// Undirected edge-capacitated graph with compressed adjacency. Immutable once
// built; all read accessors are safe to call concurrently.
//
// Edges are totally ordered by rank: ascending (capacity, EdgeId). With
// pairwise-distinct capacities this is exactly capacity order; with ties it
// is the order of an infinitesimally perturbed instance. Every algorithm in
// the library compares edges by rank, never by raw capacity.
class CapacitatedGraph {
 public:
  CapacitatedGraph() = default;
  // Throws UsageError if an endpoint is out of range. Simplicity,
  // connectivity and injectivity are checked by validate(), not here.
  CapacitatedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[index(e)]; }
  Capacity capacity(EdgeId e) const { return edges_[index(e)].capacity; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const;

  std::uint32_t rank(EdgeId e) const { return rank_[index(e)]; }
  // Edge ids in ascending rank order.
  std::span<const EdgeId> edges_by_rank() const noexcept { return by_rank_; }
  bool ranks_above(EdgeId a, EdgeId b) const { return rank(a) > rank(b); }

  bool contains(VertexId v) const noexcept { return index(v) < vertex_count_; }
  bool contains(EdgeId e) const noexcept { return index(e) < edges_.size(); }

  // O(min degree) endpoint lookup; order of u and v does not matter.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Incidence> incidences_;
  std::vector<std::uint32_t> rank_;
  std::vector<EdgeId> by_rank_;
};

struct Violation {
  enum class Kind { kSelfLoop, kParallelEdge, kDisconnected, kDuplicateCapacity };

  Kind kind;
  // Witness ids, 0-based: edges for kSelfLoop/kParallelEdge/
  // kDuplicateCapacity, vertices for kDisconnected.
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::string message;
};

struct ValidationOptions {
  // Accept equal capacities; rank order (capacity, EdgeId) breaks the ties.
  bool break_ties = false;
};

// Returns the first violated property, checked in the order self-loop,
// parallel edge, connectivity, capacity injectivity.
std::optional<Violation> validate(const CapacitatedGraph& graph,
                                  const ValidationOptions& options = {});

// Graph file: "n m" then m lines "u v c", 1-based vertices, EdgeId = line
// order. Trailing blank lines are accepted.
CapacitatedGraph parse_graph(std::istream& in);
// Pairs file: "k" then k lines "s t". Range and s != t are checked by the
// consumer, which knows the graph.
std::vector<QueryPair> parse_pairs(std::istream& in);

void write_graph(std::ostream& out, const CapacitatedGraph& graph);
std::string serialize(const CapacitatedGraph& graph);

}  // namespace bptol

#endif  // BPTOL_GRAPH_HPP_
