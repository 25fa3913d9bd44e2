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

#ifndef BPTOL_REFERENCE_ORACLE_HPP_
#define BPTOL_REFERENCE_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bptol/graph.hpp"
#include "bptol/tolerance_oracle.hpp"

// Exponential brute-force ground truth used for verification only. Nothing
// in here touches the spanning tree, tree index, or replacement tables of the
// fast path.
namespace bptol::reference {

inline constexpr std::size_t kDefaultVertexCap = 12;

struct SimplePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct PathSet {
  VertexId source{0};
  VertexId target{0};
  std::vector<SimplePath> paths;
};

// Every simple s-t path exactly once, by exhaustive DFS. Throws LimitExceeded
// above vertex_cap vertices and UsageError if s == t.
PathSet enumerate_simple_paths(const CapacitatedGraph& graph, VertexId s, VertexId t,
                               std::size_t vertex_cap = kDefaultVertexCap);

// Minimum capacity along the path.
Capacity path_bottleneck(const CapacitatedGraph& graph, const SimplePath& path);

// Indices of all paths attaining the max-min value.
std::vector<std::size_t> optimal_paths(const CapacitatedGraph& graph,
                                       const PathSet& paths);

// The preferred optimal path: P beats Q iff the minimum-rank edge of the
// symmetric difference of their edge sets lies in Q. This is a total order on
// edge sets, and its maximum is the maximum spanning tree path between s and
// t, which fixes the witness without consulting any tree.
std::size_t canonical_witness(const CapacitatedGraph& graph, const PathSet& paths);

struct BottleneckResult {
  Capacity value;
  SimplePath witness;
};

// max over paths of min capacity; witness = canonical_witness.
BottleneckResult brute_bottleneck(const CapacitatedGraph& graph, VertexId s, VertexId t);

// Upper-tolerance guard for an edge e off the fixed optimal path S*, with
// M = max over paths S through e of min capacity over S \ {e} (+inf when
// S = {e}). The upper tolerance is f(F) - c(e) when the guard holds, +inf
// otherwise.
enum class UpperGuard {
  kOptimum,       // M > f(F): some path through e would beat the optimum
  kEdgeCapacity,  // M > c(e): the closed-form guard as commonly printed
};

// Closed-form max-min tolerances of e with respect to paths.paths[witness]:
//   e in S*:     lower = c(e) - f(F-e) (+inf if every path uses e), upper = +inf
//   e not in S*: lower = +inf, upper per `guard`
EdgeTolerances formula_tolerances(const CapacitatedGraph& graph, const PathSet& paths,
                                  std::size_t witness, EdgeId e,
                                  UpperGuard guard = UpperGuard::kOptimum);

// formula_tolerances with the canonical witness and the kOptimum guard.
EdgeTolerances brute_tolerances(const CapacitatedGraph& graph, VertexId s, VertexId t,
                                EdgeId e);

// True iff, after c(e) += delta, the witness path still attains the optimal
// max-min value (ties count as optimal; injectivity may be lost).
bool check_perturbation(const CapacitatedGraph& graph, const PathSet& paths,
                        std::size_t witness, EdgeId e, Capacity delta);
bool check_perturbation(const CapacitatedGraph& graph, VertexId s, VertexId t, EdgeId e,
                        Capacity delta);

// Tolerances straight from the sup-definition: the largest integer increase
// (decrease) of c(e) under which check_perturbation holds, found by bisection
// on the monotone predicate. +inf when it still holds past the whole capacity
// range.
EdgeTolerances sweep_tolerances(const CapacitatedGraph& graph, const PathSet& paths,
                                std::size_t witness, EdgeId e);
EdgeTolerances sweep_tolerances(const CapacitatedGraph& graph, VertexId s, VertexId t,
                                EdgeId e);

// All spanning trees as sorted edge lists. Throws LimitExceeded when the
// number of (n-1)-subsets exceeds subset_cap.
std::vector<std::vector<EdgeId>> enumerate_spanning_trees(
    const CapacitatedGraph& graph, std::size_t subset_cap = 5'000'000);

// Spanning tree with the largest total capacity, sorted by EdgeId.
std::vector<EdgeId> brute_max_spanning_tree(const CapacitatedGraph& graph);

// Edges of the unique path between s and t in the tree given by its edge
// list, in walk order from s. Plain BFS; s == t gives an empty list.
std::vector<EdgeId> tree_path_edges(const CapacitatedGraph& graph,
                                    const std::vector<EdgeId>& tree_edges, VertexId s,
                                    VertexId t);

// Definitional O(m n) replacement tables for the given tree.
std::vector<std::optional<EdgeId>> naive_upper_replacements(
    const CapacitatedGraph& graph, const std::vector<EdgeId>& tree_edges);
std::vector<std::optional<EdgeId>> naive_lower_replacements(
    const CapacitatedGraph& graph, const std::vector<EdgeId>& tree_edges);

}  // namespace bptol::reference

#endif  // BPTOL_REFERENCE_ORACLE_HPP_
