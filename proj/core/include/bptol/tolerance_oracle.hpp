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

#ifndef BPTOL_TOLERANCE_ORACLE_HPP_
#define BPTOL_TOLERANCE_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bptol/graph.hpp"
#include "bptol/replacement_edges.hpp"
#include "bptol/spanning_tree.hpp"
#include "bptol/tree_index.hpp"

namespace bptol {

// A tolerance is a finite capacity difference or +infinity.
class Tolerance {
 public:
  static constexpr Tolerance infinite() noexcept { return Tolerance(); }
  static constexpr Tolerance finite(Capacity value) noexcept {
    return Tolerance(value);
  }

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  // Precondition: is_finite().
  constexpr Capacity value() const { return *value_; }

  // "inf" or the decimal value.
  std::string to_string() const;

  friend constexpr bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  constexpr Tolerance() = default;
  constexpr explicit Tolerance(Capacity value) : value_(value) {}

  std::optional<Capacity> value_;
};

struct EdgeTolerances {
  Tolerance lower = Tolerance::infinite();
  Tolerance upper = Tolerance::infinite();

  friend bool operator==(const EdgeTolerances&, const EdgeTolerances&) = default;
};

struct PairContext {
  QueryPair pair;
  EdgeId bottleneck_edge;     // min-rank edge on the tree path
  Capacity bottleneck_value;  // b(s, t)
};

// Preprocessed state for online tolerance queries on a bottleneck (max-min)
// path problem with k fixed source-target pairs.
//
// For every pair i the fixed optimal path is the maximum spanning tree path
// T(s_i, t_i); its bottleneck edge e*_i is cached at preprocessing time.
// A query for edge e and pair i is then a constant-time case split:
//
//   e on T(s_i, t_i):   upper = inf,
//                       lower = inf if e is a bridge, else
//                               c(e) - min(c(L[e]), c(e*_i))
//   otherwise:          lower = inf,
//                       upper = c(e*_i) - c(e) if U[e] == e*_i (which
//                               implies U[e] lies on T(s_i, t_i)), else inf
//
// The min-max (bottleneck minimization) problem is the same computation on
// negated capacities, with the roles of lower and upper swapped.
//
// Immutable after preprocess(); concurrent queries from multiple threads are
// safe and lock-free.
class ToleranceOracle {
 public:
  // Preconditions: graph passed validate(); throws UsageError for a pair
  // with s == t or an out-of-range vertex.
  static ToleranceOracle preprocess(CapacitatedGraph graph,
                                    std::vector<QueryPair> pairs);

  // Throws UsageError if e or pair is out of range.
  EdgeTolerances query_edge_for_pair(EdgeId e, std::size_t pair) const;
  // Writes pair_count() results into out (out.size() must match).
  void query_edge(EdgeId e, std::span<EdgeTolerances> out) const;
  std::vector<EdgeTolerances> query_edge(EdgeId e) const;

  Capacity bottleneck_value(std::size_t pair) const;
  const PairContext& context(std::size_t pair) const;
  std::size_t pair_count() const noexcept { return contexts_.size(); }

  const CapacitatedGraph& graph() const noexcept { return graph_; }
  const SpanningTree& tree() const noexcept { return tree_; }
  const RootedTreeIndex& tree_index() const noexcept { return index_; }
  const ReplacementTables& replacements() const noexcept { return tables_; }

 private:
  ToleranceOracle() = default;

  EdgeTolerances evaluate(EdgeId e, const PairContext& ctx) const;
  void require_edge(EdgeId e) const;

  CapacitatedGraph graph_;
  SpanningTree tree_;
  RootedTreeIndex index_;
  ReplacementTables tables_;
  std::vector<PairContext> contexts_;
};

}  // namespace bptol

#endif  // BPTOL_TOLERANCE_ORACLE_HPP_
