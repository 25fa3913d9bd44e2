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

#include "bptol/tolerance_oracle.hpp"

#include <algorithm>

#include "bptol/error.hpp"

namespace bptol {

std::string Tolerance::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

ToleranceOracle ToleranceOracle::preprocess(CapacitatedGraph graph,
                                            std::vector<QueryPair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const QueryPair& p = pairs[i];
    if (!graph.contains(p.source) || !graph.contains(p.target)) {
      throw UsageError("pair " + std::to_string(i + 1) +
                       ": vertex out of range");
    }
    if (p.source == p.target) {
      throw UsageError("pair " + std::to_string(i + 1) + ": source equals target");
    }
  }

  ToleranceOracle oracle;
  oracle.graph_ = std::move(graph);
  oracle.tree_ = build_max_spanning_tree(oracle.graph_);
  oracle.index_ = RootedTreeIndex(oracle.graph_, oracle.tree_, VertexId{0});
  oracle.tables_ = compute_replacements(oracle.graph_, oracle.tree_, oracle.index_);
  oracle.contexts_.reserve(pairs.size());
  for (const QueryPair& p : pairs) {
    const EdgeId star = oracle.index_.path_min_edge(p.source, p.target);
    oracle.contexts_.push_back({p, star, oracle.graph_.capacity(star)});
  }
  return oracle;
}

void ToleranceOracle::require_edge(EdgeId e) const {
  if (!graph_.contains(e)) {
    throw UsageError("edge " + std::to_string(external(e)) + " out of range");
  }
}

EdgeTolerances ToleranceOracle::evaluate(EdgeId e, const PairContext& ctx) const {
  const QueryPair& p = ctx.pair;
  EdgeTolerances result;
  if (tree_.contains(e) && index_.edge_on_path(e, p.source, p.target)) {
    if (const auto& replacement = tables_.lower[index(e)]) {
      result.lower = Tolerance::finite(
          graph_.capacity(e) -
          std::min(graph_.capacity(*replacement), ctx.bottleneck_value));
    }
    return result;
  }
  const auto& replacement = tables_.upper[index(e)];
  // Ranks are a total order, so equal capacity means the same edge.
  if (replacement && *replacement == ctx.bottleneck_edge &&
      index_.edge_on_path(*replacement, p.source, p.target)) {
    result.upper = Tolerance::finite(ctx.bottleneck_value - graph_.capacity(e));
  }
  return result;
}

EdgeTolerances ToleranceOracle::query_edge_for_pair(EdgeId e, std::size_t pair) const {
  require_edge(e);
  return evaluate(e, context(pair));
}

void ToleranceOracle::query_edge(EdgeId e, std::span<EdgeTolerances> out) const {
  require_edge(e);
  if (out.size() != contexts_.size()) {
    throw UsageError("query_edge: output span must hold one entry per pair");
  }
  for (std::size_t i = 0; i < contexts_.size(); ++i) out[i] = evaluate(e, contexts_[i]);
}

std::vector<EdgeTolerances> ToleranceOracle::query_edge(EdgeId e) const {
  std::vector<EdgeTolerances> out(contexts_.size());
  query_edge(e, out);
  return out;
}

Capacity ToleranceOracle::bottleneck_value(std::size_t pair) const {
  return context(pair).bottleneck_value;
}

const PairContext& ToleranceOracle::context(std::size_t pair) const {
  if (pair >= contexts_.size()) {
    throw UsageError("pair index " + std::to_string(pair) + " out of range");
  }
  return contexts_[pair];
}

}  // namespace bptol
