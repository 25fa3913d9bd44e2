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

#include "bptol/reference_oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "bptol/error.hpp"
#include "bptol/union_find.hpp"

namespace bptol::reference {
namespace {

bool uses_edge(const SimplePath& path, EdgeId e) {
  return std::find(path.edges.begin(), path.edges.end(), e) != path.edges.end();
}

Capacity perturbed_bottleneck(const CapacitatedGraph& graph, const SimplePath& path,
                              EdgeId e, Capacity delta) {
  Capacity value = std::numeric_limits<Capacity>::max();
  for (EdgeId f : path.edges) {
    value = std::min(value, graph.capacity(f) + (f == e ? delta : 0));
  }
  return value;
}

// True iff a is strictly preferred over b (see canonical_witness).
bool preferred(const CapacitatedGraph& graph, const SimplePath& a, const SimplePath& b) {
  auto by_rank = [&](const SimplePath& p) {
    std::vector<std::uint32_t> ranks;
    for (EdgeId e : p.edges) ranks.push_back(graph.rank(e));
    std::sort(ranks.begin(), ranks.end());
    return ranks;
  };
  const auto ra = by_rank(a);
  const auto rb = by_rank(b);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ra.size() && j < rb.size()) {
    if (ra[i] == rb[j]) {
      ++i;
      ++j;
    } else {
      // The smaller rank is the minimum of the symmetric difference.
      return ra[i] > rb[j];
    }
  }
  // One edge set contains the other; only possible when they are equal for
  // simple s-t paths, but keep the order total anyway.
  return i == ra.size() && j < rb.size();
}

void require_range(const CapacitatedGraph& graph) {
  constexpr Capacity kLimit = Capacity{1} << 60;
  for (const Edge& e : graph.edges()) {
    if (e.capacity > kLimit || e.capacity < -kLimit) {
      throw LimitExceeded("reference oracle: capacities must lie in [-2^60, 2^60]");
    }
  }
}

}  // namespace

PathSet enumerate_simple_paths(const CapacitatedGraph& graph, VertexId s, VertexId t,
                               std::size_t vertex_cap) {
  if (graph.vertex_count() > vertex_cap) {
    throw LimitExceeded("reference oracle: " + std::to_string(graph.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(vertex_cap));
  }
  if (!graph.contains(s) || !graph.contains(t)) {
    throw UsageError("reference oracle: vertex out of range");
  }
  if (s == t) throw UsageError("reference oracle: s == t");

  PathSet result{s, t, {}};
  std::vector<char> on_path(graph.vertex_count(), 0);
  SimplePath current;
  current.vertices.push_back(s);
  on_path[index(s)] = 1;

  std::function<void(VertexId)> extend = [&](VertexId x) {
    if (x == t) {
      result.paths.push_back(current);
      return;
    }
    for (const Incidence& inc : graph.incident(x)) {
      if (on_path[index(inc.neighbor)]) continue;
      on_path[index(inc.neighbor)] = 1;
      current.vertices.push_back(inc.neighbor);
      current.edges.push_back(inc.edge);
      extend(inc.neighbor);
      current.edges.pop_back();
      current.vertices.pop_back();
      on_path[index(inc.neighbor)] = 0;
    }
  };
  extend(s);
  return result;
}

Capacity path_bottleneck(const CapacitatedGraph& graph, const SimplePath& path) {
  Capacity value = std::numeric_limits<Capacity>::max();
  for (EdgeId e : path.edges) value = std::min(value, graph.capacity(e));
  return value;
}

std::vector<std::size_t> optimal_paths(const CapacitatedGraph& graph,
                                       const PathSet& paths) {
  Capacity best = std::numeric_limits<Capacity>::min();
  for (const SimplePath& p : paths.paths) best = std::max(best, path_bottleneck(graph, p));
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < paths.paths.size(); ++i) {
    if (path_bottleneck(graph, paths.paths[i]) == best) result.push_back(i);
  }
  return result;
}

std::size_t canonical_witness(const CapacitatedGraph& graph, const PathSet& paths) {
  const auto optimal = optimal_paths(graph, paths);
  if (optimal.empty()) throw UsageError("reference oracle: no s-t path");
  std::size_t best = optimal.front();
  for (std::size_t i : optimal) {
    if (preferred(graph, paths.paths[i], paths.paths[best])) best = i;
  }
  return best;
}

BottleneckResult brute_bottleneck(const CapacitatedGraph& graph, VertexId s, VertexId t) {
  const PathSet paths = enumerate_simple_paths(graph, s, t);
  const std::size_t w = canonical_witness(graph, paths);
  return {path_bottleneck(graph, paths.paths[w]), paths.paths[w]};
}

EdgeTolerances formula_tolerances(const CapacitatedGraph& graph, const PathSet& paths,
                                  std::size_t witness, EdgeId e, UpperGuard guard) {
  const Capacity ce = graph.capacity(e);
  Capacity optimum = std::numeric_limits<Capacity>::min();
  for (const SimplePath& p : paths.paths) optimum = std::max(optimum, path_bottleneck(graph, p));

  EdgeTolerances result;
  if (uses_edge(paths.paths[witness], e)) {
    // f(F-e): best path avoiding e.
    std::optional<Capacity> avoiding;
    for (const SimplePath& p : paths.paths) {
      if (uses_edge(p, e)) continue;
      const Capacity v = path_bottleneck(graph, p);
      avoiding = avoiding ? std::max(*avoiding, v) : v;
    }
    if (avoiding) result.lower = Tolerance::finite(ce - *avoiding);
    return result;
  }

  // M = max over paths through e of min over the path without e; nullopt
  // stands for +inf (the path is e alone), and no such path at all is -inf.
  bool any_through = false;
  bool unbounded = false;
  Capacity best_rest = std::numeric_limits<Capacity>::min();
  for (const SimplePath& p : paths.paths) {
    if (!uses_edge(p, e)) continue;
    any_through = true;
    if (p.edges.size() == 1) {
      unbounded = true;
      continue;
    }
    Capacity rest = std::numeric_limits<Capacity>::max();
    for (EdgeId f : p.edges) {
      if (f != e) rest = std::min(rest, graph.capacity(f));
    }
    best_rest = std::max(best_rest, rest);
  }
  const Capacity threshold = guard == UpperGuard::kOptimum ? optimum : ce;
  if (any_through && (unbounded || best_rest > threshold)) {
    result.upper = Tolerance::finite(optimum - ce);
  }
  return result;
}

EdgeTolerances brute_tolerances(const CapacitatedGraph& graph, VertexId s, VertexId t,
                                EdgeId e) {
  const PathSet paths = enumerate_simple_paths(graph, s, t);
  return formula_tolerances(graph, paths, canonical_witness(graph, paths), e);
}

bool check_perturbation(const CapacitatedGraph& graph, const PathSet& paths,
                        std::size_t witness, EdgeId e, Capacity delta) {
  Capacity best = std::numeric_limits<Capacity>::min();
  for (const SimplePath& p : paths.paths) {
    best = std::max(best, perturbed_bottleneck(graph, p, e, delta));
  }
  return perturbed_bottleneck(graph, paths.paths[witness], e, delta) == best;
}

bool check_perturbation(const CapacitatedGraph& graph, VertexId s, VertexId t, EdgeId e,
                        Capacity delta) {
  const PathSet paths = enumerate_simple_paths(graph, s, t);
  return check_perturbation(graph, paths, canonical_witness(graph, paths), e, delta);
}

EdgeTolerances sweep_tolerances(const CapacitatedGraph& graph, const PathSet& paths,
                                std::size_t witness, EdgeId e) {
  require_range(graph);
  Capacity lo_cap = std::numeric_limits<Capacity>::max();
  Capacity hi_cap = std::numeric_limits<Capacity>::min();
  for (const Edge& edge : graph.edges()) {
    lo_cap = std::min(lo_cap, edge.capacity);
    hi_cap = std::max(hi_cap, edge.capacity);
  }
  // Past this distance every comparison involving c(e) is settled.
  const Capacity bound = hi_cap - lo_cap + 1;

  auto supremum = [&](Capacity sign) {
    auto holds = [&](Capacity alpha) {
      return check_perturbation(graph, paths, witness, e, sign * alpha);
    };
    if (holds(bound)) return Tolerance::infinite();
    Capacity good = 0;  // holds(0) is optimality of the witness itself
    Capacity bad = bound;
    while (bad - good > 1) {
      const Capacity mid = good + (bad - good) / 2;
      (holds(mid) ? good : bad) = mid;
    }
    return Tolerance::finite(good);
  };
  return {supremum(-1), supremum(+1)};
}

EdgeTolerances sweep_tolerances(const CapacitatedGraph& graph, VertexId s, VertexId t,
                                EdgeId e) {
  const PathSet paths = enumerate_simple_paths(graph, s, t);
  return sweep_tolerances(graph, paths, canonical_witness(graph, paths), e);
}

std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const CapacitatedGraph& graph,
                                                          std::size_t subset_cap) {
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  if (n == 0) return {};
  const std::size_t k = n - 1;
  if (k > m) return {};
  // C(m, k) with early exit.
  {
    double subsets = 1;
    for (std::size_t i = 0; i < k; ++i) {
      subsets = subsets * static_cast<double>(m - i) / static_cast<double>(i + 1);
    }
    if (subsets > static_cast<double>(subset_cap)) {
      throw LimitExceeded("reference oracle: too many edge subsets to enumerate");
    }
  }

  std::vector<std::vector<EdgeId>> trees;
  std::vector<EdgeId> chosen;
  std::function<void(std::uint32_t)> pick = [&](std::uint32_t next) {
    if (chosen.size() == k) {
      auto sets = DisjointSets::singletons(n);
      for (EdgeId e : chosen) {
        const std::size_t x = sets.find(index(graph.edge(e).u));
        const std::size_t y = sets.find(index(graph.edge(e).v));
        if (x == y) return;
        sets.join(x, y);
      }
      trees.push_back(chosen);
      return;
    }
    for (std::uint32_t i = next; i + (k - chosen.size()) <= m; ++i) {
      chosen.push_back(EdgeId{i});
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return trees;
}

std::vector<EdgeId> brute_max_spanning_tree(const CapacitatedGraph& graph) {
  const auto trees = enumerate_spanning_trees(graph);
  if (trees.empty()) throw UsageError("reference oracle: no spanning tree");
  auto total = [&](const std::vector<EdgeId>& tree) {
    Capacity sum = 0;
    for (EdgeId e : tree) sum += graph.capacity(e);
    return sum;
  };
  return *std::max_element(trees.begin(), trees.end(),
                           [&](const auto& a, const auto& b) { return total(a) < total(b); });
}

std::vector<EdgeId> tree_path_edges(const CapacitatedGraph& graph,
                                    const std::vector<EdgeId>& tree_edges, VertexId s,
                                    VertexId t) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<Incidence>> adjacency(n);
  for (EdgeId e : tree_edges) {
    adjacency[index(graph.edge(e).u)].push_back({graph.edge(e).v, e});
    adjacency[index(graph.edge(e).v)].push_back({graph.edge(e).u, e});
  }
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> via(n, kUnseen);  // edge used to reach the vertex
  std::vector<VertexId> from(n, s);
  std::vector<VertexId> queue{s};
  std::vector<char> seen(n, 0);
  seen[index(s)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Incidence& inc : adjacency[index(queue[head])]) {
      if (seen[index(inc.neighbor)]) continue;
      seen[index(inc.neighbor)] = 1;
      via[index(inc.neighbor)] = index(inc.edge);
      from[index(inc.neighbor)] = queue[head];
      queue.push_back(inc.neighbor);
    }
  }
  if (!seen[index(t)]) throw UsageError("reference oracle: t unreachable in tree");
  std::vector<EdgeId> path;
  for (VertexId v = t; v != s; v = from[index(v)]) path.push_back(EdgeId{via[index(v)]});
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::optional<EdgeId>> naive_upper_replacements(
    const CapacitatedGraph& graph, const std::vector<EdgeId>& tree_edges) {
  std::vector<char> member(graph.edge_count(), 0);
  for (EdgeId e : tree_edges) member[index(e)] = 1;
  std::vector<std::optional<EdgeId>> upper(graph.edge_count());
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    if (member[i]) continue;
    const Edge& edge = graph.edge(EdgeId{i});
    std::optional<EdgeId> best;
    for (EdgeId f : tree_path_edges(graph, tree_edges, edge.u, edge.v)) {
      if (!best || graph.rank(f) < graph.rank(*best)) best = f;
    }
    upper[i] = best;
  }
  return upper;
}

std::vector<std::optional<EdgeId>> naive_lower_replacements(
    const CapacitatedGraph& graph, const std::vector<EdgeId>& tree_edges) {
  std::vector<char> member(graph.edge_count(), 0);
  for (EdgeId e : tree_edges) member[index(e)] = 1;
  std::vector<std::optional<EdgeId>> lower(graph.edge_count());
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    if (member[i]) continue;
    const EdgeId covering{i};
    const Edge& edge = graph.edge(covering);
    for (EdgeId f : tree_path_edges(graph, tree_edges, edge.u, edge.v)) {
      auto& slot = lower[index(f)];
      if (!slot || graph.rank(covering) > graph.rank(*slot)) slot = covering;
    }
  }
  return lower;
}

}  // namespace bptol::reference
