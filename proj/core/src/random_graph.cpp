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

#include "bptol/random_graph.hpp"

#include <unordered_set>

#include "bptol/error.hpp"

namespace bptol {
namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw UsageError("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined input
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CapacitatedGraph random_connected_graph(std::size_t n, std::size_t m,
                                        std::mt19937_64& rng,
                                        const RandomGraphOptions& options) {
  if (n == 0) throw UsageError("random graph: need at least one vertex");
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) {
    throw UsageError("random graph: infeasible (n, m) = (" + std::to_string(n) + ", " +
                     std::to_string(m) + ")");
  }
  if (options.max_capacity < options.min_capacity) {
    throw UsageError("random graph: empty capacity range");
  }
  const auto range = static_cast<std::uint64_t>(options.max_capacity - options.min_capacity) + 1;
  if (range < m) throw UsageError("random graph: capacity range smaller than m");

  // Random recursive tree over a shuffled vertex order.
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints;
  endpoints.reserve(m);
  std::unordered_set<std::uint64_t> used;
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint32_t a = order[i];
    const std::uint32_t b = order[uniform_below(rng, i)];
    endpoints.emplace_back(a, b);
    used.insert(pair_key(a, b));
  }

  const std::size_t extra = m - (n - 1);
  if (extra > 0 && 2 * extra > max_edges - (n - 1)) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (!used.contains(pair_key(a, b))) free.emplace_back(a, b);
      }
    }
    shuffle(free, rng);
    endpoints.insert(endpoints.end(), free.begin(), free.begin() + static_cast<std::ptrdiff_t>(extra));
  } else {
    used.reserve(m);
    while (endpoints.size() < m) {
      const auto a = static_cast<std::uint32_t>(uniform_below(rng, n));
      const auto b = static_cast<std::uint32_t>(uniform_below(rng, n));
      if (a == b || !used.insert(pair_key(a, b)).second) continue;
      endpoints.emplace_back(a, b);
    }
  }
  shuffle(endpoints, rng);

  std::vector<Capacity> capacities;
  capacities.reserve(m);
  if (range < 2 * static_cast<std::uint64_t>(m)) {
    for (std::uint64_t i = 0; i < range; ++i) {
      capacities.push_back(options.min_capacity + static_cast<Capacity>(i));
    }
    shuffle(capacities, rng);
    capacities.resize(m);
  } else {
    std::unordered_set<Capacity> taken;
    taken.reserve(m);
    while (capacities.size() < m) {
      const Capacity c = options.min_capacity + static_cast<Capacity>(uniform_below(rng, range));
      if (taken.insert(c).second) capacities.push_back(c);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = endpoints[i];
    if (uniform_below(rng, 2) != 0) std::swap(a, b);
    edges.push_back({VertexId{a}, VertexId{b}, capacities[i]});
  }
  return CapacitatedGraph(n, std::move(edges));
}

std::vector<QueryPair> random_pairs(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k > 0 && n < 2) throw UsageError("random pairs: need at least two vertices");
  std::vector<QueryPair> pairs;
  pairs.reserve(k);
  while (pairs.size() < k) {
    const auto s = static_cast<std::uint32_t>(uniform_below(rng, n));
    const auto t = static_cast<std::uint32_t>(uniform_below(rng, n));
    if (s != t) pairs.push_back({VertexId{s}, VertexId{t}});
  }
  return pairs;
}

}  // namespace bptol
