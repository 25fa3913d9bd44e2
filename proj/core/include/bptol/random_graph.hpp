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

#ifndef BPTOL_RANDOM_GRAPH_HPP_
#define BPTOL_RANDOM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "bptol/graph.hpp"

namespace bptol {

// std::mt19937_64 output is fully specified, but the standard distributions
// are not; these helpers keep generated instances identical across standard
// libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

struct RandomGraphOptions {
  Capacity min_capacity = 1;
  Capacity max_capacity = Capacity{1} << 40;
};

// Simple connected graph with n vertices, m edges and pairwise-distinct
// capacities drawn from [min_capacity, max_capacity]. Edge order and
// endpoint orientation are shuffled. Throws UsageError if (n, m) is
// infeasible or the capacity range is smaller than m.
CapacitatedGraph random_connected_graph(std::size_t n, std::size_t m,
                                        std::mt19937_64& rng,
                                        const RandomGraphOptions& options = {});

// k pairs with s != t (n >= 2 when k > 0).
std::vector<QueryPair> random_pairs(std::size_t n, std::size_t k, std::mt19937_64& rng);

}  // namespace bptol

#endif  // BPTOL_RANDOM_GRAPH_HPP_
