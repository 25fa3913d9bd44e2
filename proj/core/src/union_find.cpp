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

#include "bptol/union_find.hpp"

#include <string>
#include <utility>

#include "bptol/error.hpp"

namespace bptol {

DisjointSets::DisjointSets(std::size_t universe)
    : parent_(universe), rank_(universe, 0), present_(universe, 0) {
  for (std::size_t i = 0; i < universe; ++i) parent_[i] = i;
}

DisjointSets DisjointSets::singletons(std::size_t universe) {
  DisjointSets sets(universe);
  sets.present_.assign(universe, 1);
  sets.count_ = universe;
  return sets;
}

void DisjointSets::require_present(std::size_t x) const {
  if (!contains(x)) {
    throw UsageError("disjoint sets: element " + std::to_string(x) +
                     " was never created");
  }
}

void DisjointSets::create(std::size_t x) {
  if (x >= parent_.size()) {
    throw UsageError("disjoint sets: element " + std::to_string(x) +
                     " outside universe");
  }
  if (present_[x]) {
    throw UsageError("disjoint sets: element " + std::to_string(x) +
                     " created twice");
  }
  present_[x] = 1;
  parent_[x] = x;
  rank_[x] = 0;
  ++count_;
}

std::size_t DisjointSets::find(std::size_t x) {
  require_present(x);
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

std::size_t DisjointSets::join(std::size_t x, std::size_t y) {
  if (!is_canonical(x) || !is_canonical(y)) {
    throw UsageError("disjoint sets: join needs canonical elements");
  }
  if (x == y) throw UsageError("disjoint sets: join of a set with itself");
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --count_;
  return x;
}

std::size_t DisjointSets::unite(std::size_t a, std::size_t b) {
  const std::size_t x = find(a);
  const std::size_t y = find(b);
  return x == y ? x : join(x, y);
}

}  // namespace bptol
