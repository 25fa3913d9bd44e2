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

#ifndef BPTOL_UNION_FIND_HPP_
#define BPTOL_UNION_FIND_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bptol {

// Disjoint sets over the element universe [0, universe) with the classic
// Create/Find/Join interface. Union by rank plus path compression.
//
// join() takes canonical elements (as returned by find()), matching the
// textbook Join(x, y). unite() is the convenience form that finds first.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t universe = 0);

  // Universe with every element already created as a singleton.
  static DisjointSets singletons(std::size_t universe);

  void create(std::size_t x);
  std::size_t find(std::size_t x);
  // Returns the canonical element of the merged set.
  std::size_t join(std::size_t x, std::size_t y);
  // Returns the canonical element of the merged set; no-op if already joined.
  std::size_t unite(std::size_t a, std::size_t b);

  bool contains(std::size_t x) const noexcept {
    return x < present_.size() && present_[x] != 0;
  }
  bool is_canonical(std::size_t x) const noexcept {
    return contains(x) && parent_[x] == x;
  }
  std::size_t count() const noexcept { return count_; }
  std::size_t universe() const noexcept { return parent_.size(); }

 private:
  void require_present(std::size_t x) const;

  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> present_;
  std::size_t count_ = 0;
};

}  // namespace bptol

#endif  // BPTOL_UNION_FIND_HPP_
