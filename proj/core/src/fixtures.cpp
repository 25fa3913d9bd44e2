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

#include "bptol/fixtures.hpp"

namespace bptol::fixtures {
namespace {

Edge edge(std::uint32_t u, std::uint32_t v, Capacity c) {
  return {VertexId{u - 1}, VertexId{v - 1}, c};
}

}  // namespace

CapacitatedGraph triangle() {
  return CapacitatedGraph(3, {edge(1, 2, 5), edge(2, 3, 3), edge(1, 3, 1)});
}

CapacitatedGraph diamond() {
  return CapacitatedGraph(4, {edge(1, 2, 10), edge(2, 3, 8), edge(3, 4, 6),
                              edge(1, 3, 4), edge(2, 4, 2)});
}

CapacitatedGraph single_edge() { return CapacitatedGraph(2, {edge(1, 2, 7)}); }

}  // namespace bptol::fixtures
