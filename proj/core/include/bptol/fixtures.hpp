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

#ifndef BPTOL_FIXTURES_HPP_
#define BPTOL_FIXTURES_HPP_

#include "bptol/graph.hpp"

// Small hand-checked instances shared by tests, docs and the CLI goldens.
namespace bptol::fixtures {

// Triangle: e1 = (1,2,5), e2 = (2,3,3), e3 = (1,3,1).
CapacitatedGraph triangle();
// Four vertices: f1 = (1,2,10), f2 = (2,3,8), f3 = (3,4,6), f4 = (1,3,4),
// f5 = (2,4,2).
CapacitatedGraph diamond();
// Single edge (1,2,7).
CapacitatedGraph single_edge();

}  // namespace bptol::fixtures

#endif  // BPTOL_FIXTURES_HPP_
