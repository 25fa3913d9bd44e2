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

#ifndef BPTOL_VERIFICATION_HPP_
#define BPTOL_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bptol/graph.hpp"
#include "bptol/tolerance_oracle.hpp"

namespace bptol {

struct VerificationOptions {
  std::size_t max_n = 8;
  std::size_t instances = 500;
  std::uint64_t seed = 42;
};

struct VerificationStats {
  std::size_t instances = 0;
  std::size_t pairs = 0;
  std::size_t edge_queries = 0;       // (edge, pair) combinations compared
  std::size_t perturbation_checks = 0;
  std::size_t finite_tolerances = 0;
  std::size_t non_positive_finite = 0;
  std::size_t both_finite = 0;
};

struct Counterexample {
  std::size_t instance = 0;
  std::string graph;  // graph file text
  QueryPair pair{};
  std::optional<EdgeId> edge;
  EdgeTolerances fast;
  EdgeTolerances reference;
  std::string reason;

  std::string describe() const;
};

struct VerificationReport {
  VerificationStats stats;
  std::optional<Counterexample> failure;

  bool passed() const noexcept { return !failure.has_value(); }
};

// Checks one instance against the brute-force reference, for every edge and
// every pair:
//  - bottleneck value equals the path-enumeration optimum,
//  - fast (lower, upper) equals the closed-form reference exactly,
//  - each finite tolerance t holds at t and breaks at t + 1 under explicit
//    perturbation; each infinite one holds past the whole capacity range,
//  - finite values are positive and never both finite.
// Returns the first failure; stats accumulate.
std::optional<Counterexample> verify_instance(const CapacitatedGraph& graph,
                                              const std::vector<QueryPair>& pairs,
                                              VerificationStats& stats);

// Random connected graphs with 2..max_n vertices and distinct capacities, all
// unordered vertex pairs per instance. Instance i is generated from
// derive_seed(seed, i), so runs are reproducible.
VerificationReport run_verification(const VerificationOptions& options);

}  // namespace bptol

#endif  // BPTOL_VERIFICATION_HPP_
