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

#include "bptol/verification.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bptol/error.hpp"
#include "bptol/random_graph.hpp"
#include "bptol/reference_oracle.hpp"

namespace bptol {
namespace {

std::string format(const EdgeTolerances& t) {
  return "(" + t.lower.to_string() + ", " + t.upper.to_string() + ")";
}

// Perturbation boundary check for one side; sign -1 is the lower tolerance.
bool perturbation_agrees(const CapacitatedGraph& graph, const reference::PathSet& paths,
                         std::size_t witness, EdgeId e, const Tolerance& tolerance,
                         Capacity sign, Capacity beyond_range, std::size_t& checks) {
  if (tolerance.is_infinite()) {
    ++checks;
    return reference::check_perturbation(graph, paths, witness, e, sign * beyond_range);
  }
  checks += 2;
  const Capacity tau = tolerance.value();
  return reference::check_perturbation(graph, paths, witness, e, sign * tau) &&
         !reference::check_perturbation(graph, paths, witness, e, sign * (tau + 1));
}

}  // namespace

std::string Counterexample::describe() const {
  std::ostringstream out;
  out << "counterexample (instance " << instance << "): " << reason << '\n';
  out << "pair " << external(pair.source) << ' ' << external(pair.target);
  if (edge) {
    out << " edge " << external(*edge) << " fast " << format(fast) << " reference "
        << format(reference);
  }
  out << "\ngraph:\n" << graph;
  return out.str();
}

std::optional<Counterexample> verify_instance(const CapacitatedGraph& graph,
                                              const std::vector<QueryPair>& pairs,
                                              VerificationStats& stats) {
  const auto oracle = ToleranceOracle::preprocess(graph, pairs);

  Capacity lo_cap = 0;
  Capacity hi_cap = 0;
  if (graph.edge_count() > 0) {
    const auto [lo, hi] = std::minmax_element(
        graph.edges().begin(), graph.edges().end(),
        [](const Edge& a, const Edge& b) { return a.capacity < b.capacity; });
    lo_cap = lo->capacity;
    hi_cap = hi->capacity;
  }
  const Capacity beyond_range = hi_cap - lo_cap + 1;

  auto fail = [&](const QueryPair& pair, std::optional<EdgeId> e, EdgeTolerances fast,
                  EdgeTolerances ref, std::string reason) {
    return Counterexample{0, serialize(graph), pair, e, fast, ref, std::move(reason)};
  };

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const QueryPair& pair = pairs[i];
    ++stats.pairs;
    const auto paths = reference::enumerate_simple_paths(graph, pair.source, pair.target);
    const std::size_t witness = reference::canonical_witness(graph, paths);
    const Capacity brute = reference::path_bottleneck(graph, paths.paths[witness]);
    if (brute != oracle.bottleneck_value(i)) {
      return fail(pair, std::nullopt, {}, {},
                  "bottleneck value " + std::to_string(oracle.bottleneck_value(i)) +
                      " != brute force " + std::to_string(brute));
    }

    for (std::uint32_t k = 0; k < graph.edge_count(); ++k) {
      const EdgeId e{k};
      ++stats.edge_queries;
      const EdgeTolerances fast = oracle.query_edge_for_pair(e, i);
      const EdgeTolerances ref = reference::formula_tolerances(graph, paths, witness, e);
      if (fast != ref) return fail(pair, e, fast, ref, "fast result differs from reference");

      for (const Tolerance* t : {&fast.lower, &fast.upper}) {
        if (!t->is_finite()) continue;
        ++stats.finite_tolerances;
        if (t->value() <= 0) {
          ++stats.non_positive_finite;
          return fail(pair, e, fast, ref, "finite tolerance is not positive");
        }
      }
      if (fast.lower.is_finite() && fast.upper.is_finite()) {
        ++stats.both_finite;
        return fail(pair, e, fast, ref, "both tolerances finite");
      }
      if (!perturbation_agrees(graph, paths, witness, e, fast.lower, -1, beyond_range,
                               stats.perturbation_checks)) {
        return fail(pair, e, fast, ref, "lower tolerance disagrees with perturbation");
      }
      if (!perturbation_agrees(graph, paths, witness, e, fast.upper, +1, beyond_range,
                               stats.perturbation_checks)) {
        return fail(pair, e, fast, ref, "upper tolerance disagrees with perturbation");
      }
    }
  }
  return std::nullopt;
}

VerificationReport run_verification(const VerificationOptions& options) {
  if (options.max_n < 2) throw UsageError("verify: max_n must be at least 2");
  if (options.max_n > reference::kDefaultVertexCap) {
    throw UsageError("verify: max_n above the reference oracle cap of " +
                     std::to_string(reference::kDefaultVertexCap));
  }
  VerificationReport report;
  for (std::size_t i = 0; i < options.instances; ++i) {
    std::mt19937_64 rng(derive_seed(options.seed, i));
    const std::size_t n = 2 + uniform_below(rng, options.max_n - 1);
    const std::size_t max_m = n * (n - 1) / 2;
    const std::size_t m = (n - 1) + uniform_below(rng, max_m - (n - 1) + 1);
    const auto spread = static_cast<Capacity>(4 * m);
    const auto graph = random_connected_graph(n, m, rng, {-spread, spread});

    std::vector<QueryPair> pairs;
    for (std::uint32_t s = 0; s < n; ++s) {
      for (std::uint32_t t = s + 1; t < n; ++t) pairs.push_back({VertexId{s}, VertexId{t}});
    }

    ++report.stats.instances;
    if (auto failure = verify_instance(graph, pairs, report.stats)) {
      failure->instance = i;
      report.failure = std::move(failure);
      break;
    }
  }
  return report;
}

}  // namespace bptol
