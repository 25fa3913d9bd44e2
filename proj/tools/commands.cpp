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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bptol/error.hpp"
#include "bptol/graph.hpp"
#include "bptol/random_graph.hpp"

namespace bptol::cli {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Loaded {
  std::optional<ToleranceOracle> oracle;
  int code = kOk;
};

std::optional<CapacitatedGraph> load_graph(const std::filesystem::path& file,
                                           bool break_ties, std::ostream& err, int& code) {
  std::ifstream in(file);
  if (!in) {
    err << "error: cannot open graph file " << file.string() << '\n';
    code = kUsage;
    return std::nullopt;
  }
  try {
    CapacitatedGraph graph = parse_graph(in);
    if (auto violation = validate(graph, {.break_ties = break_ties})) {
      err << "invalid: " << violation->message << '\n';
      code = kFailure;
      return std::nullopt;
    }
    return graph;
  } catch (const ParseError& e) {
    err << "parse error: " << file.string() << ": " << e.what() << '\n';
    code = kFailure;
    return std::nullopt;
  }
}

Loaded load_oracle(const InputOptions& input, std::ostream& err) {
  Loaded loaded;
  auto graph = load_graph(input.graph_file, input.break_ties, err, loaded.code);
  if (!graph) return loaded;

  std::ifstream in(input.pairs_file);
  if (!in) {
    err << "error: cannot open pairs file " << input.pairs_file.string() << '\n';
    loaded.code = kUsage;
    return loaded;
  }
  try {
    auto pairs = parse_pairs(in);
    loaded.oracle = ToleranceOracle::preprocess(std::move(*graph), std::move(pairs));
  } catch (const ParseError& e) {
    err << "parse error: " << input.pairs_file.string() << ": " << e.what() << '\n';
    loaded.code = kFailure;
  } catch (const UsageError& e) {
    err << "invalid: " << e.what() << '\n';
    loaded.code = kFailure;
  }
  return loaded;
}

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

std::optional<std::uint64_t> to_uint(std::string_view field) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

std::uint64_t endpoint_key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

}  // namespace

void write_record(std::ostream& out, std::size_t pair_index, const QueryPair& pair,
                  const EdgeTolerances& tolerances) {
  out << pair_index + 1 << ' ' << external(pair.source) << ' ' << external(pair.target)
      << ' ' << tolerances.lower.to_string() << ' ' << tolerances.upper.to_string()
      << '\n';
}

void serve_session(const ToleranceOracle& oracle, std::istream& in, std::ostream& out) {
  const CapacitatedGraph& graph = oracle.graph();
  std::unordered_map<std::uint64_t, EdgeId> by_endpoints;
  by_endpoints.reserve(graph.edge_count());
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(EdgeId{i});
    by_endpoints.emplace(endpoint_key(index(e.u), index(e.v)), EdgeId{i});
  }

  std::vector<EdgeTolerances> answers(oracle.pair_count());
  std::string line;
  while (std::getline(in, line)) {
    const auto fields = fields_of(line);
    if (fields.empty()) continue;

    std::optional<EdgeId> edge;
    bool well_formed = false;
    if (fields.size() == 2 && fields[0] == "edge") {
      if (auto id = to_uint(fields[1])) {
        well_formed = true;
        if (*id >= 1 && *id <= graph.edge_count()) {
          edge = EdgeId{static_cast<std::uint32_t>(*id - 1)};
        }
      }
    } else if (fields.size() == 2) {
      auto u = to_uint(fields[0]);
      auto v = to_uint(fields[1]);
      if (u && v) {
        well_formed = true;
        if (*u >= 1 && *v >= 1 && *u <= graph.vertex_count() && *v <= graph.vertex_count()) {
          auto it = by_endpoints.find(endpoint_key(*u - 1, *v - 1));
          if (it != by_endpoints.end()) edge = it->second;
        }
      }
    }

    if (!well_formed) {
      out << "error malformed-query\n" << std::flush;
      continue;
    }
    if (!edge) {
      out << "error unknown-edge\n" << std::flush;
      continue;
    }
    oracle.query_edge(*edge, answers);
    for (std::size_t i = 0; i < answers.size(); ++i) {
      write_record(out, i, oracle.context(i).pair, answers[i]);
    }
    out << '\n' << std::flush;
  }
}

void write_all(const ToleranceOracle& oracle, std::ostream& out) {
  const CapacitatedGraph& graph = oracle.graph();
  out << graph.vertex_count() << ' ' << graph.edge_count() << ' ' << oracle.pair_count()
      << '\n';
  std::vector<EdgeTolerances> answers(oracle.pair_count());
  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    oracle.query_edge(EdgeId{i}, answers);
    for (std::size_t p = 0; p < answers.size(); ++p) {
      out << i + 1 << ' ';
      write_record(out, p, oracle.context(p).pair, answers[p]);
    }
  }
}

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  std::mt19937_64 rng(options.seed);

  auto start = Clock::now();
  auto graph = random_connected_graph(options.n, options.m, rng);
  auto pairs = random_pairs(options.n, options.k, rng);
  report.generate_ms = millis_since(start);

  start = Clock::now();
  const auto oracle = ToleranceOracle::preprocess(std::move(graph), std::move(pairs));
  report.preprocess_ms = millis_since(start);

  std::vector<EdgeId> edges(options.queries);
  for (auto& e : edges) e = EdgeId{static_cast<std::uint32_t>(uniform_below(rng, options.m))};

  std::vector<EdgeTolerances> answers(oracle.pair_count());
  std::vector<double> micros;
  micros.reserve(edges.size());
  for (EdgeId e : edges) {
    const auto t0 = Clock::now();
    oracle.query_edge(e, answers);
    const auto t1 = Clock::now();
    micros.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    for (const EdgeTolerances& a : answers) {
      report.checksum += a.lower.is_finite() ? static_cast<std::uint64_t>(a.lower.value()) : 1;
      report.checksum += a.upper.is_finite() ? static_cast<std::uint64_t>(a.upper.value()) : 1;
    }
  }
  if (!micros.empty()) {
    double total = 0;
    for (double x : micros) total += x;
    report.query_mean_us = total / static_cast<double>(micros.size());
    const std::size_t rank = (micros.size() * 99) / 100;
    std::nth_element(micros.begin(), micros.begin() + static_cast<std::ptrdiff_t>(
                                                          std::min(rank, micros.size() - 1)),
                     micros.end());
    report.query_p99_us = micros[std::min(rank, micros.size() - 1)];
  }
  return report;
}

void write_bench_report(std::ostream& out, const BenchOptions& options,
                        const BenchReport& report) {
  out << "n " << options.n << '\n'
      << "m " << options.m << '\n'
      << "k " << options.k << '\n'
      << "queries " << options.queries << '\n'
      << "seed " << options.seed << '\n'
      << std::fixed << std::setprecision(3)
      << "generate_ms " << report.generate_ms << '\n'
      << "preprocess_ms " << report.preprocess_ms << '\n'
      << "query_mean_us " << report.query_mean_us << '\n'
      << "query_p99_us " << report.query_p99_us << '\n'
      << "checksum " << report.checksum << '\n';
}

int cmd_validate(const std::filesystem::path& graph_file, bool break_ties,
                 std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto graph = load_graph(graph_file, break_ties, err, code);
  if (!graph) return code;
  out << "ok " << graph->vertex_count() << ' ' << graph->edge_count() << '\n';
  return kOk;
}

int cmd_serve(const InputOptions& input, std::istream& in, std::ostream& out,
              std::ostream& err) {
  auto loaded = load_oracle(input, err);
  if (!loaded.oracle) return loaded.code;
  serve_session(*loaded.oracle, in, out);
  return kOk;
}

int cmd_all(const InputOptions& input, std::ostream& out, std::ostream& err) {
  auto loaded = load_oracle(input, err);
  if (!loaded.oracle) return loaded.code;
  write_all(*loaded.oracle, out);
  return kOk;
}

int cmd_verify(const VerificationOptions& options, std::ostream& out, std::ostream& err) {
  VerificationReport report;
  try {
    report = run_verification(options);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const VerificationStats& s = report.stats;
  out << (report.passed() ? "pass" : "fail") << '\n'
      << "max_n " << options.max_n << '\n'
      << "seed " << options.seed << '\n'
      << "instances " << s.instances << '\n'
      << "pairs " << s.pairs << '\n'
      << "edge_queries " << s.edge_queries << '\n'
      << "perturbation_checks " << s.perturbation_checks << '\n'
      << "finite_tolerances " << s.finite_tolerances << '\n'
      << "non_positive_finite " << s.non_positive_finite << '\n'
      << "both_finite " << s.both_finite << '\n';
  if (report.failure) {
    out << report.failure->describe();
    return kFailure;
  }
  return kOk;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  try {
    write_bench_report(out, options, run_bench(options));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace bptol::cli
