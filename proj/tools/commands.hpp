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

#ifndef BPTOL_TOOLS_COMMANDS_HPP_
#define BPTOL_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "bptol/tolerance_oracle.hpp"
#include "bptol/verification.hpp"

namespace bptol::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // validation or verification failure
  kUsage = 2,    // I/O or usage error
};

struct InputOptions {
  std::filesystem::path graph_file;
  std::filesystem::path pairs_file;
  bool break_ties = false;
};

struct BenchOptions {
  std::size_t n = 100'000;
  std::size_t m = 500'000;
  std::size_t k = 1'000;
  std::size_t queries = 100'000;
  std::uint64_t seed = 7;
};

struct BenchReport {
  double generate_ms = 0;
  double preprocess_ms = 0;
  double query_mean_us = 0;
  double query_p99_us = 0;
  std::uint64_t checksum = 0;  // keeps the query loop observable
};

// "i s t lower upper" with 1-based pair index and vertices.
void write_record(std::ostream& out, std::size_t pair_index, const QueryPair& pair,
                  const EdgeTolerances& tolerances);

// Request/response loop: one request per line ("edge <id>" or "<u> <v>"),
// k records and a blank line per answer, flushed after each query.
void serve_session(const ToleranceOracle& oracle, std::istream& in, std::ostream& out);

// Header "n m k", then "<edge> i s t lower upper" per (edge, pair), ordered
// by edge id and then pair index.
void write_all(const ToleranceOracle& oracle, std::ostream& out);

BenchReport run_bench(const BenchOptions& options);
void write_bench_report(std::ostream& out, const BenchOptions& options,
                        const BenchReport& report);

int cmd_validate(const std::filesystem::path& graph_file, bool break_ties,
                 std::ostream& out, std::ostream& err);
int cmd_serve(const InputOptions& input, std::istream& in, std::ostream& out,
              std::ostream& err);
int cmd_all(const InputOptions& input, std::ostream& out, std::ostream& err);
int cmd_verify(const VerificationOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace bptol::cli

#endif  // BPTOL_TOOLS_COMMANDS_HPP_
