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

// bptol: online tolerances of bottleneck (max-min) paths.
//
//   bptol validate <graph>
//   bptol serve <graph> <pairs>     queries on stdin, answers on stdout
//   bptol all <graph> <pairs>       every edge against every pair
//   bptol verify [max_n] [instances] [--seed S]
//   bptol bench [n] [m] [k] [queries] [--seed S]
//
// Exit codes: 0 ok, 1 validation/verification failure, 2 I/O or usage error.

#include <iostream>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace bptol::cli;

  CLI::App app{"Online tolerances for bottleneck (max-min) paths"};
  app.require_subcommand(1);
  bool break_ties = false;
  app.add_flag("--break-ties", break_ties,
               "Accept equal capacities, ordering edges by (capacity, edge id); "
               "results hold for an infinitesimally perturbed instance");

  std::string graph_file;
  InputOptions input;

  auto* validate = app.add_subcommand("validate", "Parse and validate a graph file");
  validate->add_option("graph", graph_file, "Graph file")->required();

  auto* serve = app.add_subcommand("serve", "Answer edge queries from stdin");
  serve->add_option("graph", input.graph_file, "Graph file")->required();
  serve->add_option("pairs", input.pairs_file, "Pairs file")->required();

  auto* all = app.add_subcommand("all", "Dump tolerances of every edge for every pair");
  all->add_option("graph", input.graph_file, "Graph file")->required();
  all->add_option("pairs", input.pairs_file, "Pairs file")->required();

  bptol::VerificationOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Compare against the brute-force reference");
  verify->add_option("max_n,--max-n", verify_options.max_n, "Largest vertex count")
      ->capture_default_str();
  verify->add_option("instances,--instances", verify_options.instances,
                     "Number of random instances")
      ->capture_default_str();
  verify->add_option("seed,--seed", verify_options.seed, "Random seed")
      ->capture_default_str();

  BenchOptions bench_options;
  auto* bench = app.add_subcommand("bench", "Time preprocessing and edge queries");
  bench->add_option("n,--n", bench_options.n, "Vertices")->capture_default_str();
  bench->add_option("m,--m", bench_options.m, "Edges")->capture_default_str();
  bench->add_option("k,--k", bench_options.k, "Source-target pairs")->capture_default_str();
  bench->add_option("queries,--queries", bench_options.queries, "Edge queries")
      ->capture_default_str();
  bench->add_option("--seed", bench_options.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  input.break_ties = break_ties;
  if (*validate) return cmd_validate(graph_file, break_ties, std::cout, std::cerr);
  if (*serve) return cmd_serve(input, std::cin, std::cout, std::cerr);
  if (*all) return cmd_all(input, std::cout, std::cerr);
  if (*verify) return cmd_verify(verify_options, std::cout, std::cerr);
  if (*bench) return cmd_bench(bench_options, std::cout, std::cerr);
  return kUsage;
}
