// Copyright 2026 The Junta LCC Authors.
//
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

// Command-line workbench for the local correctors and lower-bound
// experiments. Exit codes: 0 success, 1 runtime error, 2 config error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "junta_lcc/acceptance.h"
#include "junta_lcc/analysis.h"
#include "junta_lcc/boolfn.h"
#include "junta_lcc/harness.h"
#include "junta_lcc/lowerbound.h"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kConfigError = 2;

struct CorrectArgs {
  std::string algo;
  int k = 1;
  std::size_t n = 1;
  std::string corruption = "none";
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string x_mode = "random";
  std::string x_hex;
  std::optional<int> repeat_t;
  std::string out;
  unsigned threads = 0;
};

struct LowerboundArgs {
  std::string strategy;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t queries = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int RunCorrect(const CorrectArgs& args) {
  junta_lcc::ExperimentConfig cfg;
  cfg.algo = junta_lcc::ParseAlgo(args.algo);
  cfg.k = args.k;
  cfg.n = args.n;
  cfg.corruption = args.corruption;
  cfg.trials = args.trials;
  cfg.master_seed = args.seed;
  cfg.x_mode = junta_lcc::ParseXMode(args.x_mode);
  cfg.x_hex = args.x_hex;
  cfg.repeat_t = args.repeat_t;
  cfg.out_path = args.out;
  cfg.threads = args.threads;
  const auto result = junta_lcc::RunCorrectionExperiment(cfg);
  junta_lcc::EmitReport(result.records, result.summary, cfg.out_path);
  std::cout << result.summary.ToJson() << '\n';
  return 0;
}

int RunLowerbound(const LowerboundArgs& args) {
  const auto strategy = junta_lcc::ParseStrategy(args.strategy);
  const auto report = junta_lcc::RunDistinguisher(strategy, args.queries, args.n,
                                                  args.k, args.trials, args.seed);
  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report file '" + args.out + "'");
  out << report.ToJson() << '\n';
  if (!out.flush()) throw std::runtime_error("failed writing '" + args.out + "'");
  std::cout << report.ToJson() << '\n';
  return 0;
}

int RunInfluence(int k, std::uint64_t samples, std::uint64_t seed,
                 const std::string& table_path) {
  if (!table_path.empty()) {
    std::ifstream in(table_path);
    if (!in) throw std::invalid_argument("cannot open table '" + table_path + "'");
    std::cout << junta_lcc::MinInfluenceReport(junta_lcc::ReadTruthTable(in)).ToJson()
              << '\n';
    return 0;
  }
  nlohmann::ordered_json j;
  j["k"] = k;
  j["samples"] = samples;
  j["seed"] = seed;
  j["fraction_low_influence"] = junta_lcc::FractionLowInfluence(k, samples, seed);
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local correction of Boolean functions known up to isomorphism"};
  app.require_subcommand(1);

  CorrectArgs correct;
  auto* correct_cmd = app.add_subcommand("correct", "Run a correction experiment");
  correct_cmd->add_option("--algo", correct.algo, "cube | influence | symmetric")
      ->required();
  correct_cmd->add_option("--k", correct.k, "Junta size / polynomial degree");
  correct_cmd->add_option("--n", correct.n, "Number of variables")->required();
  correct_cmd->add_option("--corruption", correct.corruption,
                          "none | flips:FILE | iid:EPS:SEED | trunc:T | layer | "
                          "randflips:COUNT:SEED");
  correct_cmd->add_option("--trials", correct.trials, "Number of trials");
  correct_cmd->add_option("--seed", correct.seed, "Master seed");
  correct_cmd->add_option("--x-mode", correct.x_mode,
                          "fixed-hex | random | adversarial-flipped");
  correct_cmd->add_option("--x", correct.x_hex, "Hex point for --x-mode fixed-hex");
  correct_cmd->add_option("--repeat-t", correct.repeat_t,
                          "Odd number of runs for majority amplification");
  correct_cmd->add_option("--out", correct.out, "JSON-lines report path")->required();
  correct_cmd->add_option("--threads", correct.threads, "Worker threads (0 = auto)");

  LowerboundArgs lower;
  auto* lower_cmd = app.add_subcommand("lowerbound", "Run a D0/D1 distinguisher");
  lower_cmd
      ->add_option("--strategy", lower.strategy,
                   "uniform-random-queries | fixed-point-list | cube-sum-at-x_star")
      ->required();
  lower_cmd->add_option("--n", lower.n, "Number of variables (even)")->required();
  lower_cmd->add_option("--k", lower.k, "AND arity")->required();
  lower_cmd->add_option("--queries", lower.queries, "Query budget")->required();
  lower_cmd->add_option("--trials", lower.trials, "Number of trials");
  lower_cmd->add_option("--seed", lower.seed, "Master seed");
  lower_cmd->add_option("--out", lower.out, "JSON report path")->required();

  int infl_k = 10;
  std::uint64_t infl_samples = 200;
  std::uint64_t infl_seed = 0;
  std::string infl_table;
  auto* infl_cmd =
      app.add_subcommand("influence", "Fraction of random cores below the influence threshold");
  infl_cmd->add_option("--k", infl_k, "Core arity (<= 16)");
  infl_cmd->add_option("--samples", infl_samples, "Number of sampled cores");
  infl_cmd->add_option("--seed", infl_seed, "Seed");
  infl_cmd->add_option("--table", infl_table,
                       "Report exact influences of this truth-table file instead");

  std::size_t amb_n = 8;
  auto* amb_cmd = app.add_subcommand("ambiguity", "Exhaustive Maj_{n-1} ambiguity check");
  amb_cmd->add_option("--n", amb_n, "Even n <= 16")->required();

  int bench_id = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Run the acceptance suite");
  bench_cmd->add_option("--criterion", bench_id, "Run only this criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*correct_cmd) return RunCorrect(correct);
    if (*lower_cmd) return RunLowerbound(lower);
    if (*infl_cmd) return RunInfluence(infl_k, infl_samples, infl_seed, infl_table);
    if (*amb_cmd) {
      std::cout << junta_lcc::MajAmbiguityCheck(amb_n).ToJson() << '\n';
      return 0;
    }
    if (*bench_cmd) {
      bool all = true;
      const auto results = junta_lcc::RunAcceptance(
          bench_id, [](const junta_lcc::CriterionResult& r) {
            std::cout << r.Line() << std::endl;
          });
      for (const auto& r : results) all &= r.passed;
      if (results.empty()) throw std::invalid_argument("no such criterion");
      return all ? 0 : kRuntimeError;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
