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

#ifndef JUNTA_LCC_HARNESS_H_
#define JUNTA_LCC_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace junta_lcc {

// Invalid experiment configuration; the message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Algo { kCube, kInfluence, kSymmetric };
enum class XMode { kFixedHex, kRandom, kAdversarialFlipped };

Algo ParseAlgo(std::string_view name);
std::string AlgoName(Algo algo);
XMode ParseXMode(std::string_view name);
std::string XModeName(XMode mode);

struct ExperimentConfig {
  Algo algo = Algo::kCube;
  int k = 1;
  std::size_t n = 1;
  std::string corruption = "none";
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  XMode x_mode = XMode::kRandom;
  std::string x_hex;  // used by XMode::kFixedHex
  // Majority vote over this many independent corrector runs; odd.
  std::optional<int> repeat_t;
  std::string out_path;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  // Throws ConfigError.
  void Validate() const;
};

struct TrialRecord {
  std::uint64_t trial = 0;
  std::string x_hex;
  bool returned = false;
  bool truth = false;
  bool success = false;
  std::uint64_t queries = 0;
  std::uint64_t seed = 0;

  std::string ToJson() const;
};

struct ExperimentSummary {
  std::string algo;
  int k = 0;
  std::size_t n = 0;
  std::string corruption;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0;
  double mean_queries = 0;
  std::uint64_t total_queries = 0;
  // 95% normal-approximation half-width of success_rate.
  double ci_halfwidth = 0;
  // Rejected junta samples before one met the influence threshold.
  std::uint64_t base_redraws = 0;
  std::optional<int> repeat_t;
  std::uint64_t seed = 0;

  std::string ToJson() const;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  ExperimentSummary summary;
};

// Pure mixing of (master_seed, trial_index); see random.h.
std::uint64_t DeriveTrialSeed(std::uint64_t master_seed, std::uint64_t trial_index);

// Runs cfg.trials independent trials, each with its own oracle and seed
// stream. Records come back in trial order whatever the thread count.
// Throws ConfigError for invalid configs and std::runtime_error when the
// experiment cannot run (e.g. no corrupted point to place x on).
ExperimentResult RunCorrectionExperiment(const ExperimentConfig& cfg);

// JSON lines: one record per line, then {"summary":{...}}. Throws
// std::runtime_error on I/O failure.
void EmitReport(const std::vector<TrialRecord>& records,
                const ExperimentSummary& summary, const std::string& path);
std::string RenderReport(const std::vector<TrialRecord>& records,
                         const ExperimentSummary& summary);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_HARNESS_H_
