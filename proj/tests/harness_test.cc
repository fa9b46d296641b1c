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

#include "junta_lcc/harness.h"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "junta_lcc/oracle.h"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

int CountLines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

ExperimentConfig CubeConfig(int k, std::size_t n, std::string corruption,
                            std::uint64_t trials, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.algo = Algo::kCube;
  cfg.k = k;
  cfg.n = n;
  cfg.corruption = std::move(corruption);
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.threads = 1;
  return cfg;
}

TEST(DeriveTrialSeedTest, DeterministicAndDistinct) {
  EXPECT_EQ(DeriveTrialSeed(42, 7), DeriveTrialSeed(42, 7));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    EXPECT_NE(DeriveTrialSeed(s, 0), DeriveTrialSeed(s, 1));
    seen.insert(DeriveTrialSeed(s, 0));
    seen.insert(DeriveTrialSeed(s, 1));
  }
  EXPECT_EQ(seen.size(), 4000u);
}

TEST(DeriveTrialSeedTest, Avalanche) {
  Rng rng(1);
  double total = 0;
  const int samples = 10'000;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t m = rng.Next();
    const std::uint64_t t = rng.UniformBelow(1'000'000);
    const int bit = static_cast<int>(rng.UniformBelow(64));
    total += std::popcount(DeriveTrialSeed(m, t) ^ DeriveTrialSeed(m ^ (1ull << bit), t));
  }
  EXPECT_NEAR(total / samples, 32.0, 0.5);
}

TEST(ConfigTest, ErrorsNameTheField) {
  auto field_of = [](const ExperimentConfig& cfg) -> std::string {
    try {
      RunCorrectionExperiment(cfg);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "";
  };
  ExperimentConfig cfg = CubeConfig(3, 10, "none", 1, 1);
  cfg.k = 0;
  EXPECT_EQ(field_of(cfg), "k");
  cfg.k = 11;
  EXPECT_EQ(field_of(cfg), "k");
  cfg = CubeConfig(3, 10, "none", 0, 1);
  EXPECT_EQ(field_of(cfg), "trials");
  cfg = CubeConfig(3, 10, "bogus", 1, 1);
  EXPECT_EQ(field_of(cfg), "corruption");
  cfg = CubeConfig(3, 10, "layer", 1, 1);
  cfg.n = 11;
  EXPECT_EQ(field_of(cfg), "corruption");
  cfg = CubeConfig(3, 10, "none", 1, 1);
  cfg.repeat_t = 4;
  EXPECT_EQ(field_of(cfg), "repeat-t");
  cfg.repeat_t.reset();
  cfg.x_mode = XMode::kFixedHex;
  cfg.x_hex = "zz";
  EXPECT_EQ(field_of(cfg), "x");
  EXPECT_THROW(ParseAlgo("quantum"), ConfigError);
  EXPECT_THROW(ParseXMode("sideways"), ConfigError);
  EXPECT_EQ(ParseAlgo(AlgoName(Algo::kInfluence)), Algo::kInfluence);
  EXPECT_EQ(ParseXMode(XModeName(XMode::kAdversarialFlipped)), XMode::kAdversarialFlipped);
}

TEST(ExperimentTest, CleanCubeIsExact) {
  const auto r = RunCorrectionExperiment(CubeConfig(4, 64, "none", 200, 3));
  EXPECT_EQ(r.summary.success_rate, 1.0);
  EXPECT_EQ(r.summary.successes, 200u);
  EXPECT_EQ(r.summary.mean_queries, 31.0);
}

TEST(ExperimentTest, SymmetricUsesNoQueries) {
  ExperimentConfig cfg = CubeConfig(1, 40, "iid:0.1:5", 50, 4);
  cfg.algo = Algo::kSymmetric;
  const auto r = RunCorrectionExperiment(cfg);
  EXPECT_EQ(r.summary.mean_queries, 0.0);
  EXPECT_EQ(r.summary.total_queries, 0u);
  EXPECT_EQ(r.summary.success_rate, 1.0);
}

TEST(ExperimentTest, SummaryMatchesRecords) {
  const auto r = RunCorrectionExperiment(CubeConfig(3, 32, "randflips:40:9", 300, 5));
  ASSERT_EQ(r.records.size(), 300u);
  std::uint64_t successes = 0, queries = 0;
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const TrialRecord& rec = r.records[i];
    EXPECT_EQ(rec.trial, i);
    EXPECT_EQ(rec.success, rec.returned == rec.truth);
    EXPECT_EQ(rec.seed, DeriveTrialSeed(5, i));
    successes += rec.success;
    queries += rec.queries;
  }
  EXPECT_EQ(r.summary.successes, successes);
  EXPECT_EQ(r.summary.total_queries, queries);
  EXPECT_DOUBLE_EQ(r.summary.success_rate, successes / 300.0);
  EXPECT_DOUBLE_EQ(r.summary.mean_queries, queries / 300.0);
}

TEST(ExperimentTest, ThreadCountDoesNotChangeResults) {
  ExperimentConfig one = CubeConfig(3, 32, "iid:0.05:6", 200, 7);
  ExperimentConfig four = one;
  four.threads = 4;
  const auto a = RunCorrectionExperiment(one);
  const auto b = RunCorrectionExperiment(four);
  EXPECT_EQ(RenderReport(a.records, a.summary), RenderReport(b.records, b.summary));
}

TEST(ExperimentTest, AdversarialNeedsCorruption) {
  ExperimentConfig cfg = CubeConfig(2, 16, "none", 5, 8);
  cfg.x_mode = XMode::kAdversarialFlipped;
  EXPECT_THROW(RunCorrectionExperiment(cfg), std::runtime_error);
}

TEST(ExperimentTest, AdversarialPointsAreCorrupted) {
  ExperimentConfig cfg = CubeConfig(2, 16, "randflips:100:3", 50, 9);
  cfg.x_mode = XMode::kAdversarialFlipped;
  const auto r = RunCorrectionExperiment(cfg);
  const CorruptionModel model = ParseCorruption(cfg.corruption, cfg.n);
  const auto& flips = std::get<ExplicitFlips>(model);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(flips.points->contains(Point::FromHex(rec.x_hex, 16)));
  }
}

TEST(ExperimentTest, RepetitionDoesNotHurt) {
  ExperimentConfig single = CubeConfig(2, 24, "iid:0.03:11", 2000, 12);
  ExperimentConfig voted = single;
  voted.repeat_t = 5;
  const double base = RunCorrectionExperiment(single).summary.success_rate;
  const auto r = RunCorrectionExperiment(voted);
  EXPECT_GE(r.summary.success_rate, base - 0.01);
  EXPECT_EQ(r.summary.mean_queries, 5 * 7.0);
  EXPECT_EQ(r.summary.repeat_t, 5);
}

TEST(ReportTest, LineCountsAndDeterminism) {
  ExperimentSummary empty;
  EXPECT_EQ(CountLines(RenderReport({}, empty)), 1);
  const auto r = RunCorrectionExperiment(CubeConfig(2, 12, "none", 3, 13));
  const std::string text = RenderReport(r.records, r.summary);
  EXPECT_EQ(CountLines(text), 4);
  EXPECT_EQ(text.rfind(R"({"trial":0,"x":")", 0), 0u);
  EXPECT_NE(text.find(R"({"summary":{"algo":"cube","k":2,"n":12,)"), std::string::npos);

  const auto again = RunCorrectionExperiment(CubeConfig(2, 12, "none", 3, 13));
  EXPECT_EQ(text, RenderReport(again.records, again.summary));

  const auto path = std::filesystem::temp_directory_path() / "junta_lcc_report_test.jsonl";
  EmitReport(r.records, r.summary, path.string());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), text);
  std::filesystem::remove(path);
}

TEST(ReportTest, BadPathThrows) {
  EXPECT_THROW(EmitReport({}, ExperimentSummary{}, "/nonexistent-dir/x/report.jsonl"),
               std::runtime_error);
}

}  // namespace
}  // namespace junta_lcc
