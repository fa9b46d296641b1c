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

#include "junta_lcc/acceptance.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include "junta_lcc/analysis.h"
#include "junta_lcc/boolfn.h"
#include "junta_lcc/correctors.h"
#include "junta_lcc/harness.h"
#include "junta_lcc/lowerbound.h"
#include "junta_lcc/oracle.h"
#include "junta_lcc/random.h"
#include "junta_lcc/rational.h"

namespace junta_lcc {
namespace {

using Clock = std::chrono::steady_clock;

std::string Fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

CriterionResult SubcubeIdentity() {
  constexpr int kVars = 10;
  constexpr int kPolys = 500;
  constexpr int kDirectionSets = 100;
  const auto start = Clock::now();
  Rng rng(0x5ab0cbe);
  std::uint64_t failures = 0;
  std::uint64_t checks = 0;
  for (int k = 1; k <= 5; ++k) {
    for (int p = 0; p < kPolys; ++p) {
      const AnfPolynomial poly = RandomAnf(kVars, k, rng);
      // Evaluated monomial by monomial, independent of the Moebius transform.
      std::vector<bool> table(1u << kVars);
      for (std::uint64_t a = 0; a < table.size(); ++a) table[a] = poly.Evaluate(a);
      for (int d = 0; d < kDirectionSets; ++d) {
        const std::uint64_t offset = rng.UniformBelow(1u << kVars);
        std::vector<std::uint64_t> dirs(k + 1);
        for (auto& v : dirs) v = rng.UniformBelow(1u << kVars);
        bool sum = false;
        for (std::uint64_t subset = 0; subset < (1u << (k + 1)); ++subset) {
          std::uint64_t point = offset;
          for (int i = 0; i <= k; ++i) {
            if ((subset >> i) & 1) point ^= dirs[i];
          }
          sum ^= table[point];
        }
        if (sum) ++failures;
        ++checks;
      }
    }
  }
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = failures == 0 && r.seconds < 10.0;
  r.detail = std::to_string(checks) + " subcubes, " + std::to_string(failures) +
             " nonzero sums (need 0, < 10 s)";
  return r;
}

CriterionResult CubeUnderCorruption() {
  const auto start = Clock::now();
  ExperimentConfig cfg;
  cfg.algo = Algo::kCube;
  cfg.k = 4;
  cfg.n = 16;
  cfg.corruption = "randflips:256:2024";
  cfg.trials = 10'000;
  cfg.master_seed = 0xc0be;
  cfg.x_mode = XMode::kAdversarialFlipped;
  const ExperimentResult res = RunCorrectionExperiment(cfg);

  NoisyOracle probe(BlackBox{16, [](const Point&) { return false; }},
                    ParseCorruption(cfg.corruption, cfg.n));
  const bool exact_eps = ExhaustiveDisagreement(probe) == PowerOfTwo(-8);
  bool queries_ok = true;
  for (const auto& rec : res.records) queries_ok &= rec.queries == 31;

  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = res.summary.success_rate >= 0.85 && exact_eps && queries_ok &&
             r.seconds < 30.0;
  r.detail = "success " + Fmt(res.summary.success_rate) +
             " (need >= 0.85), eps exactly 2^-8: " + (exact_eps ? "yes" : "no") +
             ", 31 queries/trial: " + (queries_ok ? "yes" : "no");
  return r;
}

CriterionResult InfluenceCorrector() {
  const auto start = Clock::now();
  const InfluenceCorrectorParams params = InfluenceCorrectorParams::ForK(8);
  const std::uint64_t expected_queries = 6 * 8 * 800 + 1;
  bool ok = params.r == 800 && params.QueryBudget() == expected_queries;
  std::string detail = "r=" + std::to_string(params.r);

  for (XMode mode : {XMode::kFixedHex, XMode::kAdversarialFlipped}) {
    ExperimentConfig cfg;
    cfg.algo = Algo::kInfluence;
    cfg.k = 8;
    cfg.n = 128;
    cfg.corruption = "iid:2^-12:4242";
    cfg.trials = 1000;
    cfg.master_seed = 0x1f1;
    cfg.x_mode = mode;
    cfg.x_hex = std::string(32, '0');
    const ExperimentResult res = RunCorrectionExperiment(cfg);
    bool queries_ok = true;
    for (const auto& rec : res.records) queries_ok &= rec.queries == expected_queries;
    ok &= queries_ok && res.summary.success_rate >= 0.70;
    detail += "; " + XModeName(mode) + " success " + Fmt(res.summary.success_rate) +
              " (need >= 0.70), queries " + (queries_ok ? "38401 each" : "MISMATCH") +
              ", redraws " + std::to_string(res.summary.base_redraws);
  }
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = ok && r.seconds < 300.0;
  r.detail = detail;
  return r;
}

CriterionResult MaskedMarginals() {
  constexpr std::size_t kN = 60;
  constexpr int kK = 5;
  constexpr int kParts = 3 * kK;
  constexpr std::uint64_t kSamples = 100'000;
  const auto start = Clock::now();
  Rng rng(0x3a5c);
  std::vector<std::uint64_t> in_s(kN, 0), flips_outside(kN, 0), flips(kN, 0);
  const Point x(kN);
  for (std::uint64_t t = 0; t < kSamples; ++t) {
    Point frozen(kN);
    for (std::size_t c = 1; c <= kN; ++c) {
      // Parts 0..k-1 are the chosen ones, fixed by index.
      if (rng.UniformBelow(kParts) < kK) frozen.Set(c, true);
    }
    const Point y = BuildMaskedInput(x, frozen, 3, 4, rng.Next());
    for (std::size_t c = 1; c <= kN; ++c) {
      const bool flipped = y.Get(c) != x.Get(c);
      if (frozen.Get(c)) {
        ++in_s[c - 1];
      } else if (flipped) {
        ++flips_outside[c - 1];
      }
      if (flipped) ++flips[c - 1];
    }
  }
  double worst_s = 0, worst_cond = 0, worst_flip = 0;
  for (std::size_t i = 0; i < kN; ++i) {
    const double ps = static_cast<double>(in_s[i]) / kSamples;
    const double pc = static_cast<double>(flips_outside[i]) /
                      static_cast<double>(kSamples - in_s[i]);
    const double pf = static_cast<double>(flips[i]) / kSamples;
    worst_s = std::max(worst_s, std::abs(ps - 1.0 / 3));
    worst_cond = std::max(worst_cond, std::abs(pc - 0.75));
    worst_flip = std::max(worst_flip, std::abs(pf - 0.5));
  }
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = worst_s <= 0.01 && worst_cond <= 0.01 && worst_flip <= 0.01;
  r.detail = "max |Pr[i in S]-1/3| " + Fmt(worst_s) + ", max |Pr[flip|i not in S]-3/4| " +
             Fmt(worst_cond) + ", max |Pr[flip]-1/2| " + Fmt(worst_flip) +
             " (each need <= 0.01)";
  return r;
}

Rational BruteForceInfluence(const TruthTable& tt, int i) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < tt.size(); ++j) {
    if (tt.Get(j) != tt.Get(j ^ (std::uint64_t{1} << (i - 1)))) ++count;
  }
  return Rational(BigInt(count), BigInt(tt.size()));
}

CriterionResult ExactInfluences() {
  const auto start = Clock::now();
  int mismatches = 0;
  int checks = 0;
  auto check = [&](const TruthTable& tt, int i, const Rational& expected) {
    ++checks;
    const Rational exact = InfluenceExact(tt, i);
    if (exact != expected || BruteForceInfluence(tt, i) != expected) ++mismatches;
  };
  for (int k = 1; k <= 10; ++k) {
    const TruthTable and_k = TruthTable::And(k);
    const TruthTable parity = TruthTable::Parity(k);
    const TruthTable zero = TruthTable::Constant(k, false);
    const TruthTable one = TruthTable::Constant(k, true);
    for (int i = 1; i <= k; ++i) {
      check(and_k, i, PowerOfTwo(1 - k));
      check(parity, i, Rational(1));
      check(zero, i, Rational(0));
      check(one, i, Rational(0));
    }
  }
  const TruthTable maj3 = TruthTable::Majority(3);
  for (int i = 1; i <= 3; ++i) check(maj3, i, Rational(1, 2));
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = mismatches == 0;
  r.detail = std::to_string(checks) + " influences, " + std::to_string(mismatches) +
             " mismatches against brute force and closed form";
  return r;
}

CriterionResult RandomJuntaConcentration() {
  const auto start = Clock::now();
  const double fraction = FractionLowInfluence(10, 200, 0xc0c0);
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = fraction == 0.0;
  r.detail = "fraction of k=10 cores below 1/50: " + Fmt(fraction) + " (need 0)";
  return r;
}

CriterionResult SingleQueryBound() {
  const auto start = Clock::now();
  int violations = 0;
  int checks = 0;
  for (std::size_t k = 5; k <= 20; ++k) {
    Rational bound(1);
    for (std::size_t i = 0; i < k; ++i) bound *= Rational(3, 5);
    for (std::size_t m = 0; m <= 300; ++m) {
      ++checks;
      if (SingleQueryOneProb(1000, k, m) > bound) ++violations;
    }
  }
  const Rational spot = SingleQueryOneProb(20, 3, 6);
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = violations == 0 && spot == Rational(1, 6);
  r.detail = std::to_string(checks) + " (k, m) pairs, " + std::to_string(violations) +
             " above (3/5)^k; C(6,3)/C(10,3) = " + ToString(spot) + " (need 1/6)";
  return r;
}

CriterionResult DistinguisherBlindness() {
  const auto start = Clock::now();
  const DistinguisherReport uniform = RunDistinguisher(
      DistinguisherStrategy::kUniformRandom, 1000, 400, 20, 2000, 0xd15);
  const DistinguisherReport cube =
      RunDistinguisher(DistinguisherStrategy::kCubeSum, 127, 1000, 6, 2000, 0xd16);
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = uniform.one_hit_rate <= 0.06 && uniform.advantage <= 0.05 &&
             cube.advantage >= 0.35;
  r.detail = "uniform: one_hit_rate " + Fmt(uniform.one_hit_rate) +
             " (need <= 0.06), advantage " + Fmt(uniform.advantage) +
             " (need <= 0.05); cube-sum: advantage " + Fmt(cube.advantage) +
             " (need >= 0.35)";
  return r;
}

CriterionResult MajAmbiguity() {
  const auto start = Clock::now();
  const MajAmbiguityReport report = MajAmbiguityCheck(8);
  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = report.pairs_differ_exactly_on_layer && report.truncated_identical &&
             report.layer_fraction == Rational(70, 256);
  r.detail = std::string("pairs differ exactly on layer: ") +
             (report.pairs_differ_exactly_on_layer ? "yes" : "no") +
             ", truncated identical: " + (report.truncated_identical ? "yes" : "no") +
             ", layer fraction " + ToString(report.layer_fraction) + " (need 70/256)";
  return r;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

CriterionResult Reproducibility() {
  const auto start = Clock::now();
  const auto dir = std::filesystem::temp_directory_path() /
                   ("junta_lcc_repro_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  bool identical = true;
  std::string detail;
  const std::vector<std::pair<std::string, ExperimentConfig>> configs = [] {
    std::vector<std::pair<std::string, ExperimentConfig>> out;
    ExperimentConfig cube;
    cube.algo = Algo::kCube;
    cube.k = 4;
    cube.n = 16;
    cube.corruption = "randflips:256:2024";
    cube.trials = 10'000;
    cube.master_seed = 0xc0be;
    cube.x_mode = XMode::kAdversarialFlipped;
    out.emplace_back("cube", cube);
    ExperimentConfig infl;
    infl.algo = Algo::kInfluence;
    infl.k = 8;
    infl.n = 128;
    infl.corruption = "iid:2^-12:4242";
    infl.trials = 50;
    infl.master_seed = 0x1f1;
    infl.x_mode = XMode::kAdversarialFlipped;
    out.emplace_back("influence", infl);
    return out;
  }();
  for (const auto& [name, base_cfg] : configs) {
    std::vector<std::string> contents;
    // Same config at different thread counts must still match byte for byte.
    for (unsigned threads : {1u, 4u}) {
      ExperimentConfig cfg = base_cfg;
      cfg.threads = threads;
      const auto path = dir / (name + "_" + std::to_string(threads) + ".jsonl");
      const ExperimentResult res = RunCorrectionExperiment(cfg);
      EmitReport(res.records, res.summary, path.string());
      contents.push_back(ReadFile(path));
    }
    const bool same = contents[0] == contents[1] && !contents[0].empty();
    identical &= same;
    detail += name + (same ? " identical; " : " DIFFERS; ");
  }
  std::vector<std::string> lb;
  for (int run = 0; run < 2; ++run) {
    const auto path = dir / ("lowerbound_" + std::to_string(run) + ".json");
    std::ofstream(path) << RunDistinguisher(DistinguisherStrategy::kUniformRandom, 1000,
                                            400, 20, 500, 0xd15)
                               .ToJson()
                        << '\n';
    lb.push_back(ReadFile(path));
  }
  identical &= lb[0] == lb[1];
  detail += std::string("lowerbound ") + (lb[0] == lb[1] ? "identical" : "DIFFERS");
  std::filesystem::remove_all(dir);

  CriterionResult r;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = identical;
  r.detail = detail;
  return r;
}

}  // namespace

std::string CriterionResult::Line() const {
  std::ostringstream out;
  out.precision(3);
  out << (passed ? "[PASS] " : "[FAIL] ") << id << ' ' << name << ": " << detail
      << " (" << std::fixed << seconds << " s)";
  return out.str();
}

const std::vector<Criterion>& AcceptanceCriteria() {
  static const std::vector<Criterion> criteria = {
      {1, "subcube identity", SubcubeIdentity},
      {2, "cube-sum corrector under corruption", CubeUnderCorruption},
      {3, "influence corrector", InfluenceCorrector},
      {4, "masked-input marginals", MaskedMarginals},
      {5, "exact influences", ExactInfluences},
      {6, "random-junta concentration", RandomJuntaConcentration},
      {7, "single-query bound", SingleQueryBound},
      {8, "distinguisher blindness", DistinguisherBlindness},
      {9, "majority ambiguity", MajAmbiguity},
      {10, "reproducibility", Reproducibility},
  };
  return criteria;
}

std::vector<CriterionResult> RunAcceptance(
    int id, const std::function<void(const CriterionResult&)>& sink) {
  std::vector<CriterionResult> results;
  for (const auto& criterion : AcceptanceCriteria()) {
    if (id > 0 && criterion.id != id) continue;
    CriterionResult r;
    try {
      r = criterion.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    r.id = criterion.id;
    r.name = criterion.name;
    if (sink) sink(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace junta_lcc
