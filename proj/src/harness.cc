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

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "junta_lcc/analysis.h"
#include "junta_lcc/boolfn.h"
#include "junta_lcc/correctors.h"
#include "junta_lcc/oracle.h"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

// Seed streams hanging off the master seed, kept apart from trial seeds.
constexpr std::uint64_t kBaseStreamTag = 0xba5eba5eba5eba5eull;
// Sub-streams of a trial seed.
constexpr std::uint64_t kXStream = 1;
constexpr std::uint64_t kCorrectorStream = 2;

struct Base {
  BlackBox function;
  std::vector<int> profile;  // symmetric only
  std::uint64_t redraws = 0;
};

Base BuildBase(const ExperimentConfig& cfg) {
  const std::uint64_t base_seed = DeriveSeed(cfg.master_seed ^ kBaseStreamTag, 0);
  Base base;
  switch (cfg.algo) {
    case Algo::kCube:
      base.function = MakeBlackBox(SampleRandomJunta(cfg.k, cfg.n, base_seed));
      break;
    case Algo::kInfluence: {
      for (std::uint64_t attempt = 0;; ++attempt) {
        JuntaSpec spec = SampleRandomJunta(cfg.k, cfg.n, DeriveSeed(base_seed, attempt));
        if (MinInfluenceReport(spec.core()).passes_threshold) {
          base.function = MakeBlackBox(spec);
          base.redraws = attempt;
          break;
        }
        if (attempt >= 1'000'000) {
          throw std::runtime_error("no junta met the influence threshold");
        }
      }
      break;
    }
    case Algo::kSymmetric: {
      Rng rng(base_seed);
      base.profile.resize(cfg.n + 1);
      for (auto& v : base.profile) v = rng.Bit() ? 1 : 0;
      base.function = MakeSymmetricBlackBox(base.profile);
      break;
    }
  }
  return base;
}

bool RunOnce(const ExperimentConfig& cfg, const Base& base, NoisyOracle& oracle,
             const InfluenceCorrectorParams& params, const Point& x,
             std::uint64_t seed) {
  switch (cfg.algo) {
    case Algo::kCube:
      return CubeSumCorrect(oracle, x, cfg.k, seed).value;
    case Algo::kInfluence:
      return InfluenceCorrect(oracle, x, cfg.k, params, seed).value;
    case Algo::kSymmetric:
      return SymmetricCorrect(base.profile, x).value;
  }
  return false;
}

}  // namespace

Algo ParseAlgo(std::string_view name) {
  if (name == "cube") return Algo::kCube;
  if (name == "influence") return Algo::kInfluence;
  if (name == "symmetric") return Algo::kSymmetric;
  throw ConfigError("algo", "unknown algorithm '" + std::string(name) + "'");
}

std::string AlgoName(Algo algo) {
  switch (algo) {
    case Algo::kCube:
      return "cube";
    case Algo::kInfluence:
      return "influence";
    case Algo::kSymmetric:
      return "symmetric";
  }
  return "";
}

XMode ParseXMode(std::string_view name) {
  if (name == "fixed-hex") return XMode::kFixedHex;
  if (name == "random") return XMode::kRandom;
  if (name == "adversarial-flipped") return XMode::kAdversarialFlipped;
  throw ConfigError("x-mode", "unknown mode '" + std::string(name) + "'");
}

std::string XModeName(XMode mode) {
  switch (mode) {
    case XMode::kFixedHex:
      return "fixed-hex";
    case XMode::kRandom:
      return "random";
    case XMode::kAdversarialFlipped:
      return "adversarial-flipped";
  }
  return "";
}

void ExperimentConfig::Validate() const {
  if (n < 1) throw ConfigError("n", "must be positive");
  if (trials < 1) throw ConfigError("trials", "must be at least 1");
  if (algo != Algo::kSymmetric) {
    if (k < 1 || k > kMaxTableArity) throw ConfigError("k", "must be in [1, 24]");
    if (static_cast<std::size_t>(k) > n) throw ConfigError("k", "must not exceed n");
  }
  if (repeat_t && (*repeat_t < 1 || *repeat_t % 2 == 0)) {
    throw ConfigError("repeat-t", "must be a positive odd integer");
  }
  if (x_mode == XMode::kFixedHex) {
    try {
      Point::FromHex(x_hex, n);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("x", e.what());
    }
  }
}

std::uint64_t DeriveTrialSeed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return DeriveSeed(master_seed, trial_index);
}

std::string TrialRecord::ToJson() const {
  nlohmann::ordered_json j;
  j["trial"] = trial;
  j["x"] = x_hex;
  j["returned"] = returned ? 1 : 0;
  j["truth"] = truth ? 1 : 0;
  j["success"] = success;
  j["queries"] = queries;
  j["seed"] = seed;
  return j.dump();
}

std::string ExperimentSummary::ToJson() const {
  nlohmann::ordered_json s;
  s["algo"] = algo;
  s["k"] = k;
  s["n"] = n;
  s["corruption"] = corruption;
  s["trials"] = trials;
  s["successes"] = successes;
  s["success_rate"] = success_rate;
  s["mean_queries"] = mean_queries;
  s["total_queries"] = total_queries;
  s["ci_halfwidth"] = ci_halfwidth;
  s["base_redraws"] = base_redraws;
  s["repeat_t"] = repeat_t ? nlohmann::ordered_json(*repeat_t)
                           : nlohmann::ordered_json(nullptr);
  s["seed"] = seed;
  nlohmann::ordered_json j;
  j["summary"] = std::move(s);
  return j.dump();
}

ExperimentResult RunCorrectionExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  CorruptionModel corruption;
  try {
    corruption = ParseCorruption(cfg.corruption, cfg.n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("corruption", e.what());
  }
  const Base base = BuildBase(cfg);
  // Construct once so model/base mismatches surface as config errors.
  NoisyOracle prototype = [&] {
    try {
      return NoisyOracle(base.function, corruption);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("corruption", e.what());
    }
  }();
  const InfluenceCorrectorParams params =
      cfg.algo == Algo::kInfluence ? InfluenceCorrectorParams::ForK(cfg.k)
                                   : InfluenceCorrectorParams{};
  const std::optional<Point> fixed_x =
      cfg.x_mode == XMode::kFixedHex ? std::optional(Point::FromHex(cfg.x_hex, cfg.n))
                                     : std::nullopt;
  const int repeats = cfg.repeat_t.value_or(1);

  ExperimentResult result;
  result.records.resize(cfg.trials);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (std::uint64_t t = next++; t < cfg.trials && !failed; t = next++) {
      try {
        const std::uint64_t trial_seed = DeriveTrialSeed(cfg.master_seed, t);
        NoisyOracle oracle = prototype;
        oracle.ResetCount();
        Point x(cfg.n);
        switch (cfg.x_mode) {
          case XMode::kFixedHex:
            x = *fixed_x;
            break;
          case XMode::kRandom:
            x = Rng(DeriveSeed(trial_seed, kXStream)).UniformPoint(cfg.n);
            break;
          case XMode::kAdversarialFlipped: {
            auto found = oracle.FindCorruptedPoint(DeriveSeed(trial_seed, kXStream));
            if (!found) {
              throw std::runtime_error("corruption model '" + cfg.corruption +
                                       "' exposes no corrupted point");
            }
            x = *found;
            break;
          }
        }
        const std::uint64_t corrector_seed = DeriveSeed(trial_seed, kCorrectorStream);
        int ones = 0;
        for (int rep = 0; rep < repeats; ++rep) {
          const std::uint64_t seed =
              repeats == 1 ? corrector_seed : DeriveSeed(corrector_seed, rep);
          if (RunOnce(cfg, base, oracle, params, x, seed)) ++ones;
        }
        TrialRecord& rec = result.records[t];
        rec.trial = t;
        rec.x_hex = x.ToHex();
        rec.returned = 2 * ones > repeats;
        rec.truth = base.function(x);
        rec.success = rec.returned == rec.truth;
        rec.queries = oracle.query_count();
        rec.seed = trial_seed;
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mu);
        if (!failed.exchange(true)) failure = e.what();
      }
    }
  };

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(cfg.trials, 256))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failed) throw std::runtime_error(failure);

  ExperimentSummary& s = result.summary;
  s.algo = AlgoName(cfg.algo);
  s.k = cfg.k;
  s.n = cfg.n;
  s.corruption = DescribeCorruption(corruption);
  s.trials = cfg.trials;
  s.base_redraws = base.redraws;
  s.repeat_t = cfg.repeat_t;
  s.seed = cfg.master_seed;
  for (const auto& rec : result.records) {
    s.successes += rec.success ? 1 : 0;
    s.total_queries += rec.queries;
  }
  const double trials = static_cast<double>(cfg.trials);
  s.success_rate = static_cast<double>(s.successes) / trials;
  s.mean_queries = static_cast<double>(s.total_queries) / trials;
  s.ci_halfwidth = 1.96 * std::sqrt(s.success_rate * (1 - s.success_rate) / trials);
  return result;
}

std::string RenderReport(const std::vector<TrialRecord>& records,
                         const ExperimentSummary& summary) {
  std::ostringstream out;
  for (const auto& rec : records) out << rec.ToJson() << '\n';
  out << summary.ToJson() << '\n';
  return out.str();
}

void EmitReport(const std::vector<TrialRecord>& records,
                const ExperimentSummary& summary, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report file '" + path + "'");
  out << RenderReport(records, summary);
  out.flush();
  if (!out) throw std::runtime_error("failed writing report file '" + path + "'");
}

}  // namespace junta_lcc
