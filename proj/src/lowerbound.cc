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

#include "junta_lcc/lowerbound.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "junta_lcc/correctors.h"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

bool Guess(const HardInstance& inst, const std::optional<Point>& ones_in_all_hits) {
  if (!ones_in_all_hits) return false;
  const std::size_t half = inst.n / 2;
  const bool fits_first = ones_in_all_hits->WeightInRange(1, half) >= inst.k;
  const bool fits_second = ones_in_all_hits->WeightInRange(half + 1, inst.n) >= inst.k;
  return fits_second && !fits_first;
}

void Intersect(std::optional<Point>& acc, const Point& y) {
  if (!acc) {
    acc = y;
    return;
  }
  auto words = acc->mutable_words();
  const auto other = y.words();
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= other[i];
}

}  // namespace

std::size_t HardThreshold(std::size_t n) { return 3 * n / 10; }

JuntaSpec HardInstance::Junta() const {
  return JuntaSpec(n, TruthTable::And(static_cast<int>(k)), relevant);
}

NoisyOracle HardInstance::MakeOracle() const {
  return NoisyOracle(MakeBlackBox(Junta()), WeightTruncation{threshold});
}

HardInstance SampleHardInstance(std::size_t n, std::size_t k, HardLabel label,
                                std::uint64_t seed) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("SampleHardInstance: n must be even and positive");
  }
  if (k == 0 || k > n / 2) {
    throw std::invalid_argument("SampleHardInstance: k must be in [1, n/2]");
  }
  const std::size_t half = n / 2;
  Rng rng(seed);
  HardInstance inst;
  inst.n = n;
  inst.k = k;
  inst.label = label;
  inst.threshold = HardThreshold(n);
  inst.relevant = rng.DistinctCoordinates(k, half);
  if (label == HardLabel::kD1) {
    for (auto& c : inst.relevant) c += half;
  }
  std::sort(inst.relevant.begin(), inst.relevant.end());
  inst.x_star = Point(n);
  for (std::size_t c = half + 1; c <= n; ++c) inst.x_star.Set(c, true);
  return inst;
}

bool EvalHardG(const HardInstance& inst, const Point& y) {
  CheckDimension(y, inst.n, "EvalHardG");
  for (std::size_t c : inst.relevant) {
    if (!y.Get(c)) return false;
  }
  const std::size_t first = y.WeightInRange(1, inst.n / 2);
  const std::size_t second = y.Weight() - first;
  return first <= inst.threshold && second <= inst.threshold;
}

Rational SingleQueryOneProb(std::size_t n, std::size_t k, std::size_t m) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("SingleQueryOneProb: n must be even and positive");
  }
  if (m > n / 2) throw std::invalid_argument("SingleQueryOneProb: m exceeds n/2");
  if (k > n / 2) throw std::invalid_argument("SingleQueryOneProb: k exceeds n/2");
  if (m < k) return Rational(0);
  return Rational(Binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)),
                  Binomial(static_cast<unsigned>(n / 2), static_cast<unsigned>(k)));
}

DistinguisherStrategy ParseStrategy(std::string_view name) {
  if (name == "uniform-random-queries") return DistinguisherStrategy::kUniformRandom;
  if (name == "fixed-point-list") return DistinguisherStrategy::kFixedPointList;
  if (name == "cube-sum-at-x_star") return DistinguisherStrategy::kCubeSum;
  throw std::invalid_argument("unknown distinguisher strategy '" + std::string(name) +
                              "'");
}

std::string StrategyName(DistinguisherStrategy strategy) {
  switch (strategy) {
    case DistinguisherStrategy::kUniformRandom:
      return "uniform-random-queries";
    case DistinguisherStrategy::kFixedPointList:
      return "fixed-point-list";
    case DistinguisherStrategy::kCubeSum:
      return "cube-sum-at-x_star";
  }
  return "";
}

std::string DistinguisherReport::ToJson() const {
  nlohmann::ordered_json j;
  j["strategy"] = StrategyName(strategy);
  j["n"] = n;
  j["k"] = k;
  j["q"] = q;
  j["trials"] = trials;
  j["advantage"] = advantage;
  j["one_hit_rate"] = one_hit_rate;
  j["seed"] = seed;
  return j.dump();
}

DistinguisherReport RunDistinguisher(DistinguisherStrategy strategy,
                                     std::uint64_t q, std::size_t n,
                                     std::size_t k, std::uint64_t trials,
                                     std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("RunDistinguisher: trials must be >= 1");
  if (n == 0 || n % 2 != 0 || k == 0 || k > n / 2) {
    throw std::invalid_argument("RunDistinguisher: need even n and 1 <= k <= n/2");
  }
  DistinguisherReport report;
  report.strategy = strategy;
  report.n = n;
  report.k = k;
  report.q = q;
  report.trials = trials;
  report.seed = seed;

  std::vector<Point> fixed_list;
  if (strategy == DistinguisherStrategy::kFixedPointList) {
    Rng list_rng(DeriveSeed(seed, ~std::uint64_t{0}));
    for (std::uint64_t i = 0; i < q; ++i) fixed_list.push_back(list_rng.UniformPoint(n));
  }
  int cube_degree = -1;
  if (strategy == DistinguisherStrategy::kCubeSum) {
    while (cube_degree + 1 <= static_cast<int>(std::min<std::size_t>(k, 29)) &&
           (std::uint64_t{1} << (cube_degree + 2)) - 1 <= q) {
      ++cube_degree;
    }
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = DeriveSeed(seed, t);
    Rng rng(trial_seed);
    const HardLabel label = rng.Bit() ? HardLabel::kD1 : HardLabel::kD0;
    const HardInstance inst = SampleHardInstance(n, k, label, DeriveSeed(trial_seed, 1));

    bool hit = false;
    bool guess_d1 = false;
    switch (strategy) {
      case DistinguisherStrategy::kUniformRandom:
      case DistinguisherStrategy::kFixedPointList: {
        std::optional<Point> common;
        Rng query_rng(DeriveSeed(trial_seed, 2));
        for (std::uint64_t i = 0; i < q; ++i) {
          const Point y = strategy == DistinguisherStrategy::kFixedPointList
                              ? fixed_list[i]
                              : query_rng.UniformPoint(n);
          if (EvalHardG(inst, y)) {
            hit = true;
            Intersect(common, y);
          }
        }
        guess_d1 = Guess(inst, common);
        break;
      }
      case DistinguisherStrategy::kCubeSum: {
        if (cube_degree < 0) break;
        BlackBox g{n, [&inst, &hit](const Point& y) {
                     const bool v = EvalHardG(inst, y);
                     hit |= v;
                     return v;
                   }};
        NoisyOracle oracle(std::move(g), NoCorruption{});
        guess_d1 = CubeSumCorrect(oracle, inst.x_star, cube_degree,
                                  DeriveSeed(trial_seed, 2))
                       .value;
        break;
      }
    }
    if (hit) ++report.one_hits;
    if (guess_d1 == (label == HardLabel::kD1)) ++report.correct;
  }
  const double rate = static_cast<double>(report.correct) / static_cast<double>(trials);
  report.advantage = rate > 0.5 ? rate - 0.5 : 0.5 - rate;
  report.one_hit_rate =
      static_cast<double>(report.one_hits) / static_cast<double>(trials);
  return report;
}

std::string MajAmbiguityReport::ToJson() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["pairs_checked"] = pairs_checked;
  j["pairs_differ_exactly_on_layer"] = pairs_differ_exactly_on_layer;
  j["truncated_identical"] = truncated_identical;
  j["layer_fraction"] = ToString(layer_fraction);
  return j.dump();
}

MajAmbiguityReport MajAmbiguityCheck(std::size_t n) {
  if (n < 2 || n % 2 != 0 || n > 16) {
    throw std::invalid_argument("MajAmbiguityCheck: n must be even and in [2, 16]");
  }
  const TruthTable maj = TruthTable::Majority(static_cast<int>(n - 1));
  std::vector<JuntaSpec> fs;
  std::vector<NoisyOracle> gs;
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::size_t> embedding;
    for (std::size_t c = 1; c <= n; ++c) {
      if (c != j) embedding.push_back(c);
    }
    fs.emplace_back(n, maj, std::move(embedding));
    gs.emplace_back(MakeBlackBox(fs.back()), BalancedLayerZero{});
  }

  MajAmbiguityReport report;
  report.n = n;
  report.pairs_differ_exactly_on_layer = true;
  report.truncated_identical = true;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> f_values(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Point x(n);
    x.mutable_words()[0] = idx;
    const bool on_layer = x.Weight() == n / 2;
    for (std::size_t j = 0; j < n; ++j) f_values[j] = EvalJunta(fs[j], x);
    const bool g0 = gs[0].Peek(x);
    for (std::size_t j = 1; j < n; ++j) {
      if (gs[j].Peek(x) != g0) report.truncated_identical = false;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const bool differ = f_values[a] != f_values[b];
        const bool expected = on_layer && x.Get(a + 1) != x.Get(b + 1);
        if (differ != expected) report.pairs_differ_exactly_on_layer = false;
      }
    }
  }
  report.pairs_checked = n * (n - 1) / 2;
  BigInt denom = 1;
  denom <<= n;
  report.layer_fraction =
      Rational(Binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2)), denom);
  return report;
}

}  // namespace junta_lcc
