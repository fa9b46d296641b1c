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

#include "junta_lcc/analysis.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "json.hpp"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

constexpr std::uint64_t kLowHalfMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// Number of pairs {a, a + e_i} on which the table disagrees.
std::uint64_t DisagreeingPairs(const TruthTable& tt, int i) {
  const auto& words = tt.words();
  const int bit = i - 1;
  std::uint64_t count = 0;
  if (bit < 6) {
    const int shift = 1 << bit;
    for (auto w : words) {
      count += std::popcount((w ^ (w >> shift)) & kLowHalfMasks[bit]);
    }
  } else {
    const std::size_t stride = std::size_t{1} << (bit - 6);
    for (std::size_t a = 0; a < words.size(); ++a) {
      if ((a & stride) == 0) count += std::popcount(words[a] ^ words[a | stride]);
    }
  }
  return count;
}

}  // namespace

Rational InfluenceExact(const TruthTable& tt, int i) {
  if (i < 1 || i > tt.k()) {
    throw std::invalid_argument("InfluenceExact: variable index " +
                                std::to_string(i) + " outside [1, " +
                                std::to_string(tt.k()) + "]");
  }
  return Rational(BigInt(2 * DisagreeingPairs(tt, i)), BigInt(tt.size()));
}

double InfluenceEstimate(const BlackBox& f, std::size_t i, std::uint64_t trials,
                         std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("InfluenceEstimate: trials must be >= 1");
  if (i < 1 || i > f.n) {
    throw std::invalid_argument("InfluenceEstimate: coordinate out of range");
  }
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Point x = rng.UniformPoint(f.n);
    const bool before = f(x);
    x.Flip(i);
    if (before != f(x)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

JuntaSpec SampleRandomJunta(int k, std::size_t n, std::uint64_t seed) {
  if (k < 1 || k > kMaxTableArity) {
    throw std::invalid_argument("SampleRandomJunta: k must be in [1, 24]");
  }
  if (static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("SampleRandomJunta: k exceeds n");
  }
  Rng rng(seed);
  TruthTable core = TruthTable::Random(k, rng);
  std::vector<std::size_t> embedding = rng.DistinctCoordinates(k, n);
  return JuntaSpec(n, std::move(core), std::move(embedding));
}

std::string InfluenceReport::ToJson() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["influences"] = nlohmann::json::array();
  for (const auto& r : per_variable) j["influences"].push_back(ToString(r));
  j["min"] = ToString(min_influence);
  j["passes"] = passes_threshold;
  return j.dump();
}

InfluenceReport MinInfluenceReport(const TruthTable& tt) {
  InfluenceReport report;
  report.k = tt.k();
  for (int i = 1; i <= tt.k(); ++i) {
    report.per_variable.push_back(InfluenceExact(tt, i));
  }
  report.min_influence =
      *std::min_element(report.per_variable.begin(), report.per_variable.end());
  report.passes_threshold = report.min_influence >= kInfluenceThreshold;
  return report;
}

double FractionLowInfluence(int k, std::uint64_t samples, std::uint64_t seed) {
  if (k < 1 || k > 16) {
    throw std::invalid_argument("FractionLowInfluence: k must be in [1, 16]");
  }
  if (samples == 0) {
    throw std::invalid_argument("FractionLowInfluence: samples must be >= 1");
  }
  Rng rng(seed);
  std::uint64_t low = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    if (!MinInfluenceReport(TruthTable::Random(k, rng)).passes_threshold) ++low;
  }
  return static_cast<double>(low) / static_cast<double>(samples);
}

}  // namespace junta_lcc
