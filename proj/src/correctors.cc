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

#include "junta_lcc/correctors.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

void Shuffle(std::vector<int>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.UniformBelow(i)]);
  }
}

}  // namespace

std::string CorrectionResult::ToJson() const {
  nlohmann::ordered_json j;
  j["value"] = value ? 1 : 0;
  j["queries"] = queries_used;
  j["marked_parts"] = marked_parts ? nlohmann::ordered_json(*marked_parts)
                                   : nlohmann::ordered_json(nullptr);
  j["s_size"] =
      s_size ? nlohmann::ordered_json(*s_size) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

CorrectionResult CubeSumCorrect(NoisyOracle& o, const Point& x, int k,
                                std::uint64_t seed) {
  CheckDimension(x, o.n(), "CubeSumCorrect");
  if (k < 0 || k > 29) throw std::invalid_argument("CubeSumCorrect: k must be in [0, 29]");
  const std::uint64_t before = o.query_count();
  Rng rng(seed);
  std::vector<Point> directions;
  directions.reserve(k + 1);
  for (int i = 0; i <= k; ++i) directions.push_back(rng.UniformPoint(o.n()));

  // Gray-code walk over the nonempty subsets.
  Point current = x;
  bool sum = false;
  const std::uint64_t subsets = std::uint64_t{1} << (k + 1);
  for (std::uint64_t g = 1; g < subsets; ++g) {
    current ^= directions[std::countr_zero(g)];
    sum ^= o.Query(current);
  }
  return CorrectionResult{sum, o.query_count() - before, std::nullopt, std::nullopt};
}

int PairsPerPart(int k) {
  if (k < 1) throw std::invalid_argument("PairsPerPart: k must be positive");
  if (k == 1) return 500;
  // Smallest c with 2^c >= k^100, i.e. c = ceil(100 * log2 k).
  BigInt power = 1;
  for (int i = 0; i < 100; ++i) power *= k;
  const auto c = boost::multiprecision::msb(BigInt(power - 1)) + 1;
  return static_cast<int>(c) + 500;
}

InfluenceCorrectorParams InfluenceCorrectorParams::ForK(int k) {
  InfluenceCorrectorParams params;
  params.k = k;
  params.s = 3 * k;
  params.r = PairsPerPart(k);
  return params;
}

InfluenceCorrectorParams InfluenceCorrectorParams::Experimental(
    int k, int s, int r, std::uint64_t p_num, std::uint64_t p_den) {
  if (k < 1 || s < k || r < 1 || p_den == 0 || p_num > p_den) {
    throw std::invalid_argument("InfluenceCorrectorParams: invalid experimental values");
  }
  InfluenceCorrectorParams params;
  params.k = k;
  params.s = s;
  params.r = r;
  params.p_num = p_num;
  params.p_den = p_den;
  params.experimental = true;
  return params;
}

PartitionState IdentifyInfluencingParts(NoisyOracle& o, std::size_t n,
                                        const InfluenceCorrectorParams& params,
                                        std::uint64_t seed) {
  if (n != o.n()) throw std::invalid_argument("IdentifyInfluencingParts: n mismatch");
  if (params.k < 1 || params.s < params.k || params.r < 1) {
    throw std::invalid_argument("IdentifyInfluencingParts: invalid params");
  }
  Rng rng(seed);
  PartitionState state;
  state.s = params.s;
  state.assignment.resize(n);
  std::vector<std::vector<std::size_t>> parts(params.s);
  for (std::size_t c = 1; c <= n; ++c) {
    const int part = static_cast<int>(rng.UniformBelow(params.s));
    state.assignment[c - 1] = part;
    parts[part].push_back(c);
  }

  state.disagreements.assign(params.s, 0);
  for (int part = 0; part < params.s; ++part) {
    for (int t = 0; t < params.r; ++t) {
      const Point x = rng.UniformPoint(n);
      Point x_prime = x;
      for (std::size_t c : parts[part]) x_prime.Set(c, rng.Bit());
      const bool a = o.Query(x);
      const bool b = o.Query(x_prime);
      if (a != b) ++state.disagreements[part];
    }
    if (state.disagreements[part] > 0) state.marked.push_back(part);
  }

  const auto k = static_cast<std::size_t>(params.k);
  if (state.marked.size() == k) {
    state.chosen = state.marked;
  } else if (state.marked.size() < k) {
    std::vector<int> unmarked;
    for (int part = 0; part < params.s; ++part) {
      if (state.disagreements[part] == 0) unmarked.push_back(part);
    }
    Shuffle(unmarked, rng);
    state.chosen = state.marked;
    state.chosen.insert(state.chosen.end(), unmarked.begin(),
                        unmarked.begin() + (k - state.marked.size()));
  } else {
    state.overflowed = true;
    std::vector<int> candidates = state.marked;
    Shuffle(candidates, rng);
    if (params.overflow == OverflowRule::kMostEvidence) {
      std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        return state.disagreements[a] > state.disagreements[b];
      });
    }
    state.chosen.assign(candidates.begin(), candidates.begin() + k);
  }

  state.in_s = Point(n);
  for (int part : state.chosen) {
    for (std::size_t c : parts[part]) state.in_s.Set(c, true);
  }
  return state;
}

Point BuildMaskedInput(const Point& x, const Point& frozen, std::uint64_t p_num,
                       std::uint64_t p_den, std::uint64_t seed) {
  CheckDimension(frozen, x.n(), "BuildMaskedInput");
  if (p_den == 0 || p_num > p_den) {
    throw std::invalid_argument("BuildMaskedInput: p must lie in [0, 1]");
  }
  Rng rng(seed);
  Point y = x;
  for (std::size_t c = 1; c <= x.n(); ++c) {
    if (!frozen.Get(c) && rng.Bernoulli(p_num, p_den)) y.Flip(c);
  }
  return y;
}

CorrectionResult InfluenceCorrect(NoisyOracle& o, const Point& x, int k,
                                  const InfluenceCorrectorParams& params,
                                  std::uint64_t seed) {
  CheckDimension(x, o.n(), "InfluenceCorrect");
  if (params.k != k) {
    throw std::invalid_argument("InfluenceCorrect: params were built for another k");
  }
  const std::uint64_t before = o.query_count();
  const PartitionState state =
      IdentifyInfluencingParts(o, o.n(), params, DeriveSeed(seed, 0));
  const Point y =
      BuildMaskedInput(x, state.in_s, params.p_num, params.p_den, DeriveSeed(seed, 1));
  const bool value = o.Query(y);
  return CorrectionResult{value, o.query_count() - before, state.marked.size(),
                          state.SSize()};
}

CorrectionResult SymmetricCorrect(const std::vector<int>& profile,
                                  const Point& x) {
  if (profile.size() != x.n() + 1) {
    throw std::invalid_argument("SymmetricCorrect: profile must have n + 1 entries");
  }
  return CorrectionResult{profile[x.Weight()] != 0, 0, std::nullopt, std::nullopt};
}

}  // namespace junta_lcc
