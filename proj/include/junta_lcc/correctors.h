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

#ifndef JUNTA_LCC_CORRECTORS_H_
#define JUNTA_LCC_CORRECTORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "junta_lcc/oracle.h"
#include "junta_lcc/point.h"
#include "junta_lcc/rational.h"

namespace junta_lcc {

struct CorrectionResult {
  bool value = false;
  std::uint64_t queries_used = 0;
  std::optional<std::size_t> marked_parts;
  std::optional<std::size_t> s_size;

  // {"value":0|1,"queries":int,"marked_parts":int|null,"s_size":int|null}
  std::string ToJson() const;
};

// Subcube corrector for polynomials of degree <= k.
//
// Draws k+1 independent uniform directions and returns the XOR of g over the
// 2^(k+1) - 1 nonzero subset sums offset by x. On a clean oracle the result
// is exact for every draw, since the (k+1)-st finite difference of a
// degree-<=k polynomial vanishes; each queried point is marginally uniform,
// so corruption of density eps fails with probability at most
// (2^(k+1) - 1) * eps. Requires k <= 29.
CorrectionResult CubeSumCorrect(NoisyOracle& o, const Point& x, int k,
                                std::uint64_t seed);

// What to do when more than k parts are marked (only possible when some
// query hit a corrupted point).
enum class OverflowRule {
  // Keep the k marked parts with the most disagreeing pairs; ties are broken
  // uniformly at random.
  kMostEvidence,
  // Keep a uniformly random k-subset of the marked parts.
  kUniformSubset,
};

struct InfluenceCorrectorParams {
  int k = 0;
  int s = 0;  // number of parts, 3k
  int r = 0;  // query pairs per part, ceil(100 log2 k) + 500
  std::uint64_t p_num = 3;  // flip probability outside S, 3/4
  std::uint64_t p_den = 4;
  OverflowRule overflow = OverflowRule::kMostEvidence;
  bool experimental = false;

  static InfluenceCorrectorParams ForK(int k);
  // Arbitrary s, r and p; the result is marked experimental.
  static InfluenceCorrectorParams Experimental(int k, int s, int r,
                                               std::uint64_t p_num,
                                               std::uint64_t p_den);
  std::uint64_t QueryBudget() const {
    return 2 * static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(r) + 1;
  }
};

// ceil(100 * log2 k) + 500, computed exactly.
int PairsPerPart(int k);

struct PartitionState {
  int s = 0;
  // assignment[c - 1] is the part (0-based) holding coordinate c.
  std::vector<int> assignment;
  // Disagreeing pairs observed per part.
  std::vector<std::uint32_t> disagreements;
  std::vector<int> marked;  // ascending
  std::vector<int> chosen;  // exactly k parts
  bool overflowed = false;  // more than k parts were marked
  // Union of the chosen parts, as a coordinate mask.
  Point in_s;

  std::size_t SSize() const { return in_s.Weight(); }
};

// Randomly partitions [n] into params.s parts and marks every part for which
// one of params.r pairs (x, x') differing only inside the part gets different
// answers. Uses exactly 2 * s * r queries.
PartitionState IdentifyInfluencingParts(NoisyOracle& o, std::size_t n,
                                        const InfluenceCorrectorParams& params,
                                        std::uint64_t seed);

// y_i = x_i where frozen has a 1; elsewhere y_i = 1 - x_i with probability
// p_num / p_den, independently.
Point BuildMaskedInput(const Point& x, const Point& frozen, std::uint64_t p_num,
                       std::uint64_t p_den, std::uint64_t seed);

// Influence-based corrector for k-juntas whose relevant variables all have
// influence >= 1/50. Uses exactly 2 * s * r + 1 queries.
CorrectionResult InfluenceCorrect(NoisyOracle& o, const Point& x, int k,
                                  const InfluenceCorrectorParams& params,
                                  std::uint64_t seed);

// Zero-query corrector for symmetric functions: profile[w] is the value at
// weight w, profile.size() == x.n() + 1.
CorrectionResult SymmetricCorrect(const std::vector<int>& profile,
                                  const Point& x);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_CORRECTORS_H_
