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

#ifndef JUNTA_LCC_LOWERBOUND_H_
#define JUNTA_LCC_LOWERBOUND_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "junta_lcc/boolfn.h"
#include "junta_lcc/oracle.h"
#include "junta_lcc/point.h"
#include "junta_lcc/rational.h"

namespace junta_lcc {

enum class HardLabel { kD0, kD1 };

// AND of k coordinates placed entirely in one half of [n] (first half for
// D0, second half for D1), truncated to 0 outside the box where both halves
// have weight <= floor(0.3 n). The target point x_star = 0^{n/2} 1^{n/2}
// has f(x_star) = 0 under D0 and 1 under D1, yet g(x_star) = 0 in both.
struct HardInstance {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::size_t> relevant;  // ascending, 1-based
  HardLabel label = HardLabel::kD0;
  std::size_t threshold = 0;
  Point x_star;

  // The uncorrupted AND junta. Requires k <= 24.
  JuntaSpec Junta() const;
  // The same g as EvalHardG, expressed as junta + WeightTruncation.
  NoisyOracle MakeOracle() const;
};

std::size_t HardThreshold(std::size_t n);

// Throws std::invalid_argument for odd n, k == 0 or k > n / 2.
HardInstance SampleHardInstance(std::size_t n, std::size_t k, HardLabel label,
                                std::uint64_t seed);

// Closed form g(y); O(n).
bool EvalHardG(const HardInstance& inst, const Point& y);

// C(m, k) / C(n/2, k): probability over the hidden placement that a query
// with in-half weight m (inside the weight box) returns 1.
Rational SingleQueryOneProb(std::size_t n, std::size_t k, std::size_t m);

enum class DistinguisherStrategy { kUniformRandom, kFixedPointList, kCubeSum };

// Accepts "uniform-random-queries", "fixed-point-list", "cube-sum-at-x_star".
DistinguisherStrategy ParseStrategy(std::string_view name);
std::string StrategyName(DistinguisherStrategy strategy);

struct DistinguisherReport {
  DistinguisherStrategy strategy = DistinguisherStrategy::kUniformRandom;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t q = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t correct = 0;
  std::uint64_t one_hits = 0;
  double advantage = 0;     // |correct / trials - 1/2|
  double one_hit_rate = 0;  // trials in which some query returned 1

  std::string ToJson() const;
};

// Each trial draws a uniform label, samples an instance, spends at most q
// non-adaptive queries and guesses the label.
//
// Guessing: the query strategies guess D1 iff some query returned 1 and the
// ones shared by all such queries fit the AND in the second half but not in
// the first. The cube-sum strategy runs the subcube corrector at x_star with
// the largest degree d <= k such that 2^(d+1) - 1 <= q, and guesses D1 iff
// it returns 1.
DistinguisherReport RunDistinguisher(DistinguisherStrategy strategy,
                                     std::uint64_t q, std::size_t n,
                                     std::size_t k, std::uint64_t trials,
                                     std::uint64_t seed);

struct MajAmbiguityReport {
  std::size_t n = 0;
  std::size_t pairs_checked = 0;
  // Every disagreement of f_j, f_j' has weight n/2, and every weight-n/2
  // point with x_j != x_j' is a disagreement.
  bool pairs_differ_exactly_on_layer = false;
  // Forcing the layer to 0 makes all f_j the same function.
  bool truncated_identical = false;
  Rational layer_fraction;

  std::string ToJson() const;
};

// f_j = strict majority over [n] \ {j}. Exhaustive; n even, 2 <= n <= 16.
MajAmbiguityReport MajAmbiguityCheck(std::size_t n);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_LOWERBOUND_H_
