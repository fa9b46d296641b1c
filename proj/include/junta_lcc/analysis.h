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

#ifndef JUNTA_LCC_ANALYSIS_H_
#define JUNTA_LCC_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "junta_lcc/boolfn.h"
#include "junta_lcc/rational.h"

namespace junta_lcc {

// Minimum influence every relevant variable must have for the
// influence-based corrector to apply.
inline const Rational kInfluenceThreshold{1, 50};

// Pr_x[f(x) != f(x + e_i)] over the 2^k assignments, exactly.
// Throws std::invalid_argument unless 1 <= i <= k.
Rational InfluenceExact(const TruthTable& tt, int i);

// Monte Carlo influence of coordinate i (1-based) of a black box on
// f.n coordinates. Deterministic in seed.
double InfluenceEstimate(const BlackBox& f, std::size_t i, std::uint64_t trials,
                         std::uint64_t seed);

// Uniform core table and uniform injective embedding into [n].
JuntaSpec SampleRandomJunta(int k, std::size_t n, std::uint64_t seed);

struct InfluenceReport {
  int k = 0;
  std::vector<Rational> per_variable;
  Rational min_influence;
  bool passes_threshold = false;

  // {"k":..,"influences":["num/den",..],"min":"num/den","passes":bool}
  std::string ToJson() const;
};

InfluenceReport MinInfluenceReport(const TruthTable& tt);

// Fraction of `samples` uniformly random k-variable cores whose minimum
// influence is below the threshold. Requires k <= 16.
double FractionLowInfluence(int k, std::uint64_t samples, std::uint64_t seed);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_ANALYSIS_H_
