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

#ifndef JUNTA_LCC_RANDOM_H_
#define JUNTA_LCC_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "junta_lcc/point.h"

namespace junta_lcc {

// SplitMix64 finalizer. A bijection on 64-bit words.
std::uint64_t Mix64(std::uint64_t z);

// Per-trial seed derivation. Pure and platform independent; for a fixed
// master seed distinct indices never collide, and for a fixed index distinct
// master seeds never collide.
std::uint64_t DeriveSeed(std::uint64_t master_seed, std::uint64_t index);

// Seeded generator with platform-independent bounded draws. The standard
// distributions are implementation-defined, so only raw engine output is
// used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  bool Bit() { return engine_() >> 63; }
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // True with probability num/den.
  bool Bernoulli(std::uint64_t num, std::uint64_t den);
  double UniformUnit() { return (engine_() >> 11) * 0x1.0p-53; }

  Point UniformPoint(std::size_t n);
  // Uniform k-subset of {1..n}, in sampling order.
  std::vector<std::size_t> DistinctCoordinates(std::size_t k, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace junta_lcc

#endif  // JUNTA_LCC_RANDOM_H_
