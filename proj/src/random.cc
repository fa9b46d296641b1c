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

#include "junta_lcc/random.h"

#include <numeric>
#include <stdexcept>

namespace junta_lcc {

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master_seed, std::uint64_t index) {
  return Mix64(Mix64(master_seed) ^ (index * 0x9e3779b97f4a7c15ull +
                                     0x632be59bd9b4e019ull));
}

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng: bound must be positive");
  // Lemire's multiply-and-reject.
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

bool Rng::Bernoulli(std::uint64_t num, std::uint64_t den) {
  if (num >= den) return true;
  if (num == 0) return false;
  return UniformBelow(den) < num;
}

Point Rng::UniformPoint(std::size_t n) {
  Point p(n);
  for (auto& w : p.mutable_words()) w = engine_();
  p.ClearPadding();
  return p;
}

std::vector<std::size_t> Rng::DistinctCoordinates(std::size_t k,
                                                  std::size_t n) {
  if (k > n) throw std::invalid_argument("Rng: k exceeds n");
  // Partial Fisher-Yates.
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + UniformBelow(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace junta_lcc
