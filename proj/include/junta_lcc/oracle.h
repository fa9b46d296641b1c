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

#ifndef JUNTA_LCC_ORACLE_H_
#define JUNTA_LCC_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "junta_lcc/boolfn.h"
#include "junta_lcc/point.h"
#include "junta_lcc/rational.h"

namespace junta_lcc {

struct NoCorruption {};

// g differs from the base exactly on `points`.
struct ExplicitFlips {
  std::shared_ptr<const std::unordered_set<Point, PointHash>> points;
  // Same points in ascending hex order, for deterministic selection.
  std::shared_ptr<const std::vector<Point>> ordered;
};

// Each point is flipped iff a keyed hash of (seed, point) falls below
// eps * 2^64, so g is a fixed function with flip density close to eps.
struct IidFlips {
  Rational eps;
  std::uint64_t seed = 0;
  std::uint64_t hash_threshold = 0;
};

// g(y) = 0 whenever either half of y has weight above `threshold`. The first
// half is coordinates 1..floor(n/2).
struct WeightTruncation {
  std::size_t threshold = 0;
};

// g(y) = 0 on the layer of weight exactly n/2; n must be even.
struct BalancedLayerZero {};

using CorruptionModel = std::variant<NoCorruption, ExplicitFlips, IidFlips,
                                     WeightTruncation, BalancedLayerZero>;

CorruptionModel MakeExplicitFlips(const std::vector<Point>& points);
// Throws std::invalid_argument unless 0 <= eps < 1.
CorruptionModel MakeIidFlips(const Rational& eps, std::uint64_t seed);
// Exactly `count` distinct uniformly chosen points of Z_2^n.
CorruptionModel MakeRandomExplicitFlips(std::size_t n, std::size_t count,
                                        std::uint64_t seed);

// One point per line as hex (Point::ToHex encoding); blank lines ignored.
std::vector<Point> ReadPointList(std::istream& in, std::size_t n);
void WritePointList(std::ostream& out, const std::vector<Point>& points);

// Parses "none", "flips:<file>", "iid:<eps>:<seed>", "trunc:<threshold>",
// "layer", and "randflips:<count>:<seed>". Throws std::invalid_argument.
CorruptionModel ParseCorruption(std::string_view spec, std::size_t n);
std::string DescribeCorruption(const CorruptionModel& model);

// The only access path a corrector gets to g. Not thread-safe: an instance
// belongs to a single trial.
class NoisyOracle {
 public:
  // Throws std::invalid_argument if the model is inconsistent with base.n.
  NoisyOracle(BlackBox base, CorruptionModel corruption);

  std::size_t n() const { return base_.n; }
  const BlackBox& base() const { return base_; }
  const CorruptionModel& corruption() const { return corruption_; }

  // g(x); counts one query.
  bool Query(const Point& x);
  // g(x) without counting. For analysis and test harnesses only.
  bool Peek(const Point& x) const;
  // True when the model changes the value at x.
  bool IsCorrupted(const Point& x) const;

  std::uint64_t query_count() const { return query_count_; }
  void ResetCount() { query_count_ = 0; }

  // A point where g differs from the base, if the model exposes one within
  // `attempts` random probes.
  std::optional<Point> FindCorruptedPoint(std::uint64_t seed,
                                          std::uint64_t attempts = 1u << 22) const;

 private:
  BlackBox base_;
  CorruptionModel corruption_;
  std::uint64_t query_count_ = 0;
};

struct DisagreementResult {
  enum class Kind { kExact, kUpperBound, kExpected, kUnavailable };
  Kind kind = Kind::kUnavailable;
  Rational value;
  std::string note;
};

inline constexpr std::size_t kMaxExhaustiveDimension = 20;

// |{x : g(x) != base(x)}| / 2^n. Exact when countable (exhaustively for
// n <= 20); otherwise the analytic bound or expectation the model supports,
// labeled as such, or kUnavailable.
DisagreementResult DisagreementFraction(const NoisyOracle& o);
// Always exhaustive; requires n <= 20.
Rational ExhaustiveDisagreement(const NoisyOracle& o);

// 1 - Pr[Bin(half, 1/2) <= threshold]^2, the mass of the truncated region
// for an n = 2 * half dimensional cube.
Rational TruncatedRegionFraction(std::size_t half, std::size_t threshold);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_ORACLE_H_
