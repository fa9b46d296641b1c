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

#include "junta_lcc/oracle.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

std::uint64_t KeyedHash(std::uint64_t seed, const Point& x) {
  std::uint64_t h = Mix64(seed ^ 0x5851f42d4c957f2dull);
  h = Mix64(h ^ x.n());
  for (auto w : x.words()) h = Mix64(h ^ w);
  return h;
}

bool Truncated(const WeightTruncation& t, const Point& y) {
  const std::size_t half = y.n() / 2;
  const std::size_t first = half == 0 ? 0 : y.WeightInRange(1, half);
  const std::size_t second = y.Weight() - first;
  return first > t.threshold || second > t.threshold;
}

std::uint64_t ParseUnsigned(std::string_view text, const char* what) {
  if (text.empty()) {
    throw std::invalid_argument(std::string("corruption: missing ") + what);
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("corruption: invalid ") + what +
                                  " '" + std::string(text) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

Point PointFromIndex(std::size_t n, std::uint64_t index) {
  Point p(n);
  p.mutable_words()[0] = index;
  return p;
}

}  // namespace

CorruptionModel MakeExplicitFlips(const std::vector<Point>& points) {
  auto set = std::make_shared<std::unordered_set<Point, PointHash>>(
      points.begin(), points.end());
  if (set->size() != points.size()) {
    throw std::invalid_argument("ExplicitFlips: duplicate points");
  }
  auto ordered = std::make_shared<std::vector<Point>>(points);
  std::sort(ordered->begin(), ordered->end(),
            [](const Point& a, const Point& b) { return a.ToHex() < b.ToHex(); });
  return ExplicitFlips{std::move(set), std::move(ordered)};
}

CorruptionModel MakeIidFlips(const Rational& eps, std::uint64_t seed) {
  if (eps < 0 || eps >= 1) {
    throw std::invalid_argument("IidFlips: eps must lie in [0, 1), got " +
                                ToString(eps));
  }
  const BigInt scaled = (boost::multiprecision::numerator(eps) << 64) /
                        boost::multiprecision::denominator(eps);
  return IidFlips{eps, seed, scaled.convert_to<std::uint64_t>()};
}

CorruptionModel MakeRandomExplicitFlips(std::size_t n, std::size_t count,
                                        std::uint64_t seed) {
  if (n < 63 && count > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("randflips: more points than 2^n");
  }
  Rng rng(seed);
  std::unordered_set<Point, PointHash> seen;
  std::vector<Point> points;
  points.reserve(count);
  while (points.size() < count) {
    Point p = rng.UniformPoint(n);
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  return MakeExplicitFlips(points);
}

std::vector<Point> ReadPointList(std::istream& in, std::size_t n) {
  std::vector<Point> points;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    points.push_back(Point::FromHex(line, n));
  }
  return points;
}

void WritePointList(std::ostream& out, const std::vector<Point>& points) {
  for (const auto& p : points) out << p.ToHex() << '\n';
}

CorruptionModel ParseCorruption(std::string_view spec, std::size_t n) {
  if (spec == "none") return NoCorruption{};
  if (spec == "layer") return BalancedLayerZero{};
  if (spec.starts_with("flips:")) {
    const std::string path(spec.substr(6));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("corruption: cannot open '" + path + "'");
    return MakeExplicitFlips(ReadPointList(in, n));
  }
  if (spec.starts_with("iid:")) {
    const std::string_view rest = spec.substr(4);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("corruption: expected iid:<eps>:<seed>");
    }
    return MakeIidFlips(ParseRational(rest.substr(0, colon)),
                        ParseUnsigned(rest.substr(colon + 1), "seed"));
  }
  if (spec.starts_with("trunc:")) {
    return WeightTruncation{ParseUnsigned(spec.substr(6), "threshold")};
  }
  if (spec.starts_with("randflips:")) {
    const std::string_view rest = spec.substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("corruption: expected randflips:<count>:<seed>");
    }
    return MakeRandomExplicitFlips(n, ParseUnsigned(rest.substr(0, colon), "count"),
                                   ParseUnsigned(rest.substr(colon + 1), "seed"));
  }
  throw std::invalid_argument("corruption: unknown model '" + std::string(spec) +
                              "'");
}

std::string DescribeCorruption(const CorruptionModel& model) {
  struct Visitor {
    std::string operator()(const NoCorruption&) const { return "none"; }
    std::string operator()(const ExplicitFlips& f) const {
      return "flips[" + std::to_string(f.points->size()) + "]";
    }
    std::string operator()(const IidFlips& f) const {
      return "iid:" + ToString(f.eps) + ":" + std::to_string(f.seed);
    }
    std::string operator()(const WeightTruncation& t) const {
      return "trunc:" + std::to_string(t.threshold);
    }
    std::string operator()(const BalancedLayerZero&) const { return "layer"; }
  };
  return std::visit(Visitor{}, model);
}

NoisyOracle::NoisyOracle(BlackBox base, CorruptionModel corruption)
    : base_(std::move(base)), corruption_(std::move(corruption)) {
  if (base_.n == 0 || !base_.eval) {
    throw std::invalid_argument("NoisyOracle: base function is empty");
  }
  if (const auto* f = std::get_if<ExplicitFlips>(&corruption_)) {
    for (const auto& p : *f->ordered) CheckDimension(p, base_.n, "ExplicitFlips");
  }
  if (std::holds_alternative<BalancedLayerZero>(corruption_) && base_.n % 2 != 0) {
    throw std::invalid_argument("BalancedLayerZero: n must be even");
  }
}

bool NoisyOracle::IsCorrupted(const Point& x) const {
  struct Visitor {
    const NoisyOracle& o;
    const Point& x;
    bool operator()(const NoCorruption&) const { return false; }
    bool operator()(const ExplicitFlips& f) const { return f.points->contains(x); }
    bool operator()(const IidFlips& f) const {
      return KeyedHash(f.seed, x) < f.hash_threshold;
    }
    bool operator()(const WeightTruncation& t) const {
      return Truncated(t, x) && o.base_(x);
    }
    bool operator()(const BalancedLayerZero&) const {
      return x.Weight() == x.n() / 2 && o.base_(x);
    }
  };
  return std::visit(Visitor{*this, x}, corruption_);
}

bool NoisyOracle::Peek(const Point& x) const {
  CheckDimension(x, base_.n, "NoisyOracle");
  struct Visitor {
    const NoisyOracle& o;
    const Point& x;
    bool operator()(const NoCorruption&) const { return o.base_(x); }
    bool operator()(const ExplicitFlips& f) const {
      return o.base_(x) != f.points->contains(x);
    }
    bool operator()(const IidFlips& f) const {
      return o.base_(x) != (KeyedHash(f.seed, x) < f.hash_threshold);
    }
    bool operator()(const WeightTruncation& t) const {
      return !Truncated(t, x) && o.base_(x);
    }
    bool operator()(const BalancedLayerZero&) const {
      return x.Weight() != x.n() / 2 && o.base_(x);
    }
  };
  return std::visit(Visitor{*this, x}, corruption_);
}

bool NoisyOracle::Query(const Point& x) {
  const bool value = Peek(x);
  ++query_count_;
  return value;
}

std::optional<Point> NoisyOracle::FindCorruptedPoint(std::uint64_t seed,
                                                     std::uint64_t attempts) const {
  if (const auto* f = std::get_if<ExplicitFlips>(&corruption_)) {
    if (f->ordered->empty()) return std::nullopt;
    Rng rng(seed);
    return (*f->ordered)[rng.UniformBelow(f->ordered->size())];
  }
  if (std::holds_alternative<NoCorruption>(corruption_)) return std::nullopt;
  Rng rng(seed);
  for (std::uint64_t a = 0; a < attempts; ++a) {
    Point x = rng.UniformPoint(n());
    if (IsCorrupted(x)) return x;
  }
  return std::nullopt;
}

Rational ExhaustiveDisagreement(const NoisyOracle& o) {
  if (o.n() > kMaxExhaustiveDimension) {
    throw std::invalid_argument("ExhaustiveDisagreement: n exceeds 20");
  }
  const std::uint64_t total = std::uint64_t{1} << o.n();
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (o.IsCorrupted(PointFromIndex(o.n(), idx))) ++count;
  }
  return Rational(BigInt(count), BigInt(total));
}

Rational TruncatedRegionFraction(std::size_t half, std::size_t threshold) {
  BigInt inside = 0;
  for (std::size_t w = 0; w <= std::min(half, threshold); ++w) {
    inside += Binomial(static_cast<unsigned>(half), static_cast<unsigned>(w));
  }
  BigInt total = 1;
  total <<= half;
  const Rational p(inside, total);
  return 1 - p * p;
}

DisagreementResult DisagreementFraction(const NoisyOracle& o) {
  using Kind = DisagreementResult::Kind;
  const std::size_t n = o.n();
  const bool small = n <= kMaxExhaustiveDimension;
  struct Visitor {
    const NoisyOracle& o;
    std::size_t n;
    bool small;
    DisagreementResult operator()(const NoCorruption&) const {
      return {Kind::kExact, Rational(0), "no corruption"};
    }
    DisagreementResult operator()(const ExplicitFlips& f) const {
      BigInt total = 1;
      total <<= n;
      return {Kind::kExact, Rational(BigInt(f.points->size()), total),
              "explicit flip count"};
    }
    DisagreementResult operator()(const IidFlips& f) const {
      if (small) return {Kind::kExact, ExhaustiveDisagreement(o), "exhaustive"};
      return {Kind::kExpected, f.eps, "expected flip density"};
    }
    DisagreementResult operator()(const WeightTruncation& t) const {
      if (n % 2 == 0) {
        return {Kind::kUpperBound, TruncatedRegionFraction(n / 2, t.threshold),
                "truncated-region mass"};
      }
      if (small) return {Kind::kExact, ExhaustiveDisagreement(o), "exhaustive"};
      return {Kind::kUnavailable, Rational(0), "odd n beyond exhaustive range"};
    }
    DisagreementResult operator()(const BalancedLayerZero&) const {
      if (small) return {Kind::kExact, ExhaustiveDisagreement(o), "exhaustive"};
      BigInt total = 1;
      total <<= n;
      return {Kind::kUpperBound,
              Rational(Binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2)),
                       total),
              "balanced-layer mass"};
    }
  };
  return std::visit(Visitor{o, n, small}, o.corruption());
}

}  // namespace junta_lcc
