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

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

// Independent binomial via Pascal's triangle.
std::uint64_t Choose(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return k > n ? 0 : c[n][k];
}

HardInstance ManualInstance(std::size_t n, std::vector<std::size_t> relevant,
                            HardLabel label) {
  HardInstance inst = SampleHardInstance(n, relevant.size(), label, 0);
  inst.relevant = std::move(relevant);
  return inst;
}

TEST(SampleHardInstanceTest, RelevantHalfFollowsLabel) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d0 = SampleHardInstance(10, 2, HardLabel::kD0, seed);
    const auto d1 = SampleHardInstance(10, 2, HardLabel::kD1, seed);
    for (auto c : d0.relevant) EXPECT_TRUE(c >= 1 && c <= 5);
    for (auto c : d1.relevant) EXPECT_TRUE(c >= 6 && c <= 10);
    EXPECT_EQ(d0.threshold, 3u);
    EXPECT_EQ(d0.x_star.ToHex(), "0e3");
  }
}

TEST(SampleHardInstanceTest, MarginalOfCoordinateOne) {
  int hits = 0;
  const int seeds = 10'000;
  for (int s = 0; s < seeds; ++s) {
    const auto inst = SampleHardInstance(10, 2, HardLabel::kD0, DeriveSeed(5, s));
    hits += inst.relevant.front() == 1;
  }
  EXPECT_NEAR(static_cast<double>(hits) / seeds, 0.4, 0.02);
}

TEST(SampleHardInstanceTest, RejectsBadParameters) {
  EXPECT_THROW(SampleHardInstance(11, 2, HardLabel::kD0, 1), std::invalid_argument);
  EXPECT_THROW(SampleHardInstance(10, 6, HardLabel::kD0, 1), std::invalid_argument);
  EXPECT_THROW(SampleHardInstance(10, 0, HardLabel::kD0, 1), std::invalid_argument);
}

TEST(EvalHardGTest, Examples) {
  const HardInstance inst = ManualInstance(10, {6, 7}, HardLabel::kD1);
  EXPECT_TRUE(EvalHardG(inst, Point::FromBits({0, 0, 0, 0, 0, 1, 1, 0, 0, 0})));
  EXPECT_FALSE(EvalHardG(inst, Point::FromBits({1, 1, 1, 1, 0, 1, 1, 0, 0, 0})));
  EXPECT_FALSE(EvalHardG(inst, inst.x_star));
  EXPECT_TRUE(EvalJunta(inst.Junta(), inst.x_star));
  EXPECT_THROW(EvalHardG(inst, Point(12)), std::invalid_argument);
}

TEST(EvalHardGTest, LabelConsistencyAtTarget) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    for (HardLabel label : {HardLabel::kD0, HardLabel::kD1}) {
      const auto inst = SampleHardInstance(20, 1 + seed % 10, label, seed);
      ASSERT_EQ(EvalJunta(inst.Junta(), inst.x_star), label == HardLabel::kD1);
      ASSERT_FALSE(EvalHardG(inst, inst.x_star));
    }
  }
}

TEST(EvalHardGTest, ClosedFormMatchesTruncatedOracle) {
  Rng rng(6);
  for (int rep = 0; rep < 50; ++rep) {
    const auto inst = SampleHardInstance(40, 1 + rep % 6,
                                         rep % 2 ? HardLabel::kD1 : HardLabel::kD0,
                                         rng.Next());
    const NoisyOracle o = inst.MakeOracle();
    for (int q = 0; q < 400; ++q) {
      Point y(40);
      for (std::size_t c = 1; c <= 40; ++c) y.Set(c, rng.Bernoulli(q % 5 + 1, 6));
      ASSERT_EQ(EvalHardG(inst, y), o.Peek(y));
    }
  }
}

TEST(EvalHardGTest, NeverOneOutsideWeightBox) {
  Rng rng(7);
  const auto inst = SampleHardInstance(400, 3, HardLabel::kD1, 7);
  int outside = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    Point y(400);
    const std::uint64_t bias = 50 + (i % 4) * 5;  // 50%..65% ones
    for (std::size_t c = 1; c <= 400; ++c) y.Set(c, rng.Bernoulli(bias, 100));
    const bool in_box = y.WeightInRange(1, 200) <= 120 && y.WeightInRange(201, 400) <= 120;
    if (!in_box) {
      ++outside;
      ASSERT_FALSE(EvalHardG(inst, y));
    }
  }
  EXPECT_GT(outside, 100'000);
}

TEST(SingleQueryOneProbTest, Examples) {
  EXPECT_EQ(SingleQueryOneProb(20, 3, 2), 0);
  EXPECT_EQ(SingleQueryOneProb(20, 3, 6), Rational(1, 6));
  EXPECT_EQ(SingleQueryOneProb(20, 3, 6),
            Rational(BigInt(Choose(6, 3)), BigInt(Choose(10, 3))));
  EXPECT_THROW(SingleQueryOneProb(21, 3, 6), std::invalid_argument);
  EXPECT_THROW(SingleQueryOneProb(20, 3, 11), std::invalid_argument);
}

TEST(SingleQueryOneProbTest, MonotoneAndOneAtFullHalf) {
  for (std::size_t n : {10u, 40u, 100u}) {
    for (std::size_t k = 1; k <= n / 2; ++k) {
      Rational prev(0);
      for (std::size_t m = 0; m <= n / 2; ++m) {
        const Rational cur = SingleQueryOneProb(n, k, m);
        ASSERT_GE(cur, prev);
        prev = cur;
      }
      ASSERT_EQ(prev, 1);
    }
  }
}

TEST(SingleQueryOneProbTest, BoundedBySixTenthsToTheK) {
  for (std::size_t k = 5; k <= 20; ++k) {
    Rational bound(1);
    for (std::size_t i = 0; i < k; ++i) bound *= Rational(3, 5);
    for (std::size_t m = 0; m <= 300; ++m) {
      ASSERT_LE(SingleQueryOneProb(1000, k, m), bound) << k << " " << m;
    }
  }
}

TEST(SingleQueryOneProbTest, MatchesSampledInstances) {
  // A query with 6 ones in the first half, weights inside the box.
  const Point y = Point::FromBits({1, 1, 1, 1, 1, 1, 0, 0, 0, 0,
                                   0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  int ones = 0;
  const int samples = 60'000;
  for (int s = 0; s < samples; ++s) {
    ones += EvalHardG(SampleHardInstance(20, 3, HardLabel::kD0, DeriveSeed(8, s)), y);
  }
  const double p = 1.0 / 6;
  EXPECT_NEAR(static_cast<double>(ones) / samples, p, 4 * std::sqrt(p * (1 - p) / samples));
}

TEST(DistinguisherTest, ZeroQueriesCarryNoInformation) {
  for (auto strategy : {DistinguisherStrategy::kUniformRandom,
                        DistinguisherStrategy::kFixedPointList,
                        DistinguisherStrategy::kCubeSum}) {
    const auto r = RunDistinguisher(strategy, 0, 100, 5, 4000, 9);
    EXPECT_EQ(r.one_hit_rate, 0.0);
    EXPECT_LE(r.advantage, 3 * std::sqrt(1.0 / (4 * 4000)));
  }
}

TEST(DistinguisherTest, UniformQueriesAreBlind) {
  const auto r = RunDistinguisher(DistinguisherStrategy::kUniformRandom, 1000, 400, 20,
                                  2000, 10);
  EXPECT_LE(r.one_hit_rate, 0.06);
  EXPECT_LE(r.advantage, 0.05);
  const auto fixed = RunDistinguisher(DistinguisherStrategy::kFixedPointList, 1000, 400,
                                      20, 2000, 10);
  EXPECT_LE(fixed.one_hit_rate, 0.06);
  EXPECT_LE(fixed.advantage, 0.05);
}

TEST(DistinguisherTest, HitsRevealTheLabelAtSmallK) {
  // k = 1: most uniform queries inside the box return 1 half the time.
  const auto r = RunDistinguisher(DistinguisherStrategy::kUniformRandom, 50, 100, 1,
                                  1000, 11);
  EXPECT_GE(r.one_hit_rate, 0.99);
  EXPECT_GE(r.advantage, 0.4);
}

TEST(DistinguisherTest, CubeSumDistinguishes) {
  const auto r = RunDistinguisher(DistinguisherStrategy::kCubeSum, 127, 1000, 6, 2000, 12);
  EXPECT_GE(r.advantage, 0.35);
}

TEST(DistinguisherTest, NamesAndJson) {
  for (auto s : {DistinguisherStrategy::kUniformRandom,
                 DistinguisherStrategy::kFixedPointList, DistinguisherStrategy::kCubeSum}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  EXPECT_THROW(ParseStrategy("adaptive"), std::invalid_argument);
  const auto r = RunDistinguisher(DistinguisherStrategy::kUniformRandom, 0, 10, 2, 4, 13);
  const std::string json = r.ToJson();
  EXPECT_EQ(json.rfind(R"({"strategy":"uniform-random-queries","n":10,"k":2,"q":0,"trials":4,"advantage":)", 0), 0u);
  EXPECT_NE(json.find(R"("seed":13})"), std::string::npos);
  EXPECT_EQ(json, RunDistinguisher(DistinguisherStrategy::kUniformRandom, 0, 10, 2, 4, 13).ToJson());
}

TEST(MajAmbiguityTest, EightVariables) {
  const auto r = MajAmbiguityCheck(8);
  EXPECT_TRUE(r.pairs_differ_exactly_on_layer);
  EXPECT_TRUE(r.truncated_identical);
  EXPECT_EQ(r.pairs_checked, 28u);
  EXPECT_EQ(r.layer_fraction, Rational(70, 256));
}

TEST(MajAmbiguityTest, AllEvenSizes) {
  for (std::size_t n = 2; n <= 16; n += 2) {
    const auto r = MajAmbiguityCheck(n);
    EXPECT_TRUE(r.pairs_differ_exactly_on_layer) << n;
    EXPECT_TRUE(r.truncated_identical) << n;
    EXPECT_EQ(r.layer_fraction, Rational(BigInt(Choose(n, n / 2)), BigInt(1) << n));
  }
  EXPECT_THROW(MajAmbiguityCheck(7), std::invalid_argument);
  EXPECT_THROW(MajAmbiguityCheck(18), std::invalid_argument);
}

}  // namespace
}  // namespace junta_lcc
