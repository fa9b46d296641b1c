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

#include <array>
#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "junta_lcc/random.h"

namespace junta_lcc {
namespace {

Rational BruteForceInfluence(const TruthTable& tt, int i) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < tt.size(); ++j) {
    if (tt.Get(j) != tt.Get(j ^ (std::uint64_t{1} << (i - 1)))) ++count;
  }
  return Rational(BigInt(count), BigInt(tt.size()));
}

TEST(InfluenceExactTest, KnownFunctions) {
  for (int k = 1; k <= 10; ++k) {
    for (int i = 1; i <= k; ++i) {
      EXPECT_EQ(InfluenceExact(TruthTable::Parity(k), i), Rational(1));
      EXPECT_EQ(InfluenceExact(TruthTable::Constant(k, true), i), Rational(0));
      EXPECT_EQ(InfluenceExact(TruthTable::And(k), i), PowerOfTwo(1 - k));
      EXPECT_EQ(BruteForceInfluence(TruthTable::And(k), i), PowerOfTwo(1 - k));
    }
  }
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(InfluenceExact(TruthTable::Majority(3), i), Rational(1, 2));
  }
}

TEST(InfluenceExactTest, MatchesBruteForceAndHasEvenNumerator) {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int k = 1 + static_cast<int>(rng.UniformBelow(12));
    const TruthTable tt = TruthTable::Random(k, rng);
    for (int i = 1; i <= k; ++i) {
      const Rational inf = InfluenceExact(tt, i);
      ASSERT_EQ(inf, BruteForceInfluence(tt, i));
      ASSERT_GE(inf, 0);
      ASSERT_LE(inf, 1);
      // Scaled to denominator 2^k the count is even.
      const Rational scaled = inf * Rational(BigInt(tt.size()));
      ASSERT_EQ(boost::multiprecision::denominator(scaled), 1);
      ASSERT_EQ(boost::multiprecision::numerator(scaled) % 2, 0);
    }
  }
}

TEST(InfluenceExactTest, IndexOutOfRange) {
  EXPECT_THROW(InfluenceExact(TruthTable::And(3), 0), std::invalid_argument);
  EXPECT_THROW(InfluenceExact(TruthTable::And(3), 4), std::invalid_argument);
}

TEST(InfluenceEstimateTest, ExactExtremes) {
  const BlackBox parity = MakeBlackBox(JuntaSpec(20, TruthTable::Parity(3), {1, 7, 20}));
  EXPECT_EQ(InfluenceEstimate(parity, 7, 10'000, 1), 1.0);
  const BlackBox constant = MakeBlackBox(JuntaSpec(20, TruthTable::Constant(3, true), {1, 7, 20}));
  EXPECT_EQ(InfluenceEstimate(constant, 7, 10'000, 1), 0.0);
  EXPECT_THROW(InfluenceEstimate(parity, 7, 0, 1), std::invalid_argument);
  EXPECT_THROW(InfluenceEstimate(parity, 21, 10, 1), std::invalid_argument);
}

TEST(InfluenceEstimateTest, AndFourNearOneEighth) {
  const BlackBox f = MakeBlackBox(JuntaSpec(30, TruthTable::And(4), {3, 11, 17, 29}));
  const double p = 1.0 / 8;
  const double trials = 1e5;
  EXPECT_NEAR(InfluenceEstimate(f, 17, 100'000, 77), p,
              3 * std::sqrt(p * (1 - p) / trials));
  EXPECT_EQ(InfluenceEstimate(f, 17, 1000, 5), InfluenceEstimate(f, 17, 1000, 5));
}

TEST(InfluenceEstimateTest, ConvergesToExact) {
  Rng rng(41);
  const std::uint64_t trials = 100'000;
  int outliers = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const int k = 1 + static_cast<int>(rng.UniformBelow(8));
    const std::size_t n = k + rng.UniformBelow(20);
    const JuntaSpec spec(n, TruthTable::Random(k, rng), rng.DistinctCoordinates(k, n));
    const int i = 1 + static_cast<int>(rng.UniformBelow(k));
    const double exact = ToDouble(InfluenceExact(spec.core(), i));
    const double estimate =
        InfluenceEstimate(MakeBlackBox(spec), spec.embedding()[i - 1], trials, rng.Next());
    const double tol = 4 * std::sqrt(exact * (1 - exact) / trials) + 4.0 / trials;
    if (std::abs(estimate - exact) > tol) ++outliers;
  }
  EXPECT_LE(outliers, 2);
}

TEST(SampleRandomJuntaTest, CoreTablesUniformForKOne) {
  std::array<int, 4> counts{};
  const int samples = 10'000;
  for (int s = 0; s < samples; ++s) {
    ++counts[SampleRandomJunta(1, 5, DeriveSeed(17, s)).core().words()[0]];
  }
  double chi2 = 0;
  const double expected = samples / 4.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 99.9th percentile of chi-square with 3 degrees of freedom.
  EXPECT_LT(chi2, 16.27);
}

TEST(SampleRandomJuntaTest, EmbeddingMarginal) {
  int used = 0;
  const int samples = 10'000;
  for (int s = 0; s < samples; ++s) {
    const auto spec = SampleRandomJunta(3, 12, DeriveSeed(18, s));
    for (auto c : spec.embedding()) used += c == 1;
  }
  EXPECT_NEAR(static_cast<double>(used) / samples, 3.0 / 12, 0.02);
}

TEST(SampleRandomJuntaTest, DeterministicAndValidated) {
  const auto a = SampleRandomJunta(5, 40, 123);
  const auto b = SampleRandomJunta(5, 40, 123);
  EXPECT_EQ(a.core(), b.core());
  EXPECT_EQ(a.embedding(), b.embedding());
  EXPECT_THROW(SampleRandomJunta(5, 4, 1), std::invalid_argument);
}

TEST(MinInfluenceReportTest, Examples) {
  const auto parity = MinInfluenceReport(TruthTable::Parity(5));
  EXPECT_EQ(parity.min_influence, Rational(1));
  EXPECT_TRUE(parity.passes_threshold);

  const auto and7 = MinInfluenceReport(TruthTable::And(7));
  EXPECT_EQ(and7.min_influence, Rational(1, 64));
  EXPECT_FALSE(and7.passes_threshold);

  const auto maj = MinInfluenceReport(TruthTable::Majority(3));
  EXPECT_EQ(maj.min_influence, Rational(1, 2));
  EXPECT_TRUE(maj.passes_threshold);
}

TEST(MinInfluenceReportTest, ThresholdIsInclusive) {
  // Exactly 1/50 cannot occur with a power-of-two denominator, so probe both
  // sides: AND_6 has 1/32 >= 1/50, AND_7 has 1/64 < 1/50.
  EXPECT_TRUE(MinInfluenceReport(TruthTable::And(6)).passes_threshold);
  EXPECT_FALSE(MinInfluenceReport(TruthTable::And(7)).passes_threshold);
}

TEST(MinInfluenceReportTest, Json) {
  EXPECT_EQ(MinInfluenceReport(TruthTable::And(2)).ToJson(),
            R"({"k":2,"influences":["1/2","1/2"],"min":"1/2","passes":true})");
  EXPECT_EQ(MinInfluenceReport(TruthTable::Constant(1, false)).ToJson(),
            R"({"k":1,"influences":["0/1"],"min":"0/1","passes":false})");
}

TEST(FractionLowInfluenceTest, LargeKNeverLow) {
  EXPECT_EQ(FractionLowInfluence(10, 200, 2), 0.0);
}

TEST(FractionLowInfluenceTest, KOneIsHalf) {
  // Of the four one-variable tables the two constants fail.
  EXPECT_NEAR(FractionLowInfluence(1, 10'000, 3), 0.5, 0.02);
}

TEST(FractionLowInfluenceTest, KTwoMatchesEnumeration) {
  int low = 0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const TruthTable tt = TruthTable::FromFunction(
        2, [bits](std::uint64_t j) { return (bits >> j) & 1; });
    bool below = false;
    for (int i = 1; i <= 2; ++i) below |= BruteForceInfluence(tt, i) < Rational(1, 50);
    low += below;
  }
  EXPECT_EQ(low, 6);  // 2 constants + 4 dictators/anti-dictators
  EXPECT_NEAR(FractionLowInfluence(2, 10'000, 4), low / 16.0, 0.02);
}

TEST(FractionLowInfluenceTest, RejectsLargeK) {
  EXPECT_THROW(FractionLowInfluence(17, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace junta_lcc
