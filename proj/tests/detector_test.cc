// Copyright 2026 The relaxdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "relaxdp/data.h"
#include "relaxdp/detector.h"
#include "relaxdp/error.h"
#include "relaxdp/mechanism.h"
#include "relaxdp/query.h"
#include "relaxdp/random.h"

namespace relaxdp {
namespace {

TEST(ClassifyDirectTest, ExactIntegersZeroAndOneAreClean) {
  EXPECT_EQ(ClassifyDirect(0.0), NoiseVerdict::kCleanZero);
  EXPECT_EQ(ClassifyDirect(1.0), NoiseVerdict::kCleanOne);
  EXPECT_EQ(ClassifyDirect(0.5), NoiseVerdict::kNoisy);
  EXPECT_EQ(ClassifyDirect(1.0000000001), NoiseVerdict::kNoisy);
  EXPECT_EQ(ClassifyDirect(-3.7), NoiseVerdict::kNoisy);
  EXPECT_EQ(ClassifyDirect(2.0), NoiseVerdict::kNoisy);   // integer but not 0/1
  EXPECT_EQ(ClassifyDirect(-1.0), NoiseVerdict::kNoisy);
}

TEST(ClassifyDirectTest, NeverMisreadsNoiseFreePlainAnswers) {
  // Noise-free Plain answers are bit-exactly 0.0 or 1.0 by construction, so
  // the direct rule cannot misclassify them.
  const Schema schema =
      Schema::Create({AttributeSpec::Numeric("x", 0, 9, 1)});
  const Dataset dataset = Dataset::Create(schema, {{1}, {2}, {2}, {5}, {7}});
  const auto pred = RangePredicate::Create(schema, {{0, 0, 3}});  // count = 3
  GroupIdpCustodian custodian(dataset, GroupIdpParams{1}, DefenseMode::kPlain,
                              21);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_EQ(ClassifyDirect(custodian.Ask(pred, 0, 1e-10)),
              NoiseVerdict::kCleanOne);
    EXPECT_EQ(ClassifyDirect(custodian.Ask(pred, 4, 1e-10)),
              NoiseVerdict::kCleanZero);
  }
}

TEST(ClassifyDirectTest, MillionNoisyAnswersNoneReadClean) {
  const Schema schema =
      Schema::Create({AttributeSpec::Numeric("x", 0, 9, 1)});
  const Dataset dataset = Dataset::Create(schema, {{1}, {2}, {2}, {5}, {7}});
  const auto pred = RangePredicate::Create(schema, {{0, 0, 3}});
  GroupIdpCustodian custodian(dataset, GroupIdpParams{1}, DefenseMode::kPlain,
                              22);
  for (int i = 0; i < 1000000; ++i) {
    ASSERT_EQ(ClassifyDirect(custodian.Ask(pred, 2, 1e-10)),
              NoiseVerdict::kNoisy);
  }
}

TEST(ClassifyRepeatedTest, UnanimousExactAnswersAreClean) {
  const std::vector<double> zeros(15, 0.0);
  const std::vector<double> ones(15, 1.0);
  EXPECT_EQ(ClassifyRepeated(zeros), NoiseVerdict::kCleanZero);
  EXPECT_EQ(ClassifyRepeated(ones), NoiseVerdict::kCleanOne);
}

TEST(ClassifyRepeatedTest, AnyOtherPatternIsNoisy) {
  EXPECT_EQ(ClassifyRepeated(std::vector<double>{0, 0, 1}),
            NoiseVerdict::kNoisy);
  EXPECT_EQ(ClassifyRepeated(std::vector<double>{1, 1, 0.5}),
            NoiseVerdict::kNoisy);
  EXPECT_EQ(ClassifyRepeated(std::vector<double>{2, 2, 2}),
            NoiseVerdict::kNoisy);  // unanimous but not an answer value
  EXPECT_EQ(ClassifyRepeated(std::vector<double>{0.25}),
            NoiseVerdict::kNoisy);
  EXPECT_THROW(ClassifyRepeated(std::vector<double>{}), ArgumentError);
}

TEST(PsiStatisticTest, HandComputedValue) {
  // m=2, eps=1: psi = (1/4) * sum (z - mean)^2 = (1/4) * 2 = 0.5.
  const std::vector<double> answers = {0.0, 2.0};
  EXPECT_DOUBLE_EQ(PsiStatistic(answers, 1.0), 0.5);
}

TEST(PsiStatisticTest, RejectsDegenerateInput) {
  EXPECT_THROW(PsiStatistic(std::vector<double>{1.0}, 1.0), ArgumentError);
  EXPECT_THROW(PsiStatistic(std::vector<double>{}, 1.0), ArgumentError);
  EXPECT_THROW(PsiStatistic(std::vector<double>{1.0, 2.0}, 0.0),
               ArgumentError);
  EXPECT_THROW(PsiStatistic(std::vector<double>{1.0, 2.0}, -1.0),
               ArgumentError);
}

TEST(PsiStatisticTest, ShiftingAllAnswersLeavesPsiUnchanged) {
  RandomStream stream(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> answers(16);
    for (double& a : answers) a = SampleLaplace(3.0, stream);
    const double psi = PsiStatistic(answers, 0.7);
    for (double shift : {-100.0, 0.125, 1e6}) {
      std::vector<double> shifted = answers;
      for (double& a : shifted) a += shift;
      EXPECT_NEAR(PsiStatistic(shifted, 0.7), psi,
                  1e-6 * std::max(psi, 1e-12));
    }
  }
}

// Means of psi over seeded trials: 2 at noise scale m/eps, 8 at 2m/eps,
// whatever (mu, eps) generated the answers.
TEST(PsiStatisticTest, ExpectationsAreTwoAndEightAcrossParameterPairs) {
  constexpr int kTrials = 10000;
  struct Pair {
    double mu;
    double eps;
  };
  const Pair pairs[] = {{0.0, 1e-10}, {1.0, 0.37}};
  for (const std::size_t m : {10u, 100u}) {
    double previous_low = 0.0, previous_high = 0.0;
    for (std::size_t p = 0; p < 2; ++p) {
      double sum_low = 0.0, sum_high = 0.0;
      for (int t = 0; t < kTrials; ++t) {
        RandomStream stream =
            RandomStream::AtCall(1000 + p, static_cast<std::uint64_t>(t));
        std::vector<double> low(m), high(m);
        const double scale = static_cast<double>(m) / pairs[p].eps;
        for (std::size_t i = 0; i < m; ++i) {
          low[i] = pairs[p].mu + SampleLaplace(scale, stream);
          high[i] = pairs[p].mu + SampleLaplace(2 * scale, stream);
        }
        sum_low += PsiStatistic(low, pairs[p].eps);
        sum_high += PsiStatistic(high, pairs[p].eps);
      }
      const double mean_low = sum_low / kTrials;
      const double mean_high = sum_high / kTrials;
      EXPECT_NEAR(mean_low, 2.0, 0.05 * 2.0) << "m=" << m << " pair=" << p;
      EXPECT_NEAR(mean_high, 8.0, 0.05 * 8.0) << "m=" << m << " pair=" << p;
      if (p == 1) {
        // Monte Carlo agreement across unrelated (mu, eps) pairs. The
        // per-trial sd of psi is about 1.5 (low) / 6 (high), so five
        // standard errors are 0.075 / 0.30.
        EXPECT_NEAR(mean_low, previous_low, 0.075) << "m=" << m;
        EXPECT_NEAR(mean_high, previous_high, 0.30) << "m=" << m;
      }
      previous_low = mean_low;
      previous_high = mean_high;
    }
  }
}

TEST(ClassifyVarianceTest, ThresholdSeparatesTheScales) {
  // All-equal answers: psi = 0, the low-scale verdict.
  EXPECT_EQ(ClassifyVariance(std::vector<double>{3.0, 3.0, 3.0}, 1.0),
            ScaleVerdict::kLowScale);
  // m=2, eps=1, spread 8: psi = (1/4) * 32 = 8 >= 5.
  EXPECT_EQ(ClassifyVariance(std::vector<double>{0.0, 8.0}, 1.0),
            ScaleVerdict::kHighScale);
  // Custom threshold flips the call.
  EXPECT_EQ(ClassifyVariance(std::vector<double>{0.0, 8.0}, 1.0, 9.0),
            ScaleVerdict::kLowScale);
}

TEST(DecisionRuleTest, AccuracyIsDeterministicAndInTheExpectedBand) {
  const double at_10 = SimulateDecisionRule(10, 20000, 77);
  EXPECT_EQ(at_10, SimulateDecisionRule(10, 20000, 77));
  EXPECT_NEAR(at_10, 0.8030, 0.025);
  const double at_100 = SimulateDecisionRule(100, 20000, 78);
  EXPECT_NEAR(at_100, 0.9882, 0.015);
}

TEST(DecisionRuleTest, RejectsMeaninglessRepeatCounts) {
  EXPECT_THROW(SimulateDecisionRule(1, 100, 1), ArgumentError);
  EXPECT_THROW(SimulateDecisionRule(0, 100, 1), ArgumentError);
}

}  // namespace
}  // namespace relaxdp
