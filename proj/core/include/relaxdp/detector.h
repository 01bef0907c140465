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

#ifndef RELAXDP_DETECTOR_H_
#define RELAXDP_DETECTOR_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "relaxdp/mechanism.h"
#include "relaxdp/query.h"

namespace relaxdp {

enum class NoiseVerdict { kCleanZero, kCleanOne, kNoisy };

// Classifies a single released answer by exact binary64 comparison: 0.0 is a
// noise-free zero, 1.0 a noise-free one, anything else noisy. A continuous
// noise sample equals an integer with probability ~0, so at tiny epsilon a
// noisy answer is essentially never misread.
NoiseVerdict ClassifyDirect(double answer);

// Classifies repeated answers to the same query: all exactly 0.0 (or all
// exactly 1.0) means noise-free; any other pattern means noisy. Defeats
// rounding defenses, whose noisy answers only coincide m times with
// probability 2 * 2^-m. Throws ArgumentError on an empty span.
NoiseVerdict ClassifyRepeated(std::span<const double> answers);

// Dispersion statistic for m answers to the same query, each answered with
// budget eps_total / m:
//   psi = (eps_total^2 / m^2) * (1 / (m-1)) * sum_i (z_i - mean(z))^2.
// Location-free and scale-free in (mu, eps): expectation 2 when the noise
// scale is m/eps_total and 8 when it is 2m/eps_total. Throws ArgumentError
// for fewer than two answers or eps_total <= 0.
double PsiStatistic(std::span<const double> answers, double eps_total);

enum class ScaleVerdict { kLowScale, kHighScale };  // estimated sensitivity 0 / 1

struct VarianceTestConfig {
  std::size_t repeats = 1000;  // m
  double threshold = 5.0;      // psi cutoff between expectations 2 and 8
};

// Decides which noise scale produced the answers: psi below the threshold
// means the low scale (sensitivity 0), at or above means the high scale
// (sensitivity 1). The verdict does not reveal the underlying 0/1 answer.
ScaleVerdict ClassifyVariance(std::span<const double> answers,
                              double eps_total, double threshold = 5.0);

// Accuracy of the variance decision rule, estimated by simulation: `trials`
// decisions, half with noise scale m/eps and half with 2m/eps, classified at
// the threshold. Independent of mu and eps by construction.
double SimulateDecisionRule(std::size_t m, std::size_t trials,
                            std::uint64_t seed, double threshold = 5.0);

}  // namespace relaxdp

#endif  // RELAXDP_DETECTOR_H_
