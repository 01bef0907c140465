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

#include "relaxdp/detector.h"

#include <cmath>
#include <vector>

#include "relaxdp/error.h"
#include "relaxdp/random.h"

namespace relaxdp {

NoiseVerdict ClassifyDirect(double answer) {
  if (answer == 0.0) return NoiseVerdict::kCleanZero;
  if (answer == 1.0) return NoiseVerdict::kCleanOne;
  return NoiseVerdict::kNoisy;
}

NoiseVerdict ClassifyRepeated(std::span<const double> answers) {
  if (answers.empty()) throw ArgumentError("need at least one answer");
  bool all_zero = true;
  bool all_one = true;
  for (double a : answers) {
    all_zero = all_zero && a == 0.0;
    all_one = all_one && a == 1.0;
  }
  if (all_zero) return NoiseVerdict::kCleanZero;
  if (all_one) return NoiseVerdict::kCleanOne;
  return NoiseVerdict::kNoisy;
}

double PsiStatistic(std::span<const double> answers, double eps_total) {
  if (answers.size() < 2) throw ArgumentError("need at least two answers");
  if (!(eps_total > 0.0) || !std::isfinite(eps_total)) {
    throw ArgumentError("eps_total must be positive and finite");
  }
  const auto m = static_cast<double>(answers.size());
  double mean = 0.0;
  for (double a : answers) mean += a;
  mean /= m;
  double ss = 0.0;
  for (double a : answers) ss += (a - mean) * (a - mean);
  return (eps_total * eps_total) / (m * m) * ss / (m - 1.0);
}

ScaleVerdict ClassifyVariance(std::span<const double> answers,
                              double eps_total, double threshold) {
  return PsiStatistic(answers, eps_total) < threshold
             ? ScaleVerdict::kLowScale
             : ScaleVerdict::kHighScale;
}

double SimulateDecisionRule(std::size_t m, std::size_t trials,
                            std::uint64_t seed, double threshold) {
  if (m < 2) throw ArgumentError("m must be at least 2");
  if (trials == 0) throw ArgumentError("trials must be positive");
  // Any (mu, eps) gives the same law for psi; fix eps_total = 1, mu = 0 and
  // draw from scale m (sensitivity 0) or 2m (sensitivity 1) directly.
  const double eps_total = 1.0;
  std::vector<double> answers(m);
  std::size_t correct = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const bool high_scale = (t % 2) == 1;
    RandomStream stream = RandomStream::AtCall(seed, t);
    const double scale =
        (high_scale ? 2.0 : 1.0) * static_cast<double>(m) / eps_total;
    for (std::size_t i = 0; i < m; ++i) {
      answers[i] = SampleLaplace(scale, stream);
    }
    const ScaleVerdict verdict =
        ClassifyVariance({answers.data(), answers.size()}, eps_total,
                         threshold);
    const bool guessed_high = verdict == ScaleVerdict::kHighScale;
    if (guessed_high == high_scale) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(trials);
}

}  // namespace relaxdp
