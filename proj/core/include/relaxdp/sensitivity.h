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

#ifndef RELAXDP_SENSITIVITY_H_
#define RELAXDP_SENSITIVITY_H_

#include <cstddef>
#include <cstdint>

#include "relaxdp/data.h"
#include "relaxdp/query.h"

namespace relaxdp {

// Largest change of the threshold query's 0/1 answer over all datasets
// reachable from `dataset` by modifying at most k records (each modified
// record may take any grid value). Closed form:
//   0 when b < 0, b >= n, the predicate is trivially true or false on the
//     record universe, count > b + k, or count <= b - k;
//   1 otherwise.
// Throws ArgumentError for k < 0. k = 0 always yields 0.
int KLocalSensitivity(const Dataset& dataset, const ThresholdQuery& query,
                      int k);

// Same, given a precomputed matching count and predicate triviality flags.
int KLocalSensitivityFromCount(std::size_t count, std::size_t n,
                               std::int64_t threshold, int k,
                               bool always_true, bool always_false);

struct BruteForceLimits {
  std::size_t max_rows = 8;
  std::size_t max_universe = 5;  // grid points per record, all attributes
  int max_k = 2;
};

// Reference implementation by exhaustive enumeration of every dataset that
// modifies at most k records to grid values. Refuses instances beyond the
// limits with EnumerationLimitError; intended as a test oracle only.
int KLocalSensitivityBruteForce(const Dataset& dataset,
                                const ThresholdQuery& query, int k,
                                const BruteForceLimits& limits = {});

// Sensitivity of the existence query "does any record match?" over
// bootstrap neighbors (datasets resampled from the records of `dataset`):
// 0 when all records match or none do (including the empty dataset),
// 1 otherwise.
int BootstrapSensitivity(const Dataset& dataset, const RangePredicate& pred);

}  // namespace relaxdp

#endif  // RELAXDP_SENSITIVITY_H_
