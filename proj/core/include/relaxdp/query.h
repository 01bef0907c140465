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

#ifndef RELAXDP_QUERY_H_
#define RELAXDP_QUERY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relaxdp/data.h"

namespace relaxdp {

// Half-open range on one attribute: matches lower <= x < upper.
struct RangeCondition {
  std::size_t attribute = 0;
  double lower = 0.0;
  double upper = 0.0;
};

// Conjunction of range conditions. Multiple conditions on the same attribute
// are allowed and intersect semantically.
class RangePredicate {
 public:
  // Validates attribute indices against the schema and lower < upper per
  // condition; sorts conditions by attribute for a canonical form.
  static RangePredicate Create(const Schema& schema,
                               std::vector<RangeCondition> conditions);

  bool Matches(std::span<const double> record) const;
  const std::vector<RangeCondition>& conditions() const { return conditions_; }

  // Every grid point of the schema's record universe satisfies the predicate.
  bool AlwaysTrueOnDomain(const Schema& schema) const;
  // No grid point satisfies it.
  bool AlwaysFalseOnDomain(const Schema& schema) const;

  // Canonical key; equal predicates produce equal keys (used for caching).
  std::string CacheKey() const;

 private:
  explicit RangePredicate(std::vector<RangeCondition> conditions)
      : conditions_(std::move(conditions)) {}
  std::vector<RangeCondition> conditions_;
};

// Thresholded count: answers 1 iff |{r in D : predicate(r)}| > threshold.
struct ThresholdQuery {
  RangePredicate predicate;
  std::int64_t threshold = 0;
};

std::size_t CountMatching(const Dataset& dataset, const RangePredicate& pred);

// Exact 0/1 evaluation of the threshold query (no noise, no charge).
int EvaluateThreshold(const Dataset& dataset, const ThresholdQuery& query);

}  // namespace relaxdp

#endif  // RELAXDP_QUERY_H_
