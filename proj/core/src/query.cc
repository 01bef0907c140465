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

#include "relaxdp/query.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "relaxdp/error.h"

namespace relaxdp {
namespace {

// Number of grid indices i of `spec` with lo <= GridValue(i) < hi.
std::int64_t GridCountInRange(const AttributeSpec& spec, double lo, double hi) {
  if (!(lo < hi)) return 0;
  const auto first_at_least = [&](double x) {
    return static_cast<std::int64_t>(
        std::ceil((x - spec.lower) / spec.precision - 1e-9));
  };
  std::int64_t first = std::max<std::int64_t>(0, first_at_least(lo));
  std::int64_t end = std::min(spec.DomainSize(), first_at_least(hi));
  return std::max<std::int64_t>(0, end - first);
}

}  // namespace

RangePredicate RangePredicate::Create(const Schema& schema,
                                      std::vector<RangeCondition> conditions) {
  for (const RangeCondition& c : conditions) {
    if (c.attribute >= schema.AttributeCount()) {
      throw ArgumentError("condition references attribute index " +
                          std::to_string(c.attribute) + ", schema has " +
                          std::to_string(schema.AttributeCount()));
    }
    if (!std::isfinite(c.lower) || !std::isfinite(c.upper) ||
        !(c.lower < c.upper)) {
      throw ArgumentError("condition on attribute '" +
                          schema.Attribute(c.attribute).name +
                          "' needs finite lower < upper");
    }
  }
  std::stable_sort(conditions.begin(), conditions.end(),
                   [](const RangeCondition& a, const RangeCondition& b) {
                     if (a.attribute != b.attribute)
                       return a.attribute < b.attribute;
                     if (a.lower != b.lower) return a.lower < b.lower;
                     return a.upper < b.upper;
                   });
  return RangePredicate(std::move(conditions));
}

bool RangePredicate::Matches(std::span<const double> record) const {
  for (const RangeCondition& c : conditions_) {
    const double x = record[c.attribute];
    if (x < c.lower || x >= c.upper) return false;
  }
  return true;
}

bool RangePredicate::AlwaysTrueOnDomain(const Schema& schema) const {
  for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
    const AttributeSpec& spec = schema.Attribute(a);
    double lo = spec.lower;
    double hi = spec.GridValue(spec.DomainSize() - 1) + spec.precision;
    for (const RangeCondition& c : conditions_) {
      if (c.attribute != a) continue;
      lo = std::max(lo, c.lower);
      hi = std::min(hi, c.upper);
    }
    if (GridCountInRange(spec, lo, hi) != spec.DomainSize()) return false;
  }
  return true;
}

bool RangePredicate::AlwaysFalseOnDomain(const Schema& schema) const {
  for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
    const AttributeSpec& spec = schema.Attribute(a);
    double lo = spec.lower;
    double hi = spec.GridValue(spec.DomainSize() - 1) + spec.precision;
    bool constrained = false;
    for (const RangeCondition& c : conditions_) {
      if (c.attribute != a) continue;
      constrained = true;
      lo = std::max(lo, c.lower);
      hi = std::min(hi, c.upper);
    }
    if (constrained && GridCountInRange(spec, lo, hi) == 0) return true;
  }
  return false;
}

std::string RangePredicate::CacheKey() const {
  std::string key;
  key.reserve(conditions_.size() * 48);
  char buf[64];
  for (const RangeCondition& c : conditions_) {
    std::snprintf(buf, sizeof(buf), "%zu:%.17g:%.17g;", c.attribute, c.lower,
                  c.upper);
    key += buf;
  }
  return key;
}

std::size_t CountMatching(const Dataset& dataset, const RangePredicate& pred) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (pred.Matches(dataset.Row(i))) ++count;
  }
  return count;
}

int EvaluateThreshold(const Dataset& dataset, const ThresholdQuery& query) {
  const auto count =
      static_cast<std::int64_t>(CountMatching(dataset, query.predicate));
  return count > query.threshold ? 1 : 0;
}

}  // namespace relaxdp
