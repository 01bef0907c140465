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

#include "relaxdp/sensitivity.h"

#include <algorithm>
#include <string>
#include <vector>

#include "relaxdp/error.h"

namespace relaxdp {

int KLocalSensitivityFromCount(std::size_t count, std::size_t n,
                               std::int64_t threshold, int k, bool always_true,
                               bool always_false) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (k == 0) return 0;
  // Constant answer over all same-size datasets: count is in [0, n] always.
  if (threshold < 0 || threshold >= static_cast<std::int64_t>(n)) return 0;
  // A trivial predicate pins the count at n (or 0) for every modification.
  if (always_true || always_false) return 0;
  const auto c = static_cast<std::int64_t>(count);
  // k modifications move the count by at most k in either direction, and a
  // nontrivial predicate makes every move of that size reachable.
  if (c > threshold + k) return 0;
  if (c <= threshold - k) return 0;
  return 1;
}

int KLocalSensitivity(const Dataset& dataset, const ThresholdQuery& query,
                      int k) {
  const std::size_t count = CountMatching(dataset, query.predicate);
  return KLocalSensitivityFromCount(
      count, dataset.size(), query.threshold, k,
      query.predicate.AlwaysTrueOnDomain(dataset.schema()),
      query.predicate.AlwaysFalseOnDomain(dataset.schema()));
}

namespace {

// Every grid record of the schema, as explicit rows.
std::vector<std::vector<double>> EnumerateUniverse(const Schema& schema,
                                                   std::size_t cap) {
  std::vector<std::vector<double>> universe{{}};
  for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
    const AttributeSpec& spec = schema.Attribute(a);
    std::vector<std::vector<double>> grown;
    const auto domain = static_cast<std::size_t>(spec.DomainSize());
    if (universe.size() * domain > cap) {
      throw EnumerationLimitError("record universe exceeds " +
                                  std::to_string(cap) + " grid points");
    }
    grown.reserve(universe.size() * domain);
    for (const std::vector<double>& partial : universe) {
      for (std::size_t i = 0; i < domain; ++i) {
        std::vector<double> row = partial;
        row.push_back(spec.GridValue(static_cast<std::int64_t>(i)));
        grown.push_back(std::move(row));
      }
    }
    universe = std::move(grown);
  }
  return universe;
}

int ThresholdAnswer(const std::vector<std::vector<double>>& rows,
                    const ThresholdQuery& query) {
  std::int64_t count = 0;
  for (const std::vector<double>& r : rows) {
    if (query.predicate.Matches({r.data(), r.size()})) ++count;
  }
  return count > query.threshold ? 1 : 0;
}

// Recursively assigns universe records to the chosen positions and checks
// whether any assignment flips the thresholded answer.
bool AnyFlip(std::vector<std::vector<double>>& rows,
             const std::vector<std::size_t>& positions, std::size_t depth,
             const std::vector<std::vector<double>>& universe,
             const ThresholdQuery& query, int base_answer) {
  if (depth == positions.size()) {
    return ThresholdAnswer(rows, query) != base_answer;
  }
  const std::size_t pos = positions[depth];
  const std::vector<double> saved = rows[pos];
  for (const std::vector<double>& candidate : universe) {
    rows[pos] = candidate;
    if (AnyFlip(rows, positions, depth + 1, universe, query, base_answer)) {
      rows[pos] = saved;
      return true;
    }
  }
  rows[pos] = saved;
  return false;
}

// All j-subsets of row positions, in lexicographic order.
bool NextCombination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t j = combo.size();
  for (std::size_t i = j; i-- > 0;) {
    if (combo[i] < n - (j - i)) {
      ++combo[i];
      for (std::size_t t = i + 1; t < j; ++t) combo[t] = combo[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

int KLocalSensitivityBruteForce(const Dataset& dataset,
                                const ThresholdQuery& query, int k,
                                const BruteForceLimits& limits) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (dataset.size() > limits.max_rows) {
    throw EnumerationLimitError("dataset exceeds " +
                                std::to_string(limits.max_rows) + " rows");
  }
  if (k > limits.max_k) {
    throw EnumerationLimitError("k exceeds " + std::to_string(limits.max_k));
  }
  const std::vector<std::vector<double>> universe =
      EnumerateUniverse(dataset.schema(), limits.max_universe);
  const int base_answer = EvaluateThreshold(dataset, query);
  std::vector<std::vector<double>> rows = dataset.rows();
  const std::size_t n = dataset.size();
  const int max_j = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(k), n));
  for (int j = 1; j <= max_j; ++j) {
    std::vector<std::size_t> combo(static_cast<std::size_t>(j));
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
    do {
      if (AnyFlip(rows, combo, 0, universe, query, base_answer)) return 1;
    } while (NextCombination(combo, n));
  }
  return 0;
}

int BootstrapSensitivity(const Dataset& dataset, const RangePredicate& pred) {
  const std::size_t count = CountMatching(dataset, pred);
  return (count == 0 || count == dataset.size()) ? 0 : 1;
}

}  // namespace relaxdp
