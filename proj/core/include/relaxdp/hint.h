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
//
// Demonstration that data-dependent neighborhoods leak through the
// neighborhood itself: a mechanism that outputs a description of the
// constrained pairs verbatim ignores its input *given the hint*, so every
// indistinguishability constraint holds with equality at every epsilon, yet
// the output identifies the dataset (record-modification neighbors) or its
// distinct records (bootstrap neighbors). With an empty hint the same
// mechanism collapses to a data-independent constant.

#ifndef RELAXDP_HINT_H_
#define RELAXDP_HINT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relaxdp/data.h"

namespace relaxdp {

// Canonical text encoding of a dataset's rows (sorted), used as an identity
// key for enumerated datasets.
std::string CanonicalKey(const Dataset& dataset);

// Unordered pair of dataset keys; stored with first <= second.
struct DatasetPairHint {
  std::string first;
  std::string second;
};

// All {D, D'} with D' differing from `dataset` in at most k records, each
// modified record ranging over the full attribute grid. Throws
// EnumerationLimitError when the grid or pair count exceeds `max_pairs`
// (the construction is exponential; it exists to make the leak concrete at
// demo scale, not to scale).
std::vector<DatasetPairHint> ModificationNeighborPairs(
    const Dataset& dataset, int k = 1, std::size_t max_pairs = 200000);

// All {D, D'} where both draw each of their records from `dataset`'s
// distinct rows (same size as `dataset`). Subject to the same cap.
std::vector<DatasetPairHint> BootstrapNeighborPairs(
    const Dataset& dataset, std::size_t max_pairs = 200000);

// Outputs its hint verbatim, ignoring the queried dataset entirely, so its
// output distribution is identical on all datasets sharing the hint.
class ConstantHintMechanism {
 public:
  explicit ConstantHintMechanism(std::vector<DatasetPairHint> hint)
      : hint_(std::move(hint)) {}
  const std::vector<DatasetPairHint>& Answer(const Dataset& ignored) const;

 private:
  std::vector<DatasetPairHint> hint_;
};

// True iff the mechanism's output is literally identical on every dataset in
// `inputs` — the degenerate way both directions of the epsilon constraint
// hold with equality for every epsilon > 0.
bool OutputsIndistinguishable(const ConstantHintMechanism& mechanism,
                              const std::vector<Dataset>& inputs);

// Attacker side. Record-modification pairs with k < n pin the dataset: its
// key is the one appearing in every pair (needs n >= 2 so that at least two
// distinct neighbors exist; unique when the grid offers more than one value).
std::optional<std::string> RecoverCommonDataset(
    const std::vector<DatasetPairHint>& pairs);

// Attacker side, bootstrap pairs: the union of all rows occurring in any
// paired dataset is exactly the distinct-row set of the hidden dataset.
std::vector<std::vector<double>> RecoverDistinctRows(
    const Schema& schema, const std::vector<DatasetPairHint>& pairs);

}  // namespace relaxdp

#endif  // RELAXDP_HINT_H_
