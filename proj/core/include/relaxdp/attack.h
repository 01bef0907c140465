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
// Attacks against custodians that add noise only when a query's k-record
// sensitivity is nonzero. A probe asks one threshold query and classifies the
// answer(s) as noise-free or noisy; the pattern of verdicts over thresholds b
//   (clean one)* (noisy)* (clean zero)*
// brackets the matching count within k, and the flip positions reveal it
// exactly. Everything here is attacker-side: the custodian is only driven
// through its public query interface.

#ifndef RELAXDP_ATTACK_H_
#define RELAXDP_ATTACK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relaxdp/detector.h"
#include "relaxdp/error.h"
#include "relaxdp/mechanism.h"
#include "relaxdp/query.h"

namespace relaxdp {

// Inclusive candidate range for a matching count.
struct CountBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

// What one verdict at threshold b implies about the matching count of a
// domain-nontrivial predicate (n = dataset size):
//   noisy      -> [b - k + 1, b + k]
//   clean one  -> [b + k + 1, n]
//   clean zero -> [0, b - k]
CountBounds InferFromVerdict(NoiseVerdict verdict, std::int64_t threshold,
                             int k, std::size_t n);

// Budget ran out mid-attack; carries the candidate range established so far.
class PartialResultError : public BudgetError {
 public:
  PartialResultError(const std::string& message, CountBounds bounds)
      : BudgetError(message), bounds_(bounds) {}
  CountBounds bounds() const { return bounds_; }

 private:
  CountBounds bounds_;
};

// Turns oracle answers into one verdict per (predicate, threshold) probe.
// kCleanUnsided marks detectors that can tell noise-free from noisy but not
// which binary answer was released (the variance test).
class ProbeDetector {
 public:
  enum class Verdict { kCleanZero, kCleanOne, kCleanUnsided, kNoisy };

  virtual ~ProbeDetector() = default;
  // Spends at most eps_decision in total, split across however many oracle
  // calls the detector needs for one verdict.
  virtual Verdict Probe(ThresholdOracle& oracle, const RangePredicate& pred,
                        std::int64_t threshold, double eps_decision) = 0;
  // Clean verdicts carry the released 0/1 value.
  virtual bool Sided() const = 0;
};

// One call, classified by exact integer comparison.
class DirectProbeDetector : public ProbeDetector {
 public:
  Verdict Probe(ThresholdOracle& oracle, const RangePredicate& pred,
                std::int64_t threshold, double eps_decision) override;
  bool Sided() const override { return true; }
};

// `repeats` calls per decision; all answers identical means noise-free. A
// single decision on a truly noisy rounded-to-binary answer misfires with
// probability 2 * 2^-repeats, which is far too often across a full
// reconstruction, so each probe takes `confirmations` independent decisions
// and requires agreement (extra tie-break decisions on disagreement). Every
// call is charged; nothing about the accounting is hidden.
class RepeatedProbeDetector : public ProbeDetector {
 public:
  explicit RepeatedProbeDetector(std::size_t repeats = 15,
                                 std::size_t confirmations = 2);
  Verdict Probe(ThresholdOracle& oracle, const RangePredicate& pred,
                std::int64_t threshold, double eps_decision) override;
  bool Sided() const override { return true; }

 private:
  std::size_t repeats_;
  std::size_t confirmations_;
};

// One variance-test decision per probe (config.repeats calls).
class VarianceProbeDetector : public ProbeDetector {
 public:
  explicit VarianceProbeDetector(VarianceTestConfig config = {})
      : config_(config) {}
  Verdict Probe(ThresholdOracle& oracle, const RangePredicate& pred,
                std::int64_t threshold, double eps_decision) override;
  bool Sided() const override { return false; }

 private:
  VarianceTestConfig config_;
};

enum class SearchStrategy {
  kLinear,  // probe b = 0, 1, 2, ... until the count is pinned
  kBinary,  // bisect / band-track; probes and charges only what it visits
};

struct CountSearchOptions {
  SearchStrategy strategy = SearchStrategy::kBinary;
  // Budget for this count determination, split as eps_share / n per probe.
  double eps_share = 1e-10;
  // Attacker-known inclusive bounds on the count, if any.
  std::optional<CountBounds> prior;
  // Caller certifies (e.g. from public schema bounds) that the predicate is
  // neither empty nor all-covering on the record universe. Unlocks the
  // k-strengthened clean inferences from the first probe; otherwise they
  // apply once a noisy verdict or the count range itself proves it.
  bool nontrivial = false;
};

struct CountResult {
  std::int64_t count = 0;
  std::uint64_t probe_decisions = 0;
};

// Recovers |{r : pred(r)}| exactly from noise-presence verdicts. Requires
// n >= 2k (attacker-side applicability check; the custodian does not
// enforce it). Throws PartialResultError with the bounds known so far if the
// budget runs out, and ConsistencyError if verdicts contradict the verdict
// structure instead of guessing.
CountResult ReconstructCount(ThresholdOracle& oracle, ProbeDetector& detector,
                             const RangePredicate& pred, int k,
                             const CountSearchOptions& options = {});

struct ColumnSearchOptions {
  SearchStrategy strategy = SearchStrategy::kBinary;
  // Per-count budget cap; the effective share is
  // min(eps_per_call, eps_target / domain_steps) when eps_target is set.
  double eps_per_call = 1e-10;
  std::optional<double> eps_target;
  // Ignore schema bounds and grow [-2^j, 2^j) until it holds all records.
  // Requires a sided detector (clean verdicts must certify coverage).
  bool discover_bounds = false;
  // Restrict the sweep to records matching this conjunction (group sweeps
  // during full-dataset reconstruction, attribute inference).
  std::vector<RangeCondition> restrict_to;
  // Known number of records matching restrict_to; determined with one count
  // search when absent.
  std::optional<std::int64_t> group_count;
};

struct ColumnResult {
  std::vector<double> values;  // recovered multiset, ascending
  std::uint64_t probe_decisions = 0;
  bool complete = true;  // false when the budget ran out mid-sweep
};

// Recovers the full multiset of one attribute by sweeping the upper end of
// [lower, v) downward: each drop in the cumulative count places that many
// records at the grid value where the drop happened. Values are exact for
// on-grid data (within one precision step otherwise).
ColumnResult ReconstructColumn(ThresholdOracle& oracle, ProbeDetector& detector,
                               const Schema& schema, std::size_t attribute,
                               int k, const ColumnSearchOptions& options = {});

struct AttributeQueryStats {
  std::string attribute;
  std::uint64_t distinct_values = 0;
  std::uint64_t queries = 0;  // oracle calls spent on this attribute
};

struct DatasetResult {
  std::vector<std::vector<double>> rows;  // schema order, sorted
  std::vector<AttributeQueryStats> per_attribute;  // reconstruction order
  bool complete = true;
};

// Recovers every record: reconstructs the attribute with the smallest domain
// first, then recursively reconstructs the next attribute within each group
// of records sharing the values recovered so far.
DatasetResult ReconstructDataset(ThresholdOracle& oracle,
                                 ProbeDetector& detector, const Schema& schema,
                                 int k, const ColumnSearchOptions& options = {});

// Conjunction of one-grid-cell conditions [v, v + precision) for the given
// (attribute, value) pairs.
RangePredicate CellPredicate(const Schema& schema,
                             const std::vector<std::pair<std::size_t, double>>&
                                 values);

// True iff exactly one record matches the identifying values. Exactly two
// probe decisions: thresholds k and k+1; unique iff noisy at k and clean at
// k+1 (the count's noisy band [count-k, count+k-1] contains k but not k+1
// only for count = 1).
bool ConfirmUniqueness(ThresholdOracle& oracle, ProbeDetector& detector,
                       const Schema& schema,
                       const std::vector<std::pair<std::size_t, double>>&
                           values,
                       int k, double eps_per_probe = 1e-10);

// Membership of a target whose identifying values are unique in the
// population (count 0 or 1). Exactly two probe decisions: thresholds k-1 and
// k; absent iff noisy at k-1 and clean at k. Returns true iff present.
bool InferMembership(ThresholdOracle& oracle, ProbeDetector& detector,
                     const Schema& schema,
                     const std::vector<std::pair<std::size_t, double>>& values,
                     int k, double eps_per_probe = 1e-10);

// Unprotected baselines: exact threshold answers, one query for membership
// (count > 0) and two for uniqueness (count > 0, count > 1).
bool MembershipBaseline(ThresholdOracle& oracle, const Schema& schema,
                        const std::vector<std::pair<std::size_t, double>>&
                            values);
bool UniquenessBaseline(ThresholdOracle& oracle, const Schema& schema,
                        const std::vector<std::pair<std::size_t, double>>&
                            values);

struct AttributeInferenceResult {
  std::vector<double> values;  // one per record matching the identifiers
  std::uint64_t probe_decisions = 0;
};

// Recovers the target attribute of every record matching the identifying
// values: one count search for the group size, then a restricted column
// sweep. A binary target attribute of a unique record short-circuits to one
// two-probe uniqueness check on the extended value combination.
AttributeInferenceResult InferAttribute(
    ThresholdOracle& oracle, ProbeDetector& detector, const Schema& schema,
    const std::vector<std::pair<std::size_t, double>>& identifying,
    std::size_t target_attribute, int k,
    const ColumnSearchOptions& options = {});

struct BdpEnumerationResult {
  std::vector<std::vector<double>> distinct_rows;  // sorted, no multiplicities
  std::uint64_t queries = 0;
};

// Recovers the set of distinct records behind a bootstrap-neighbor custodian
// by bisecting the domain: an exact 0.0 answer prunes a region, an exact 1.0
// or noisy answer recurses until single-cell regions remain. Multiplicities
// are not recoverable through this interface by design.
BdpEnumerationResult BdpEnumerateDistinct(BdpCustodian& custodian,
                                          const Schema& schema,
                                          double eps_per_call = 1e-10);

}  // namespace relaxdp

#endif  // RELAXDP_ATTACK_H_
