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

#include "relaxdp/attack.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace relaxdp {

namespace {

using Verdict = ProbeDetector::Verdict;

constexpr std::size_t kMaxDecisionsPerProbe = 16;

// Set of still-possible counts, kept as disjoint inclusive intervals.
class Candidates {
 public:
  Candidates(std::int64_t lo, std::int64_t hi) {
    if (lo <= hi) intervals_.push_back({lo, hi});
  }

  void Intersect(std::int64_t lo, std::int64_t hi) {
    std::vector<std::pair<std::int64_t, std::int64_t>> kept;
    for (const auto& [a, b] : intervals_) {
      const std::int64_t na = std::max(a, lo);
      const std::int64_t nb = std::min(b, hi);
      if (na <= nb) kept.push_back({na, nb});
    }
    intervals_ = std::move(kept);
  }

  void Exclude(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return;
    std::vector<std::pair<std::int64_t, std::int64_t>> kept;
    for (const auto& [a, b] : intervals_) {
      if (b < lo || a > hi) {
        kept.push_back({a, b});
        continue;
      }
      if (a < lo) kept.push_back({a, lo - 1});
      if (b > hi) kept.push_back({hi + 1, b});
    }
    intervals_ = std::move(kept);
  }

  bool Empty() const { return intervals_.empty(); }
  bool Singleton() const {
    return intervals_.size() == 1 &&
           intervals_[0].first == intervals_[0].second;
  }
  std::int64_t Min() const { return intervals_.front().first; }
  std::int64_t Max() const { return intervals_.back().second; }

  std::int64_t Total() const {
    std::int64_t total = 0;
    for (const auto& [a, b] : intervals_) total += b - a + 1;
    return total;
  }

  std::int64_t CountInRange(std::int64_t lo, std::int64_t hi) const {
    std::int64_t total = 0;
    for (const auto& [a, b] : intervals_) {
      const std::int64_t na = std::max(a, lo);
      const std::int64_t nb = std::min(b, hi);
      if (na <= nb) total += nb - na + 1;
    }
    return total;
  }

 private:
  std::vector<std::pair<std::int64_t, std::int64_t>> intervals_;
};

// Shared attack context: one custodian connection, one detector, and the
// per-decision budget slice.
struct Drive {
  ThresholdOracle& oracle;
  ProbeDetector& detector;
  int k;
  std::int64_t n;
  double eps_decision;
  std::uint64_t decisions = 0;

  Verdict Probe(const RangePredicate& pred, std::int64_t b) {
    ++decisions;
    return detector.Probe(oracle, pred, b, eps_decision);
  }
};

// Inference engine over noise-presence verdicts. Maintains the candidate
// count set; weak rules (valid for any predicate) narrow it from clean sides
// and noisy bands, and once the predicate is known to be nontrivial on the
// record universe the k-strengthened rules replay over all evidence.
class CountEngine {
 public:
  CountEngine(Drive& drive, const RangePredicate& pred, Candidates candidates,
              bool nontrivial, SearchStrategy strategy)
      : drive_(drive),
        pred_(pred),
        candidates_(std::move(candidates)),
        nontrivial_(nontrivial),
        strategy_(strategy) {}

  std::int64_t Run() {
    candidates_.Intersect(0, drive_.n);
    if (candidates_.Empty()) {
      throw ConsistencyError("no count is consistent with the prior");
    }
    CertifyFromCandidates();
    if (strategy_ == SearchStrategy::kLinear) {
      for (std::int64_t b = 0; b < drive_.n && !candidates_.Singleton(); ++b) {
        Step(b);
      }
      if (!candidates_.Singleton()) ThrowStuck();
    } else {
      while (!candidates_.Singleton()) {
        const std::optional<std::int64_t> b = Propose();
        if (!b) ThrowStuck();
        Step(*b);
      }
    }
    return candidates_.Min();
  }

  CountBounds bounds() const {
    if (candidates_.Empty()) return {0, drive_.n};
    return {candidates_.Min(), candidates_.Max()};
  }

 private:
  void Step(std::int64_t b) {
    if (probed_.count(b) != 0) return;
    Verdict verdict;
    try {
      verdict = drive_.Probe(pred_, b);
    } catch (const BudgetError& e) {
      throw PartialResultError(
          std::string("budget exhausted during count search: ") + e.what(),
          bounds());
    }
    probed_.emplace(b, verdict);
    Apply(b, verdict);
  }

  void Apply(std::int64_t b, Verdict verdict) {
    switch (verdict) {
      case Verdict::kCleanOne:
        candidates_.Intersect(b + 1, drive_.n);
        break;
      case Verdict::kCleanZero:
        candidates_.Intersect(0, b);
        break;
      case Verdict::kNoisy:
        candidates_.Intersect(b - drive_.k + 1, b + drive_.k);
        if (!nontrivial_) {
          // Noise is only ever added when modifications can flip the answer,
          // which requires both matching and non-matching grid records.
          nontrivial_ = true;
          ReplayStrong();
        }
        break;
      case Verdict::kCleanUnsided:
        break;
    }
    if (nontrivial_) ApplyStrong(b, verdict);
    CertifyFromCandidates();
    if (candidates_.Empty()) {
      throw ConsistencyError(
          "verdicts are inconsistent with every count at threshold " +
          std::to_string(b));
    }
  }

  void ApplyStrong(std::int64_t b, Verdict verdict) {
    switch (verdict) {
      case Verdict::kCleanOne:
        candidates_.Intersect(b + drive_.k + 1, drive_.n);
        break;
      case Verdict::kCleanZero:
        candidates_.Intersect(0, b - drive_.k);
        break;
      case Verdict::kCleanUnsided:
        candidates_.Exclude(b - drive_.k + 1, b + drive_.k);
        break;
      case Verdict::kNoisy:
        break;  // the band constraint is already applied unconditionally
    }
  }

  void ReplayStrong() {
    for (const auto& [b, verdict] : probed_) ApplyStrong(b, verdict);
  }

  // A count in [1, n-1] implies some grid record matches and some does not.
  void CertifyFromCandidates() {
    if (nontrivial_ || candidates_.Empty()) return;
    if (candidates_.Min() >= 1 && candidates_.Max() <= drive_.n - 1) {
      nontrivial_ = true;
      ReplayStrong();
    }
  }

  // True iff the verdict at b can differ across the remaining candidates.
  bool Splits(std::int64_t b) const {
    const std::int64_t total = candidates_.Total();
    const std::int64_t inside =
        candidates_.CountInRange(b - drive_.k + 1, b + drive_.k);
    if (inside > 0 && inside < total) return true;
    if (drive_.detector.Sided()) {
      const std::int64_t below = candidates_.CountInRange(0, b);
      if (below > 0 && below < total) return true;
    } else if (!nontrivial_ && inside > 0) {
      // A noisy verdict here would certify nontriviality; worth probing even
      // though a clean verdict teaches nothing yet.
      return true;
    }
    return false;
  }

  std::optional<std::int64_t> Propose() const {
    const std::int64_t lo = candidates_.Min();
    const std::int64_t hi = candidates_.Max();
    // Sided detectors bisect; unsided ones descend from the top, where a
    // noisy verdict pins the count into a width-2k band and a clean verdict
    // excises the top 2k values.
    std::int64_t primary =
        drive_.detector.Sided() ? lo + (hi - lo) / 2 : hi - drive_.k;
    primary = std::clamp<std::int64_t>(primary, 0, drive_.n - 1);
    if (probed_.count(primary) == 0 && Splits(primary)) return primary;
    const std::int64_t wlo = std::max<std::int64_t>(0, lo - drive_.k);
    const std::int64_t whi =
        std::min<std::int64_t>(drive_.n - 1, hi + drive_.k - 1);
    for (std::int64_t d = 0;; ++d) {
      bool in_window = false;
      for (const std::int64_t b : {primary - d, primary + d}) {
        if (b < wlo || b > whi) continue;
        in_window = true;
        if (probed_.count(b) == 0 && Splits(b)) return b;
        if (d == 0) break;
      }
      if (!in_window) return std::nullopt;
    }
  }

  [[noreturn]] void ThrowStuck() const {
    if (!nontrivial_) {
      throw ApplicabilityError(
          "count not identifiable: the predicate may be trivial on the "
          "record universe and the detector cannot certify otherwise");
    }
    throw ConsistencyError(
        "no informative threshold separates the remaining counts; the "
        "custodian's verdict pattern is inconsistent");
  }

  Drive& drive_;
  const RangePredicate& pred_;
  Candidates candidates_;
  bool nontrivial_;
  SearchStrategy strategy_;
  std::map<std::int64_t, Verdict> probed_;
};

Verdict FromNoiseVerdict(NoiseVerdict v) {
  switch (v) {
    case NoiseVerdict::kCleanZero:
      return Verdict::kCleanZero;
    case NoiseVerdict::kCleanOne:
      return Verdict::kCleanOne;
    case NoiseVerdict::kNoisy:
      return Verdict::kNoisy;
  }
  throw ArgumentError("unknown noise verdict");
}

std::int64_t CheckedSize(const ThresholdOracle& oracle) {
  return static_cast<std::int64_t>(oracle.DatasetSize());
}

void CheckApplicable(std::int64_t n, int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (n < 2 * static_cast<std::int64_t>(k)) {
    throw ApplicabilityError(
        "dataset of size " + std::to_string(n) +
        " is smaller than 2k = " + std::to_string(2 * k) +
        "; counts in the middle band are not identifiable");
  }
}

double CheckedEps(double eps, const char* what) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ArgumentError(std::string(what) + " must be positive and finite");
  }
  return eps;
}

std::int64_t RunCount(Drive& drive, const RangePredicate& pred,
                      const std::optional<CountBounds>& prior, bool nontrivial,
                      SearchStrategy strategy) {
  Candidates candidates(0, drive.n);
  if (prior) {
    if (prior->lower > prior->upper) {
      throw ArgumentError("prior bounds are empty");
    }
    candidates.Intersect(prior->lower, prior->upper);
    if (candidates.Empty()) {
      throw ArgumentError("prior bounds exclude every count in [0, n]");
    }
  }
  CountEngine engine(drive, pred, std::move(candidates), nontrivial, strategy);
  return engine.Run();
}

// Decides "count < limit" vs "count == limit" for a count known to lie in
// [0, limit], limit >= 1. One probe at threshold limit+k-1 when that is an
// interior threshold: noisy pins the count to exactly limit, clean rules the
// band out. Falls back to a full count search otherwise.
bool TestCountLess(Drive& drive, const RangePredicate& pred,
                   std::int64_t limit, bool nontrivial,
                   SearchStrategy strategy) {
  const std::int64_t b = limit + drive.k - 1;
  if (drive.k >= 1 && nontrivial && b <= drive.n - 1) {
    const Verdict v = drive.Probe(pred, b);
    switch (v) {
      case Verdict::kNoisy:
        return false;  // count in [limit, limit+2k-1] and <= limit
      case Verdict::kCleanZero:
      case Verdict::kCleanUnsided:
        return true;  // a count of exactly limit would have drawn noise here
      case Verdict::kCleanOne:
        throw ConsistencyError(
            "clean positive answer contradicts the count's known upper "
            "bound");
    }
  }
  if (drive.k == 0) {
    // Truthful custodian: the exact threshold answer at limit-1 decides.
    if (!drive.detector.Sided()) {
      throw ApplicabilityError(
          "an unsided detector cannot read exact threshold answers");
    }
    const Verdict v = drive.Probe(pred, limit - 1);
    if (v == Verdict::kCleanOne) return false;
    if (v == Verdict::kCleanZero) return true;
    throw ConsistencyError("noise observed from a noise-free custodian");
  }
  return RunCount(drive, pred, CountBounds{0, limit}, nontrivial, strategy) <
         limit;
}

// Boundary lattice for one attribute sweep: boundary(i) = origin + i * step.
struct SweepLattice {
  double origin = 0.0;
  double step = 1.0;
  std::int64_t lo = 0;  // boundary index with zero count below, known free
  std::int64_t hi = 0;  // boundary index with the full count below, known free

  double Boundary(std::int64_t i) const { return origin + i * step; }
};

std::vector<RangeCondition> WithColumnRange(
    const std::vector<RangeCondition>& restriction, std::size_t attribute,
    double lower, double upper) {
  std::vector<RangeCondition> conditions = restriction;
  conditions.push_back({attribute, lower, upper});
  return conditions;
}

// Recovers the value multiset of one attribute by walking the cumulative
// count from the top: the largest boundary t with count([start, t)) still
// below the remaining total is the largest remaining value, and the exact
// count below it tells its multiplicity. Appends to `values` as it goes so
// a budget failure still leaves the values recovered so far.
void SweepValues(Drive& drive, const Schema& schema, std::size_t attribute,
                 const std::vector<RangeCondition>& restriction,
                 const SweepLattice& lattice, std::int64_t total,
                 bool certified, SearchStrategy strategy,
                 std::vector<double>& values) {
  std::int64_t remaining = total;
  std::int64_t hi_sentinel = lattice.hi;
  const double start = lattice.Boundary(lattice.lo);
  while (remaining > 0) {
    std::int64_t lo = lattice.lo;
    std::int64_t hi = hi_sentinel;
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      const RangePredicate pred = RangePredicate::Create(
          schema,
          WithColumnRange(restriction, attribute, start,
                          lattice.Boundary(mid)));
      if (TestCountLess(drive, pred, remaining, certified, strategy)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const std::int64_t value_index = lo;
    std::int64_t below = 0;
    if (value_index > lattice.lo) {
      const RangePredicate pred = RangePredicate::Create(
          schema,
          WithColumnRange(restriction, attribute, start,
                          lattice.Boundary(value_index)));
      below = RunCount(drive, pred, CountBounds{0, remaining - 1}, certified,
                       strategy);
    }
    const std::int64_t multiplicity = remaining - below;
    for (std::int64_t i = 0; i < multiplicity; ++i) {
      values.push_back(lattice.Boundary(value_index));
    }
    remaining = below;
    hi_sentinel = value_index;
  }
}

// Grows [-2^j, 2^j) until it provably holds every record of the group.
SweepLattice DiscoverLattice(Drive& drive, const Schema& schema,
                             std::size_t attribute,
                             const std::vector<RangeCondition>& restriction,
                             std::int64_t total, SearchStrategy strategy) {
  if (!drive.detector.Sided()) {
    throw ApplicabilityError(
        "bound discovery needs a sided detector: coverage is certified by a "
        "clean positive answer, which an unsided detector cannot read");
  }
  const double step = schema.Attribute(attribute).precision;
  for (int j = 0; j <= 40; ++j) {
    const double half = std::ldexp(1.0, j);  // 2^j
    const double ratio = half / step;
    if (std::abs(ratio - std::round(ratio)) > 1e-6) continue;
    const RangePredicate pred = RangePredicate::Create(
        schema, WithColumnRange(restriction, attribute, -half, half));
    // The attacker cannot certify nontriviality for a range it invented, so
    // the count search leans on weak rules until noise certifies it.
    const std::int64_t inside =
        RunCount(drive, pred, CountBounds{0, total}, false, strategy);
    if (inside == total) {
      const auto steps = static_cast<std::int64_t>(std::llround(ratio));
      return {0.0, step, -steps, steps};
    }
  }
  throw ApplicabilityError(
      "bound discovery exceeded 2^40 without covering the group");
}

std::vector<RangeCondition> CellConditions(
    const Schema& schema,
    const std::vector<std::pair<std::size_t, double>>& values) {
  std::vector<RangeCondition> conditions;
  conditions.reserve(values.size());
  for (const auto& [attribute, value] : values) {
    if (attribute >= schema.AttributeCount()) {
      throw ArgumentError("attribute index " + std::to_string(attribute) +
                          " out of range");
    }
    const AttributeSpec& spec = schema.Attribute(attribute);
    if (!spec.HoldsValue(value)) {
      throw ArgumentError("value " + std::to_string(value) +
                          " is off the grid of attribute '" + spec.name + "'");
    }
    const double snapped = spec.GridValue(spec.GridIndex(value));
    conditions.push_back({attribute, snapped, snapped + spec.precision});
  }
  return conditions;
}

ColumnResult RunColumn(Drive& drive, const Schema& schema,
                       std::size_t attribute,
                       const ColumnSearchOptions& options) {
  const AttributeSpec& spec = schema.Attribute(attribute);
  std::int64_t total;
  if (options.group_count) {
    if (*options.group_count < 0 || *options.group_count > drive.n) {
      throw ArgumentError("group count outside [0, n]");
    }
    total = *options.group_count;
  } else if (options.restrict_to.empty()) {
    total = drive.n;  // dataset size is public metadata
  } else {
    const RangePredicate pred =
        RangePredicate::Create(schema, options.restrict_to);
    total = RunCount(drive, pred, std::nullopt, false, options.strategy);
  }
  ColumnResult result;
  if (total == 0) {
    result.probe_decisions = drive.decisions;
    return result;
  }
  SweepLattice lattice;
  bool certified;
  if (options.discover_bounds) {
    lattice = DiscoverLattice(drive, schema, attribute, options.restrict_to,
                              total, options.strategy);
    certified = false;  // invented ranges may miss the grid entirely
  } else {
    lattice = {spec.lower, spec.precision, 0, spec.DomainSize()};
    // Schema bounds are public: any proper sub-range [lower, t) with
    // t <= upper excludes the top grid value and contains the bottom one.
    certified = true;
  }
  try {
    SweepValues(drive, schema, attribute, options.restrict_to, lattice, total,
                certified, options.strategy, result.values);
  } catch (const BudgetError&) {
    result.complete = false;
  }
  std::sort(result.values.begin(), result.values.end());
  result.probe_decisions = drive.decisions;
  return result;
}

double DeriveEpsDecision(const ColumnSearchOptions& options,
                         std::int64_t domain_steps, std::int64_t n) {
  CheckedEps(options.eps_per_call, "eps_per_call");
  double share = options.eps_per_call;
  if (options.eps_target) {
    CheckedEps(*options.eps_target, "eps_target");
    share = std::min(share, *options.eps_target /
                                static_cast<double>(std::max<std::int64_t>(
                                    1, domain_steps)));
  }
  return share / static_cast<double>(std::max<std::int64_t>(1, n));
}

}  // namespace

CountBounds InferFromVerdict(NoiseVerdict verdict, std::int64_t threshold,
                             int k, std::size_t n) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  const auto size = static_cast<std::int64_t>(n);
  if (threshold < 0 || threshold >= size) {
    throw ArgumentError("threshold must be interior: 0 <= b < n");
  }
  CountBounds bounds{0, size};
  switch (verdict) {
    case NoiseVerdict::kNoisy:
      bounds = {threshold - k + 1, threshold + k};
      break;
    case NoiseVerdict::kCleanOne:
      bounds = {threshold + k + 1, size};
      break;
    case NoiseVerdict::kCleanZero:
      bounds = {0, threshold - k};
      break;
  }
  bounds.lower = std::max<std::int64_t>(bounds.lower, 0);
  bounds.upper = std::min(bounds.upper, size);
  if (bounds.lower > bounds.upper) {
    throw ConsistencyError(
        "verdict admits no count: threshold " + std::to_string(threshold) +
        " cannot produce it at k = " + std::to_string(k));
  }
  return bounds;
}

Verdict DirectProbeDetector::Probe(ThresholdOracle& oracle,
                                   const RangePredicate& pred,
                                   std::int64_t threshold,
                                   double eps_decision) {
  return FromNoiseVerdict(
      ClassifyDirect(oracle.Ask(pred, threshold, eps_decision)));
}

RepeatedProbeDetector::RepeatedProbeDetector(std::size_t repeats,
                                             std::size_t confirmations)
    : repeats_(repeats), confirmations_(confirmations) {
  if (repeats_ == 0) throw ArgumentError("repeats must be positive");
  if (confirmations_ == 0 || confirmations_ > kMaxDecisionsPerProbe) {
    throw ArgumentError("confirmations must be in [1, 16]");
  }
}

Verdict RepeatedProbeDetector::Probe(ThresholdOracle& oracle,
                                     const RangePredicate& pred,
                                     std::int64_t threshold,
                                     double eps_decision) {
  const double slice =
      CheckedEps(eps_decision, "eps_decision") / kMaxDecisionsPerProbe;
  const double per_call = slice / static_cast<double>(repeats_);
  std::map<NoiseVerdict, std::size_t> votes;
  for (std::size_t d = 0; d < kMaxDecisionsPerProbe; ++d) {
    NoiseVerdict decision = NoiseVerdict::kNoisy;
    double first = 0.0;
    for (std::size_t i = 0; i < repeats_; ++i) {
      const double answer = oracle.Ask(pred, threshold, per_call);
      if (answer != 0.0 && answer != 1.0) break;  // certainly noisy
      if (i == 0) {
        first = answer;
      } else if (answer != first) {
        break;  // mixed exact answers can only come from noise
      }
      if (i + 1 == repeats_) {
        decision = first == 0.0 ? NoiseVerdict::kCleanZero
                                : NoiseVerdict::kCleanOne;
      }
    }
    if (++votes[decision] == confirmations_) return FromNoiseVerdict(decision);
  }
  throw ConsistencyError(
      "repeated probes keep disagreeing about noise presence");
}

Verdict VarianceProbeDetector::Probe(ThresholdOracle& oracle,
                                     const RangePredicate& pred,
                                     std::int64_t threshold,
                                     double eps_decision) {
  if (config_.repeats < 2) throw ArgumentError("variance test needs m >= 2");
  CheckedEps(eps_decision, "eps_decision");
  const double per_call = eps_decision / static_cast<double>(config_.repeats);
  std::vector<double> answers(config_.repeats);
  for (double& a : answers) a = oracle.Ask(pred, threshold, per_call);
  const ScaleVerdict verdict = ClassifyVariance(
      {answers.data(), answers.size()}, eps_decision, config_.threshold);
  return verdict == ScaleVerdict::kLowScale ? Verdict::kCleanUnsided
                                            : Verdict::kNoisy;
}

CountResult ReconstructCount(ThresholdOracle& oracle, ProbeDetector& detector,
                             const RangePredicate& pred, int k,
                             const CountSearchOptions& options) {
  const std::int64_t n = CheckedSize(oracle);
  CheckApplicable(n, k);
  CheckedEps(options.eps_share, "eps_share");
  if (n == 0) return {0, 0};
  Drive drive{oracle, detector, k, n,
              options.eps_share / static_cast<double>(n)};
  const std::int64_t count =
      RunCount(drive, pred, options.prior, options.nontrivial,
               options.strategy);
  return {count, drive.decisions};
}

ColumnResult ReconstructColumn(ThresholdOracle& oracle,
                               ProbeDetector& detector, const Schema& schema,
                               std::size_t attribute, int k,
                               const ColumnSearchOptions& options) {
  if (attribute >= schema.AttributeCount()) {
    throw ArgumentError("attribute index out of range");
  }
  const std::int64_t n = CheckedSize(oracle);
  CheckApplicable(n, k);
  if (n == 0) return {};
  Drive drive{oracle, detector, k, n,
              DeriveEpsDecision(options,
                                schema.Attribute(attribute).DomainSize(), n)};
  return RunColumn(drive, schema, attribute, options);
}

DatasetResult ReconstructDataset(ThresholdOracle& oracle,
                                 ProbeDetector& detector, const Schema& schema,
                                 int k, const ColumnSearchOptions& options) {
  const std::int64_t n = CheckedSize(oracle);
  CheckApplicable(n, k);
  DatasetResult result;
  if (schema.AttributeCount() == 0) return result;

  std::vector<std::size_t> order(schema.AttributeCount());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::int64_t da = schema.Attribute(a).DomainSize();
    const std::int64_t db = schema.Attribute(b).DomainSize();
    return da != db ? da < db : a < b;
  });

  struct Group {
    std::vector<std::pair<std::size_t, double>> cells;
    std::int64_t count;
  };
  std::vector<Group> groups{{{}, n}};

  for (const std::size_t attribute : order) {
    const std::uint64_t calls_before = oracle.calls();
    std::set<double> distinct;
    std::vector<Group> next;
    bool aborted = false;
    for (const Group& group : groups) {
      ColumnSearchOptions opts = options;
      opts.restrict_to = CellConditions(schema, group.cells);
      opts.group_count = group.count;
      ColumnResult column;
      try {
        Drive drive{oracle, detector, k,
                    static_cast<std::int64_t>(n),
                    DeriveEpsDecision(
                        opts, schema.Attribute(attribute).DomainSize(), n)};
        column = RunColumn(drive, schema, attribute, opts);
      } catch (const BudgetError&) {
        aborted = true;
        break;
      }
      if (!column.complete) {
        aborted = true;
        break;
      }
      for (std::size_t i = 0; i < column.values.size();) {
        std::size_t j = i;
        while (j < column.values.size() &&
               column.values[j] == column.values[i]) {
          ++j;
        }
        distinct.insert(column.values[i]);
        Group child = group;
        child.cells.push_back({attribute, column.values[i]});
        child.count = static_cast<std::int64_t>(j - i);
        next.push_back(std::move(child));
        i = j;
      }
    }
    result.per_attribute.push_back(
        {schema.Attribute(attribute).name,
         static_cast<std::uint64_t>(distinct.size()),
         oracle.calls() - calls_before});
    if (aborted) {
      result.complete = false;
      return result;
    }
    groups = std::move(next);
  }

  for (const Group& group : groups) {
    std::vector<double> row(schema.AttributeCount(), 0.0);
    for (const auto& [attribute, value] : group.cells) {
      row[attribute] = value;
    }
    for (std::int64_t i = 0; i < group.count; ++i) result.rows.push_back(row);
  }
  std::sort(result.rows.begin(), result.rows.end());
  return result;
}

RangePredicate CellPredicate(
    const Schema& schema,
    const std::vector<std::pair<std::size_t, double>>& values) {
  if (values.empty()) {
    throw ArgumentError("cell predicate needs at least one attribute value");
  }
  return RangePredicate::Create(schema, CellConditions(schema, values));
}

namespace {

Verdict TargetProbe(ThresholdOracle& oracle, ProbeDetector& detector,
                    const RangePredicate& pred, std::int64_t b, double eps) {
  return detector.Probe(oracle, pred, b, CheckedEps(eps, "eps_per_probe"));
}

}  // namespace

bool ConfirmUniqueness(ThresholdOracle& oracle, ProbeDetector& detector,
                       const Schema& schema,
                       const std::vector<std::pair<std::size_t, double>>&
                           values,
                       int k, double eps_per_probe) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  const std::int64_t n = CheckedSize(oracle);
  if (n < k + 2) {
    throw ApplicabilityError("uniqueness probes need n >= k + 2");
  }
  const RangePredicate pred = CellPredicate(schema, values);
  const Verdict at_k = TargetProbe(oracle, detector, pred, k, eps_per_probe);
  const Verdict above =
      TargetProbe(oracle, detector, pred, k + 1, eps_per_probe);
  if (k == 0) {
    if (at_k == Verdict::kNoisy || above == Verdict::kNoisy) {
      throw ConsistencyError("noise observed from a noise-free custodian");
    }
    return at_k == Verdict::kCleanOne && above == Verdict::kCleanZero;
  }
  if (at_k == Verdict::kNoisy && above == Verdict::kCleanOne) {
    throw ConsistencyError(
        "verdict pair (noisy, clean-one) admits no count; custodian is "
        "inconsistent");
  }
  // A count of 1 draws noise at threshold k (band (0, 2k]) but not at k+1
  // (band (1, 2k+1]); every other count fails one of the two.
  return at_k == Verdict::kNoisy && above != Verdict::kNoisy;
}

bool InferMembership(ThresholdOracle& oracle, ProbeDetector& detector,
                     const Schema& schema,
                     const std::vector<std::pair<std::size_t, double>>& values,
                     int k, double eps_per_probe) {
  if (k < 1) {
    throw ApplicabilityError(
        "membership probing targets protected custodians with k >= 1; use "
        "MembershipBaseline for the unprotected case");
  }
  const std::int64_t n = CheckedSize(oracle);
  if (n < k + 1) {
    throw ApplicabilityError("membership probes need n >= k + 1");
  }
  const RangePredicate pred = CellPredicate(schema, values);
  const Verdict below =
      TargetProbe(oracle, detector, pred, k - 1, eps_per_probe);
  const Verdict at_k = TargetProbe(oracle, detector, pred, k, eps_per_probe);
  // Counts 0 and 1 both sit inside the noisy band at threshold k-1; only
  // count 1 stays inside it at threshold k.
  if (below != Verdict::kNoisy || at_k == Verdict::kCleanOne) {
    throw ConsistencyError(
        "verdicts contradict the premise that the target is unique in the "
        "population");
  }
  return at_k == Verdict::kNoisy;
}

bool MembershipBaseline(ThresholdOracle& oracle, const Schema& schema,
                        const std::vector<std::pair<std::size_t, double>>&
                            values) {
  const RangePredicate pred = CellPredicate(schema, values);
  return oracle.Ask(pred, 0, 1.0) == 1.0;
}

bool UniquenessBaseline(ThresholdOracle& oracle, const Schema& schema,
                        const std::vector<std::pair<std::size_t, double>>&
                            values) {
  const RangePredicate pred = CellPredicate(schema, values);
  return oracle.Ask(pred, 0, 1.0) == 1.0 && oracle.Ask(pred, 1, 1.0) == 0.0;
}

AttributeInferenceResult InferAttribute(
    ThresholdOracle& oracle, ProbeDetector& detector, const Schema& schema,
    const std::vector<std::pair<std::size_t, double>>& identifying,
    std::size_t target_attribute, int k,
    const ColumnSearchOptions& options) {
  if (target_attribute >= schema.AttributeCount()) {
    throw ArgumentError("target attribute index out of range");
  }
  for (const auto& [attribute, value] : identifying) {
    if (attribute == target_attribute) {
      throw ArgumentError("target attribute is already identified");
    }
  }
  const std::int64_t n = CheckedSize(oracle);
  CheckApplicable(n, k);
  const RangePredicate group_pred = CellPredicate(schema, identifying);

  CountSearchOptions count_opts;
  count_opts.strategy = options.strategy;
  count_opts.eps_share = options.eps_per_call;
  count_opts.prior = CountBounds{1, n};  // the target is known to be present
  count_opts.nontrivial = true;  // one-cell conditions on domains of size >= 2
  const CountResult group =
      ReconstructCount(oracle, detector, group_pred, k, count_opts);

  AttributeInferenceResult result;
  result.probe_decisions = group.probe_decisions;
  const AttributeSpec& spec = schema.Attribute(target_attribute);
  if (group.count == 1 && spec.DomainSize() == 2) {
    // Binary attribute of a unique record: extend the cell with the high
    // value and ask whether the extended combination is unique.
    auto extended = identifying;
    extended.push_back({target_attribute, spec.GridValue(1)});
    const bool high = ConfirmUniqueness(oracle, detector, schema, extended, k,
                                        options.eps_per_call);
    result.values.push_back(high ? spec.GridValue(1) : spec.GridValue(0));
    result.probe_decisions += 2;
    return result;
  }

  ColumnSearchOptions col_opts = options;
  col_opts.restrict_to = CellConditions(schema, identifying);
  col_opts.group_count = group.count;
  const ColumnResult column = ReconstructColumn(
      oracle, detector, schema, target_attribute, k, col_opts);
  result.values = column.values;
  result.probe_decisions += column.probe_decisions;
  return result;
}

namespace {

void EnumerateBox(BdpCustodian& custodian, const Schema& schema,
                  std::vector<std::pair<std::int64_t, std::int64_t>>& box,
                  double eps_per_call,
                  std::vector<std::vector<double>>& out) {
  std::vector<RangeCondition> conditions;
  conditions.reserve(box.size());
  for (std::size_t a = 0; a < box.size(); ++a) {
    const AttributeSpec& spec = schema.Attribute(a);
    conditions.push_back({a, spec.GridValue(box[a].first),
                          spec.lower + box[a].second * spec.precision});
  }
  const double answer = custodian.AskExistence(
      RangePredicate::Create(schema, conditions), eps_per_call);
  // Exactly 0.0 certifies emptiness: a nonempty proper subset would have
  // drawn continuous noise, and a covering subset answers exactly 1.0.
  if (answer == 0.0) return;
  std::size_t widest = 0;
  std::int64_t width = 0;
  for (std::size_t a = 0; a < box.size(); ++a) {
    const std::int64_t w = box[a].second - box[a].first;
    if (w > width) {
      width = w;
      widest = a;
    }
  }
  if (width <= 1) {
    std::vector<double> row(box.size());
    for (std::size_t a = 0; a < box.size(); ++a) {
      row[a] = schema.Attribute(a).GridValue(box[a].first);
    }
    out.push_back(std::move(row));
    return;
  }
  const std::int64_t lo = box[widest].first;
  const std::int64_t hi = box[widest].second;
  const std::int64_t mid = lo + (hi - lo) / 2;
  box[widest] = {lo, mid};
  EnumerateBox(custodian, schema, box, eps_per_call, out);
  box[widest] = {mid, hi};
  EnumerateBox(custodian, schema, box, eps_per_call, out);
  box[widest] = {lo, hi};
}

}  // namespace

BdpEnumerationResult BdpEnumerateDistinct(BdpCustodian& custodian,
                                          const Schema& schema,
                                          double eps_per_call) {
  CheckedEps(eps_per_call, "eps_per_call");
  if (schema.AttributeCount() == 0) {
    throw ArgumentError("schema has no attributes");
  }
  const std::uint64_t calls_before = custodian.calls();
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  box.reserve(schema.AttributeCount());
  for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
    box.push_back({0, schema.Attribute(a).DomainSize()});
  }
  BdpEnumerationResult result;
  EnumerateBox(custodian, schema, box, eps_per_call, result.distinct_rows);
  std::sort(result.distinct_rows.begin(), result.distinct_rows.end());
  result.queries = custodian.calls() - calls_before;
  return result;
}

}  // namespace relaxdp
