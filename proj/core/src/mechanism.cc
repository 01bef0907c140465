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

#include "relaxdp/mechanism.h"

#include <cmath>
#include <string>
#include <utility>

#include "relaxdp/error.h"
#include "relaxdp/sensitivity.h"

namespace relaxdp {
namespace {

double ApplyDefense(int truth, int sensitivity, double epsilon,
                    DefenseMode mode, RandomStream& stream) {
  const double scale = static_cast<double>(sensitivity) / epsilon;
  switch (mode) {
    case DefenseMode::kPlain:
      return truth + SampleLaplace(scale, stream);
    case DefenseMode::kHardened:
      return truth +
             SampleLaplace((1.0 + sensitivity) / epsilon, stream);
    case DefenseMode::kRoundNearestInteger:
      return std::round(truth + SampleLaplace(scale, stream));
    case DefenseMode::kRoundToBinary:
      return (truth + SampleLaplace(scale, stream)) < 0.5 ? 0.0 : 1.0;
  }
  throw ArgumentError("unknown defense mode");
}

void ChargeOrThrow(PrivacyLedger& ledger, double epsilon) {
  if (ledger.Charge(epsilon) == ChargeOutcome::kRejected) {
    throw BudgetError("privacy budget exhausted: charge " +
                      std::to_string(epsilon) + " rejected at spent " +
                      std::to_string(ledger.spent()));
  }
}

}  // namespace

MechanismAnswer AnswerThreshold(const Dataset& dataset,
                                const ThresholdQuery& query,
                                const GroupIdpParams& params, double epsilon,
                                DefenseMode mode, PrivacyLedger& ledger,
                                RandomStream& stream) {
  if (params.k < 0) throw ArgumentError("k must be nonnegative");
  const int sensitivity = KLocalSensitivity(dataset, query, params.k);
  const int truth = EvaluateThreshold(dataset, query);
  ChargeOrThrow(ledger, epsilon);
  return {ApplyDefense(truth, sensitivity, epsilon, mode, stream), epsilon};
}

std::size_t DatasetSizeQuery(const Dataset& dataset) { return dataset.size(); }

MechanismAnswer AnswerBdpExistence(const Dataset& dataset,
                                   const RangePredicate& pred, double epsilon,
                                   PrivacyLedger& ledger,
                                   RandomStream& stream) {
  const int sensitivity = BootstrapSensitivity(dataset, pred);
  const int truth = CountMatching(dataset, pred) > 0 ? 1 : 0;
  ChargeOrThrow(ledger, epsilon);
  const double scale = static_cast<double>(sensitivity) / epsilon;
  return {truth + SampleLaplace(scale, stream), epsilon};
}

GroupIdpCustodian::GroupIdpCustodian(Dataset dataset, GroupIdpParams params,
                                     DefenseMode mode, std::uint64_t seed,
                                     std::optional<double> budget_cap)
    : dataset_(std::move(dataset)),
      params_(params),
      mode_(mode),
      seed_(seed),
      ledger_(budget_cap) {
  if (params_.k < 1) throw ArgumentError("the custodian requires k >= 1");
}

const GroupIdpCustodian::CountInfo& GroupIdpCustodian::Lookup(
    const RangePredicate& pred) {
  const std::string key = pred.CacheKey();
  auto it = count_cache_.find(key);
  if (it == count_cache_.end()) {
    CountInfo info{CountMatching(dataset_, pred),
                   pred.AlwaysTrueOnDomain(dataset_.schema()),
                   pred.AlwaysFalseOnDomain(dataset_.schema())};
    it = count_cache_.emplace(key, info).first;
  }
  return it->second;
}

double GroupIdpCustodian::Ask(const RangePredicate& pred,
                              std::int64_t threshold, double epsilon) {
  const CountInfo& info = Lookup(pred);
  const int sensitivity = KLocalSensitivityFromCount(
      info.count, dataset_.size(), threshold, params_.k, info.always_true,
      info.always_false);
  const int truth =
      static_cast<std::int64_t>(info.count) > threshold ? 1 : 0;
  ChargeOrThrow(ledger_, epsilon);
  RandomStream stream = RandomStream::AtCall(seed_, calls_);
  ++calls_;
  return ApplyDefense(truth, sensitivity, epsilon, mode_, stream);
}

double TruthfulCustodian::Ask(const RangePredicate& pred,
                              std::int64_t threshold, double /*epsilon*/) {
  ++calls_;
  return EvaluateThreshold(dataset_, {pred, threshold});
}

GlobalSensitivityCustodian::GlobalSensitivityCustodian(
    Dataset dataset, std::uint64_t seed, std::optional<double> budget_cap)
    : dataset_(std::move(dataset)), seed_(seed), ledger_(budget_cap) {}

double GlobalSensitivityCustodian::Ask(const RangePredicate& pred,
                                       std::int64_t threshold,
                                       double epsilon) {
  const int truth = EvaluateThreshold(dataset_, {pred, threshold});
  ChargeOrThrow(ledger_, epsilon);
  RandomStream stream = RandomStream::AtCall(seed_, calls_);
  ++calls_;
  return truth + SampleLaplace(1.0 / epsilon, stream);
}

BdpCustodian::BdpCustodian(Dataset dataset, std::uint64_t seed,
                           std::optional<double> budget_cap)
    : dataset_(std::move(dataset)), seed_(seed), ledger_(budget_cap) {}

double BdpCustodian::AskExistence(const RangePredicate& pred, double epsilon) {
  RandomStream stream = RandomStream::AtCall(seed_, calls_);
  const MechanismAnswer answer =
      AnswerBdpExistence(dataset_, pred, epsilon, ledger_, stream);
  ++calls_;
  return answer.value;
}

}  // namespace relaxdp
