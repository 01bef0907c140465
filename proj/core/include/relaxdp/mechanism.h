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

#ifndef RELAXDP_MECHANISM_H_
#define RELAXDP_MECHANISM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "relaxdp/data.h"
#include "relaxdp/ledger.h"
#include "relaxdp/query.h"
#include "relaxdp/random.h"

namespace relaxdp {

enum class DefenseMode {
  kPlain,                // truth + Laplace(sensitivity / eps)
  kHardened,             // truth + Laplace((1 + sensitivity) / eps)
  kRoundNearestInteger,  // plain answer rounded to the nearest integer
  kRoundToBinary,        // plain answer rounded to 0 or 1, whichever is closer
};

struct GroupIdpParams {
  int k = 1;  // number of records a neighbor may modify
};

struct MechanismAnswer {
  double value = 0.0;
  double epsilon = 0.0;  // charge accepted for this answer
};

// Answers one threshold query. Charges `epsilon` to the ledger first (throws
// BudgetError on rejection; nothing is released), then adds Laplace noise
// scaled by the k-local sensitivity per the defense mode. Deterministic given
// the stream, which callers derive from (seed, call index).
MechanismAnswer AnswerThreshold(const Dataset& dataset,
                                const ThresholdQuery& query,
                                const GroupIdpParams& params, double epsilon,
                                DefenseMode mode, PrivacyLedger& ledger,
                                RandomStream& stream);

// Dataset size is public metadata (a query no record modification can
// change), released without a ledger charge.
std::size_t DatasetSizeQuery(const Dataset& dataset);

// Existence query under bootstrap neighbors: truth in {0,1} plus
// Laplace(BootstrapSensitivity / epsilon) noise. Charges like AnswerThreshold.
MechanismAnswer AnswerBdpExistence(const Dataset& dataset,
                                   const RangePredicate& pred, double epsilon,
                                   PrivacyLedger& ledger, RandomStream& stream);

// Query interface the attacks drive. Implementations count every released
// answer and account every accepted charge.
class ThresholdOracle {
 public:
  virtual ~ThresholdOracle() = default;
  virtual double Ask(const RangePredicate& pred, std::int64_t threshold,
                     double epsilon) = 0;
  virtual std::size_t DatasetSize() const = 0;
  virtual std::uint64_t calls() const = 0;
  virtual double spent() const = 0;
};

// Custodian applying the k-record-modification Laplace mechanism with a
// defense mode. Matching counts are memoized per predicate (a pure
// optimization; answers are unchanged). Noise for call i comes from the
// stream at (seed, i).
class GroupIdpCustodian : public ThresholdOracle {
 public:
  GroupIdpCustodian(Dataset dataset, GroupIdpParams params, DefenseMode mode,
                    std::uint64_t seed,
                    std::optional<double> budget_cap = std::nullopt);

  double Ask(const RangePredicate& pred, std::int64_t threshold,
             double epsilon) override;
  std::size_t DatasetSize() const override { return dataset_.size(); }
  std::uint64_t calls() const override { return calls_; }
  double spent() const override { return ledger_.spent(); }
  const PrivacyLedger& ledger() const { return ledger_; }
  int k() const { return params_.k; }

 private:
  struct CountInfo {
    std::size_t count;
    bool always_true;
    bool always_false;
  };
  const CountInfo& Lookup(const RangePredicate& pred);

  Dataset dataset_;
  GroupIdpParams params_;
  DefenseMode mode_;
  std::uint64_t seed_;
  PrivacyLedger ledger_;
  std::uint64_t calls_ = 0;
  std::unordered_map<std::string, CountInfo> count_cache_;
};

// Baseline custodian with no protection: exact answers, no charges.
class TruthfulCustodian : public ThresholdOracle {
 public:
  explicit TruthfulCustodian(Dataset dataset) : dataset_(std::move(dataset)) {}
  double Ask(const RangePredicate& pred, std::int64_t threshold,
             double epsilon) override;
  std::size_t DatasetSize() const override { return dataset_.size(); }
  std::uint64_t calls() const override { return calls_; }
  double spent() const override { return 0.0; }

 private:
  Dataset dataset_;
  std::uint64_t calls_ = 0;
};

// Negative-control custodian: classical Laplace mechanism calibrated to the
// global sensitivity of the threshold query (1), i.e. noise on every answer.
class GlobalSensitivityCustodian : public ThresholdOracle {
 public:
  GlobalSensitivityCustodian(Dataset dataset, std::uint64_t seed,
                             std::optional<double> budget_cap = std::nullopt);
  double Ask(const RangePredicate& pred, std::int64_t threshold,
             double epsilon) override;
  std::size_t DatasetSize() const override { return dataset_.size(); }
  std::uint64_t calls() const override { return calls_; }
  double spent() const override { return ledger_.spent(); }

 private:
  Dataset dataset_;
  std::uint64_t seed_;
  PrivacyLedger ledger_;
  std::uint64_t calls_ = 0;
};

// Custodian for existence queries under bootstrap neighbors.
class BdpCustodian {
 public:
  BdpCustodian(Dataset dataset, std::uint64_t seed,
               std::optional<double> budget_cap = std::nullopt);
  double AskExistence(const RangePredicate& pred, double epsilon);
  std::size_t DatasetSize() const { return dataset_.size(); }
  std::uint64_t calls() const { return calls_; }
  double spent() const { return ledger_.spent(); }

 private:
  Dataset dataset_;
  std::uint64_t seed_;
  PrivacyLedger ledger_;
  std::uint64_t calls_ = 0;
};

}  // namespace relaxdp

#endif  // RELAXDP_MECHANISM_H_
