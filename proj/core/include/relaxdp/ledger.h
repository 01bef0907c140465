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

#ifndef RELAXDP_LEDGER_H_
#define RELAXDP_LEDGER_H_

#include <cstdint>
#include <mutex>
#include <optional>

namespace relaxdp {

enum class ChargeOutcome { kAccepted, kRejected };

// Running sum of per-query privacy charges with an optional hard cap.
// Charging is atomic and linearizable: under concurrent chargers the spent
// total never exceeds the cap and equals the exact binary64 sum of the
// accepted charges in acceptance order.
class PrivacyLedger {
 public:
  explicit PrivacyLedger(std::optional<double> cap = std::nullopt);

  // Accepts iff spent + epsilon <= cap (always, when uncapped). Rejection
  // leaves the ledger unchanged. Throws ArgumentError unless epsilon > 0
  // and finite.
  ChargeOutcome Charge(double epsilon);

  double spent() const;
  std::uint64_t accepted_count() const;
  std::optional<double> cap() const { return cap_; }

 private:
  mutable std::mutex mu_;
  std::optional<double> cap_;
  double spent_ = 0.0;
  std::uint64_t accepted_count_ = 0;
};

}  // namespace relaxdp

#endif  // RELAXDP_LEDGER_H_
