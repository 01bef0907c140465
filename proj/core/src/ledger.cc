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

#include "relaxdp/ledger.h"

#include <cmath>

#include "relaxdp/error.h"

namespace relaxdp {

PrivacyLedger::PrivacyLedger(std::optional<double> cap) : cap_(cap) {
  if (cap_ && (!std::isfinite(*cap_) || *cap_ < 0.0)) {
    throw ArgumentError("ledger cap must be finite and nonnegative");
  }
}

ChargeOutcome PrivacyLedger::Charge(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ArgumentError("privacy charge must be positive and finite");
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (cap_ && spent_ + epsilon > *cap_) return ChargeOutcome::kRejected;
  spent_ += epsilon;
  ++accepted_count_;
  return ChargeOutcome::kAccepted;
}

double PrivacyLedger::spent() const {
  std::lock_guard<std::mutex> lock(mu_);
  return spent_;
}

std::uint64_t PrivacyLedger::accepted_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return accepted_count_;
}

}  // namespace relaxdp
