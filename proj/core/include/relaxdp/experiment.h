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
// End-to-end experiment harness: configures a custodian and an attack, runs
// it, and reports deterministic metrics. Reports are byte-identical for a
// given (config, seed); wall-clock timing never enters the serialized form.

#ifndef RELAXDP_EXPERIMENT_H_
#define RELAXDP_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relaxdp/attack.h"
#include "relaxdp/mechanism.h"

namespace relaxdp {

enum class DetectorKind { kDirect, kRepeated, kVariance };

enum class AttackKind {
  kReconstructDataset,
  kReconstructColumn,
  kMembership,
  kUniqueness,
  kAttributeInference,
  kBdpEnumerate,
  kSimulateDecisionRule,
  kNegativeControl,
};

struct ExperimentConfig {
  AttackKind attack = AttackKind::kReconstructDataset;

  // Data: files when both paths are set, otherwise a seeded synthetic
  // dataset (schema also seeded).
  std::optional<std::string> schema_path;
  std::optional<std::string> dataset_path;
  std::size_t synthetic_rows = 100;
  std::uint64_t seed = 1;

  // Custodian.
  int k = 1;
  DefenseMode defense = DefenseMode::kPlain;
  std::optional<double> budget_cap;

  // Attacker.
  DetectorKind detector = DetectorKind::kDirect;
  std::size_t detector_repeats = 15;  // per decision (repeated / variance)
  double eps_per_call = 1e-10;
  std::optional<double> eps_target;
  SearchStrategy strategy = SearchStrategy::kBinary;
  bool discover_bounds = false;
  bool baseline = false;  // unprotected custodian, k = 0 attack

  // Attack-specific.
  std::size_t column_index = 0;  // kReconstructColumn
  std::vector<std::pair<std::string, std::string>> target_values;
  std::string target_attribute;   // kAttributeInference
  std::size_t trials = 200000;    // kSimulateDecisionRule
  std::size_t rule_repeats = 10;  // calls per decision for the rule
};

struct RunReport {
  // Ordered key/value echoes and metrics; doubles are rendered with enough
  // digits to round-trip exactly.
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<AttributeQueryStats> attribute_table;
};

// Shortest decimal form that parses back to the same binary64.
std::string FormatDouble(double value);

RunReport RunExperiment(const ExperimentConfig& config);

// Canonical JSON (stable key order); parse/serialize round-trips bytes.
std::string SerializeReport(const RunReport& report);
RunReport ParseReport(const std::string& json);

// Writes the JSON to `path`; when the attribute table is nonempty, also
// writes a tab-separated "attribute / distinct values / queries" table next
// to it (path + ".tsv").
void WriteReport(const RunReport& report, const std::string& path);
RunReport LoadReport(const std::string& path);

const char* ToString(AttackKind kind);
const char* ToString(DetectorKind kind);
const char* ToString(DefenseMode mode);
const char* ToString(SearchStrategy strategy);
std::optional<AttackKind> AttackKindFromString(const std::string& name);
std::optional<DetectorKind> DetectorKindFromString(const std::string& name);
std::optional<DefenseMode> DefenseModeFromString(const std::string& name);
std::optional<SearchStrategy> StrategyFromString(const std::string& name);

}  // namespace relaxdp

#endif  // RELAXDP_EXPERIMENT_H_
