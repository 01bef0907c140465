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

#include "relaxdp/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "relaxdp/csv.h"
#include "relaxdp/data.h"
#include "relaxdp/detector.h"
#include "relaxdp/error.h"
#include "relaxdp/query.h"
#include "relaxdp/synthetic.h"

namespace relaxdp {
namespace {

using Json = nlohmann::ordered_json;
using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::string FormatBool(bool value) { return value ? "true" : "false"; }

void Put(KeyValues& out, std::string key, std::string value) {
  out.emplace_back(std::move(key), std::move(value));
}

// ---------------------------------------------------------------------------
// Data and actor construction.

struct Prepared {
  Schema schema;
  Dataset dataset;
};

Prepared PrepareData(const ExperimentConfig& config) {
  if (config.schema_path.has_value() != config.dataset_path.has_value()) {
    throw ArgumentError(
        "schema_path and dataset_path must be provided together");
  }
  if (config.schema_path) {
    SchemaFile file = LoadSchemaFile(*config.schema_path);
    Dataset dataset =
        LoadDatasetCsv(*config.dataset_path, file.schema, file.delimiter);
    return Prepared{std::move(file.schema), std::move(dataset)};
  }
  Schema schema = SyntheticSchema(config.seed);
  Dataset dataset =
      MakeSyntheticDataset(schema, config.synthetic_rows, config.seed);
  return Prepared{std::move(schema), std::move(dataset)};
}

struct OracleSetup {
  std::unique_ptr<ThresholdOracle> oracle;
  int attack_k = 0;  // sensitivity radius the attacker assumes
};

OracleSetup MakeOracle(const ExperimentConfig& config, const Dataset& dataset) {
  if (config.baseline) {
    return OracleSetup{std::make_unique<TruthfulCustodian>(dataset), 0};
  }
  if (config.attack == AttackKind::kNegativeControl) {
    return OracleSetup{std::make_unique<GlobalSensitivityCustodian>(
                           dataset, config.seed, config.budget_cap),
                       config.k};
  }
  return OracleSetup{
      std::make_unique<GroupIdpCustodian>(dataset, GroupIdpParams{config.k},
                                          config.defense, config.seed,
                                          config.budget_cap),
      config.k};
}

std::unique_ptr<ProbeDetector> MakeDetector(const ExperimentConfig& config) {
  switch (config.detector) {
    case DetectorKind::kDirect:
      return std::make_unique<DirectProbeDetector>();
    case DetectorKind::kRepeated:
      return std::make_unique<RepeatedProbeDetector>(config.detector_repeats);
    case DetectorKind::kVariance: {
      VarianceTestConfig variance;
      variance.repeats = config.detector_repeats;
      return std::make_unique<VarianceProbeDetector>(variance);
    }
  }
  throw ArgumentError("unknown detector kind");
}

ColumnSearchOptions ColumnOptions(const ExperimentConfig& config) {
  ColumnSearchOptions options;
  options.strategy = config.strategy;
  options.eps_per_call = config.eps_per_call;
  options.eps_target = config.eps_target;
  options.discover_bounds = config.discover_bounds;
  return options;
}

// ---------------------------------------------------------------------------
// Targets and ground truth.

std::vector<std::pair<std::size_t, double>> ResolveTargets(
    const Schema& schema, const KeyValues& raw) {
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(raw.size());
  for (const auto& [name, text] : raw) {
    const auto index = schema.IndexOf(name);
    if (!index) throw ArgumentError("unknown attribute '" + name + "'");
    const AttributeSpec& spec = schema.Attribute(*index);
    double value = 0.0;
    if (spec.kind == AttributeKind::kCategorical) {
      if (const auto code = spec.CodeOf(text)) {
        value = static_cast<double>(*code);
      } else {
        throw ArgumentError("unknown category '" + text + "' for attribute '" +
                            name + "'");
      }
    } else {
      char* end = nullptr;
      value = std::strtod(text.c_str(), &end);
      if (end == text.c_str() || *end != '\0' || !std::isfinite(value)) {
        throw ArgumentError("cannot parse value '" + text +
                            "' for attribute '" + name + "'");
      }
      if (!spec.HoldsValue(value)) {
        throw ArgumentError("value " + text + " is outside the domain of '" +
                            name + "'");
      }
    }
    out.emplace_back(*index, spec.GridValue(spec.GridIndex(value)));
  }
  return out;
}

// Row 0 restricted to `attributes`, as a ready-made target description.
std::vector<std::pair<std::size_t, double>> RowTargets(
    const Dataset& dataset, const std::vector<std::size_t>& attributes) {
  if (dataset.size() == 0) {
    throw ArgumentError("no target given and the dataset is empty");
  }
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(attributes.size());
  for (std::size_t a : attributes) out.emplace_back(a, dataset.Row(0)[a]);
  return out;
}

std::size_t CountMatchingRows(
    const Dataset& dataset,
    const std::vector<std::pair<std::size_t, double>>& values) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < dataset.size(); ++r) {
    const auto row = dataset.Row(r);
    bool match = true;
    for (const auto& [a, v] : values) match = match && row[a] == v;
    count += match ? 1 : 0;
  }
  return count;
}

std::vector<std::vector<double>> SortedRows(const Dataset& dataset) {
  std::vector<std::vector<double>> rows = dataset.rows();
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<std::vector<double>> SortedDistinctRows(const Dataset& dataset) {
  std::vector<std::vector<double>> rows = SortedRows(dataset);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

std::vector<double> SortedColumn(const Dataset& dataset,
                                 std::size_t attribute) {
  std::vector<double> column;
  column.reserve(dataset.size());
  for (std::size_t r = 0; r < dataset.size(); ++r) {
    column.push_back(dataset.Row(r)[attribute]);
  }
  std::sort(column.begin(), column.end());
  return column;
}

std::string JoinValues(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += FormatDouble(values[i]);
  }
  return out;
}

std::string DescribeTargets(
    const Schema& schema,
    const std::vector<std::pair<std::size_t, double>>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ";";
    const AttributeSpec& spec = schema.Attribute(values[i].first);
    out += spec.name + "=";
    if (spec.kind == AttributeKind::kCategorical) {
      out += spec.categories[static_cast<std::size_t>(values[i].second)];
    } else {
      out += FormatDouble(values[i].second);
    }
  }
  return out;
}

void EchoConfig(const ExperimentConfig& config, KeyValues& out) {
  Put(out, "attack", ToString(config.attack));
  if (config.schema_path) Put(out, "schema_path", *config.schema_path);
  if (config.dataset_path) Put(out, "dataset_path", *config.dataset_path);
  if (!config.schema_path) {
    Put(out, "synthetic_rows", std::to_string(config.synthetic_rows));
  }
  Put(out, "seed", std::to_string(config.seed));
  if (config.attack == AttackKind::kSimulateDecisionRule) {
    Put(out, "trials", std::to_string(config.trials));
    Put(out, "rule_repeats", std::to_string(config.rule_repeats));
    return;
  }
  Put(out, "k", std::to_string(config.k));
  Put(out, "defense", ToString(config.defense));
  if (config.budget_cap) Put(out, "budget_cap", FormatDouble(*config.budget_cap));
  Put(out, "detector", ToString(config.detector));
  Put(out, "detector_repeats", std::to_string(config.detector_repeats));
  Put(out, "eps_per_call", FormatDouble(config.eps_per_call));
  if (config.eps_target) Put(out, "eps_target", FormatDouble(*config.eps_target));
  Put(out, "strategy", ToString(config.strategy));
  Put(out, "discover_bounds", FormatBool(config.discover_bounds));
  Put(out, "baseline", FormatBool(config.baseline));
  if (config.attack == AttackKind::kReconstructColumn ||
      config.attack == AttackKind::kNegativeControl) {
    Put(out, "column_index", std::to_string(config.column_index));
  }
  if (config.attack == AttackKind::kAttributeInference) {
    Put(out, "target_attribute", config.target_attribute);
  }
}

void PutOracleTotals(const ThresholdOracle& oracle, KeyValues& out) {
  Put(out, "oracle_calls", std::to_string(oracle.calls()));
  Put(out, "epsilon_spent", FormatDouble(oracle.spent()));
}

// ---------------------------------------------------------------------------
// Per-attack drivers. Each fills `report.results` (and sometimes the
// attribute table); errors other than the ones a driver deliberately absorbs
// propagate to the caller.

void RunReconstructDataset(const ExperimentConfig& config, const Prepared& data,
                           RunReport& report) {
  auto setup = MakeOracle(config, data.dataset);
  auto detector = MakeDetector(config);
  const DatasetResult result = ReconstructDataset(
      *setup.oracle, *detector, data.schema, setup.attack_k,
      ColumnOptions(config));
  const auto truth = SortedRows(data.dataset);
  Put(report.results, "rows_truth", std::to_string(truth.size()));
  Put(report.results, "rows_recovered", std::to_string(result.rows.size()));
  Put(report.results, "complete", FormatBool(result.complete));
  Put(report.results, "exact", FormatBool(result.rows == truth));
  PutOracleTotals(*setup.oracle, report.results);
  report.attribute_table = result.per_attribute;
}

void RunReconstructColumn(const ExperimentConfig& config, const Prepared& data,
                          RunReport& report) {
  if (config.column_index >= data.schema.AttributeCount()) {
    throw ArgumentError("column_index is out of range");
  }
  auto setup = MakeOracle(config, data.dataset);
  auto detector = MakeDetector(config);
  const ColumnResult result = ReconstructColumn(
      *setup.oracle, *detector, data.schema, config.column_index,
      setup.attack_k, ColumnOptions(config));
  const auto truth = SortedColumn(data.dataset, config.column_index);
  Put(report.results, "attribute",
      data.schema.Attribute(config.column_index).name);
  Put(report.results, "values_truth", std::to_string(truth.size()));
  Put(report.results, "values_recovered", std::to_string(result.values.size()));
  Put(report.results, "complete", FormatBool(result.complete));
  Put(report.results, "exact", FormatBool(result.values == truth));
  Put(report.results, "probe_decisions",
      std::to_string(result.probe_decisions));
  PutOracleTotals(*setup.oracle, report.results);
}

void RunMembership(const ExperimentConfig& config, const Prepared& data,
                   RunReport& report) {
  std::vector<std::size_t> all(data.schema.AttributeCount());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
  const auto targets = config.target_values.empty()
                           ? RowTargets(data.dataset, all)
                           : ResolveTargets(data.schema, config.target_values);
  auto setup = MakeOracle(config, data.dataset);
  auto detector = MakeDetector(config);
  const bool truth = CountMatchingRows(data.dataset, targets) > 0;
  const bool member =
      config.baseline
          ? MembershipBaseline(*setup.oracle, data.schema, targets)
          : InferMembership(*setup.oracle, *detector, data.schema, targets,
                            setup.attack_k, config.eps_per_call);
  Put(report.results, "target", DescribeTargets(data.schema, targets));
  Put(report.results, "member", FormatBool(member));
  Put(report.results, "truth", FormatBool(truth));
  Put(report.results, "exact", FormatBool(member == truth));
  PutOracleTotals(*setup.oracle, report.results);
}

void RunUniqueness(const ExperimentConfig& config, const Prepared& data,
                   RunReport& report) {
  std::vector<std::size_t> all(data.schema.AttributeCount());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
  const auto targets = config.target_values.empty()
                           ? RowTargets(data.dataset, all)
                           : ResolveTargets(data.schema, config.target_values);
  auto setup = MakeOracle(config, data.dataset);
  auto detector = MakeDetector(config);
  const bool truth = CountMatchingRows(data.dataset, targets) == 1;
  const bool unique =
      config.baseline
          ? UniquenessBaseline(*setup.oracle, data.schema, targets)
          : ConfirmUniqueness(*setup.oracle, *detector, data.schema, targets,
                              setup.attack_k, config.eps_per_call);
  Put(report.results, "target", DescribeTargets(data.schema, targets));
  Put(report.results, "unique", FormatBool(unique));
  Put(report.results, "truth", FormatBool(truth));
  Put(report.results, "exact", FormatBool(unique == truth));
  PutOracleTotals(*setup.oracle, report.results);
}

void RunAttributeInference(const ExperimentConfig& config, const Prepared& data,
                           RunReport& report) {
  std::size_t target_attribute = data.schema.AttributeCount() - 1;
  if (!config.target_attribute.empty()) {
    const auto index = data.schema.IndexOf(config.target_attribute);
    if (!index) {
      throw ArgumentError("unknown attribute '" + config.target_attribute +
                          "'");
    }
    target_attribute = *index;
  }
  std::vector<std::pair<std::size_t, double>> identifying;
  if (config.target_values.empty()) {
    std::vector<std::size_t> rest;
    for (std::size_t a = 0; a < data.schema.AttributeCount(); ++a) {
      if (a != target_attribute) rest.push_back(a);
    }
    identifying = RowTargets(data.dataset, rest);
  } else {
    identifying = ResolveTargets(data.schema, config.target_values);
    for (const auto& [a, v] : identifying) {
      if (a == target_attribute) {
        throw ArgumentError(
            "the inferred attribute cannot also identify the group");
      }
    }
  }
  auto setup = MakeOracle(config, data.dataset);
  auto detector = MakeDetector(config);
  const AttributeInferenceResult result = InferAttribute(
      *setup.oracle, *detector, data.schema, identifying, target_attribute,
      setup.attack_k, ColumnOptions(config));

  std::vector<double> truth;
  for (std::size_t r = 0; r < data.dataset.size(); ++r) {
    const auto row = data.dataset.Row(r);
    bool match = true;
    for (const auto& [a, v] : identifying) match = match && row[a] == v;
    if (match) truth.push_back(row[target_attribute]);
  }
  std::sort(truth.begin(), truth.end());

  Put(report.results, "target", DescribeTargets(data.schema, identifying));
  Put(report.results, "attribute",
      data.schema.Attribute(target_attribute).name);
  Put(report.results, "group_size", std::to_string(truth.size()));
  Put(report.results, "values", JoinValues(result.values));
  Put(report.results, "exact", FormatBool(result.values == truth));
  Put(report.results, "probe_decisions",
      std::to_string(result.probe_decisions));
  PutOracleTotals(*setup.oracle, report.results);
}

void RunBdpEnumerate(const ExperimentConfig& config, const Prepared& data,
                     RunReport& report) {
  BdpCustodian custodian(data.dataset, config.seed, config.budget_cap);
  const BdpEnumerationResult result =
      BdpEnumerateDistinct(custodian, data.schema, config.eps_per_call);
  const auto truth = SortedDistinctRows(data.dataset);
  Put(report.results, "distinct_truth", std::to_string(truth.size()));
  Put(report.results, "distinct_recovered",
      std::to_string(result.distinct_rows.size()));
  Put(report.results, "exact", FormatBool(result.distinct_rows == truth));
  Put(report.results, "oracle_calls", std::to_string(result.queries));
  Put(report.results, "epsilon_spent", FormatDouble(custodian.spent()));
}

void RunSimulateDecisionRule(const ExperimentConfig& config,
                             RunReport& report) {
  const double accuracy =
      SimulateDecisionRule(config.rule_repeats, config.trials, config.seed);
  Put(report.results, "accuracy", FormatDouble(accuracy));
  Put(report.results, "accuracy_percent", FormatDouble(100.0 * accuracy));
}

// Runs the column reconstruction against a custodian whose noise never
// vanishes (classic global-sensitivity Laplace at every call). The attack is
// expected to fail; how it fails is part of the report.
void RunNegativeControl(const ExperimentConfig& config, const Prepared& data,
                        RunReport& report) {
  if (config.column_index >= data.schema.AttributeCount()) {
    throw ArgumentError("column_index is out of range");
  }
  auto setup = MakeOracle(config, data.dataset);
  auto detector = MakeDetector(config);
  const auto truth = SortedColumn(data.dataset, config.column_index);
  std::string outcome = "completed";
  bool exact = false;
  std::size_t recovered = 0;
  try {
    const ColumnResult result = ReconstructColumn(
        *setup.oracle, *detector, data.schema, config.column_index,
        setup.attack_k, ColumnOptions(config));
    recovered = result.values.size();
    exact = result.complete && result.values == truth;
  } catch (const ConsistencyError&) {
    outcome = "consistency-error";
  } catch (const ApplicabilityError&) {
    outcome = "applicability-error";
  } catch (const BudgetError&) {  // includes PartialResultError
    outcome = "budget-error";
  }
  Put(report.results, "outcome", outcome);
  Put(report.results, "values_truth", std::to_string(truth.size()));
  Put(report.results, "values_recovered", std::to_string(recovered));
  Put(report.results, "exact", FormatBool(exact));
  PutOracleTotals(*setup.oracle, report.results);
}

}  // namespace

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

RunReport RunExperiment(const ExperimentConfig& config) {
  RunReport report;
  EchoConfig(config, report.config);
  if (config.attack == AttackKind::kSimulateDecisionRule) {
    RunSimulateDecisionRule(config, report);
    return report;
  }
  const Prepared data = PrepareData(config);
  Put(report.results, "dataset_size", std::to_string(data.dataset.size()));
  switch (config.attack) {
    case AttackKind::kReconstructDataset:
      RunReconstructDataset(config, data, report);
      break;
    case AttackKind::kReconstructColumn:
      RunReconstructColumn(config, data, report);
      break;
    case AttackKind::kMembership:
      RunMembership(config, data, report);
      break;
    case AttackKind::kUniqueness:
      RunUniqueness(config, data, report);
      break;
    case AttackKind::kAttributeInference:
      RunAttributeInference(config, data, report);
      break;
    case AttackKind::kBdpEnumerate:
      RunBdpEnumerate(config, data, report);
      break;
    case AttackKind::kNegativeControl:
      RunNegativeControl(config, data, report);
      break;
    case AttackKind::kSimulateDecisionRule:
      break;  // handled above
  }
  return report;
}

std::string SerializeReport(const RunReport& report) {
  Json doc = Json::object();
  Json config = Json::array();
  for (const auto& [key, value] : report.config) {
    config.push_back(Json::array({key, value}));
  }
  doc["config"] = std::move(config);
  Json results = Json::array();
  for (const auto& [key, value] : report.results) {
    results.push_back(Json::array({key, value}));
  }
  doc["results"] = std::move(results);
  Json table = Json::array();
  for (const AttributeQueryStats& stats : report.attribute_table) {
    Json row = Json::object();
    row["attribute"] = stats.attribute;
    row["distinct_values"] = stats.distinct_values;
    row["queries"] = stats.queries;
    table.push_back(std::move(row));
  }
  doc["attribute_table"] = std::move(table);
  return doc.dump(2) + "\n";
}

RunReport ParseReport(const std::string& json) {
  Json doc;
  try {
    doc = Json::parse(json);
  } catch (const Json::exception& e) {
    throw IngestionError(std::string("malformed report JSON: ") + e.what(), 0,
                         "");
  }
  RunReport report;
  try {
    for (const Json& entry : doc.at("config")) {
      report.config.emplace_back(entry.at(0).get<std::string>(),
                                 entry.at(1).get<std::string>());
    }
    for (const Json& entry : doc.at("results")) {
      report.results.emplace_back(entry.at(0).get<std::string>(),
                                  entry.at(1).get<std::string>());
    }
    for (const Json& row : doc.at("attribute_table")) {
      AttributeQueryStats stats;
      stats.attribute = row.at("attribute").get<std::string>();
      stats.distinct_values = row.at("distinct_values").get<std::uint64_t>();
      stats.queries = row.at("queries").get<std::uint64_t>();
      report.attribute_table.push_back(std::move(stats));
    }
  } catch (const Json::exception& e) {
    throw IngestionError(std::string("report JSON has the wrong shape: ") +
                             e.what(),
                         0, "");
  }
  return report;
}

void WriteReport(const RunReport& report, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IngestionError("cannot write report to " + path, 0, "");
    out << SerializeReport(report);
  }
  if (report.attribute_table.empty()) return;
  const std::string table_path = path + ".tsv";
  std::ofstream out(table_path, std::ios::binary);
  if (!out) throw IngestionError("cannot write table to " + table_path, 0, "");
  out << "attribute\tdistinct_values\tqueries\n";
  for (const AttributeQueryStats& stats : report.attribute_table) {
    out << stats.attribute << '\t' << stats.distinct_values << '\t'
        << stats.queries << '\n';
  }
}

RunReport LoadReport(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open report " + path, 0, "");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseReport(buffer.str());
}

const char* ToString(AttackKind kind) {
  switch (kind) {
    case AttackKind::kReconstructDataset:
      return "reconstruct-dataset";
    case AttackKind::kReconstructColumn:
      return "reconstruct-column";
    case AttackKind::kMembership:
      return "membership";
    case AttackKind::kUniqueness:
      return "uniqueness";
    case AttackKind::kAttributeInference:
      return "attribute-inference";
    case AttackKind::kBdpEnumerate:
      return "bdp-enumerate";
    case AttackKind::kSimulateDecisionRule:
      return "simulate-decision-rule";
    case AttackKind::kNegativeControl:
      return "negative-control";
  }
  return "unknown";
}

const char* ToString(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::kDirect:
      return "direct";
    case DetectorKind::kRepeated:
      return "repeated";
    case DetectorKind::kVariance:
      return "variance";
  }
  return "unknown";
}

const char* ToString(DefenseMode mode) {
  switch (mode) {
    case DefenseMode::kPlain:
      return "plain";
    case DefenseMode::kHardened:
      return "hardened";
    case DefenseMode::kRoundNearestInteger:
      return "round-integer";
    case DefenseMode::kRoundToBinary:
      return "round-binary";
  }
  return "unknown";
}

const char* ToString(SearchStrategy strategy) {
  switch (strategy) {
    case SearchStrategy::kLinear:
      return "linear";
    case SearchStrategy::kBinary:
      return "binary";
  }
  return "unknown";
}

std::optional<AttackKind> AttackKindFromString(const std::string& name) {
  static constexpr AttackKind kAll[] = {
      AttackKind::kReconstructDataset,  AttackKind::kReconstructColumn,
      AttackKind::kMembership,          AttackKind::kUniqueness,
      AttackKind::kAttributeInference,  AttackKind::kBdpEnumerate,
      AttackKind::kSimulateDecisionRule, AttackKind::kNegativeControl,
  };
  for (AttackKind kind : kAll) {
    if (name == ToString(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<DetectorKind> DetectorKindFromString(const std::string& name) {
  static constexpr DetectorKind kAll[] = {
      DetectorKind::kDirect, DetectorKind::kRepeated, DetectorKind::kVariance};
  for (DetectorKind kind : kAll) {
    if (name == ToString(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<DefenseMode> DefenseModeFromString(const std::string& name) {
  static constexpr DefenseMode kAll[] = {
      DefenseMode::kPlain, DefenseMode::kHardened,
      DefenseMode::kRoundNearestInteger, DefenseMode::kRoundToBinary};
  for (DefenseMode mode : kAll) {
    if (name == ToString(mode)) return mode;
  }
  return std::nullopt;
}

std::optional<SearchStrategy> StrategyFromString(const std::string& name) {
  static constexpr SearchStrategy kAll[] = {SearchStrategy::kLinear,
                                            SearchStrategy::kBinary};
  for (SearchStrategy strategy : kAll) {
    if (name == ToString(strategy)) return strategy;
  }
  return std::nullopt;
}

}  // namespace relaxdp
