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
// Command-line front end for the experiment harness. One subcommand per
// attack; the report goes to stdout (or --out) as JSON, wall-clock timing
// goes to stderr only, so reports stay byte-reproducible.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "relaxdp/error.h"
#include "relaxdp/experiment.h"

namespace {

using relaxdp::AttackKind;
using relaxdp::ExperimentConfig;

struct CliOptions {
  std::string schema_path;
  std::string dataset_path;
  std::size_t rows = 100;
  std::uint64_t seed = 1;
  int k = 1;
  std::string defense = "plain";
  double eps_cap = 0.0;  // 0 means uncapped
  std::string detector = "direct";
  std::size_t repeats = 15;
  double eps_per_call = 1e-10;
  double eps_target = 0.0;  // 0 means unset
  std::string strategy = "binary";
  bool discover_bounds = false;
  bool baseline = false;
  std::size_t column = 0;
  std::vector<std::string> targets;  // name=value
  std::string attribute;
  std::size_t trials = 200000;
  std::size_t rule_repeats = 10;
  std::string out;
};

void AddCommonOptions(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--schema", opt.schema_path,
                  "Schema description (JSON); requires --dataset");
  cmd->add_option("--dataset", opt.dataset_path,
                  "Delimited data file; requires --schema");
  cmd->add_option("--rows", opt.rows,
                  "Synthetic dataset size when no files are given");
  cmd->add_option("--seed", opt.seed, "Seed for data, noise, and simulation");
  cmd->add_option("--out", opt.out, "Write the report here instead of stdout");
}

void AddCustodianOptions(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--k", opt.k, "Modification radius the custodian protects")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--defense", opt.defense, "Custodian defense mode")
      ->check(CLI::IsMember(
          {"plain", "hardened", "round-integer", "round-binary"}));
  cmd->add_option("--eps-cap", opt.eps_cap,
                  "Total budget the custodian accepts (0 = uncapped)");
}

void AddAttackerOptions(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--detector", opt.detector, "Noise-presence detector")
      ->check(CLI::IsMember({"direct", "repeated", "variance"}));
  cmd->add_option("--repeats", opt.repeats,
                  "Oracle calls per detector decision (repeated / variance)");
  cmd->add_option("--eps-per-call", opt.eps_per_call,
                  "Budget share per count determination");
  cmd->add_option("--eps-target", opt.eps_target,
                  "Total budget goal used to derive per-call shares (0 = off)");
  cmd->add_option("--strategy", opt.strategy, "Probe-order strategy")
      ->check(CLI::IsMember({"linear", "binary"}));
  cmd->add_flag("--discover-bounds", opt.discover_bounds,
                "Ignore schema bounds; grow a covering range first");
  cmd->add_flag("--baseline", opt.baseline,
                "Attack an unprotected custodian with exact answers");
}

ExperimentConfig ToConfig(AttackKind attack, const CliOptions& opt) {
  ExperimentConfig config;
  config.attack = attack;
  if (!opt.schema_path.empty()) config.schema_path = opt.schema_path;
  if (!opt.dataset_path.empty()) config.dataset_path = opt.dataset_path;
  config.synthetic_rows = opt.rows;
  config.seed = opt.seed;
  config.k = opt.k;
  if (const auto defense = relaxdp::DefenseModeFromString(opt.defense)) {
    config.defense = *defense;
  }
  if (opt.eps_cap > 0) config.budget_cap = opt.eps_cap;
  if (const auto detector = relaxdp::DetectorKindFromString(opt.detector)) {
    config.detector = *detector;
  }
  config.detector_repeats = opt.repeats;
  config.eps_per_call = opt.eps_per_call;
  if (opt.eps_target > 0) config.eps_target = opt.eps_target;
  if (const auto strategy = relaxdp::StrategyFromString(opt.strategy)) {
    config.strategy = *strategy;
  }
  config.discover_bounds = opt.discover_bounds;
  config.baseline = opt.baseline;
  config.column_index = opt.column;
  for (const std::string& target : opt.targets) {
    const auto eq = target.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw relaxdp::ArgumentError("--target expects name=value, got '" +
                                   target + "'");
    }
    config.target_values.emplace_back(target.substr(0, eq),
                                      target.substr(eq + 1));
  }
  config.target_attribute = opt.attribute;
  config.trials = opt.trials;
  config.rule_repeats = opt.rule_repeats;
  return config;
}

int Run(AttackKind attack, const CliOptions& opt) {
  const ExperimentConfig config = ToConfig(attack, opt);
  const auto start = std::chrono::steady_clock::now();
  const relaxdp::RunReport report = relaxdp::RunExperiment(config);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  if (opt.out.empty()) {
    std::cout << relaxdp::SerializeReport(report);
  } else {
    relaxdp::WriteReport(report, opt.out);
  }
  std::cerr << "wall-clock: " << elapsed.count() << " ms\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Attacks on individual and bootstrap differential privacy custodians"};
  app.require_subcommand(1);

  CliOptions opt;
  struct Command {
    AttackKind attack;
    CLI::App* cmd;
  };
  std::vector<Command> commands;

  const auto add = [&](AttackKind attack, const char* name,
                       const char* description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    AddCommonOptions(cmd, opt);
    commands.push_back(Command{attack, cmd});
    return cmd;
  };

  {
    CLI::App* cmd = add(AttackKind::kReconstructDataset, "reconstruct",
                        "Recover the full dataset as a multiset of rows");
    AddCustodianOptions(cmd, opt);
    AddAttackerOptions(cmd, opt);
  }
  {
    CLI::App* cmd = add(AttackKind::kReconstructColumn, "column",
                        "Recover one attribute's multiset of values");
    AddCustodianOptions(cmd, opt);
    AddAttackerOptions(cmd, opt);
    cmd->add_option("--column", opt.column, "Attribute index to recover");
  }
  {
    CLI::App* cmd = add(AttackKind::kMembership, "membership",
                        "Decide whether the target row is in the dataset");
    AddCustodianOptions(cmd, opt);
    AddAttackerOptions(cmd, opt);
    cmd->add_option("--target", opt.targets,
                    "Identifying name=value (repeatable); default row 0");
  }
  {
    CLI::App* cmd = add(AttackKind::kUniqueness, "uniqueness",
                        "Decide whether exactly one record matches the target");
    AddCustodianOptions(cmd, opt);
    AddAttackerOptions(cmd, opt);
    cmd->add_option("--target", opt.targets,
                    "Identifying name=value (repeatable); default row 0");
  }
  {
    CLI::App* cmd = add(AttackKind::kAttributeInference, "infer",
                        "Recover an unknown attribute for the target group");
    AddCustodianOptions(cmd, opt);
    AddAttackerOptions(cmd, opt);
    cmd->add_option("--target", opt.targets,
                    "Identifying name=value (repeatable); default row 0");
    cmd->add_option("--attribute", opt.attribute,
                    "Attribute to infer (default: the last one)");
  }
  {
    CLI::App* cmd = add(AttackKind::kBdpEnumerate, "bdp-enum",
                        "Enumerate distinct rows via existence queries");
    cmd->add_option("--eps-per-call", opt.eps_per_call,
                    "Budget share per existence query");
    cmd->add_option("--eps-cap", opt.eps_cap,
                    "Total budget the custodian accepts (0 = uncapped)");
  }
  {
    CLI::App* cmd = add(AttackKind::kSimulateDecisionRule, "simulate",
                        "Estimate the variance decision rule's accuracy");
    cmd->add_option("--trials", opt.trials, "Simulated decisions");
    cmd->add_option("--rule-repeats", opt.rule_repeats,
                    "Answers per simulated decision");
  }
  {
    CLI::App* cmd =
        add(AttackKind::kNegativeControl, "negative-control",
            "Run the column attack against a classic DP custodian");
    AddCustodianOptions(cmd, opt);
    AddAttackerOptions(cmd, opt);
    cmd->add_option("--column", opt.column, "Attribute index to attack");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const Command& command : commands) {
      if (command.cmd->parsed()) return Run(command.attack, opt);
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const relaxdp::IngestionError& e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return 2;
  } catch (const relaxdp::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const relaxdp::ApplicabilityError& e) {
    std::cerr << "applicability error: " << e.what() << "\n";
    return 3;
  } catch (const relaxdp::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
