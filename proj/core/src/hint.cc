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

#include "relaxdp/hint.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <utility>

#include "relaxdp/error.h"

namespace relaxdp {
namespace {

std::string EncodeRows(std::vector<std::vector<double>> rows) {
  std::sort(rows.begin(), rows.end());
  std::string key;
  char buf[40];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) key += '|';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) key += ',';
      std::snprintf(buf, sizeof(buf), "%.17g", rows[r][c]);
      key += buf;
    }
  }
  return key;
}

std::vector<std::vector<double>> DecodeRows(const std::string& key) {
  std::vector<std::vector<double>> rows;
  if (key.empty()) return rows;
  std::size_t start = 0;
  while (start <= key.size()) {
    const std::size_t end = std::min(key.find('|', start), key.size());
    std::vector<double> row;
    const char* p = key.c_str() + start;
    const char* stop = key.c_str() + end;
    while (p < stop) {
      char* next = nullptr;
      row.push_back(std::strtod(p, &next));
      p = next < stop && *next == ',' ? next + 1 : stop;
    }
    rows.push_back(std::move(row));
    if (end == key.size()) break;
    start = end + 1;
  }
  return rows;
}

std::vector<std::vector<double>> UniverseRows(const Schema& schema,
                                              std::size_t cap) {
  std::vector<std::vector<double>> universe{{}};
  for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
    const AttributeSpec& spec = schema.Attribute(a);
    const auto domain = static_cast<std::size_t>(spec.DomainSize());
    if (universe.size() * domain > cap) {
      throw EnumerationLimitError(
          "record universe too large for hint enumeration");
    }
    std::vector<std::vector<double>> grown;
    grown.reserve(universe.size() * domain);
    for (const std::vector<double>& partial : universe) {
      for (std::size_t i = 0; i < domain; ++i) {
        std::vector<double> row = partial;
        row.push_back(spec.GridValue(static_cast<std::int64_t>(i)));
        grown.push_back(std::move(row));
      }
    }
    universe = std::move(grown);
  }
  return universe;
}

DatasetPairHint MakePair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

void EnumerateNeighborKeys(std::vector<std::vector<double>>& rows,
                           const std::vector<std::size_t>& positions,
                           std::size_t depth,
                           const std::vector<std::vector<double>>& universe,
                           std::size_t cap, std::set<std::string>& keys) {
  if (depth == positions.size()) {
    keys.insert(EncodeRows(rows));
    if (keys.size() > cap) {
      throw EnumerationLimitError("neighbor enumeration exceeds the cap");
    }
    return;
  }
  const std::size_t pos = positions[depth];
  const std::vector<double> saved = rows[pos];
  for (const std::vector<double>& candidate : universe) {
    rows[pos] = candidate;
    EnumerateNeighborKeys(rows, positions, depth + 1, universe, cap, keys);
  }
  rows[pos] = saved;
}

bool NextCombination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t j = combo.size();
  for (std::size_t i = j; i-- > 0;) {
    if (combo[i] < n - (j - i)) {
      ++combo[i];
      for (std::size_t t = i + 1; t < j; ++t) combo[t] = combo[t - 1] + 1;
      return true;
    }
  }
  return false;
}

void EnumerateResamples(const std::vector<std::vector<double>>& distinct,
                        std::size_t index, std::size_t left,
                        std::vector<std::vector<double>>& acc, std::size_t cap,
                        std::set<std::string>& keys) {
  if (index + 1 == distinct.size()) {
    std::vector<std::vector<double>> rows = acc;
    rows.insert(rows.end(), left, distinct[index]);
    keys.insert(EncodeRows(rows));
    if (keys.size() > cap) {
      throw EnumerationLimitError("resample enumeration exceeds the cap");
    }
    return;
  }
  for (std::size_t take = 0; take <= left; ++take) {
    const std::size_t before = acc.size();
    acc.insert(acc.end(), take, distinct[index]);
    EnumerateResamples(distinct, index + 1, left - take, acc, cap, keys);
    acc.resize(before);
  }
}

}  // namespace

std::string CanonicalKey(const Dataset& dataset) {
  return EncodeRows(dataset.rows());
}

std::vector<DatasetPairHint> ModificationNeighborPairs(const Dataset& dataset,
                                                       int k,
                                                       std::size_t max_pairs) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  const std::vector<std::vector<double>> universe =
      UniverseRows(dataset.schema(), max_pairs);
  const std::string anchor = CanonicalKey(dataset);
  std::set<std::string> keys;
  std::vector<std::vector<double>> rows = dataset.rows();
  const std::size_t n = dataset.size();
  const auto max_j = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  for (std::size_t j = 1; j <= max_j; ++j) {
    std::vector<std::size_t> combo(j);
    for (std::size_t i = 0; i < j; ++i) combo[i] = i;
    do {
      EnumerateNeighborKeys(rows, combo, 0, universe, max_pairs, keys);
    } while (NextCombination(combo, n));
  }
  keys.erase(anchor);
  std::vector<DatasetPairHint> pairs;
  pairs.reserve(keys.size());
  for (const std::string& key : keys) pairs.push_back(MakePair(anchor, key));
  return pairs;
}

std::vector<DatasetPairHint> BootstrapNeighborPairs(const Dataset& dataset,
                                                    std::size_t max_pairs) {
  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> distinct;
  for (const std::vector<double>& row : dataset.rows()) {
    if (seen.insert(row).second) distinct.push_back(row);
  }
  std::set<std::string> keys;
  if (distinct.empty()) {
    keys.insert(EncodeRows({}));
  } else {
    std::vector<std::vector<double>> acc;
    EnumerateResamples(distinct, 0, dataset.size(), acc, max_pairs, keys);
  }
  std::vector<std::string> ordered(keys.begin(), keys.end());
  if (ordered.size() * (ordered.size() + 1) / 2 > max_pairs) {
    throw EnumerationLimitError("bootstrap pair count exceeds the cap");
  }
  std::vector<DatasetPairHint> pairs;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i; j < ordered.size(); ++j) {
      pairs.push_back(MakePair(ordered[i], ordered[j]));
    }
  }
  return pairs;
}

const std::vector<DatasetPairHint>& ConstantHintMechanism::Answer(
    const Dataset& ignored) const {
  (void)ignored;
  return hint_;
}

bool OutputsIndistinguishable(const ConstantHintMechanism& mechanism,
                              const std::vector<Dataset>& inputs) {
  if (inputs.empty()) return true;
  const std::vector<DatasetPairHint>& reference = mechanism.Answer(inputs[0]);
  for (const Dataset& dataset : inputs) {
    const std::vector<DatasetPairHint>& answer = mechanism.Answer(dataset);
    if (answer.size() != reference.size()) return false;
    for (std::size_t i = 0; i < answer.size(); ++i) {
      if (answer[i].first != reference[i].first ||
          answer[i].second != reference[i].second) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::string> RecoverCommonDataset(
    const std::vector<DatasetPairHint>& pairs) {
  if (pairs.empty()) return std::nullopt;
  std::set<std::string> common{pairs[0].first, pairs[0].second};
  for (const DatasetPairHint& pair : pairs) {
    std::set<std::string> kept;
    if (common.count(pair.first)) kept.insert(pair.first);
    if (common.count(pair.second)) kept.insert(pair.second);
    common = std::move(kept);
  }
  if (common.size() != 1) return std::nullopt;
  return *common.begin();
}

std::vector<std::vector<double>> RecoverDistinctRows(
    const Schema& schema, const std::vector<DatasetPairHint>& pairs) {
  (void)schema;
  std::set<std::vector<double>> rows;
  for (const DatasetPairHint& pair : pairs) {
    for (const std::string* key : {&pair.first, &pair.second}) {
      for (std::vector<double>& row : DecodeRows(*key)) {
        rows.insert(std::move(row));
      }
    }
  }
  return {rows.begin(), rows.end()};
}

}  // namespace relaxdp
