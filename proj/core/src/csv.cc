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

#include "relaxdp/csv.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "relaxdp/error.h"

namespace relaxdp {
namespace {

std::string StripCell(const std::string& raw) {
  std::size_t begin = raw.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = raw.find_last_not_of(" \t\r");
  std::string cell = raw.substr(begin, end - begin + 1);
  if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') {
    cell = cell.substr(1, cell.size() - 2);
  }
  return cell;
}

std::vector<std::string> SplitLine(const std::string& line, char delimiter) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(delimiter, start);
    cells.push_back(
        StripCell(line.substr(start, end == std::string::npos
                                         ? std::string::npos
                                         : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return cells;
}

}  // namespace

SchemaFile LoadSchemaFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open schema file " + path, 0, "");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("malformed schema JSON: ") + e.what(), 0,
                         "");
  }
  char delimiter = ',';
  if (doc.contains("delimiter")) {
    const auto d = doc.at("delimiter").get<std::string>();
    if (d.size() != 1) {
      throw IngestionError("delimiter must be a single character", 0,
                           "delimiter");
    }
    delimiter = d[0];
  }
  if (!doc.contains("attributes") || !doc.at("attributes").is_array()) {
    throw IngestionError("schema needs an 'attributes' array", 0,
                         "attributes");
  }
  std::vector<AttributeSpec> specs;
  for (const nlohmann::json& attr : doc.at("attributes")) {
    try {
      const auto name = attr.at("name").get<std::string>();
      const auto kind = attr.at("kind").get<std::string>();
      if (kind == "numeric") {
        specs.push_back(AttributeSpec::Numeric(
            name, attr.at("lower").get<double>(),
            attr.at("upper").get<double>(),
            attr.value("precision", 1.0)));
      } else if (kind == "categorical") {
        specs.push_back(AttributeSpec::Categorical(
            name, attr.at("categories").get<std::vector<std::string>>()));
      } else {
        throw IngestionError("unknown attribute kind '" + kind + "'", 0, name);
      }
    } catch (const nlohmann::json::exception& e) {
      throw IngestionError(std::string("malformed attribute entry: ") +
                               e.what(),
                           0, attr.value("name", std::string()));
    }
  }
  return SchemaFile{Schema::Create(std::move(specs)), delimiter};
}

Dataset LoadDatasetCsv(const std::string& path, const Schema& schema,
                       char delimiter) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open dataset file " + path, 0, "");
  std::string line;
  if (!std::getline(in, line)) {
    throw IngestionError("dataset file is empty", 1, "");
  }
  const std::vector<std::string> header = SplitLine(line, delimiter);
  std::vector<std::size_t> column_of(schema.AttributeCount());
  for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
    const std::string& name = schema.Attribute(a).name;
    bool found = false;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] == name) {
        column_of[a] = c;
        found = true;
        break;
      }
    }
    if (!found) {
      throw IngestionError("header is missing attribute '" + name + "'", 1,
                           name);
    }
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = SplitLine(line, delimiter);
    std::vector<double> row(schema.AttributeCount());
    for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
      const AttributeSpec& spec = schema.Attribute(a);
      if (column_of[a] >= cells.size()) {
        throw IngestionError("row has too few cells", line_number, spec.name);
      }
      const std::string& cell = cells[column_of[a]];
      if (spec.kind == AttributeKind::kCategorical) {
        const std::optional<std::int64_t> code = spec.CodeOf(cell);
        if (!code) {
          throw IngestionError("'" + cell + "' is not a declared category",
                               line_number, spec.name);
        }
        row[a] = static_cast<double>(*code);
      } else {
        char* end = nullptr;
        const double value = std::strtod(cell.c_str(), &end);
        if (cell.empty() || end != cell.c_str() + cell.size()) {
          throw IngestionError("'" + cell + "' is not a number", line_number,
                               spec.name);
        }
        if (!spec.HoldsValue(value)) {
          throw IngestionError("'" + cell + "' is outside [" +
                                   std::to_string(spec.lower) + ", " +
                                   std::to_string(spec.upper) +
                                   "] or off the grid",
                               line_number, spec.name);
        }
        row[a] = value;
      }
    }
    rows.push_back(std::move(row));
  }
  return Dataset::Create(schema, std::move(rows));
}

}  // namespace relaxdp
