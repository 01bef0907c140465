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

#include "relaxdp/data.h"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "relaxdp/error.h"

namespace relaxdp {
namespace {

void ValidateSpec(const AttributeSpec& spec) {
  if (spec.name.empty()) throw SchemaError("attribute name must be nonempty");
  if (spec.kind == AttributeKind::kCategorical) {
    if (spec.categories.size() < 2) {
      throw SchemaError("attribute '" + spec.name +
                        "' needs at least two categories");
    }
    std::unordered_set<std::string> cats;
    for (const std::string& c : spec.categories) {
      if (!cats.insert(c).second) {
        throw SchemaError("attribute '" + spec.name + "' repeats category '" +
                          c + "'");
      }
    }
    return;
  }
  if (!std::isfinite(spec.lower) || !std::isfinite(spec.upper) ||
      spec.lower >= spec.upper) {
    throw SchemaError("attribute '" + spec.name +
                      "' needs finite lower < upper");
  }
  if (!(spec.precision > 0.0) || !std::isfinite(spec.precision)) {
    throw SchemaError("attribute '" + spec.name +
                      "' needs positive precision");
  }
}

}  // namespace

AttributeSpec AttributeSpec::Numeric(std::string name, double lower,
                                     double upper, double precision) {
  AttributeSpec spec;
  spec.name = std::move(name);
  spec.kind = AttributeKind::kNumeric;
  spec.lower = lower;
  spec.upper = upper;
  spec.precision = precision;
  ValidateSpec(spec);
  return spec;
}

AttributeSpec AttributeSpec::Categorical(std::string name,
                                         std::vector<std::string> categories) {
  AttributeSpec spec;
  spec.name = std::move(name);
  spec.kind = AttributeKind::kCategorical;
  spec.lower = 0.0;
  spec.upper = categories.empty() ? 0.0
                                  : static_cast<double>(categories.size() - 1);
  spec.precision = 1.0;
  spec.categories = std::move(categories);
  ValidateSpec(spec);
  return spec;
}

std::int64_t AttributeSpec::DomainSize() const {
  return static_cast<std::int64_t>(
             std::floor((upper - lower) / precision + 1e-9)) +
         1;
}

std::int64_t AttributeSpec::GridIndex(double x) const {
  return std::llround((x - lower) / precision);
}

bool AttributeSpec::HoldsValue(double x) const {
  if (!std::isfinite(x)) return false;
  const std::int64_t index = GridIndex(x);
  if (index < 0 || index >= DomainSize()) return false;
  return std::abs(x - GridValue(index)) <= precision * 1e-9;
}

std::optional<std::int64_t> AttributeSpec::CodeOf(
    const std::string& category) const {
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (categories[i] == category) return static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

Schema Schema::Create(std::vector<AttributeSpec> attributes) {
  if (attributes.empty()) {
    throw SchemaError("schema needs at least one attribute");
  }
  std::unordered_set<std::string> names;
  for (const AttributeSpec& spec : attributes) {
    // Re-validate: AttributeSpec is an aggregate, so specs may bypass the
    // factory functions.
    ValidateSpec(spec);
    if (!names.insert(spec.name).second) {
      throw SchemaError("duplicate attribute name '" + spec.name + "'");
    }
  }
  return Schema(std::move(attributes));
}

std::optional<std::size_t> Schema::IndexOf(const std::string& name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

Dataset Dataset::Create(Schema schema, std::vector<std::vector<double>> rows) {
  const std::size_t width = schema.AttributeCount();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw SchemaError("row " + std::to_string(r) + " has " +
                        std::to_string(rows[r].size()) + " values, expected " +
                        std::to_string(width));
    }
    for (std::size_t a = 0; a < width; ++a) {
      const AttributeSpec& spec = schema.Attribute(a);
      if (!spec.HoldsValue(rows[r][a])) {
        throw SchemaError("row " + std::to_string(r) + ", attribute '" +
                          spec.name + "': value " +
                          std::to_string(rows[r][a]) +
                          " is off the attribute grid");
      }
      // Snap to the exact grid point so comparisons stay bit-exact.
      rows[r][a] = spec.GridValue(spec.GridIndex(rows[r][a]));
    }
  }
  return Dataset(std::move(schema), std::move(rows));
}

}  // namespace relaxdp
