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

#ifndef RELAXDP_DATA_H_
#define RELAXDP_DATA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relaxdp {

enum class AttributeKind { kNumeric, kCategorical };

// One attribute of a record. Values live on the grid
// {lower, lower + precision, ..., lower + (DomainSize()-1) * precision},
// which is the record universe used for sensitivity analysis. Categorical
// attributes store codebook indices (0..categories.size()-1) and always have
// lower = 0, upper = categories.size() - 1, precision = 1.
struct AttributeSpec {
  std::string name;
  AttributeKind kind = AttributeKind::kNumeric;
  double lower = 0.0;
  double upper = 0.0;
  double precision = 1.0;
  std::vector<std::string> categories;  // categorical only; code = index

  // Both factories throw SchemaError on invalid specs: empty name,
  // lower >= upper, non-positive precision, fewer than two categories, or
  // duplicate categories.
  static AttributeSpec Numeric(std::string name, double lower, double upper,
                               double precision = 1.0);
  // Codes are assigned in the order the categories are listed.
  static AttributeSpec Categorical(std::string name,
                                   std::vector<std::string> categories);

  // Number of grid values in [lower, upper].
  std::int64_t DomainSize() const;
  double GridValue(std::int64_t index) const { return lower + index * precision; }
  // Nearest grid index for x; does not check bounds.
  std::int64_t GridIndex(double x) const;
  // True iff x is within bounds and on the grid (tiny tolerance).
  bool HoldsValue(double x) const;
  std::optional<std::int64_t> CodeOf(const std::string& category) const;
};

// Immutable attribute list with unique names. Throws SchemaError on an empty
// list, duplicate attribute names, or any spec the factory functions above
// would reject.
class Schema {
 public:
  static Schema Create(std::vector<AttributeSpec> attributes);

  std::size_t AttributeCount() const { return attributes_.size(); }
  const AttributeSpec& Attribute(std::size_t i) const { return attributes_[i]; }
  const std::vector<AttributeSpec>& attributes() const { return attributes_; }
  std::optional<std::size_t> IndexOf(const std::string& name) const;

 private:
  explicit Schema(std::vector<AttributeSpec> attributes)
      : attributes_(std::move(attributes)) {}
  std::vector<AttributeSpec> attributes_;
};

// Immutable collection of records. Each record has one value per schema
// attribute; every value is validated to sit on its attribute's grid.
class Dataset {
 public:
  static Dataset Create(Schema schema, std::vector<std::vector<double>> rows);

  const Schema& schema() const { return schema_; }
  std::size_t size() const { return rows_.size(); }
  std::span<const double> Row(std::size_t i) const {
    return {rows_[i].data(), width_};
  }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  Dataset(Schema schema, std::vector<std::vector<double>> rows)
      : schema_(std::move(schema)),
        rows_(std::move(rows)),
        width_(schema_.AttributeCount()) {}
  Schema schema_;
  std::vector<std::vector<double>> rows_;
  std::size_t width_;
};

}  // namespace relaxdp

#endif  // RELAXDP_DATA_H_
