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

#include "relaxdp/synthetic.h"

#include <string>
#include <vector>

#include "relaxdp/random.h"

namespace relaxdp {

Schema SyntheticSchema(std::uint64_t seed) {
  RandomStream stream = RandomStream::AtCall(seed, 0x5c43);
  const std::size_t category_count = 2 + stream.NextBelow(7);  // 2..8
  std::vector<std::string> categories;
  categories.reserve(category_count);
  for (std::size_t i = 0; i < category_count; ++i) {
    categories.push_back("c" + std::to_string(i));
  }
  // Wide numeric domain, up to 2^20 grid points.
  const int wide_bits = 4 + static_cast<int>(stream.NextBelow(17));  // 4..20
  const double wide_size = static_cast<double>(std::int64_t{1} << wide_bits);
  // Narrow numeric domain with a shifted, possibly negative origin.
  const double narrow_size =
      static_cast<double>(std::int64_t{4} << stream.NextBelow(9));  // 4..1024
  const double narrow_origin =
      static_cast<double>(stream.NextBelow(101)) - 50.0;
  return Schema::Create({
      AttributeSpec::Numeric("score", 0.0, wide_size - 1.0),
      AttributeSpec::Categorical("group", std::move(categories)),
      AttributeSpec::Numeric("level", narrow_origin,
                             narrow_origin + narrow_size - 1.0),
  });
}

Dataset MakeSyntheticDataset(const Schema& schema, std::size_t rows,
                             std::uint64_t seed) {
  std::vector<std::vector<double>> data;
  data.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    RandomStream stream = RandomStream::AtCall(seed, r);
    if (r > 0 && stream.NextBelow(4) == 0) {
      data.push_back(data[stream.NextBelow(r)]);
      continue;
    }
    std::vector<double> row;
    row.reserve(schema.AttributeCount());
    for (std::size_t a = 0; a < schema.AttributeCount(); ++a) {
      const AttributeSpec& spec = schema.Attribute(a);
      const auto index = static_cast<std::int64_t>(
          stream.NextBelow(static_cast<std::uint64_t>(spec.DomainSize())));
      row.push_back(spec.GridValue(index));
    }
    data.push_back(std::move(row));
  }
  return Dataset::Create(schema, std::move(data));
}

}  // namespace relaxdp
