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

#ifndef RELAXDP_SYNTHETIC_H_
#define RELAXDP_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "relaxdp/data.h"

namespace relaxdp {

// Mixed-kind schema for attack experiments: one categorical attribute with
// 2..8 categories and two numeric attributes whose domains range from a few
// grid points up to 2^20.
Schema SyntheticSchema(std::uint64_t seed);

// Uniform rows on the schema grid with roughly a quarter of rows duplicating
// earlier ones, so multiset (not just set) recovery is exercised.
Dataset MakeSyntheticDataset(const Schema& schema, std::size_t rows,
                             std::uint64_t seed);

}  // namespace relaxdp

#endif  // RELAXDP_SYNTHETIC_H_
