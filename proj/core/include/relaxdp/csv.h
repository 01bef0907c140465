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

#ifndef RELAXDP_CSV_H_
#define RELAXDP_CSV_H_

#include <string>

#include "relaxdp/data.h"

namespace relaxdp {

// Schema description read from JSON:
//   {
//     "delimiter": ";",                             // optional, default ","
//     "attributes": [
//       {"name": "age", "kind": "numeric",
//        "lower": 0, "upper": 125, "precision": 1}, // precision optional
//       {"name": "job", "kind": "categorical",
//        "categories": ["admin.", "technician", ...]}
//     ]
//   }
struct SchemaFile {
  Schema schema;
  char delimiter = ',';
};

// Throws IngestionError (malformed JSON, unknown kind, missing fields) or
// SchemaError (invalid bounds/precision/categories).
SchemaFile LoadSchemaFile(const std::string& path);

// Reads a delimited text file with a header row naming a superset of the
// schema's attributes in any order. Numeric cells must parse as finite
// numbers on the attribute grid; categorical cells must equal a declared
// category (surrounding double quotes are stripped). Errors carry the
// 1-based line number and offending cell text.
Dataset LoadDatasetCsv(const std::string& path, const Schema& schema,
                       char delimiter = ',');

}  // namespace relaxdp

#endif  // RELAXDP_CSV_H_
