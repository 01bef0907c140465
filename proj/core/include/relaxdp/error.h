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

#ifndef RELAXDP_ERROR_H_
#define RELAXDP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relaxdp {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument to an operation (non-positive epsilon, negative k, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Invalid schema or a dataset that violates its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A CSV row could not be ingested. Carries the 1-based file line and the
// offending column name so callers can point at the exact cell.
class IngestionError : public Error {
 public:
  IngestionError(const std::string& message, std::size_t line,
                 std::string column)
      : Error(message + " (line " + std::to_string(line) + ", column '" +
              column + "')"),
        line_(line),
        column_(std::move(column)) {}

  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t line_;
  std::string column_;
};

// The privacy ledger refused a charge.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An attack was invoked outside its preconditions (e.g. dataset too small
// for the configured group size, or an unsupported detector pairing).
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

// Observed verdicts contradict the verdict structure a correct custodian
// must produce. Raised instead of guessing a count.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// The exhaustive sensitivity oracle refused an instance beyond its caps.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace relaxdp

#endif  // RELAXDP_ERROR_H_
