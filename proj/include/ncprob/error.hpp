// Copyright 2026 The ncprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ncprob {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (JSON, rationals, words, partitions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of an operation (t <= 0, s = -1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coefficient beyond the truncation degree was requested.
class DegreeExceeded : public Error {
 public:
  using Error::Error;
};

/// Two operands live over different alphabets (or ground sets).
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition failed (invalid partition, empty word, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Advisory size caps. Exceeding them only produces a warning.
inline constexpr int kAdvisoryDegreeCap = 10;
inline constexpr int kAdvisoryPartitionCap = 12;

/// Emits an advisory warning on stderr. Never throws.
void warn(const std::string& message);

}  // namespace ncprob
