// Copyright 2026 The gcensus Authors
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

#ifndef GCENSUS_ERRORS_H_
#define GCENSUS_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcensus {

// Malformed or empty graph input. `line()` is 1-based, 0 when the error is
// not tied to a particular line (e.g. an input with no edges).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An input exceeds a configured size cap (complement, oracle, upload).
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A per-edge quantity does not fit the 64-bit per-edge representation.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold exactly did not (inexact division, negative
// intermediate, cache mismatch). Always indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Caller passed an argument outside the operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gcensus

#endif  // GCENSUS_ERRORS_H_
