// Copyright 2026 The RASM Authors.
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

#ifndef RASM_ERRORS_H_
#define RASM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rasm {

// Invalid argument value or dimension mismatch.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance file. Carries the 1-based position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A brute-force routine was asked to enumerate beyond its guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Caller broke a documented precondition (e.g. empty cut pool).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rasm

#endif  // RASM_ERRORS_H_
