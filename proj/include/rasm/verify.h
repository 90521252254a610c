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

// Randomized brute-force property suite behind `rasm verify`.

#ifndef RASM_VERIFY_H_
#define RASM_VERIFY_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rasm {

// Deliberate defects for exercising the harness itself.
enum class Fault {
  kNone,
  // Scales every new-cut coefficient by 0.1 before the validity check.
  kShrinkNewCut,
  // Raises the closed-form CVaR by 1e-6 before comparing with the eta scan.
  kSkewCvar,
};

std::optional<Fault> ParseFault(std::string_view name);

struct VerifyOptions {
  uint64_t seed = 1;
  int instances = 100;
  int max_n = 8;
  int max_m = 8;
  Fault fault = Fault::kNone;
};

struct PropertyReport {
  std::string name;
  int64_t checked = 0;
  int64_t failed = 0;
  std::string first_failure;
};

struct VerifyReport {
  std::vector<PropertyReport> properties;

  bool ok() const;
  // Names of properties with at least one failure.
  std::vector<std::string> Violated() const;
};

VerifyReport RunVerification(const VerifyOptions& options);

// One line per property: "PASS name checked=N" or
// "FAIL name checked=N failed=F first: ...".
void PrintReport(const VerifyReport& report, std::ostream& out);

}  // namespace rasm

#endif  // RASM_VERIFY_H_
