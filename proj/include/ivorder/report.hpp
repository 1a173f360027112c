// Copyright 2026 The ivorder Authors
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

#ifndef IVORDER_REPORT_HPP_
#define IVORDER_REPORT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ivorder {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  // First counterexample, or an informational witness for existence checks.
  nlohmann::ordered_json witness;

  // Marks the check failed; keeps the first witness.
  void fail(nlohmann::ordered_json first_witness) {
    if (passed) witness = std::move(first_witness);
    passed = false;
    ++failures;
  }
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace ivorder

#endif  // IVORDER_REPORT_HPP_
