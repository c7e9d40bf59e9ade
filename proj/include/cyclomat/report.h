// Copyright 2026 The Authors.
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

#ifndef CYCLOMAT_REPORT_H_
#define CYCLOMAT_REPORT_H_

#include <string>
#include <vector>

#include "cyclomat/element_set.h"

namespace cyclomat {

// One evaluated claim on one instance.
struct ClaimRecord {
  std::string instance;
  std::string claim;
  bool passed = true;
  // Sets demonstrating a failure, as sorted element lists.
  std::vector<std::vector<int>> witness;
  std::string detail;

  friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimRecord> records;
  double wall_time_ms = 0.0;

  void Pass(std::string instance, std::string claim) {
    records.push_back({std::move(instance), std::move(claim), true, {}, {}});
  }
  void Fail(std::string instance, std::string claim,
            std::vector<ElementSet> witness, std::string detail = {}) {
    ClaimRecord rec{std::move(instance), std::move(claim), false, {},
                    std::move(detail)};
    for (const auto& w : witness) rec.witness.push_back(w.members());
    records.push_back(std::move(rec));
  }
  void Check(bool ok, std::string instance, std::string claim,
             std::vector<ElementSet> witness = {}, std::string detail = {}) {
    if (ok) {
      Pass(std::move(instance), std::move(claim));
    } else {
      Fail(std::move(instance), std::move(claim), std::move(witness),
           std::move(detail));
    }
  }
  void Append(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }

  int instances_run() const { return static_cast<int>(records.size()); }
  int passes() const {
    int count = 0;
    for (const auto& r : records) count += r.passed ? 1 : 0;
    return count;
  }
  std::vector<ClaimRecord> failures() const {
    std::vector<ClaimRecord> out;
    for (const auto& r : records) {
      if (!r.passed) out.push_back(r);
    }
    return out;
  }
  bool all_passed() const { return passes() == instances_run(); }
};

}  // namespace cyclomat

#endif  // CYCLOMAT_REPORT_H_
