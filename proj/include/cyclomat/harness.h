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

#ifndef CYCLOMAT_HARNESS_H_
#define CYCLOMAT_HARNESS_H_

#include <optional>
#include <string>
#include <vector>

#include "cyclomat/families.h"
#include "cyclomat/report.h"

namespace cyclomat {

// Suites: basics, theorem1, oddflower, evenflower, lemmas5, construction,
// proposition.
const std::vector<std::string>& SuiteNames();

struct SuiteSpec {
  std::string name;
  // Empty selects the suite's default families.
  std::vector<FamilyKind> families;
  int r_min = 3;
  int r_max = 6;
  // Only families whose natural t equals this value.
  std::optional<int> t;
  int max_n = kMaxElements;
  // Fault injection: drop bases()[k % count] from every generated family.
  std::optional<int> drop_basis;
};

// Removes one basis from the matroid, keeping ordering and metadata. The
// result is labelled "<label>-fault" and is usually not a matroid.
FamilyBundle DropBasis(const FamilyBundle& bundle, int index);

// The generated instances a suite iterates over, in order.
std::vector<FamilyBundle> SuiteInstances(const SuiteSpec& spec);

// Evaluates every claim of the suite. Deterministic apart from wall time.
// Exceptions raised while evaluating an instance become failed records.
// Throws InvalidInput for an unknown suite and SizeCapError when the rank
// range or max_n exceeds the caps.
VerificationReport RunSuite(const SuiteSpec& spec);

}  // namespace cyclomat

#endif  // CYCLOMAT_HARNESS_H_
