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

#ifndef CYCLOMAT_CONSTRUCTIONS_H_
#define CYCLOMAT_CONSTRUCTIONS_H_

#include <vector>

#include "cyclomat/cyclic.h"
#include "cyclomat/matroid.h"
#include "cyclomat/report.h"

namespace cyclomat {

// Adds element n in general position. Requires rank >= 1 and n + 1 <= cap.
Matroid FreeExtension(const Matroid& m);

// Bases are the independent (rank-1)-sets. Also computed as the contraction
// of the free extension by its new element; throws Error if the two routes
// disagree.
Matroid Truncation(const Matroid& m);

// Dual of the free extension of the dual.
Matroid FreeCoextension(const Matroid& m);

// Dual of the truncation of the dual; raises rank by one. Cross-checked
// against deleting the new element of the free coextension.
Matroid HiggsLift(const Matroid& m);

struct InflationTrace {
  Matroid input;
  Matroid after_truncation;
  Matroid output;
  int t_in = 0;
  int t_out = 0;
  CyclicOrdering ordering;
  Parity parity_in = Parity::kOdd;
  std::optional<Parity> parity_out;
  // (t+2)-windows formed by two t-cocircuit windows two apart, verified as
  // cocircuits of the truncation; likewise circuits of the output.
  std::vector<ElementSet> merged_cocircuit_witnesses;
  std::vector<ElementSet> merged_circuit_witnesses;
  // Every postcondition evaluated; a failure contradicts the construction.
  VerificationReport checks;
};

// Truncation followed by Higgs lift, keeping the ground set and ordering.
// Requires `sigma` to be a t-cyclic ordering of `m` and n >= 2t + 2; throws
// PreconditionError otherwise.
InflationTrace Inflate(const Matroid& m, const CyclicOrdering& sigma, int t);

// Applies Inflate `iterations` times, feeding each output into the next step.
std::vector<InflationTrace> InflateRepeatedly(const Matroid& m,
                                              const CyclicOrdering& sigma,
                                              int t, int iterations);

}  // namespace cyclomat

#endif  // CYCLOMAT_CONSTRUCTIONS_H_
