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

#ifndef CYCLOMAT_FAMILIES_H_
#define CYCLOMAT_FAMILIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomat/cyclic.h"
#include "cyclomat/matroid.h"
#include "cyclomat/report.h"

namespace cyclomat {

inline constexpr int kMaxFamilyRank = 9;

enum class FamilyKind { kUniform, kWheel, kWhirl, kSpike, kSwirl };

std::string_view ToString(FamilyKind kind);
FamilyKind FamilyKindFromString(std::string_view s);

// A generated matroid with its standard cyclic ordering.
//
// Elements are numbered along the ordering, so `ordering` is the identity
// and index 1 sits at stored position 0. Wheels and whirls alternate spoke
// and rim edges (spoke_i = 2i, rim_i = 2i + 1 for the rim edge joining rim
// vertices i and i+1); spikes and swirls list their pairs L_i = {2i, 2i + 1}.
struct FamilyBundle {
  FamilyKind kind = FamilyKind::kUniform;
  int r = 0;
  Matroid matroid;
  CyclicOrdering ordering;
  int t = 0;
  Parity parity = Parity::kOdd;
  // Spike/swirl pairs; empty for the other kinds.
  std::vector<ElementSet> legs;
  // The representation the matroid was built from, when there is one.
  std::optional<MatroidRepr> source;
};

Matroid Uniform(int r, int n);

// Graph of the rank-r wheel with edges in the alternating spoke/rim order.
GraphRep WheelGraph(int r);

FamilyBundle Wheel(int r);
FamilyBundle Whirl(int r);
FamilyBundle Spike(int r);
FamilyBundle Swirl(int r);
FamilyBundle MakeFamily(FamilyKind kind, int r);

// Circuit-hyperplane relaxation: adds `x` as a basis. Throws
// PreconditionError unless x is a circuit with rank r - 1 and closure x.
Matroid Relax(const Matroid& m, const ElementSet& x);

// Re-checks the defining circuit/cocircuit conditions of the family and the
// ordering. Failures carry the offending sets.
VerificationReport ValidateFamily(const FamilyBundle& bundle);

}  // namespace cyclomat

#endif  // CYCLOMAT_FAMILIES_H_
