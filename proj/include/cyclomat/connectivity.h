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

#ifndef CYCLOMAT_CONNECTIVITY_H_
#define CYCLOMAT_CONNECTIVITY_H_

#include <optional>
#include <string_view>
#include <vector>

#include "cyclomat/matroid.h"

namespace cyclomat {

inline constexpr int kMaxPetalsForScan = 16;

// lambda(X) = r(X) + r(E - X) - r(M).
int Lambda(const Matroid& m, const ElementSet& x);

// r(X) + r(Y) - r(X u Y) for disjoint X, Y. Throws PreconditionError when
// the arguments overlap.
int LocalConnectivity(const Matroid& m, const ElementSet& x,
                      const ElementSet& y);

bool IsExactlyKSeparating(const Matroid& m, const ElementSet& x, int k);

// An ordered partition of E(M) into nonempty petals, with its order k.
struct Flower {
  std::vector<ElementSet> petals;
  int k = 0;

  int size() const { return static_cast<int>(petals.size()); }
  ElementSet Union(Mask petal_indices) const;
};

enum class FlowerVerdict {
  kAnemone,
  kDaisy,
  kDegenerate,  // m <= 3: anemone and daisy coincide
  kNotAFlower,
  kMixed,       // exact unions neither all nor exactly the consecutive ones
};

std::string_view ToString(FlowerVerdict v);
FlowerVerdict FlowerVerdictFromString(std::string_view s);

struct SubsetEvidence {
  std::vector<int> petal_indices;  // 0-based
  int lambda = 0;

  friend bool operator==(const SubsetEvidence&,
                         const SubsetEvidence&) = default;
};

struct FlowerClass {
  FlowerVerdict verdict = FlowerVerdict::kNotAFlower;
  std::vector<SubsetEvidence> evidence;
};

// Throws InvalidInput unless the petals are nonempty, disjoint and cover E.
void ValidatePartition(const Matroid& m, const Flower& flower);

// Each petal, and for m >= 3 each cyclically consecutive pair of petals, is
// exactly k-separating. A single petal equal to E is always a flower.
bool CheckFlower(const Matroid& m, const Flower& flower);

// Ground truth classification by scanning every proper nonempty union of
// petals. Throws SizeCapError above kMaxPetalsForScan petals.
FlowerClass ClassifyFlower(const Matroid& m, const Flower& flower);

// Local-connectivity shortcut for flowers with m >= 4: if every consecutive
// pair has the same local connectivity c and some other pair differs from c,
// the flower is a daisy. Returns nullopt when the shortcut does not apply.
std::optional<FlowerVerdict> DaisyByLocalConnectivity(const Matroid& m,
                                                      const Flower& flower);

// True iff `indices` (a set of petal indices out of m) is a cyclic interval.
bool IsCyclicInterval(Mask indices, int m);

}  // namespace cyclomat

#endif  // CYCLOMAT_CONNECTIVITY_H_
