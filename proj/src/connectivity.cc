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

#include "cyclomat/connectivity.h"

namespace cyclomat {

namespace {

int LambdaOf(const Matroid& m, Mask x) {
  return m.RankOf(x) + m.RankOf(~x & FullMask(m.n())) - m.rank();
}

std::vector<int> IndexList(Mask indices) {
  return ElementSet(kMaxPetalsForScan, indices).members();
}

}  // namespace

int Lambda(const Matroid& m, const ElementSet& x) {
  Rank(m, x);  // universe check
  return LambdaOf(m, x.bits());
}

int LocalConnectivity(const Matroid& m, const ElementSet& x,
                      const ElementSet& y) {
  if (!(x & y).empty()) {
    throw PreconditionError("local connectivity needs disjoint arguments");
  }
  return Rank(m, x) + Rank(m, y) - Rank(m, x | y);
}

bool IsExactlyKSeparating(const Matroid& m, const ElementSet& x, int k) {
  return Lambda(m, x) == k - 1;
}

ElementSet Flower::Union(Mask petal_indices) const {
  ElementSet out(petals.empty() ? 0 : petals.front().universe_size());
  for (Mask s = petal_indices; s != 0; s &= s - 1) {
    out |= petals[std::countr_zero(s)];
  }
  return out;
}

std::string_view ToString(FlowerVerdict v) {
  switch (v) {
    case FlowerVerdict::kAnemone:
      return "anemone";
    case FlowerVerdict::kDaisy:
      return "daisy";
    case FlowerVerdict::kDegenerate:
      return "degenerate_m_le_3";
    case FlowerVerdict::kNotAFlower:
      return "not_a_flower";
    case FlowerVerdict::kMixed:
      return "mixed";
  }
  return "unknown";
}

FlowerVerdict FlowerVerdictFromString(std::string_view s) {
  for (auto v : {FlowerVerdict::kAnemone, FlowerVerdict::kDaisy,
                 FlowerVerdict::kDegenerate, FlowerVerdict::kNotAFlower,
                 FlowerVerdict::kMixed}) {
    if (ToString(v) == s) return v;
  }
  throw InvalidInput("unknown flower verdict '" + std::string(s) + "'");
}

void ValidatePartition(const Matroid& m, const Flower& flower) {
  if (flower.petals.empty()) throw InvalidInput("flower has no petals");
  Mask seen = 0;
  for (const auto& p : flower.petals) {
    if (p.universe_size() != m.n()) {
      throw UniverseMismatch("petal over a different ground set");
    }
    if (p.empty()) throw InvalidInput("empty petal");
    if ((seen & p.bits()) != 0) throw InvalidInput("petals overlap");
    seen |= p.bits();
  }
  if (seen != FullMask(m.n())) {
    throw InvalidInput("petals do not cover the ground set");
  }
}

bool CheckFlower(const Matroid& m, const Flower& flower) {
  ValidatePartition(m, flower);
  const int count = flower.size();
  if (count == 1) return true;
  for (int i = 0; i < count; ++i) {
    if (LambdaOf(m, flower.petals[i].bits()) != flower.k - 1) return false;
  }
  if (count >= 3) {
    for (int i = 0; i < count; ++i) {
      const Mask pair =
          flower.petals[i].bits() | flower.petals[(i + 1) % count].bits();
      if (LambdaOf(m, pair) != flower.k - 1) return false;
    }
  }
  return true;
}

bool IsCyclicInterval(Mask indices, int m) {
  const Mask full = FullMask(m);
  if (indices == 0 || indices == full) return false;
  int run_ends = 0;
  for (int i = 0; i < m; ++i) {
    const bool here = (indices >> i) & 1U;
    const bool next = (indices >> ((i + 1) % m)) & 1U;
    if (here && !next) ++run_ends;
  }
  return run_ends == 1;
}

FlowerClass ClassifyFlower(const Matroid& m, const Flower& flower) {
  const int count = flower.size();
  if (count > kMaxPetalsForScan) {
    throw SizeCapError("flower classification limited to " +
                       std::to_string(kMaxPetalsForScan) + " petals");
  }
  FlowerClass out;
  if (!CheckFlower(m, flower)) {
    out.verdict = FlowerVerdict::kNotAFlower;
    for (int i = 0; i < count; ++i) {
      const int lam = LambdaOf(m, flower.petals[i].bits());
      if (lam != flower.k - 1) out.evidence.push_back({{i}, lam});
    }
    if (count >= 3) {
      for (int i = 0; i < count; ++i) {
        const int j = (i + 1) % count;
        const int lam =
            LambdaOf(m, flower.petals[i].bits() | flower.petals[j].bits());
        if (lam != flower.k - 1) out.evidence.push_back({{i, j}, lam});
      }
    }
    return out;
  }
  if (count <= 3) {
    out.verdict = FlowerVerdict::kDegenerate;
    return out;
  }
  const Mask full = FullMask(count);
  bool all_exact = true;
  bool exact_iff_interval = true;
  std::vector<SubsetEvidence> off_pattern;
  for (Mask s = 1; s < full; ++s) {
    const int lam = LambdaOf(m, flower.Union(s).bits());
    const bool exact = lam == flower.k - 1;
    const bool interval = IsCyclicInterval(s, count);
    if (!exact) all_exact = false;
    if (exact != interval) {
      exact_iff_interval = false;
      if (exact && off_pattern.size() < 16) {
        off_pattern.push_back({IndexList(s), lam});
      }
    }
    if (!interval && !exact && out.evidence.size() < 16) {
      out.evidence.push_back({IndexList(s), lam});
    }
  }
  if (all_exact) {
    out.verdict = FlowerVerdict::kAnemone;
  } else if (exact_iff_interval) {
    out.verdict = FlowerVerdict::kDaisy;
  } else {
    out.verdict = FlowerVerdict::kMixed;
    out.evidence.insert(out.evidence.end(), off_pattern.begin(),
                        off_pattern.end());
  }
  return out;
}

std::optional<FlowerVerdict> DaisyByLocalConnectivity(const Matroid& m,
                                                      const Flower& flower) {
  const int count = flower.size();
  if (count < 4) return std::nullopt;
  const int c = LocalConnectivity(m, flower.petals[0], flower.petals[1]);
  for (int i = 1; i < count; ++i) {
    if (LocalConnectivity(m, flower.petals[i],
                          flower.petals[(i + 1) % count]) != c) {
      return std::nullopt;
    }
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 2; j < count; ++j) {
      if (i == 0 && j == count - 1) continue;
      if (LocalConnectivity(m, flower.petals[i], flower.petals[j]) != c) {
        return FlowerVerdict::kDaisy;
      }
    }
  }
  return std::nullopt;
}

}  // namespace cyclomat
