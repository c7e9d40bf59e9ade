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

#include "cyclomat/families.h"

#include <string>

namespace cyclomat {

namespace {

void CheckRank(int r, int lo, std::string_view family) {
  if (r < lo || r > kMaxFamilyRank) {
    throw PreconditionError(std::string(family) + " rank must lie in [" +
                            std::to_string(lo) + ", " +
                            std::to_string(kMaxFamilyRank) + "], got " +
                            std::to_string(r));
  }
}

std::string Label(std::string_view family, int r) {
  return std::string(family) + "(" + std::to_string(r) + ")";
}

std::vector<ElementSet> PairLegs(int r) {
  std::vector<ElementSet> legs;
  for (int i = 0; i < r; ++i) legs.push_back(ElementSet(2 * r, {2 * i, 2 * i + 1}));
  return legs;
}

std::vector<std::int64_t> Unit(int rows, int i) {
  std::vector<std::int64_t> v(rows, 0);
  v[i] = 1;
  return v;
}

FamilyBundle Finish(FamilyBundle bundle) {
  const VerificationReport check = ValidateFamily(bundle);
  if (!check.all_passed()) {
    const auto failures = check.failures();
    throw InvalidInput(bundle.matroid.label() +
                       " failed family validation: " + failures.front().claim);
  }
  return bundle;
}

}  // namespace

std::string_view ToString(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kUniform:
      return "uniform";
    case FamilyKind::kWheel:
      return "wheel";
    case FamilyKind::kWhirl:
      return "whirl";
    case FamilyKind::kSpike:
      return "spike";
    case FamilyKind::kSwirl:
      return "swirl";
  }
  return "unknown";
}

FamilyKind FamilyKindFromString(std::string_view s) {
  for (auto k : {FamilyKind::kUniform, FamilyKind::kWheel, FamilyKind::kWhirl,
                 FamilyKind::kSpike, FamilyKind::kSwirl}) {
    if (ToString(k) == s) return k;
  }
  throw InvalidInput("unknown family '" + std::string(s) + "'");
}

Matroid Uniform(int r, int n) {
  if (n < 0 || n > kMaxElements || r < 0 || r > n) {
    throw PreconditionError("uniform matroid needs 0 <= r <= n <= " +
                            std::to_string(kMaxElements));
  }
  std::vector<Mask> bases;
  ForEachKSubset(n, r, [&](Mask s) { bases.push_back(s); });
  return Matroid::FromBases(
      n, std::move(bases),
      "U(" + std::to_string(r) + "," + std::to_string(n) + ")");
}

GraphRep WheelGraph(int r) {
  GraphRep g;
  g.vertex_count = r + 1;
  for (int i = 0; i < r; ++i) {
    g.edges.emplace_back(0, i + 1);
    g.edges.emplace_back(i + 1, (i + 1) % r + 1);
  }
  return g;
}

FamilyBundle Wheel(int r) {
  CheckRank(r, 2, "wheel");
  FamilyBundle b;
  b.kind = FamilyKind::kWheel;
  b.r = r;
  GraphRep g = WheelGraph(r);
  b.matroid = FromGraph(g, Label("wheel", r));
  b.source = std::move(g);
  b.ordering = CyclicOrdering::Identity(2 * r);
  b.t = 3;
  b.parity = Parity::kOdd;
  return Finish(std::move(b));
}

FamilyBundle Whirl(int r) {
  CheckRank(r, 2, "whirl");
  const FamilyBundle wheel = Wheel(r);
  Mask rim = 0;
  for (int i = 0; i < r; ++i) rim |= Mask{1} << (2 * i + 1);
  FamilyBundle b;
  b.kind = FamilyKind::kWhirl;
  b.r = r;
  b.matroid = Relax(wheel.matroid, ElementSet(2 * r, rim))
                  .WithLabel(Label("whirl", r));
  b.ordering = wheel.ordering;
  b.t = 3;
  b.parity = Parity::kOdd;
  return Finish(std::move(b));
}

FamilyBundle Spike(int r) {
  CheckRank(r, 3, "spike");
  std::vector<std::vector<std::int64_t>> columns;
  for (int i = 0; i < r; ++i) {
    std::vector<std::int64_t> x = Unit(r, i);
    std::vector<std::int64_t> y = x;
    for (auto& v : y) v += 1;  // e_i + all-ones
    columns.push_back(std::move(x));
    columns.push_back(std::move(y));
  }
  LinearRep rep = LinearRep::FromColumns(kDefaultPrime, columns);
  FamilyBundle b;
  b.kind = FamilyKind::kSpike;
  b.r = r;
  b.matroid = FromLinear(rep, Label("spike", r));
  b.source = std::move(rep);
  b.ordering = CyclicOrdering::Identity(2 * r);
  b.t = 4;
  b.parity = Parity::kEven;
  b.legs = PairLegs(r);
  return Finish(std::move(b));
}

FamilyBundle Swirl(int r) {
  CheckRank(r, 3, "swirl");
  std::vector<std::vector<std::int64_t>> columns;
  for (int i = 0; i < r; ++i) {
    const std::int64_t alpha = 2 + 2 * i;
    const std::int64_t beta = 3 + 2 * i;
    std::vector<std::int64_t> e = Unit(r, i);
    std::vector<std::int64_t> a = e;
    std::vector<std::int64_t> b = e;
    a[(i + 1) % r] += alpha;
    b[(i + 1) % r] += beta;
    columns.push_back(std::move(a));
    columns.push_back(std::move(b));
  }
  LinearRep rep = LinearRep::FromColumns(kDefaultPrime, columns);
  FamilyBundle b;
  b.kind = FamilyKind::kSwirl;
  b.r = r;
  b.matroid = FromLinear(rep, Label("swirl", r));
  b.source = std::move(rep);
  b.ordering = CyclicOrdering::Identity(2 * r);
  b.t = 4;
  b.parity = Parity::kEven;
  b.legs = PairLegs(r);
  return Finish(std::move(b));
}

FamilyBundle MakeFamily(FamilyKind kind, int r) {
  switch (kind) {
    case FamilyKind::kWheel:
      return Wheel(r);
    case FamilyKind::kWhirl:
      return Whirl(r);
    case FamilyKind::kSpike:
      return Spike(r);
    case FamilyKind::kSwirl:
      return Swirl(r);
    case FamilyKind::kUniform:
      break;
  }
  throw PreconditionError("uniform matroids carry no standard ordering");
}

Matroid Relax(const Matroid& m, const ElementSet& x) {
  if (!IsCircuit(m, x) || Rank(m, x) != m.rank() - 1 || Closure(m, x) != x) {
    throw PreconditionError(x.to_string() + " is not a circuit-hyperplane of " +
                            m.label());
  }
  std::vector<Mask> bases = m.bases();
  bases.push_back(x.bits());
  return Matroid::FromBases(m.n(), std::move(bases),
                            "relax(" + m.label() + ")");
}

VerificationReport ValidateFamily(const FamilyBundle& bundle) {
  VerificationReport report;
  report.suite = "family";
  const Matroid& m = bundle.matroid;
  const std::string& id = m.label();
  const int r = bundle.r;
  const int n = m.n();

  report.Check(n == 2 * r && m.rank() == r, id, "size-2r-rank-r",
               {m.ground_set()},
               "n=" + std::to_string(n) + " rank=" + std::to_string(m.rank()));

  switch (bundle.kind) {
    case FamilyKind::kWheel:
    case FamilyKind::kWhirl:
      for (int s = 0; s + 1 < n; s += 2) {
        const ElementSet tri(n, bundle.ordering.WindowMask(s, 3));
        const ElementSet triad(n, bundle.ordering.WindowMask(s + 1, 3));
        report.Check(IsCircuit(m, tri), id, "triangle-at-" + std::to_string(s),
                     {tri});
        report.Check(IsCocircuit(m, triad), id,
                     "triad-at-" + std::to_string(s + 1), {triad});
      }
      break;
    case FamilyKind::kSpike:
    case FamilyKind::kSwirl: {
      const bool all_pairs = bundle.kind == FamilyKind::kSpike;
      const int legs = static_cast<int>(bundle.legs.size());
      for (int i = 0; i < legs; ++i) {
        for (int j = i + 1; j < legs; ++j) {
          const bool consecutive = j == i + 1 || (i == 0 && j == legs - 1);
          if (!all_pairs && !consecutive) continue;
          const ElementSet u = bundle.legs[i] | bundle.legs[j];
          const std::string tag =
              "legs-" + std::to_string(i + 1) + "-" + std::to_string(j + 1);
          report.Check(IsCircuit(m, u), id, tag + "-circuit", {u});
          report.Check(IsCocircuit(m, u), id, tag + "-cocircuit", {u});
        }
      }
      break;
    }
    case FamilyKind::kUniform:
      break;
  }

  const TCyclicResult ordering = IsTCyclicOrdering(m, bundle.ordering, bundle.t);
  report.Check(ordering.parity == bundle.parity, id,
               std::to_string(bundle.t) + "-cyclic-" +
                   std::string(ToString(bundle.parity)),
               {m.ground_set()},
               ordering.parity ? std::string(ToString(*ordering.parity))
                               : std::string("none"));
  return report;
}

}  // namespace cyclomat
