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

#include "cyclomat/constructions.h"

#include <algorithm>
#include <string>

namespace cyclomat {

namespace {

Matroid TruncationDirect(const Matroid& m) {
  std::vector<Mask> bases;
  ForEachKSubset(m.n(), m.rank() - 1, [&](Mask s) {
    if (m.IsIndependentMask(s)) bases.push_back(s);
  });
  return Matroid::FromBases(m.n(), std::move(bases),
                            "truncation(" + m.label() + ")");
}

bool IsTWindow(const std::vector<Mask>& family, Mask w) {
  return std::binary_search(family.begin(), family.end(), w);
}

}  // namespace

Matroid FreeExtension(const Matroid& m) {
  if (m.rank() < 1) throw PreconditionError("free extension needs rank >= 1");
  if (m.n() + 1 > kMaxElements) {
    throw SizeCapError("free extension would exceed " +
                       std::to_string(kMaxElements) + " elements");
  }
  std::vector<Mask> bases = m.bases();
  const Mask added = Mask{1} << m.n();
  ForEachKSubset(m.n(), m.rank() - 1, [&](Mask s) {
    if (m.IsIndependentMask(s)) bases.push_back(s | added);
  });
  return Matroid::FromBases(m.n() + 1, std::move(bases),
                            "free_extension(" + m.label() + ")");
}

Matroid Truncation(const Matroid& m) {
  if (m.rank() < 1) throw PreconditionError("truncation needs rank >= 1");
  Matroid direct = TruncationDirect(m);
  if (m.n() + 1 <= kMaxElements) {
    const Matroid extended = FreeExtension(m);
    const ElementSet added(extended.n(), {m.n()});
    const MinorResult via_extension =
        Minor(extended, ElementSet(extended.n()), added);
    if (!(via_extension.matroid == direct)) {
      throw Error("truncation routes disagree on " + m.label());
    }
  }
  return direct;
}

Matroid FreeCoextension(const Matroid& m) {
  if (m.corank() < 1) {
    throw PreconditionError("free coextension needs corank >= 1");
  }
  return Dual(FreeExtension(Dual(m)))
      .WithLabel("free_coextension(" + m.label() + ")");
}

Matroid HiggsLift(const Matroid& m) {
  if (m.corank() < 1) throw PreconditionError("Higgs lift needs corank >= 1");
  Matroid lifted =
      Dual(TruncationDirect(Dual(m))).WithLabel("higgs_lift(" + m.label() + ")");
  if (m.n() + 1 <= kMaxElements) {
    const Matroid coextended = FreeCoextension(m);
    const ElementSet added(coextended.n(), {m.n()});
    const MinorResult via_coextension =
        Minor(coextended, added, ElementSet(coextended.n()));
    if (!(via_coextension.matroid == lifted)) {
      throw Error("Higgs lift routes disagree on " + m.label());
    }
  }
  return lifted;
}

InflationTrace Inflate(const Matroid& m, const CyclicOrdering& sigma, int t) {
  const TCyclicResult in = IsTCyclicOrdering(m, sigma, t);
  if (!in.parity) {
    throw PreconditionError("ordering is not " + std::to_string(t) +
                            "-cyclic for " + m.label());
  }
  const int n = m.n();
  if (n < 2 * (t + 2) - 2) {
    throw PreconditionError("inflation needs n >= 2(t+2) - 2 (n = " +
                            std::to_string(n) + ", t = " + std::to_string(t) +
                            ")");
  }

  InflationTrace trace;
  trace.input = m;
  trace.t_in = t;
  trace.t_out = t + 2;
  trace.ordering = sigma;
  trace.parity_in = *in.parity;
  trace.after_truncation = Truncation(m);
  trace.output = HiggsLift(trace.after_truncation)
                     .WithLabel("inflate(" + m.label() + ")");
  const Matroid& mid = trace.after_truncation;
  const Matroid& out = trace.output;
  auto& checks = trace.checks;
  checks.suite = "inflation";
  const std::string id = out.label();

  checks.Check(out.n() == n, id, "same-ground-set");
  checks.Check(out.rank() == m.rank(), id, "rank-preserved");

  const TCyclicResult result = IsTCyclicOrdering(out, sigma, t + 2);
  trace.parity_out = result.parity;
  bool keeps_clause = false;
  for (int anchor : {0, 1}) {
    keeps_clause = keeps_clause ||
                   SatisfiesClause(out, sigma, t + 2, anchor, *in.parity);
  }
  if (keeps_clause) trace.parity_out = in.parity;
  checks.Check(result.parity.has_value(), id,
               std::to_string(t + 2) + "-cyclic-ordering", {out.ground_set()});
  checks.Check(keeps_clause, id, "parity-preserved", {},
               std::string(ToString(*in.parity)) + " -> " +
                   (result.parity ? std::string(ToString(*result.parity))
                                  : std::string("none")));

  // Windows two apart merge into a (t+2)-window.
  for (int j = 0; j < n; ++j) {
    const Mask first = sigma.WindowMask(j, t);
    const Mask second = sigma.WindowMask(j + 2, t);
    const ElementSet merged(n, sigma.WindowMask(j, t + 2));
    if (IsTWindow(m.CocircuitMasks(), first) &&
        IsTWindow(m.CocircuitMasks(), second)) {
      trace.merged_cocircuit_witnesses.push_back(merged);
      checks.Check(IsCocircuit(mid, merged), id,
                   "merged-cocircuit-at-" + std::to_string(j), {merged});
    }
    if (IsTWindow(m.CircuitMasks(), first) &&
        IsTWindow(m.CircuitMasks(), second)) {
      trace.merged_circuit_witnesses.push_back(merged);
      checks.Check(IsCircuit(out, merged), id,
                   "merged-circuit-at-" + std::to_string(j), {merged});
    }
  }

  // Petals of even concatenations gain exactly one in rank.
  if (t % 2 == 0 && *in.parity == Parity::kEven) {
    const int anchor = in.anchor;
    const auto concatenations = EnumerateConcatenations(
        n, 1, 8, [&](int start, int size) {
          return IsEvenPetal(start, size, t, anchor) && size >= t;
        });
    bool ok = true;
    std::vector<ElementSet> witness;
    for (const auto& c : concatenations) {
      const Flower f = MakeFlower(sigma, c, t - 1);
      const int count = f.size();
      for (int i = 0; i < count && ok; ++i) {
        const ElementSet& p = f.petals[i];
        if (count >= 2 && Rank(out, p) != Rank(m, p) + 1) {
          ok = false;
          witness = {p};
        }
        for (int k = i + 1; k < count && ok && count >= 4; ++k) {
          const ElementSet u = p | f.petals[k];
          if (Rank(out, u) != Rank(m, u) + 1) {
            ok = false;
            witness = {p, f.petals[k]};
          }
        }
      }
    }
    checks.Check(ok, id, "petal-rank-plus-one", witness,
                 std::to_string(concatenations.size()) + " concatenations");
  }
  return trace;
}

std::vector<InflationTrace> InflateRepeatedly(const Matroid& m,
                                              const CyclicOrdering& sigma,
                                              int t, int iterations) {
  std::vector<InflationTrace> out;
  Matroid current = m;
  for (int k = 0; k < iterations; ++k) {
    out.push_back(Inflate(current, sigma, t + 2 * k));
    current = out.back().output;
  }
  return out;
}

}  // namespace cyclomat
