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

#include "cyclomat/harness.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <utility>

#include "cyclomat/connectivity.h"
#include "cyclomat/constructions.h"
#include "cyclomat/cyclic.h"
#include "cyclomat/errors.h"

namespace cyclomat {

namespace {

using Sets = std::vector<std::vector<int>>;

Sets Members(const std::vector<ElementSet>& sets) {
  Sets out;
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

// Folds repeated checks of one claim on one instance into a single record
// that keeps the first failing witness.
class Tally {
 public:
  Tally(VerificationReport& report, std::string instance)
      : report_(report), instance_(std::move(instance)) {}
  Tally(const Tally&) = delete;
  Tally& operator=(const Tally&) = delete;
  ~Tally() { Flush(); }

  bool Check(const std::string& claim, bool ok,
             const std::vector<ElementSet>& witness = {},
             const std::string& detail = {}) {
    Add(claim, ok, ok ? Sets{} : Members(witness), detail);
    return ok;
  }

  void Merge(const VerificationReport& other) {
    for (const auto& r : other.records) {
      Add(r.claim, r.passed, r.witness, r.detail);
    }
  }

  void Flush() {
    for (auto& e : entries_) {
      ClaimRecord rec;
      rec.instance = instance_;
      rec.claim = e.claim;
      rec.passed = e.failed == 0;
      rec.witness = std::move(e.witness);
      if (e.failed == 0) {
        rec.detail = std::to_string(e.checks) + " checked";
      } else {
        rec.detail = std::to_string(e.failed) + " of " +
                     std::to_string(e.checks) + " failed";
        if (!e.detail.empty()) rec.detail += "; first: " + e.detail;
      }
      report_.records.push_back(std::move(rec));
    }
    entries_.clear();
    index_.clear();
  }

 private:
  struct Entry {
    std::string claim;
    int checks = 0;
    int failed = 0;
    Sets witness;
    std::string detail;
  };

  void Add(const std::string& claim, bool ok, Sets witness,
           const std::string& detail) {
    auto [it, inserted] = index_.emplace(claim, entries_.size());
    if (inserted) entries_.push_back({claim, 0, 0, {}, {}});
    Entry& e = entries_[it->second];
    ++e.checks;
    if (!ok && e.failed++ == 0) {
      e.witness = std::move(witness);
      e.detail = detail;
    }
  }

  VerificationReport& report_;
  std::string instance_;
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

template <typename Fn>
void RunInstance(VerificationReport& report, const std::string& id, Fn&& body) {
  Tally tally(report, id);
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.Check("evaluation", false, {}, e.what());
  }
}

int NaturalT(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kWheel:
    case FamilyKind::kWhirl:
      return 3;
    case FamilyKind::kSpike:
    case FamilyKind::kSwirl:
      return 4;
    case FamilyKind::kUniform:
      break;
  }
  throw InvalidInput("uniform matroids are not a suite family");
}

int MinRank(FamilyKind kind) {
  return kind == FamilyKind::kWheel || kind == FamilyKind::kWhirl ? 2 : 3;
}

std::vector<FamilyKind> DefaultFamilies(const std::string& suite) {
  if (suite == "oddflower") return {FamilyKind::kWheel, FamilyKind::kWhirl};
  if (suite == "evenflower") return {FamilyKind::kSpike, FamilyKind::kSwirl};
  return {FamilyKind::kWheel, FamilyKind::kWhirl, FamilyKind::kSpike,
          FamilyKind::kSwirl};
}

std::string Detail(int got, int want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string VerdictDetail(FlowerVerdict got, std::string_view want) {
  return "got " + std::string(ToString(got)) + ", expected " +
         std::string(want);
}

// Requires the bundle's ordering to be t-cyclic with the declared parity and
// returns its anchor.
std::optional<int> DeclaredAnchor(const FamilyBundle& b, Tally& tally) {
  const TCyclicResult res = IsTCyclicOrdering(b.matroid, b.ordering, b.t);
  const bool ok = tally.Check(
      std::to_string(b.t) + "-cyclic-" + std::string(ToString(b.parity)),
      res.parity == b.parity, {b.matroid.ground_set()},
      res.parity ? std::string(ToString(*res.parity)) : std::string("none"));
  if (!ok) return std::nullopt;
  return res.anchor;
}

// A proper petal union whose exactness disagrees with the expected verdict.
std::vector<ElementSet> VerdictWitness(const Matroid& m, const Flower& f,
                                       bool daisy) {
  const int count = f.size();
  for (Mask s = 1; s + 1 < (Mask{1} << count); ++s) {
    const bool exact = Lambda(m, f.Union(s)) == f.k - 1;
    const bool expected = !daisy || IsCyclicInterval(s, count);
    if (exact != expected) return {f.Union(s)};
  }
  return f.petals;
}

bool VerdictMatches(FlowerVerdict v, int petals, FlowerVerdict want) {
  return v == want || (petals <= 3 && v == FlowerVerdict::kDegenerate);
}

// The suites below assume a matroid; a corrupted family fails here first.
bool MatroidGate(const Matroid& m, Tally& tally) {
  const auto sub = FindSubmodularityViolation(m);
  return tally.Check("rank-submodular", !sub,
                     sub ? std::vector<ElementSet>{sub->x, sub->x.with(sub->a),
                                                   sub->x.with(sub->b)}
                         : std::vector<ElementSet>{},
                     "r(X+a) + r(X+b) < r(X+a+b) + r(X)");
}

// --- basics --------------------------------------------------------------

void Basics(const FamilyBundle& b, Tally& tally) {
  const Matroid& m = b.matroid;
  const int n = m.n();
  const int r = m.rank();
  const Mask full = FullMask(n);
  const ElementSet e = m.ground_set();

  tally.Merge(ValidateFamily(b));

  if (b.source) {
    const Matroid rebuilt = Construct(*b.source);
    std::vector<ElementSet> witness;
    if (!(rebuilt == m)) {
      std::vector<Mask> diff;
      std::set_symmetric_difference(rebuilt.bases().begin(),
                                    rebuilt.bases().end(), m.bases().begin(),
                                    m.bases().end(), std::back_inserter(diff));
      if (!diff.empty()) witness.emplace_back(n, diff.front());
    }
    tally.Check("source-representation-agrees", rebuilt == m, witness,
                "bases differ from the source representation");
  }

  MatroidGate(m, tally);
  if (n <= kExhaustiveAxiomCap) {
    const auto ex = FindExchangeViolation(m);
    tally.Check("basis-exchange", !ex,
                ex ? std::vector<ElementSet>{ex->b1, ex->b2,
                                             ElementSet(n, {ex->x})}
                   : std::vector<ElementSet>{},
                "no exchange partner");
  }

  tally.Check("size-even-at-least-2t-2", n % 2 == 0 && n >= 2 * b.t - 2, {e},
              "n=" + std::to_string(n));
  tally.Check("rank-equals-corank-half", 2 * r == n && r == m.corank(), {e},
              "r=" + std::to_string(r) + " r*=" + std::to_string(m.corank()));

  const Matroid dual = Dual(m);
  if (n <= 12) {
    for (Mask x = 0;; ++x) {
      const int via_complement = m.RankOf(x) + m.RankOf(full & ~x) - r;
      const int via_dual = m.RankOf(x) + dual.RankOf(x) - Popcount(x);
      tally.Check("lambda-formulas-agree", via_complement == via_dual,
                  {ElementSet(n, x)}, Detail(via_dual, via_complement));
      for (int el = 0; el < n; ++el) {
        const Mask bit = Mask{1} << el;
        if (x & bit) continue;
        const bool in_closure = m.RankOf(x | bit) == m.RankOf(x);
        const Mask rest = full & ~x & ~bit;
        const bool in_coclosure = dual.RankOf(rest | bit) == dual.RankOf(rest);
        tally.Check("closure-coclosure-complement", in_closure != in_coclosure,
                    {ElementSet(n, x), ElementSet(n, {el})});
      }
      if (x == full) break;
    }
  }

  tally.Check("dual-circuits-are-cocircuits",
              dual.CircuitMasks() == m.CocircuitMasks(), {});
  for (Mask c : m.CocircuitMasks()) {
    const Mask h = full & ~c;
    bool closed = m.RankOf(h) == r - 1;
    for (Mask s = c; s != 0 && closed; s &= s - 1) {
      closed = m.RankOf(h | (s & (~s + 1))) == r;
    }
    tally.Check("cocircuit-complements-are-hyperplanes", closed,
                {ElementSet(n, c)});
  }
  if (n <= 16) {
    for (Mask c : m.CircuitMasks()) {
      for (Mask d : m.CocircuitMasks()) {
        tally.Check("orthogonality", Popcount(c & d) != 1,
                    {ElementSet(n, c), ElementSet(n, d)});
      }
    }
  }
}

// --- window structure (suite theorem1) ----------------------------------

void WindowStructure(const FamilyBundle& b, Tally& tally) {
  const Matroid& m = b.matroid;
  const int t = b.t;
  if (m.n() < 6 * t - 10) return;
  if (!tally.Check("cyclic-property", HasCyclicProperty(m, b.ordering, t),
                   {m.ground_set()})) {
    return;
  }
  const WindowCertificate cert = CertifyWindowStructure(m, b.ordering, t);
  tally.Merge(cert.report);
  const std::string want = t % 2 == 1 ? "I" : "II";
  tally.Check("case-" + want,
              cert.case_tag == want && cert.circuit_window_parity != -1, {},
              "case " + cert.case_tag + ", circuit parity class " +
                  std::to_string(cert.circuit_window_parity));
}

// --- oddflower -----------------------------------------------------------

void OddFlowers(const FamilyBundle& b, Tally& tally) {
  const Matroid& m = b.matroid;
  const int t = b.t;
  if (t % 2 == 0) return;
  if (!DeclaredAnchor(b, tally)) return;
  const auto concatenations = EnumerateConcatenations(
      m.n(), 2, 8, [&](int, int size) { return size >= t - 1; });
  for (const auto& c : concatenations) {
    const Flower f = MakeFlower(b.ordering, c, t);
    const int count = f.size();
    if (!tally.Check("flower", CheckFlower(m, f), f.petals)) continue;
    const FlowerClass cls = ClassifyFlower(m, f);
    const bool daisy = VerdictMatches(cls.verdict, count, FlowerVerdict::kDaisy);
    tally.Check("daisy", daisy,
                daisy ? std::vector<ElementSet>{} : VerdictWitness(m, f, true),
                VerdictDetail(cls.verdict, "daisy"));
    if (count >= 3) {
      for (int i = 0; i < count; ++i) {
        const ElementSet& p = f.petals[i];
        const ElementSet& q = f.petals[(i + 1) % count];
        const int local = LocalConnectivity(m, p, q);
        tally.Check("consecutive-local-connectivity", local == (t - 1) / 2,
                    {p, q}, Detail(local, (t - 1) / 2));
      }
    }
    if (count >= 4) {
      for (int i = 0; i < count; ++i) {
        for (int j = i + 2; j < count; ++j) {
          if (i == 0 && j == count - 1) continue;
          const int local = LocalConnectivity(m, f.petals[i], f.petals[j]);
          tally.Check("non-consecutive-local-connectivity",
                      local >= 0 && local <= (t - 3) / 2,
                      {f.petals[i], f.petals[j]},
                      "got " + std::to_string(local) + ", bound " +
                          std::to_string((t - 3) / 2));
        }
      }
      const auto shortcut = DaisyByLocalConnectivity(m, f);
      tally.Check("local-connectivity-shortcut-consistent",
                  !shortcut || *shortcut == cls.verdict, f.petals);
    }
  }
  tally.Check("concatenations-enumerated", !concatenations.empty(), {},
              "none with petal sizes >= " + std::to_string(t - 1));
}

// --- evenflower ----------------------------------------------------------

void EvenFlowers(const FamilyBundle& b, Tally& tally) {
  const Matroid& m = b.matroid;
  const int t = b.t;
  if (t % 2 == 1) return;
  const auto anchor = DeclaredAnchor(b, tally);
  if (!anchor) return;
  std::optional<FlowerVerdict> expected;
  if (b.kind == FamilyKind::kSpike) expected = FlowerVerdict::kAnemone;
  if (b.kind == FamilyKind::kSwirl) expected = FlowerVerdict::kDaisy;

  const auto concatenations = EnumerateConcatenations(
      m.n(), 2, 8,
      [&](int start, int size) { return IsEvenPetal(start, size, t, *anchor); });
  for (const auto& c : concatenations) {
    const Flower f = MakeFlower(b.ordering, c, t - 1);
    const int count = f.size();
    if (!tally.Check("flower", CheckFlower(m, f), f.petals)) continue;
    if (count >= 3) {
      for (int i = 0; i < count; ++i) {
        const ElementSet& p = f.petals[i];
        const ElementSet& q = f.petals[(i + 1) % count];
        const int local = LocalConnectivity(m, p, q);
        tally.Check("consecutive-local-connectivity", local == (t - 2) / 2,
                    {p, q}, Detail(local, (t - 2) / 2));
      }
    }
    if (count < 4) continue;
    const FlowerClass cls = ClassifyFlower(m, f);
    tally.Check("anemone-or-daisy",
                cls.verdict == FlowerVerdict::kAnemone ||
                    cls.verdict == FlowerVerdict::kDaisy,
                f.petals, std::string(ToString(cls.verdict)));
    if (expected) {
      const std::string want(ToString(*expected));
      tally.Check(want, cls.verdict == *expected,
                  cls.verdict == *expected
                      ? std::vector<ElementSet>{}
                      : VerdictWitness(m, f, *expected == FlowerVerdict::kDaisy),
                  VerdictDetail(cls.verdict, want));
      const bool pairs = std::all_of(c.sizes.begin(), c.sizes.end(),
                                     [](int s) { return s == 2; });
      if (pairs) {
        const int want_local = *expected == FlowerVerdict::kAnemone ? 1 : 0;
        const int local = LocalConnectivity(m, f.petals[0], f.petals[2]);
        tally.Check("pair-petals-p1-p3-local-connectivity", local == want_local,
                    {f.petals[0], f.petals[2]}, Detail(local, want_local));
      }
    }
    const auto shortcut = DaisyByLocalConnectivity(m, f);
    tally.Check("local-connectivity-shortcut-consistent",
                !shortcut || *shortcut == cls.verdict, f.petals);
  }
  tally.Check("concatenations-enumerated", !concatenations.empty());
}

// --- window ranks and connectivity (suite lemmas5) -----------------------

int ExpectedLambda(int t, int j, bool i_even) {
  if (t % 2 == 1) return j < t - 1 ? j : t - 1;
  if (j <= t - 1) return j;
  if (j % 2 == 1) return t - 1;
  return i_even ? t - 2 : t;
}

void WindowRanks(const FamilyBundle& b, Tally& tally) {
  const Matroid& m = b.matroid;
  const int n = m.n();
  const int t = b.t;
  const auto anchor = DeclaredAnchor(b, tally);
  if (!anchor) return;
  const CyclicOrdering& sigma = b.ordering;
  auto window = [&](int s, int len) {
    return ElementSet(n, sigma.WindowMask(s, len));
  };

  for (int s = 0; s < n; ++s) {
    // i is the 1-based index of the element before the window.
    const bool i_even = (((s - *anchor) % 2) + 2) % 2 == 0;

    if (n >= 2 * t && i_even) {
      if (t % 2 == 1) {
        const ElementSet w = window(s, t);
        const ElementSet next = window(s + 1, t);
        tally.Check("odd-window-coindependent", m.CorankOf(w.bits()) == t,
                    {w});
        tally.Check("shifted-window-independent", IsIndependent(m, next),
                    {next});
      } else {
        const ElementSet next = window(s + 1, t);
        tally.Check("shifted-window-independent-and-coindependent",
                    IsIndependent(m, next) && m.CorankOf(next.bits()) == t,
                    {next});
      }
    }

    for (int j = 1; j <= n / 2; ++j) {
      const ElementSet x = window(s, j);
      const int want = ExpectedLambda(t, j, i_even);
      const int got = Lambda(m, x);
      tally.Check("window-lambda", got == want, {x}, Detail(got, want));
    }

    for (int k = 1; k < n; ++k) {
      const ElementSet p = window(s, k);
      const int rest = n - k;
      const int got = Rank(m, p);
      if (t % 2 == 1) {
        if (k < t - 1 || rest < t - 1) continue;
        int want;
        if (k % 2 == 0) {
          want = (k + t - 1) / 2;
        } else if (i_even) {
          want = (k + t - 2) / 2;
        } else {
          want = (k + t) / 2;
        }
        tally.Check("petal-rank", got == want, {p}, Detail(got, want));
      } else {
        if (!i_even || k % 2 == 1 || k < t - 2 || rest < t - 2) continue;
        const int want = (k + t - 2) / 2;
        tally.Check("petal-rank", got == want, {p}, Detail(got, want));
      }
    }
  }
}

// --- construction --------------------------------------------------------

void FlowerTypePreserved(const Matroid& in, const Matroid& out,
                         const CyclicOrdering& sigma, int t, int anchor,
                         Tally& tally) {
  const bool even = t % 2 == 0;
  const int k_in = even ? t - 1 : t;
  const auto concatenations = EnumerateConcatenations(
      in.n(), 2, 8, [&](int start, int size) {
        return even ? IsEvenPetal(start, size, t, anchor) && size >= t
                    : size >= t + 1;
      });
  for (const auto& c : concatenations) {
    const Flower before = MakeFlower(sigma, c, k_in);
    const Flower after = MakeFlower(sigma, c, k_in + 2);
    if (!tally.Check("flower-in-output", CheckFlower(out, after),
                     after.petals)) {
      continue;
    }
    const FlowerVerdict v_in = ClassifyFlower(in, before).verdict;
    const FlowerVerdict v_out = ClassifyFlower(out, after).verdict;
    tally.Check("flower-type-preserved", v_in == v_out, after.petals,
                std::string(ToString(v_in)) + " -> " +
                    std::string(ToString(v_out)));
  }
}

void Inflations(const FamilyBundle& b, VerificationReport& report) {
  const int n = b.matroid.n();
  const CyclicOrdering& sigma = b.ordering;
  Matroid current = b.matroid;
  int t = b.t;
  for (int step = 1; n >= 2 * (t + 2) - 2; ++step) {
    const std::string id = (step == 1 ? std::string("inflate(")
                                      : "inflate^" + std::to_string(step) + "(") +
                           b.matroid.label() + ")";
    bool ok = true;
    RunInstance(report, id, [&](Tally& tally) {
      ok = false;
      const TCyclicResult in = IsTCyclicOrdering(current, sigma, t);
      if (!tally.Check("input-" + std::to_string(t) + "-cyclic",
                       in.parity == b.parity, {current.ground_set()})) {
        return;
      }
      const InflationTrace trace = Inflate(current, sigma, t);
      tally.Merge(trace.checks);
      tally.Check("t-increases-by-two", trace.t_out == t + 2);

      const ElementSet added(n + 1, {n});
      const ElementSet none(n + 1);
      tally.Check("truncation-routes-agree",
                  Minor(FreeExtension(current), none, added).matroid ==
                      trace.after_truncation);
      tally.Check("higgs-lift-routes-agree",
                  Minor(FreeCoextension(trace.after_truncation), added, none)
                          .matroid == trace.output);
      tally.Check("lift-dual-is-truncation-of-dual",
                  Dual(trace.output) ==
                      Truncation(Dual(trace.after_truncation)));
      tally.Check("output-rank-equals-corank-half",
                  2 * trace.output.rank() == n, {trace.output.ground_set()});
      FlowerTypePreserved(current, trace.output, sigma, t, in.anchor, tally);
      current = trace.output;
      ok = trace.checks.all_passed();
    });
    if (!ok) break;
    t += 2;
  }
}

// --- property vs t-cyclic agreement (suite proposition) -------------------

struct AgreementCase {
  std::string id;
  Matroid matroid;
  int t = 0;
  std::optional<CyclicOrdering> supplied;
};

std::vector<AgreementCase> ExtraAgreementCases(const SuiteSpec& spec) {
  std::vector<AgreementCase> out;
  const Matroid u12 = Uniform(1, 2);
  auto allow = [&](int t) { return !spec.t || *spec.t == t; };
  if (allow(2)) {
    out.push_back({"U(1,2)+U(1,2)", DirectSum(u12, u12), 2, std::nullopt});
    out.push_back({"U(1,2)+U(1,2)+U(1,2)", DirectSum(DirectSum(u12, u12), u12),
                   2, std::nullopt});
    out.push_back({"U(2,4)", Uniform(2, 4), 2, std::nullopt});
    out.push_back({"U(1,2)+U(2,4)", DirectSum(u12, Uniform(2, 4)), 2,
                   std::nullopt});
    out.push_back({"U(1,3)+U(2,3)", DirectSum(Uniform(1, 3), Uniform(2, 3)), 2,
                   std::nullopt});
  }
  if (allow(3)) {
    out.push_back({"U(4,8)", Uniform(4, 8), 3, std::nullopt});
  }
  return out;
}

void CyclicAgreement(const AgreementCase& c, Tally& tally) {
  const Matroid& m = c.matroid;
  const int n = m.n();
  const int t = c.t;
  if (t != 2 && n < 6 * t - 10) return;
  auto agree = [&](const std::string& claim, const CyclicOrdering& sigma) {
    const bool property = HasCyclicProperty(m, sigma, t);
    const bool cyclic = IsTCyclicOrdering(m, sigma, t).parity.has_value();
    tally.Check(claim, property == cyclic, {m.ground_set()},
                std::string("property=") + (property ? "yes" : "no") +
                    " t-cyclic=" + (cyclic ? "yes" : "no"));
  };
  if (c.supplied) {
    agree("agreement-on-supplied-ordering", *c.supplied);
    agree("agreement-on-rotated-ordering", c.supplied->Rotated(1));
    std::vector<int> seq = c.supplied->seq();
    if (n >= 3) std::swap(seq[1], seq[2]);
    agree("agreement-on-perturbed-ordering", CyclicOrdering(seq));
  }
  if (n > 12) return;
  const auto by_property = FindCyclicOrdering(m, t, SearchMode::kProperty);
  const auto by_clauses = FindCyclicOrdering(m, t, SearchMode::kTCyclic);
  tally.Check("search-agreement",
              by_property.has_value() == by_clauses.has_value(),
              {m.ground_set()},
              std::string("property search ") +
                  (by_property ? "found" : "none") + ", t-cyclic search " +
                  (by_clauses ? "found" : "none"));
  if (c.supplied) {
    tally.Check("search-finds-supplied-kind", by_clauses.has_value());
  }
  if (by_property) {
    const ElementSet w(n, by_property->WindowMask(0, n));
    tally.Check("property-ordering-is-t-cyclic",
                IsTCyclicOrdering(m, *by_property, t).parity.has_value(), {w});
  }
  if (by_clauses) {
    const ElementSet w(n, by_clauses->WindowMask(0, n));
    tally.Check("t-cyclic-ordering-has-property",
                HasCyclicProperty(m, *by_clauses, t), {w});
    tally.Check("found-ordering-size-bounds",
                n % 2 == 0 && n >= 2 * t - 2 && 2 * m.rank() == n, {w});
  }
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "basics",  "theorem1",     "oddflower",  "evenflower",
      "lemmas5", "construction", "proposition"};
  return names;
}

FamilyBundle DropBasis(const FamilyBundle& bundle, int index) {
  std::vector<Mask> bases = bundle.matroid.bases();
  if (bases.size() < 2) {
    throw PreconditionError("cannot drop the only basis of " +
                            bundle.matroid.label());
  }
  const std::size_t count = bases.size();
  bases.erase(bases.begin() +
              static_cast<std::ptrdiff_t>(
                  ((index % static_cast<long>(count)) + count) % count));
  FamilyBundle out = bundle;
  out.matroid = Matroid::FromBases(bundle.matroid.n(), std::move(bases),
                                   bundle.matroid.label() + "-fault");
  return out;
}

std::vector<FamilyBundle> SuiteInstances(const SuiteSpec& spec) {
  if (std::find(SuiteNames().begin(), SuiteNames().end(), spec.name) ==
      SuiteNames().end()) {
    throw InvalidInput("unknown suite '" + spec.name + "'");
  }
  if (spec.r_min > spec.r_max) throw InvalidInput("empty rank range");
  if (spec.r_min < 2 || spec.r_max > kMaxFamilyRank) {
    throw SizeCapError("rank range must lie within [2, " +
                       std::to_string(kMaxFamilyRank) + "]");
  }
  if (spec.max_n < 1 || spec.max_n > kMaxElements) {
    throw SizeCapError("max-n must lie within [1, " +
                       std::to_string(kMaxElements) + "]");
  }
  if (2 * spec.r_max > spec.max_n) {
    throw SizeCapError("rank " + std::to_string(spec.r_max) +
                       " exceeds max-n " + std::to_string(spec.max_n));
  }
  const std::vector<FamilyKind> kinds =
      spec.families.empty() ? DefaultFamilies(spec.name) : spec.families;
  std::vector<FamilyBundle> out;
  for (FamilyKind kind : kinds) {
    if (spec.t && NaturalT(kind) != *spec.t) continue;
    for (int r = std::max(spec.r_min, MinRank(kind)); r <= spec.r_max; ++r) {
      FamilyBundle b = MakeFamily(kind, r);
      if (spec.drop_basis) b = DropBasis(b, *spec.drop_basis);
      out.push_back(std::move(b));
    }
  }
  return out;
}

VerificationReport RunSuite(const SuiteSpec& spec) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<FamilyBundle> instances = SuiteInstances(spec);
  VerificationReport report;
  report.suite = spec.name;
  const std::string& s = spec.name;

  for (const auto& b : instances) {
    const std::string& id = b.matroid.label();
    if (s == "basics") {
      RunInstance(report, id, [&](Tally& t) { Basics(b, t); });
    } else if (s == "theorem1") {
      RunInstance(report, id, [&](Tally& t) {
        if (MatroidGate(b.matroid, t)) WindowStructure(b, t);
      });
    } else if (s == "oddflower") {
      RunInstance(report, id, [&](Tally& t) {
        if (MatroidGate(b.matroid, t)) OddFlowers(b, t);
      });
    } else if (s == "evenflower") {
      RunInstance(report, id, [&](Tally& t) {
        if (MatroidGate(b.matroid, t)) EvenFlowers(b, t);
      });
    } else if (s == "lemmas5") {
      RunInstance(report, id, [&](Tally& t) {
        if (MatroidGate(b.matroid, t)) WindowRanks(b, t);
      });
    } else if (s == "construction") {
      bool sound = true;
      RunInstance(report, id,
                  [&](Tally& t) { sound = MatroidGate(b.matroid, t); });
      if (sound) Inflations(b, report);
    } else if (s == "proposition") {
      const AgreementCase c{id, b.matroid, b.t, b.ordering};
      RunInstance(report, id, [&](Tally& t) {
        if (MatroidGate(b.matroid, t)) CyclicAgreement(c, t);
      });
    }
  }
  if (s == "proposition" && !spec.drop_basis) {
    for (const auto& c : ExtraAgreementCases(spec)) {
      RunInstance(report, c.id, [&](Tally& t) { CyclicAgreement(c, t); });
    }
  }

  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return report;
}

}  // namespace cyclomat
