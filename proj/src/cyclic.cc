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

#include "cyclomat/cyclic.h"

#include <algorithm>
#include <cstdint>

namespace cyclomat {

namespace {

int PosMod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

bool Contains(const std::vector<Mask>& sorted, Mask x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool IsTCircuit(const Matroid& m, Mask x, int t) {
  return Popcount(x) == t && Contains(m.CircuitMasks(), x);
}

bool IsTCocircuit(const Matroid& m, Mask x, int t) {
  return Popcount(x) == t && Contains(m.CocircuitMasks(), x);
}

bool InSomeTSet(const std::vector<Mask>& family, Mask x, int t) {
  for (Mask c : family) {
    if (Popcount(c) == t && (x & ~c) == 0) return true;
  }
  return false;
}

}  // namespace

// --- CyclicOrdering ------------------------------------------------------

CyclicOrdering::CyclicOrdering(std::vector<int> seq) : seq_(std::move(seq)) {
  const int n = size();
  if (n > kMaxElements) throw SizeCapError("ordering longer than ground cap");
  std::vector<bool> seen(n, false);
  for (int e : seq_) {
    if (e < 0 || e >= n || seen[e]) {
      throw InvalidInput("ordering is not a permutation of 0..n-1");
    }
    seen[e] = true;
  }
}

CyclicOrdering CyclicOrdering::Identity(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  return CyclicOrdering(std::move(seq));
}

int CyclicOrdering::at(int position) const {
  return seq_[PosMod(position, size())];
}

CyclicOrdering CyclicOrdering::Rotated(int k) const {
  std::vector<int> out(seq_.size());
  for (int p = 0; p < size(); ++p) out[p] = at(p + k);
  return CyclicOrdering(std::move(out));
}

CyclicOrdering CyclicOrdering::Reversed() const {
  return CyclicOrdering(std::vector<int>(seq_.rbegin(), seq_.rend()));
}

CyclicOrdering CyclicOrdering::Canonical() const {
  const int n = size();
  if (n == 0) return *this;
  const int zero_at = static_cast<int>(
      std::find(seq_.begin(), seq_.end(), 0) - seq_.begin());
  CyclicOrdering out = Rotated(zero_at);
  if (n >= 3 && out.seq_[1] > out.seq_[n - 1]) {
    out = out.Reversed().Rotated(n - 1);
  }
  return out;
}

Mask CyclicOrdering::WindowMask(int start_position, int length) const {
  Mask out = 0;
  for (int k = 0; k < length; ++k) out |= Mask{1} << at(start_position + k);
  return out;
}

ElementSet Window(const CyclicOrdering& sigma, int index, int length) {
  if (length < 1 || length > sigma.size()) {
    throw PreconditionError("window length " + std::to_string(length) +
                            " outside [1, " + std::to_string(sigma.size()) +
                            "]");
  }
  return {sigma.size(), sigma.WindowMask(index - 1, length)};
}

// --- t-cyclic orderings --------------------------------------------------

std::string_view ToString(Parity p) {
  return p == Parity::kOdd ? "odd" : "even";
}

Parity ParityFromString(std::string_view s) {
  if (s == "odd") return Parity::kOdd;
  if (s == "even") return Parity::kEven;
  throw InvalidInput("parity must be 'odd' or 'even'");
}

std::string_view ToString(SearchMode mode) {
  return mode == SearchMode::kProperty ? "property" : "t_cyclic";
}

SearchMode SearchModeFromString(std::string_view s) {
  if (s == "property") return SearchMode::kProperty;
  if (s == "t_cyclic" || s == "t-cyclic") return SearchMode::kTCyclic;
  throw InvalidInput("mode must be 'property' or 't_cyclic'");
}

bool SatisfiesClause(const Matroid& m, const CyclicOrdering& sigma, int t,
                     int anchor, Parity clause) {
  const int n = sigma.size();
  if (n != m.n()) throw UniverseMismatch("ordering and matroid sizes differ");
  if (t < 1 || n < t + 1) return false;
  for (int d = 0; d < n; d += 2) {
    const int s = anchor + d;
    const Mask w = sigma.WindowMask(s, t);
    if (!IsTCircuit(m, w, t)) return false;
    if (clause == Parity::kEven) {
      if (!IsTCocircuit(m, w, t)) return false;
    } else if (!IsTCocircuit(m, sigma.WindowMask(s + 1, t), t)) {
      return false;
    }
  }
  return true;
}

TCyclicResult IsTCyclicOrdering(const Matroid& m, const CyclicOrdering& sigma,
                                int t) {
  if (sigma.size() != m.n()) {
    throw UniverseMismatch("ordering and matroid sizes differ");
  }
  TCyclicResult out;
  if (t < 1) {
    out.note = "t must be positive";
    return out;
  }
  if (m.n() < t + 1) {
    out.note = "ground set has fewer than t + 1 elements";
    return out;
  }
  std::optional<int> even_anchor;
  std::optional<int> odd_anchor;
  for (int anchor : {0, 1}) {
    if (!even_anchor && SatisfiesClause(m, sigma, t, anchor, Parity::kEven)) {
      even_anchor = anchor;
    }
    if (!odd_anchor && SatisfiesClause(m, sigma, t, anchor, Parity::kOdd)) {
      odd_anchor = anchor;
    }
  }
  out.both_clauses = even_anchor && odd_anchor;
  // When both clauses hold, the clause matching the parity of t wins.
  if (even_anchor && (!odd_anchor || t % 2 == 0)) {
    out.parity = Parity::kEven;
    out.anchor = *even_anchor;
  } else if (odd_anchor) {
    out.parity = Parity::kOdd;
    out.anchor = *odd_anchor;
  }
  if (out.both_clauses) out.note = "odd and even clauses both hold";
  return out;
}

bool HasCyclicProperty(const Matroid& m, const CyclicOrdering& sigma, int t) {
  const int n = sigma.size();
  if (n != m.n()) throw UniverseMismatch("ordering and matroid sizes differ");
  if (t < 2 || t > n - 1) {
    throw PreconditionError("cyclic property needs 2 <= t <= n - 1");
  }
  for (int s = 0; s < n; ++s) {
    const Mask x = sigma.WindowMask(s, t - 1);
    if (!InSomeTSet(m.CircuitMasks(), x, t)) return false;
    if (!InSomeTSet(m.CocircuitMasks(), x, t)) return false;
  }
  return true;
}

// --- Search --------------------------------------------------------------

namespace {

enum : std::uint8_t {
  kCircuitFlag = 1,
  kCocircuitFlag = 2,
  kExtendsFlag = 4,
};

class OrderingSearch {
 public:
  OrderingSearch(const Matroid& m, int t, SearchMode mode)
      : m_(m), n_(m.n()), t_(t), mode_(mode),
        flags_(std::size_t{1} << m.n(), 0) {
    for (Mask c : m.CircuitMasks()) {
      if (Popcount(c) != t) continue;
      flags_[c] |= kCircuitFlag;
      for (Mask r = c; r != 0; r &= r - 1) flags_[c & ~(r & (~r + 1))] |= 8;
    }
    for (Mask c : m.CocircuitMasks()) {
      if (Popcount(c) != t) continue;
      flags_[c] |= kCocircuitFlag;
      for (Mask r = c; r != 0; r &= r - 1) flags_[c & ~(r & (~r + 1))] |= 16;
    }
    for (auto& f : flags_) {
      if ((f & 8) && (f & 16)) f |= kExtendsFlag;
    }
  }

  std::optional<CyclicOrdering> Run(int anchor, Parity clause) {
    anchor_ = anchor;
    clause_ = clause;
    seq_.assign(n_, -1);
    seq_[0] = 0;
    if (Extend(1, Mask{1})) return CyclicOrdering(seq_);
    return std::nullopt;
  }

 private:
  Mask Positions(int from, int to) const {
    Mask out = 0;
    for (int p = from; p <= to; ++p) out |= Mask{1} << seq_[p];
    return out;
  }

  // Checks windows that became fully determined when position p was filled.
  bool NewestWindowsOk(int p) const {
    if (mode_ == SearchMode::kProperty) {
      const int from = p - (t_ - 2);
      return from < 0 || (flags_[Positions(from, p)] & kExtendsFlag) != 0;
    }
    const int from = p - (t_ - 1);
    if (from < 0) return true;
    const Mask w = Positions(from, p);
    const bool clause_start = PosMod(from - anchor_, 2) == 0;
    if (clause_start) {
      if (!(flags_[w] & kCircuitFlag)) return false;
      if (clause_ == Parity::kEven && !(flags_[w] & kCocircuitFlag)) {
        return false;
      }
    } else if (clause_ == Parity::kOdd && !(flags_[w] & kCocircuitFlag)) {
      return false;
    }
    return true;
  }

  bool Extend(int p, Mask used) {
    if (p == n_) {
      if (n_ >= 3 && seq_[1] > seq_[n_ - 1]) return false;
      CyclicOrdering candidate(seq_);
      if (mode_ == SearchMode::kProperty) {
        return HasCyclicProperty(m_, candidate, t_);
      }
      return SatisfiesClause(m_, candidate, t_, anchor_, clause_);
    }
    for (int e = 1; e < n_; ++e) {
      if ((used >> e) & 1U) continue;
      seq_[p] = e;
      if (NewestWindowsOk(p) && Extend(p + 1, used | (Mask{1} << e))) {
        return true;
      }
    }
    seq_[p] = -1;
    return false;
  }

  const Matroid& m_;
  int n_;
  int t_;
  SearchMode mode_;
  std::vector<std::uint8_t> flags_;
  int anchor_ = 0;
  Parity clause_ = Parity::kOdd;
  std::vector<int> seq_;
};

}  // namespace

std::optional<CyclicOrdering> FindCyclicOrdering(const Matroid& m, int t,
                                                 SearchMode mode) {
  const int n = m.n();
  if (n > kMaxSearchElements) {
    throw SizeCapError("ordering search limited to " +
                       std::to_string(kMaxSearchElements) + " elements");
  }
  const bool halves_implied =
      mode == SearchMode::kTCyclic || t == 2 || n >= 6 * t - 10;
  if (mode == SearchMode::kProperty) {
    if (t < 2 || t > n - 1) return std::nullopt;
  } else if (t < 1 || n < t + 1 || n < 2 * t - 2) {
    return std::nullopt;
  }
  if (halves_implied && (n % 2 != 0 || 2 * m.rank() != n)) {
    return std::nullopt;
  }
  if (n == 0) return std::nullopt;

  OrderingSearch search(m, t, mode);
  if (mode == SearchMode::kProperty) return search.Run(0, Parity::kOdd);
  for (Parity clause : {Parity::kOdd, Parity::kEven}) {
    for (int anchor : {0, 1}) {
      if (auto found = search.Run(anchor, clause)) return found;
    }
  }
  return std::nullopt;
}

// --- Window structure certificate ---------------------------------------

WindowCertificate CertifyWindowStructure(const Matroid& m,
                                         const CyclicOrdering& sigma, int t) {
  const int n = m.n();
  if (sigma.size() != n) {
    throw UniverseMismatch("ordering and matroid sizes differ");
  }
  if (t < 3) throw PreconditionError("window certificate needs t >= 3");
  if (n < 6 * t - 10) {
    throw PreconditionError("window certificate needs n >= 6t - 10 (n = " +
                            std::to_string(n) + ", t = " + std::to_string(t) +
                            ")");
  }
  if (!HasCyclicProperty(m, sigma, t)) {
    throw PreconditionError(
        "ordering lacks the cyclic (t-1, t)-property");
  }

  WindowCertificate cert;
  cert.t = t;
  cert.case_tag = t % 2 == 1 ? "I" : "II";
  auto& report = cert.report;
  report.suite = "window-structure";
  const std::string& id = m.label();

  report.Check(n % 2 == 0, id, "ground-set-even", {m.ground_set()});

  bool circuits_unique = true;
  bool cocircuits_unique = true;
  bool local = true;
  std::vector<ElementSet> unique_witness;
  std::vector<ElementSet> co_unique_witness;
  std::vector<ElementSet> local_witness;
  for (int s = 0; s < n; ++s) {
    WindowEntry entry;
    entry.index = s + 1;
    entry.window = ElementSet(n, sigma.WindowMask(s, t - 1));
    const Mask x = entry.window.bits();
    for (Mask c : m.CircuitMasks()) {
      if (Popcount(c) == t && (x & ~c) == 0) entry.circuits.emplace_back(n, c);
    }
    for (Mask c : m.CocircuitMasks()) {
      if (Popcount(c) == t && (x & ~c) == 0) {
        entry.cocircuits.emplace_back(n, c);
      }
    }
    if (entry.circuits.size() == 1) {
      entry.circuit_extra = (entry.circuits[0] - entry.window).members()[0];
    } else if (circuits_unique) {
      circuits_unique = false;
      unique_witness = entry.circuits;
      unique_witness.insert(unique_witness.begin(), entry.window);
    }
    if (entry.cocircuits.size() == 1) {
      entry.cocircuit_extra = (entry.cocircuits[0] - entry.window).members()[0];
    } else if (cocircuits_unique) {
      cocircuits_unique = false;
      co_unique_witness = entry.cocircuits;
      co_unique_witness.insert(co_unique_witness.begin(), entry.window);
    }
    // The t-sets through a window sit inside the window widened by one on
    // each side.
    const Mask widened = sigma.WindowMask(s - 1, t + 1);
    for (const auto& c : entry.circuits) {
      if ((c.bits() & ~widened) != 0 && local) {
        local = false;
        local_witness = {entry.window, c};
      }
    }
    for (const auto& c : entry.cocircuits) {
      if ((c.bits() & ~widened) != 0 && local) {
        local = false;
        local_witness = {entry.window, c};
      }
    }
    cert.windows.push_back(std::move(entry));
  }
  report.Check(circuits_unique, id, "unique-window-circuit", unique_witness);
  report.Check(cocircuits_unique, id, "unique-window-cocircuit",
               co_unique_witness);
  report.Check(local, id, "window-sets-adjacent", local_witness);

  std::vector<bool> circuit(n);
  std::vector<bool> cocircuit(n);
  for (int s = 0; s < n; ++s) {
    const Mask w = sigma.WindowMask(s, t);
    circuit[s] = IsTCircuit(m, w, t);
    cocircuit[s] = IsTCocircuit(m, w, t);
  }
  auto window_set = [&](int s) {
    return ElementSet(n, sigma.WindowMask(s, t));
  };

  // (i) and (ii) of the appropriate case.
  std::optional<int> bad_i;
  std::optional<int> bad_ii;
  for (int s = 0; s < n; ++s) {
    const int next = (s + 1) % n;
    if (t % 2 == 1) {
      if (circuit[s] == cocircuit[s] && !bad_i) bad_i = s;
      if (circuit[s] != cocircuit[next] && !bad_ii) bad_ii = s;
    } else {
      if (circuit[s] == circuit[next] && !bad_i) bad_i = s;
      if (circuit[s] != cocircuit[s] && !bad_ii) bad_ii = s;
    }
  }
  const std::string prefix = t % 2 == 1 ? "odd-t-" : "even-t-";
  report.Check(!bad_i, id,
               prefix + (t % 2 == 1 ? "circuit-xor-cocircuit"
                                    : "alternating-circuits"),
               bad_i ? std::vector<ElementSet>{window_set(*bad_i),
                                               window_set(*bad_i + 1)}
                     : std::vector<ElementSet>{});
  report.Check(!bad_ii, id,
               prefix + (t % 2 == 1 ? "circuit-iff-next-cocircuit"
                                    : "circuit-iff-cocircuit"),
               bad_ii ? std::vector<ElementSet>{window_set(*bad_ii),
                                                window_set(*bad_ii + 1)}
                      : std::vector<ElementSet>{});

  // (iii): circuit windows are closed under shifts by 2.
  std::optional<int> bad_iii;
  for (int s = 0; s < n && !bad_iii; ++s) {
    if (circuit[s] && !circuit[(s + 2) % n]) bad_iii = s;
  }
  report.Check(!bad_iii, id, prefix + "circuit-parity-class",
               bad_iii ? std::vector<ElementSet>{window_set(*bad_iii),
                                                 window_set(*bad_iii + 2)}
                       : std::vector<ElementSet>{});

  bool even_class = true;
  bool odd_class = true;
  for (int s = 0; s < n; ++s) {
    if (circuit[s] != (s % 2 == 0)) even_class = false;
    if (circuit[s] != (s % 2 == 1)) odd_class = false;
  }
  cert.circuit_window_parity = even_class ? 0 : (odd_class ? 1 : -1);
  return cert;
}

// --- Concatenations ------------------------------------------------------

std::vector<int> Concatenation::Starts(int n) const {
  std::vector<int> out;
  int pos = start;
  for (int size : sizes) {
    out.push_back(PosMod(pos, n));
    pos += size;
  }
  return out;
}

Flower MakeFlower(const CyclicOrdering& sigma, const Concatenation& c, int k) {
  const int n = sigma.size();
  int total = 0;
  for (int s : c.sizes) {
    if (s < 1) throw InvalidInput("petal sizes must be positive");
    total += s;
  }
  if (total != n) {
    throw InvalidInput("petal sizes sum to " + std::to_string(total) +
                       ", expected " + std::to_string(n));
  }
  Flower flower;
  flower.k = k;
  int pos = c.start;
  for (int s : c.sizes) {
    flower.petals.emplace_back(n, sigma.WindowMask(pos, s));
    pos += s;
  }
  return flower;
}

std::vector<Concatenation> EnumerateConcatenations(
    int n, int min_petals, int max_petals,
    const std::function<bool(int start, int size)>& accept) {
  std::vector<Concatenation> out;
  if (n <= 0) return out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t cuts = 1; cuts < limit; ++cuts) {
    const int m = std::popcount(cuts);
    if (m < min_petals || m > max_petals) continue;
    std::vector<int> positions;
    for (std::uint64_t c = cuts; c != 0; c &= c - 1) {
      positions.push_back(std::countr_zero(c));
    }
    Concatenation conc;
    conc.start = positions.front();
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const int begin = positions[i];
      const int end = i + 1 < m ? positions[i + 1] : positions[0] + n;
      ok = accept(begin, end - begin);
      conc.sizes.push_back(end - begin);
    }
    if (ok) out.push_back(std::move(conc));
  }
  return out;
}

bool IsEvenPetal(int start, int size, int t, int anchor) {
  return size % 2 == 0 && size >= t - 2 && PosMod(start - anchor, 2) == 0;
}

}  // namespace cyclomat
