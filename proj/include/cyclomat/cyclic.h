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

#ifndef CYCLOMAT_CYCLIC_H_
#define CYCLOMAT_CYCLIC_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomat/connectivity.h"
#include "cyclomat/matroid.h"
#include "cyclomat/report.h"

namespace cyclomat {

inline constexpr int kMaxSearchElements = 16;

// A cyclic ordering of {0, ..., n-1}. Positions are 0-based and taken mod n.
//
// Index convention: the conventional 1-based index i corresponds to
// stored position anchor + i - 1. Checks that depend on the parity of i take
// an explicit anchor (0 or 1).
class CyclicOrdering {
 public:
  CyclicOrdering() = default;
  // Throws InvalidInput unless `seq` is a permutation of {0, ..., n-1}.
  explicit CyclicOrdering(std::vector<int> seq);
  static CyclicOrdering Identity(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  int at(int position) const;

  // Element at position p of the result is at(p + k).
  CyclicOrdering Rotated(int k) const;
  CyclicOrdering Reversed() const;
  // Rotated so element 0 comes first, then reflected if needed so that
  // seq[1] < seq[n-1].
  CyclicOrdering Canonical() const;
  bool IsCanonical() const { return *this == Canonical(); }

  Mask WindowMask(int start_position, int length) const;

  friend bool operator==(const CyclicOrdering&,
                         const CyclicOrdering&) = default;

 private:
  std::vector<int> seq_;
};

// {e_i, ..., e_{i+len-1}} with 1-based i relative to stored position 0.
// Throws PreconditionError unless 1 <= len <= n.
ElementSet Window(const CyclicOrdering& sigma, int index, int length);

enum class Parity { kOdd, kEven };

std::string_view ToString(Parity p);
Parity ParityFromString(std::string_view s);

struct TCyclicResult {
  std::optional<Parity> parity;  // nullopt: not a t-cyclic ordering
  int anchor = 0;
  // Both the odd and the even clause hold; parity then follows the parity
  // of t.
  bool both_clauses = false;
  std::string note;
};

// Whether, for every index i odd relative to `anchor`, the t-window at i is
// a circuit and the next one a cocircuit (Parity::kOdd) or the t-window at i
// is both (Parity::kEven).
bool SatisfiesClause(const Matroid& m, const CyclicOrdering& sigma, int t,
                     int anchor, Parity clause);

// Tries both anchors and both clauses; prefers anchor 0.
TCyclicResult IsTCyclicOrdering(const Matroid& m, const CyclicOrdering& sigma,
                                int t);

// Every t-1 consecutive elements lie in a t-circuit and in a t-cocircuit.
// Throws PreconditionError unless 2 <= t <= n - 1.
bool HasCyclicProperty(const Matroid& m, const CyclicOrdering& sigma, int t);

enum class SearchMode { kProperty, kTCyclic };

std::string_view ToString(SearchMode mode);
SearchMode SearchModeFromString(std::string_view s);

// Backtracking search for a canonical ordering with the requested property.
// Applies the necessary conditions |E| even and r = |E|/2 before searching
// whenever they are implied (always for kTCyclic; for kProperty when t == 2
// or n >= 6t - 10). Throws SizeCapError above kMaxSearchElements.
std::optional<CyclicOrdering> FindCyclicOrdering(const Matroid& m, int t,
                                                 SearchMode mode);

// --- Window structure certificate ---------------------------------------

struct WindowEntry {
  int index = 0;
  ElementSet window;                   // the t-1 consecutive elements
  std::vector<ElementSet> circuits;    // t-circuits containing the window
  std::vector<ElementSet> cocircuits;  // t-cocircuits containing the window
  std::optional<int> circuit_extra;    // the element added, when unique
  std::optional<int> cocircuit_extra;
};

struct WindowCertificate {
  int t = 0;
  std::string case_tag;  // "I" for odd t, "II" for even t
  // Parity of the stored start positions whose t-window is a circuit; -1 if
  // circuit windows do not occupy exactly one parity class.
  int circuit_window_parity = -1;
  std::vector<WindowEntry> windows;
  VerificationReport report;
};

// Certifies uniqueness of the t-circuit and t-cocircuit through every window
// of t-1 consecutive elements, and the parity arrangement of t-element
// circuit/cocircuit windows. Requires t >= 3, n >= 6t - 10 and the cyclic
// (t-1, t)-property; throws PreconditionError otherwise. Violations are
// recorded in the report rather than thrown.
WindowCertificate CertifyWindowStructure(const Matroid& m,
                                         const CyclicOrdering& sigma, int t);

// --- Concatenations ------------------------------------------------------

// Consecutive runs of an ordering: petal i has sizes[i] elements; the first
// petal begins at stored position `start`.
struct Concatenation {
  int start = 0;
  std::vector<int> sizes;

  // Stored start position of each petal.
  std::vector<int> Starts(int n) const;
};

Flower MakeFlower(const CyclicOrdering& sigma, const Concatenation& c, int k);

// All concatenations with min_petals <= m <= max_petals petals whose every
// petal satisfies accept(start_position, size). Each cyclic cut set is
// produced once, starting from its smallest cut position.
std::vector<Concatenation> EnumerateConcatenations(
    int n, int min_petals, int max_petals,
    const std::function<bool(int start, int size)>& accept);

// Even petals: size even, size >= t - 2, starting at an odd index (relative
// to `anchor`).
bool IsEvenPetal(int start, int size, int t, int anchor);

}  // namespace cyclomat

#endif  // CYCLOMAT_CYCLIC_H_
