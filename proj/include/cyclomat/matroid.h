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

#ifndef CYCLOMAT_MATROID_H_
#define CYCLOMAT_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cyclomat/element_set.h"

namespace cyclomat {

inline constexpr std::size_t kMaxBases = 2'000'000;
inline constexpr int kExhaustiveAxiomCap = 12;
inline constexpr std::int64_t kDefaultPrime = 1009;

// A finite matroid on {0, ..., n-1} stored by its basis family.
//
// The basis family is canonical (sorted, duplicate free). A rank table over
// all 2^n subsets is computed once at construction; circuits and cocircuits
// are enumerated lazily and cached. Copies share the immutable payload.
//
// A Matroid can be built from a family that violates basis exchange; rank is
// then still max |B & X| over the family, and ValidateAxioms reports false.
class Matroid {
 public:
  // The empty matroid.
  Matroid();

  // Throws InvalidInput for an empty family or unequal cardinalities, and
  // SizeCapError when n > kMaxElements or the family exceeds kMaxBases.
  static Matroid FromBases(int n, std::vector<Mask> bases, std::string label);

  int n() const { return data_->n; }
  int rank() const { return data_->r; }
  int corank() const { return data_->n - data_->r; }
  const std::vector<Mask>& bases() const { return data_->bases; }
  const std::string& label() const { return data_->label; }
  Matroid WithLabel(std::string label) const;

  ElementSet ground_set() const { return ElementSet::Full(n()); }

  // Mask-level queries; `x` must lie inside FullMask(n()).
  int RankOf(Mask x) const { return data_->rank_table[x]; }
  int CorankOf(Mask x) const {
    return Popcount(x) - data_->r + RankOf(~x & FullMask(data_->n));
  }
  bool IsIndependentMask(Mask x) const { return RankOf(x) == Popcount(x); }
  bool IsBasisMask(Mask x) const;

  // All circuits / cocircuits as masks, ascending.
  const std::vector<Mask>& CircuitMasks() const;
  const std::vector<Mask>& CocircuitMasks() const;

  // Equality ignores the label.
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.data_ == b.data_ ||
           (a.n() == b.n() && a.bases() == b.bases());
  }

 private:
  struct Data {
    int n = 0;
    int r = 0;
    std::vector<Mask> bases;
    std::string label;
    std::vector<std::uint8_t> rank_table;

    mutable std::once_flag circuits_once;
    mutable std::once_flag cocircuits_once;
    mutable std::vector<Mask> circuits;
    mutable std::vector<Mask> cocircuits;
  };
  explicit Matroid(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// --- Construction inputs -------------------------------------------------

struct BasesRep {
  int n = 0;
  std::vector<std::vector<int>> bases;
};

struct CircuitsRep {
  int n = 0;
  std::vector<std::vector<int>> circuits;
};

// A rows x n matrix over GF(p); column j represents element j.
struct LinearRep {
  std::int64_t p = kDefaultPrime;
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> entries;  // row-major, reduced into [0, p)

  static LinearRep FromColumns(std::int64_t p,
                               const std::vector<std::vector<std::int64_t>>&
                                   columns);
  std::int64_t at(int row, int col) const { return entries[row * cols + col]; }
};

struct GraphRep {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // element j is edges[j]
};

using MatroidRepr = std::variant<BasesRep, CircuitsRep, LinearRep, GraphRep>;

Matroid Construct(const MatroidRepr& repr, std::string label = "derived");
Matroid FromBases(const BasesRep& rep, std::string label = "derived");
Matroid FromCircuits(const CircuitsRep& rep, std::string label = "derived");
Matroid FromLinear(const LinearRep& rep, std::string label = "derived");
Matroid FromGraph(const GraphRep& rep, std::string label = "derived");

bool IsPrime(std::int64_t p);

// Rank of the column set `cols` of `rep` over GF(p).
int LinearRank(const LinearRep& rep, Mask cols);

// --- Rank, closure, duality ----------------------------------------------

int Rank(const Matroid& m, const ElementSet& x);
int Corank(const Matroid& m, const ElementSet& x);
ElementSet Closure(const Matroid& m, const ElementSet& x);
ElementSet Coclosure(const Matroid& m, const ElementSet& x);
bool IsIndependent(const Matroid& m, const ElementSet& x);

Matroid Dual(const Matroid& m);
Matroid DirectSum(const Matroid& a, const Matroid& b);

std::vector<ElementSet> Circuits(const Matroid& m);
std::vector<ElementSet> Cocircuits(const Matroid& m);
bool IsCircuit(const Matroid& m, const ElementSet& x);
bool IsCocircuit(const Matroid& m, const ElementSet& x);

// --- Minors --------------------------------------------------------------

struct MinorResult {
  Matroid matroid;
  // relabel[new_element] = original element.
  std::vector<int> relabel;
  // Set when every element was deleted or contracted.
  bool empty = false;
};

// M / contract \ remove. Throws PreconditionError if the sets overlap.
MinorResult Minor(const Matroid& m, const ElementSet& remove,
                  const ElementSet& contract);

// --- Axioms --------------------------------------------------------------

// A failed exchange: no y in b2 - b1 makes (b1 - x) + y a basis.
struct ExchangeViolation {
  ElementSet b1;
  ElementSet b2;
  int x = -1;
};

std::optional<ExchangeViolation> FindExchangeViolation(
    const Matroid& m, int cap = kExhaustiveAxiomCap);

// A failure of r(X+a) + r(X+b) >= r(X+a+b) + r(X). The rank of a family is
// max |B & X|, which is a matroid rank function iff no such triple exists.
struct SubmodularityViolation {
  ElementSet x;
  int a = -1;
  int b = -1;
};

std::optional<SubmodularityViolation> FindSubmodularityViolation(
    const Matroid& m);

// Exhaustive basis-exchange check. Throws SizeCapError above
// kExhaustiveAxiomCap elements unless `cap` is raised.
bool ValidateAxioms(const Matroid& m, int cap = kExhaustiveAxiomCap);

}  // namespace cyclomat

#endif  // CYCLOMAT_MATROID_H_
