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

#include "cyclomat/matroid.h"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

namespace cyclomat {

namespace {

void CheckGroundSize(int n) {
  if (n < 0) throw InvalidInput("negative ground set size");
  if (n > kMaxElements) {
    throw SizeCapError("ground set of size " + std::to_string(n) +
                       " exceeds the cap of " + std::to_string(kMaxElements));
  }
}

void CheckUniverse(const Matroid& m, const ElementSet& x) {
  if (x.universe_size() != m.n()) {
    throw UniverseMismatch("set over universe of size " +
                           std::to_string(x.universe_size()) +
                           " used with a matroid on " + std::to_string(m.n()) +
                           " elements");
  }
}

// rank(X) = size of a largest subset of X contained in some listed basis.
std::vector<std::uint8_t> BuildRankTable(int n, const std::vector<Mask>& bases) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(size, 0);
  for (Mask b : bases) indep[b] = 1;
  for (std::size_t s = size; s-- > 0;) {
    if (indep[s]) continue;
    Mask missing = ~static_cast<Mask>(s) & FullMask(n);
    for (; missing != 0; missing &= missing - 1) {
      if (indep[s | (missing & (~missing + 1))]) {
        indep[s] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> rank(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    const Mask x = static_cast<Mask>(s);
    if (indep[s]) {
      rank[s] = static_cast<std::uint8_t>(Popcount(x));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      best = std::max(best, rank[x & ~(rest & (~rest + 1))]);
    }
    rank[s] = best;
  }
  return rank;
}

template <typename RankFn>
std::vector<Mask> MinimalDependent(int n, RankFn&& rank) {
  std::vector<Mask> out;
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t s = 1; s < size; ++s) {
    const Mask c = static_cast<Mask>(s);
    const int k = Popcount(c);
    if (rank(c) != k - 1) continue;
    bool minimal = true;
    for (Mask rest = c; rest != 0 && minimal; rest &= rest - 1) {
      minimal = rank(c & ~(rest & (~rest + 1))) == k - 1;
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::int64_t Mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t PowMod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1;
  b = Mod(b, p);
  while (e > 0) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return result;
}

std::vector<Mask> ToMasks(int n, const std::vector<std::vector<int>>& family) {
  std::vector<Mask> out;
  out.reserve(family.size());
  for (const auto& members : family) {
    out.push_back(ElementSet(n, std::span<const int>(members)).bits());
  }
  return out;
}

// Spreads the low bits of `compact` onto the positions listed in `slots`.
Mask Spread(Mask compact, const std::vector<int>& slots) {
  Mask out = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if ((compact >> i) & 1U) out |= Mask{1} << slots[i];
  }
  return out;
}

}  // namespace

// --- Matroid -------------------------------------------------------------

Matroid::Matroid() : Matroid(FromBases(0, {Mask{0}}, "empty")) {}

Matroid Matroid::FromBases(int n, std::vector<Mask> bases, std::string label) {
  CheckGroundSize(n);
  if (bases.empty()) throw InvalidInput("basis family is empty");
  if (bases.size() > kMaxBases) {
    throw SizeCapError("basis family exceeds " + std::to_string(kMaxBases));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = Popcount(bases.front());
  for (Mask b : bases) {
    if ((b & ~FullMask(n)) != 0) {
      throw InvalidInput("basis member outside ground set");
    }
    if (Popcount(b) != r) {
      throw InvalidInput("bases of unequal cardinality");
    }
  }
  auto data = std::make_shared<Data>();
  data->n = n;
  data->r = r;
  data->rank_table = BuildRankTable(n, bases);
  data->bases = std::move(bases);
  data->label = std::move(label);
  return Matroid(std::move(data));
}

Matroid Matroid::WithLabel(std::string label) const {
  auto data = std::make_shared<Data>();
  data->n = data_->n;
  data->r = data_->r;
  data->bases = data_->bases;
  data->rank_table = data_->rank_table;
  data->label = std::move(label);
  return Matroid(std::move(data));
}

bool Matroid::IsBasisMask(Mask x) const {
  return std::binary_search(data_->bases.begin(), data_->bases.end(), x);
}

const std::vector<Mask>& Matroid::CircuitMasks() const {
  std::call_once(data_->circuits_once, [this] {
    data_->circuits =
        MinimalDependent(data_->n, [this](Mask x) { return RankOf(x); });
  });
  return data_->circuits;
}

const std::vector<Mask>& Matroid::CocircuitMasks() const {
  std::call_once(data_->cocircuits_once, [this] {
    data_->cocircuits =
        MinimalDependent(data_->n, [this](Mask x) { return CorankOf(x); });
  });
  return data_->cocircuits;
}

// --- Construction --------------------------------------------------------

bool IsPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

LinearRep LinearRep::FromColumns(
    std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns) {
  LinearRep rep;
  rep.p = p;
  rep.cols = static_cast<int>(columns.size());
  rep.rows = columns.empty() ? 0 : static_cast<int>(columns.front().size());
  rep.entries.assign(static_cast<std::size_t>(rep.rows) * rep.cols, 0);
  for (int j = 0; j < rep.cols; ++j) {
    if (static_cast<int>(columns[j].size()) != rep.rows) {
      throw InvalidInput("columns of unequal length");
    }
    for (int i = 0; i < rep.rows; ++i) {
      rep.entries[i * rep.cols + j] = Mod(columns[j][i], p);
    }
  }
  return rep;
}

int LinearRank(const LinearRep& rep, Mask cols) {
  std::vector<int> picked;
  for (Mask m = cols; m != 0; m &= m - 1) picked.push_back(std::countr_zero(m));
  const int k = static_cast<int>(picked.size());
  std::vector<std::int64_t> a(static_cast<std::size_t>(rep.rows) * k);
  for (int i = 0; i < rep.rows; ++i) {
    for (int j = 0; j < k; ++j) a[i * k + j] = rep.at(i, picked[j]);
  }
  const std::int64_t p = rep.p;
  int rank = 0;
  for (int col = 0; col < k && rank < rep.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rep.rows; ++i) {
      if (a[i * k + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < k; ++j) std::swap(a[pivot * k + j], a[rank * k + j]);
    const std::int64_t inv = PowMod(a[rank * k + col], p - 2, p);
    for (int i = rank + 1; i < rep.rows; ++i) {
      const std::int64_t f = a[i * k + col] * inv % p;
      if (f == 0) continue;
      for (int j = col; j < k; ++j) {
        a[i * k + j] = Mod(a[i * k + j] - f * a[rank * k + j], p);
      }
    }
    ++rank;
  }
  return rank;
}

Matroid FromBases(const BasesRep& rep, std::string label) {
  CheckGroundSize(rep.n);
  return Matroid::FromBases(rep.n, ToMasks(rep.n, rep.bases), std::move(label));
}

Matroid FromCircuits(const CircuitsRep& rep, std::string label) {
  CheckGroundSize(rep.n);
  std::vector<Mask> circuits = ToMasks(rep.n, rep.circuits);
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i] == 0) throw InvalidInput("empty circuit");
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && (circuits[i] & ~circuits[j]) == 0) {
        throw InvalidInput("circuit family is not an antichain");
      }
    }
  }
  const std::size_t size = std::size_t{1} << rep.n;
  std::vector<std::uint8_t> dependent(size, 0);
  for (Mask c : circuits) dependent[c] = 1;
  for (std::size_t s = 0; s < size; ++s) {
    if (!dependent[s]) continue;
    Mask missing = ~static_cast<Mask>(s) & FullMask(rep.n);
    for (; missing != 0; missing &= missing - 1) {
      dependent[s | (missing & (~missing + 1))] = 1;
    }
  }
  std::vector<Mask> bases;
  for (std::size_t s = 0; s < size; ++s) {
    if (dependent[s]) continue;
    bool maximal = true;
    Mask missing = ~static_cast<Mask>(s) & FullMask(rep.n);
    for (; missing != 0 && maximal; missing &= missing - 1) {
      maximal = dependent[s | (missing & (~missing + 1))] != 0;
    }
    if (maximal) bases.push_back(static_cast<Mask>(s));
  }
  for (Mask b : bases) {
    if (Popcount(b) != Popcount(bases.front())) {
      throw InvalidInput(
          "circuit family does not define a matroid (maximal independent "
          "sets of different sizes)");
    }
  }
  return Matroid::FromBases(rep.n, std::move(bases), std::move(label));
}

Matroid FromLinear(const LinearRep& rep, std::string label) {
  if (!IsPrime(rep.p)) {
    throw InvalidInput("modulus " + std::to_string(rep.p) + " is not prime");
  }
  CheckGroundSize(rep.cols);
  if (rep.entries.size() != static_cast<std::size_t>(rep.rows) * rep.cols) {
    throw InvalidInput("matrix entry count does not match rows x cols");
  }
  LinearRep reduced = rep;
  for (auto& v : reduced.entries) v = Mod(v, rep.p);
  const int r = LinearRank(reduced, FullMask(rep.cols));
  std::vector<Mask> bases;
  ForEachKSubset(rep.cols, r, [&](Mask s) {
    if (LinearRank(reduced, s) == r) bases.push_back(s);
  });
  return Matroid::FromBases(rep.cols, std::move(bases), std::move(label));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

bool IsForest(const GraphRep& g, Mask edges) {
  DisjointSets sets(g.vertex_count);
  for (Mask m = edges; m != 0; m &= m - 1) {
    const auto& [u, v] = g.edges[std::countr_zero(m)];
    if (!sets.Unite(u, v)) return false;
  }
  return true;
}

}  // namespace

Matroid FromGraph(const GraphRep& rep, std::string label) {
  const int n = static_cast<int>(rep.edges.size());
  CheckGroundSize(n);
  if (rep.vertex_count < 0) throw InvalidInput("negative vertex count");
  for (const auto& [u, v] : rep.edges) {
    if (u < 0 || v < 0 || u >= rep.vertex_count || v >= rep.vertex_count) {
      throw InvalidInput("edge endpoint outside vertex range");
    }
  }
  DisjointSets all(rep.vertex_count);
  int r = 0;
  for (const auto& [u, v] : rep.edges) r += all.Unite(u, v) ? 1 : 0;
  std::vector<Mask> bases;
  ForEachKSubset(n, r, [&](Mask s) {
    if (IsForest(rep, s)) bases.push_back(s);
  });
  return Matroid::FromBases(n, std::move(bases), std::move(label));
}

Matroid Construct(const MatroidRepr& repr, std::string label) {
  return std::visit(
      [&](const auto& rep) -> Matroid {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, BasesRep>) {
          return FromBases(rep, std::move(label));
        } else if constexpr (std::is_same_v<T, CircuitsRep>) {
          return FromCircuits(rep, std::move(label));
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          return FromLinear(rep, std::move(label));
        } else {
          return FromGraph(rep, std::move(label));
        }
      },
      repr);
}

// --- Rank, closure, duality ----------------------------------------------

int Rank(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  return m.RankOf(x.bits());
}

int Corank(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  return m.CorankOf(x.bits());
}

bool IsIndependent(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  return m.IsIndependentMask(x.bits());
}

ElementSet Closure(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  const int base = m.RankOf(x.bits());
  Mask out = x.bits();
  for (int e = 0; e < m.n(); ++e) {
    if (m.RankOf(x.bits() | (Mask{1} << e)) == base) out |= Mask{1} << e;
  }
  return {m.n(), out};
}

ElementSet Coclosure(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  const int base = m.CorankOf(x.bits());
  Mask out = x.bits();
  for (int e = 0; e < m.n(); ++e) {
    if (m.CorankOf(x.bits() | (Mask{1} << e)) == base) out |= Mask{1} << e;
  }
  return {m.n(), out};
}

Matroid Dual(const Matroid& m) {
  std::vector<Mask> bases;
  bases.reserve(m.bases().size());
  for (Mask b : m.bases()) bases.push_back(~b & FullMask(m.n()));
  return Matroid::FromBases(m.n(), std::move(bases), "dual(" + m.label() + ")");
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  const int n = a.n() + b.n();
  CheckGroundSize(n);
  if (a.bases().size() * b.bases().size() > kMaxBases) {
    throw SizeCapError("direct sum basis family too large");
  }
  std::vector<Mask> bases;
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) bases.push_back(x | (y << a.n()));
  }
  return Matroid::FromBases(n, std::move(bases),
                            a.label() + "+" + b.label());
}

std::vector<ElementSet> Circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (Mask c : m.CircuitMasks()) out.emplace_back(m.n(), c);
  return out;
}

std::vector<ElementSet> Cocircuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (Mask c : m.CocircuitMasks()) out.emplace_back(m.n(), c);
  return out;
}

bool IsCircuit(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  const auto& all = m.CircuitMasks();
  return std::binary_search(all.begin(), all.end(), x.bits());
}

bool IsCocircuit(const Matroid& m, const ElementSet& x) {
  CheckUniverse(m, x);
  const auto& all = m.CocircuitMasks();
  return std::binary_search(all.begin(), all.end(), x.bits());
}

// --- Minors --------------------------------------------------------------

MinorResult Minor(const Matroid& m, const ElementSet& remove,
                  const ElementSet& contract) {
  CheckUniverse(m, remove);
  CheckUniverse(m, contract);
  if (!(remove & contract).empty()) {
    throw PreconditionError("deletion and contraction sets overlap");
  }
  const Mask c = contract.bits();
  const Mask kept = FullMask(m.n()) & ~remove.bits() & ~c;
  std::vector<int> slots;
  for (Mask x = kept; x != 0; x &= x - 1) slots.push_back(std::countr_zero(x));
  const int n = static_cast<int>(slots.size());
  const int span_rank = m.RankOf(kept | c);
  const int r = span_rank - m.RankOf(c);
  std::vector<Mask> bases;
  ForEachKSubset(n, r, [&](Mask s) {
    if (m.RankOf(Spread(s, slots) | c) == span_rank) bases.push_back(s);
  });
  std::string label = "minor(" + m.label() + ")";
  return MinorResult{Matroid::FromBases(n, std::move(bases), std::move(label)),
                     std::move(slots), n == 0};
}

// --- Axioms --------------------------------------------------------------

std::optional<ExchangeViolation> FindExchangeViolation(const Matroid& m,
                                                       int cap) {
  if (m.n() > cap) {
    throw SizeCapError("exhaustive axiom check limited to " +
                       std::to_string(cap) + " elements");
  }
  const auto& bases = m.bases();
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (Mask xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
        const Mask without_x = b1 & ~(xs & (~xs + 1));
        bool exchanged = false;
        for (Mask ys = b2 & ~b1; ys != 0 && !exchanged; ys &= ys - 1) {
          exchanged = m.IsBasisMask(without_x | (ys & (~ys + 1)));
        }
        if (!exchanged) {
          return ExchangeViolation{ElementSet(m.n(), b1), ElementSet(m.n(), b2),
                                   std::countr_zero(xs)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SubmodularityViolation> FindSubmodularityViolation(
    const Matroid& m) {
  const int n = m.n();
  const Mask full = FullMask(n);
  for (Mask x = 0;; ++x) {
    const int rx = m.RankOf(x);
    for (int a = 0; a < n; ++a) {
      const Mask xa = x | (Mask{1} << a);
      if (xa == x) continue;
      const int ra = m.RankOf(xa);
      for (int b = a + 1; b < n; ++b) {
        const Mask xb = x | (Mask{1} << b);
        if (xb == x) continue;
        if (ra + m.RankOf(xb) < m.RankOf(xa | xb) + rx) {
          return SubmodularityViolation{ElementSet(n, x), a, b};
        }
      }
    }
    if (x == full) break;
  }
  return std::nullopt;
}

bool ValidateAxioms(const Matroid& m, int cap) {
  return !FindExchangeViolation(m, cap).has_value();
}

}  // namespace cyclomat
