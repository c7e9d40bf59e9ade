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

#include <random>

#include <gtest/gtest.h>

#include "cyclomat/errors.h"
#include "cyclomat/families.h"
#include "cyclomat/matroid.h"
#include "oracles.h"

namespace cyclomat {
namespace {

std::vector<std::vector<int>> AsLists(int n, const std::vector<Mask>& masks) {
  std::vector<std::vector<int>> out;
  for (Mask m : masks) out.push_back(ElementSet(n, m).members());
  return out;
}

GraphRep K4() {
  return GraphRep{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

TEST(ElementSetTest, BasicOperations) {
  const ElementSet a(6, {0, 2, 4});
  const ElementSet b(6, {2, 3});
  EXPECT_EQ((a | b).members(), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ((a & b).members(), (std::vector<int>{2}));
  EXPECT_EQ((a - b).members(), (std::vector<int>{0, 4}));
  EXPECT_EQ(a.complement().members(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(4));
  EXPECT_FALSE(a.contains(5));
  EXPECT_EQ(a.to_string(), "{0,2,4}");
  EXPECT_TRUE(ElementSet(6, {2}).is_subset_of(b));
}

TEST(ElementSetTest, UniverseMismatchThrows) {
  EXPECT_THROW(ElementSet(4, {1}) | ElementSet(5, {1}), UniverseMismatch);
  EXPECT_THROW(ElementSet(4, {4}), InvalidInput);
}

TEST(ElementSetTest, KSubsetEnumerationMatchesBinomial) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      int count = 0;
      ForEachKSubset(n, k, [&](Mask) { ++count; });
      EXPECT_EQ(count, static_cast<int>(oracle::SubsetsOfSize(n, k).size()));
    }
  }
}

TEST(MatroidTest, RejectsBadFamilies) {
  EXPECT_THROW(Matroid::FromBases(3, {}, "x"), InvalidInput);
  EXPECT_THROW(Matroid::FromBases(3, {0b011, 0b001}, "x"), InvalidInput);
  EXPECT_THROW(Matroid::FromBases(3, {0b1000}, "x"), InvalidInput);
  EXPECT_THROW(Matroid::FromBases(21, {0}, "x"), SizeCapError);
}

TEST(MatroidTest, UniformRanks) {
  const Matroid u = Uniform(2, 4);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_EQ(u.bases().size(), 6u);
  for (Mask x = 0; x < 16; ++x) {
    EXPECT_EQ(u.RankOf(x), std::min(oracle::Bits(x), 2));
  }
  EXPECT_EQ(Circuits(u).size(), 4u);
}

TEST(MatroidTest, CompleteGraphHasSixteenSpanningTrees) {
  const GraphRep g = K4();
  const Matroid m = FromGraph(g, "K4");
  EXPECT_EQ(m.bases().size(), 16u);
  EXPECT_EQ(m.bases(), oracle::GraphBases(4, g.edges));
  EXPECT_EQ(m.rank(), 3);
}

TEST(MatroidTest, WheelThreeAgreesAcrossRepresentations) {
  const GraphRep g = WheelGraph(3);
  const Matroid via_graph = FromGraph(g);
  const std::vector<Mask> bases = oracle::GraphBases(4, g.edges);
  const Matroid via_bases = FromBases(BasesRep{6, AsLists(6, bases)});
  const Matroid via_circuits =
      FromCircuits(CircuitsRep{6, AsLists(6, oracle::CircuitsFromBases(6, bases))});
  for (Mask x = 0; x < 64; ++x) {
    const int want = oracle::RankFromBases(bases, x);
    EXPECT_EQ(via_graph.RankOf(x), want);
    EXPECT_EQ(via_bases.RankOf(x), want);
    EXPECT_EQ(via_circuits.RankOf(x), want);
  }
}

TEST(MatroidTest, CircuitsRejectNonAntichain) {
  EXPECT_THROW(FromCircuits(CircuitsRep{3, {{0, 1}, {0, 1, 2}}}), InvalidInput);
}

TEST(MatroidTest, LinearBasesMatchDeterminantOracle) {
  std::mt19937 rng(7);
  for (std::int64_t p : {2, 3, 5, 1009}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
      std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(7));
      for (auto& row : rows) {
        for (auto& v : row) v = entry(rng);
      }
      const std::vector<Mask> want = oracle::LinearBases(rows, p);
      if (want.empty()) continue;  // not full row rank
      LinearRep rep;
      rep.p = p;
      rep.rows = 3;
      rep.cols = 7;
      for (const auto& row : rows) rep.entries.insert(rep.entries.end(), row.begin(), row.end());
      EXPECT_EQ(FromLinear(rep).bases(), want) << "p=" << p;
    }
  }
}

TEST(MatroidTest, LinearRejectsNonPrime) {
  LinearRep rep;
  rep.p = 4;
  rep.rows = 1;
  rep.cols = 1;
  rep.entries = {1};
  EXPECT_THROW(FromLinear(rep), InvalidInput);
  EXPECT_TRUE(IsPrime(1009));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(91));
}

TEST(MatroidTest, CircuitsAndCocircuitsMatchOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = oracle::RandomLinear(rng, 3, 7, 3);
    EXPECT_EQ(m.CircuitMasks(), oracle::CircuitsFromBases(7, m.bases()));
    EXPECT_EQ(m.CocircuitMasks(),
              oracle::CircuitsFromBases(7, oracle::ComplementBases(7, m.bases())));
  }
}

// Rank axioms and duality on random linear and graphic matroids.
TEST(MatroidProperty, RankAxiomsAndDuality) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = trial % 2 ? oracle::RandomLinear(rng, 3, 8, 2)
                                : FromGraph(oracle::RandomGraph(rng, 5, 8));
    const int n = m.n();
    const Mask full = FullMask(n);
    const Matroid d = Dual(m);
    EXPECT_EQ(Dual(d), m);
    EXPECT_EQ(d.rank(), n - m.rank());
    for (Mask x = 0; x <= full; ++x) {
      const int rx = m.RankOf(x);
      EXPECT_LE(rx, oracle::Bits(x));
      EXPECT_EQ(rx, oracle::RankFromBases(m.bases(), x));
      EXPECT_EQ(d.RankOf(x), m.CorankOf(x));
      for (int e = 0; e < n; ++e) {
        const Mask xe = x | (Mask{1} << e);
        EXPECT_GE(m.RankOf(xe), rx);
        EXPECT_LE(m.RankOf(xe), rx + 1);
      }
    }
    EXPECT_FALSE(FindSubmodularityViolation(m).has_value());
    EXPECT_TRUE(ValidateAxioms(m));
  }
}

TEST(MatroidProperty, SubmodularityAgreesWithExchange) {
  std::mt19937 rng(5);
  int non_matroids = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + trial % 3;
    const Matroid m = Matroid::FromBases(n, oracle::RandomFamily(rng, n, 2 + trial % 2), "f");
    const bool exchange = ValidateAxioms(m);
    EXPECT_EQ(exchange, !FindSubmodularityViolation(m).has_value());
    non_matroids += exchange ? 0 : 1;
  }
  EXPECT_GT(non_matroids, 0);
}

TEST(MatroidTest, ExchangeViolationWitness) {
  // {01, 23} on 4 elements: 0 has no partner in {2, 3}.
  const Matroid m = Matroid::FromBases(4, {0b0011, 0b1100}, "bad");
  const auto v = FindExchangeViolation(m);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->b1.contains(v->x));
  EXPECT_FALSE(v->b2.contains(v->x));
  EXPECT_THROW(ValidateAxioms(Uniform(3, 13)), SizeCapError);
}

TEST(MatroidTest, ClosureAndCoclosure) {
  const Matroid m = FromGraph(K4());
  const ElementSet triangle(6, {0, 1, 3});  // edges 01, 02, 12
  EXPECT_EQ(Closure(m, ElementSet(6, {0, 1})), triangle);
  for (Mask x = 0; x < 64; ++x) {
    const ElementSet s(6, x);
    EXPECT_EQ(Closure(m, Closure(m, s)), Closure(m, s));
    EXPECT_TRUE(s.is_subset_of(Coclosure(m, s)));
  }
}

// Deletion keeps bases avoiding the deleted set (when it is not a coloop);
// contraction of an independent C keeps B - C for bases B containing C.
TEST(MatroidProperty, MinorsMatchBasisOracle) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = oracle::RandomLinear(rng, 3, 7, 5);
    const int n = m.n();
    const int e = trial % n;
    const ElementSet del(n, {e});
    const MinorResult deleted = Minor(m, del, ElementSet(n));
    ASSERT_EQ(deleted.matroid.n(), n - 1);
    for (Mask x = 0; x < (Mask{1} << (n - 1)); ++x) {
      Mask orig = 0;
      for (int j = 0; j < n - 1; ++j) {
        if (x >> j & 1) orig |= Mask{1} << deleted.relabel[j];
      }
      EXPECT_EQ(deleted.matroid.RankOf(x), m.RankOf(orig));
    }
    const MinorResult contracted = Minor(m, ElementSet(n), del);
    for (Mask x = 0; x < (Mask{1} << (n - 1)); ++x) {
      Mask orig = 0;
      for (int j = 0; j < n - 1; ++j) {
        if (x >> j & 1) orig |= Mask{1} << contracted.relabel[j];
      }
      EXPECT_EQ(contracted.matroid.RankOf(x),
                m.RankOf(orig | del.bits()) - m.RankOf(del.bits()));
    }
  }
  EXPECT_THROW(Minor(Uniform(1, 2), ElementSet(2, {0}), ElementSet(2, {0})),
               PreconditionError);
  EXPECT_TRUE(Minor(Uniform(1, 2), ElementSet(2, {0, 1}), ElementSet(2)).empty);
}

TEST(MatroidTest, DirectSumRanksAdd) {
  const Matroid a = Uniform(1, 2);
  const Matroid b = Uniform(2, 3);
  const Matroid s = DirectSum(a, b);
  EXPECT_EQ(s.n(), 5);
  for (Mask x = 0; x < 32; ++x) {
    EXPECT_EQ(s.RankOf(x), a.RankOf(x & 3) + b.RankOf(x >> 2));
  }
}

}  // namespace
}  // namespace cyclomat
