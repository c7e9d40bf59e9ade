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

#include "cyclomat/connectivity.h"
#include "cyclomat/errors.h"
#include "cyclomat/families.h"
#include "oracles.h"

namespace cyclomat {
namespace {

Flower Pairs(int r, int k) {
  Flower f;
  f.k = k;
  for (int i = 0; i < r; ++i) f.petals.push_back(ElementSet(2 * r, {2 * i, 2 * i + 1}));
  return f;
}

// Cyclic interval check by walking each possible start and length.
bool IntervalOracle(Mask s, int m) {
  for (int start = 0; start < m; ++start) {
    for (int len = 1; len < m; ++len) {
      Mask run = 0;
      for (int i = 0; i < len; ++i) run |= Mask{1} << ((start + i) % m);
      if (run == s) return true;
    }
  }
  return false;
}

TEST(ConnectivityTest, LambdaOfUniform) {
  const Matroid u = Uniform(2, 4);
  EXPECT_EQ(Lambda(u, ElementSet(4, {0})), 1);
  EXPECT_EQ(Lambda(u, ElementSet(4, {0, 1})), 2);
  EXPECT_EQ(Lambda(u, ElementSet(4)), 0);
}

TEST(ConnectivityProperty, LambdaSymmetricAndMatchesCoranks) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = oracle::RandomLinear(rng, 4, 8, 3);
    const Matroid d = Dual(m);
    for (Mask x = 0; x < 256; ++x) {
      const ElementSet s(8, x);
      EXPECT_EQ(Lambda(m, s), Lambda(m, s.complement()));
      EXPECT_EQ(Lambda(m, s), m.RankOf(x) + d.RankOf(x) - oracle::Bits(x));
      EXPECT_EQ(Lambda(m, s), Lambda(d, s));
    }
  }
}

TEST(ConnectivityTest, LocalConnectivity) {
  const Matroid spike = Spike(4).matroid;
  EXPECT_EQ(LocalConnectivity(spike, ElementSet(8, {0, 1}), ElementSet(8, {4, 5})), 1);
  const Matroid swirl = Swirl(4).matroid;
  EXPECT_EQ(LocalConnectivity(swirl, ElementSet(8, {0, 1}), ElementSet(8, {4, 5})), 0);
  EXPECT_EQ(LocalConnectivity(swirl, ElementSet(8, {0, 1}), ElementSet(8, {2, 3})), 1);
  EXPECT_THROW(LocalConnectivity(swirl, ElementSet(8, {0, 1}), ElementSet(8, {1, 2})),
               PreconditionError);
}

TEST(ConnectivityTest, SpikePairsFormAnemone) {
  const Matroid m = Spike(4).matroid;
  const FlowerClass c = ClassifyFlower(m, Pairs(4, 3));
  EXPECT_EQ(c.verdict, FlowerVerdict::kAnemone);
}

TEST(ConnectivityTest, SwirlPairsFormDaisy) {
  const Matroid m = Swirl(5).matroid;
  const Flower f = Pairs(5, 3);
  EXPECT_TRUE(CheckFlower(m, f));
  const FlowerClass c = ClassifyFlower(m, f);
  EXPECT_EQ(c.verdict, FlowerVerdict::kDaisy);
  EXPECT_FALSE(c.evidence.empty());
  for (const auto& e : c.evidence) EXPECT_NE(e.lambda, 2);
  EXPECT_EQ(DaisyByLocalConnectivity(m, f), FlowerVerdict::kDaisy);
  EXPECT_FALSE(DaisyByLocalConnectivity(Spike(5).matroid, f).has_value());
}

TEST(ConnectivityTest, SmallFlowersAreDegenerate) {
  const Matroid m = Swirl(3).matroid;
  EXPECT_EQ(ClassifyFlower(m, Pairs(3, 3)).verdict, FlowerVerdict::kDegenerate);
}

TEST(ConnectivityTest, WrongOrderIsNotAFlower) {
  const Matroid m = Spike(4).matroid;
  const FlowerClass c = ClassifyFlower(m, Pairs(4, 4));
  EXPECT_EQ(c.verdict, FlowerVerdict::kNotAFlower);
  EXPECT_FALSE(c.evidence.empty());
}

TEST(ConnectivityTest, PartitionValidation) {
  const Matroid m = Uniform(2, 4);
  Flower overlap{{ElementSet(4, {0, 1}), ElementSet(4, {1, 2, 3})}, 2};
  EXPECT_THROW(ValidatePartition(m, overlap), InvalidInput);
  Flower gap{{ElementSet(4, {0, 1}), ElementSet(4, {2})}, 2};
  EXPECT_THROW(ValidatePartition(m, gap), InvalidInput);
  Flower single{{ElementSet::Full(4)}, 1};
  EXPECT_TRUE(CheckFlower(m, single));
}

TEST(ConnectivityTest, PetalCapEnforced) {
  Flower f;
  f.k = 2;
  for (int i = 0; i < 17; ++i) f.petals.push_back(ElementSet(17, {i}));
  EXPECT_THROW(ClassifyFlower(Uniform(1, 17), f), SizeCapError);
}

TEST(ConnectivityProperty, CyclicIntervalMatchesOracle) {
  for (int m = 1; m <= 9; ++m) {
    for (Mask s = 1; s + 1 < (Mask{1} << m); ++s) {
      EXPECT_EQ(IsCyclicInterval(s, m), IntervalOracle(s, m)) << s << " " << m;
    }
  }
}

TEST(ConnectivityTest, VerdictNamesRoundTrip) {
  for (auto v : {FlowerVerdict::kAnemone, FlowerVerdict::kDaisy,
                 FlowerVerdict::kDegenerate, FlowerVerdict::kNotAFlower,
                 FlowerVerdict::kMixed}) {
    EXPECT_EQ(FlowerVerdictFromString(ToString(v)), v);
  }
  EXPECT_EQ(ToString(FlowerVerdict::kDegenerate), "degenerate_m_le_3");
}

}  // namespace
}  // namespace cyclomat
