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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "cyclomat/cyclic.h"
#include "cyclomat/errors.h"
#include "cyclomat/families.h"
#include "oracles.h"

namespace cyclomat {
namespace {

// Direct restatement of the definitions over an explicit sequence.
struct OrderingOracle {
  const Matroid& m;
  std::vector<Mask> circuits;
  std::vector<Mask> cocircuits;

  explicit OrderingOracle(const Matroid& matroid)
      : m(matroid),
        circuits(oracle::CircuitsFromBases(matroid.n(), matroid.bases())),
        cocircuits(oracle::CircuitsFromBases(
            matroid.n(), oracle::ComplementBases(matroid.n(), matroid.bases()))) {}

  static Mask Win(const std::vector<int>& seq, int start, int len) {
    const int n = static_cast<int>(seq.size());
    Mask w = 0;
    for (int i = 0; i < len; ++i) w |= Mask{1} << seq[((start + i) % n + n) % n];
    return w;
  }
  static bool In(const std::vector<Mask>& f, Mask x) {
    return std::find(f.begin(), f.end(), x) != f.end();
  }

  bool Clause(const std::vector<int>& seq, int t, int anchor, bool odd) const {
    const int n = static_cast<int>(seq.size());
    for (int s = anchor; s < n + anchor; s += 2) {
      const Mask w = Win(seq, s, t);
      if (!In(circuits, w)) return false;
      if (!In(cocircuits, odd ? Win(seq, s + 1, t) : w)) return false;
    }
    return true;
  }

  bool TCyclic(const std::vector<int>& seq, int t) const {
    if (static_cast<int>(seq.size()) % 2 == 1) return false;
    for (int a : {0, 1}) {
      if (Clause(seq, t, a, true) || Clause(seq, t, a, false)) return true;
    }
    return false;
  }

  bool Property(const std::vector<int>& seq, int t) const {
    const int n = static_cast<int>(seq.size());
    for (int s = 0; s < n; ++s) {
      const Mask w = Win(seq, s, t - 1);
      bool in_circuit = false;
      bool in_cocircuit = false;
      for (Mask c : circuits) in_circuit |= oracle::Bits(c) == t && (c & w) == w;
      for (Mask c : cocircuits) in_cocircuit |= oracle::Bits(c) == t && (c & w) == w;
      if (!in_circuit || !in_cocircuit) return false;
    }
    return true;
  }

  // Existence over every ordering with element 0 first.
  std::pair<bool, bool> Exists(int t) const {
    std::vector<int> seq(m.n());
    std::iota(seq.begin(), seq.end(), 0);
    bool property = false;
    bool cyclic = false;
    do {
      property = property || Property(seq, t);
      cyclic = cyclic || TCyclic(seq, t);
    } while (!(property && cyclic) && std::next_permutation(seq.begin() + 1, seq.end()));
    return {property, cyclic};
  }
};

TEST(CyclicOrderingTest, ValidatesPermutation) {
  EXPECT_THROW(CyclicOrdering({0, 0, 1}), InvalidInput);
  EXPECT_THROW(CyclicOrdering({1, 2, 3}), InvalidInput);
  const CyclicOrdering s({2, 0, 1});
  EXPECT_EQ(s.at(-1), 1);
  EXPECT_EQ(s.at(4), 0);
}

TEST(CyclicOrderingTest, CanonicalForm) {
  const CyclicOrdering s({3, 1, 0, 2, 4});
  const CyclicOrdering c = s.Canonical();
  EXPECT_EQ(c.seq().front(), 0);
  EXPECT_LT(c.seq()[1], c.seq().back());
  EXPECT_TRUE(c.IsCanonical());
}

TEST(CyclicOrderingProperty, CanonicalInvariantUnderRotationAndReversal) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> seq(3 + trial % 10);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    const CyclicOrdering s(seq);
    const int k = static_cast<int>(rng() % 50);
    EXPECT_EQ(s.Rotated(k).Canonical(), s.Canonical());
    EXPECT_EQ(s.Reversed().Canonical(), s.Canonical());
    EXPECT_EQ(s.Rotated(k).Reversed().Canonical(), s.Canonical());
  }
}

TEST(CyclicOrderingTest, WindowIndexing) {
  const CyclicOrdering s = CyclicOrdering::Identity(6);
  EXPECT_EQ(Window(s, 1, 3).members(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(Window(s, 5, 3).members(), (std::vector<int>{0, 4, 5}));
  EXPECT_THROW(Window(s, 1, 0), PreconditionError);
  EXPECT_THROW(Window(s, 1, 7), PreconditionError);
}

TEST(TCyclicTest, FamiliesHaveDeclaredParity) {
  const auto wheel = Wheel(4);
  EXPECT_EQ(IsTCyclicOrdering(wheel.matroid, wheel.ordering, 3).parity, Parity::kOdd);
  EXPECT_TRUE(HasCyclicProperty(wheel.matroid, wheel.ordering, 3));
  const auto spike = Spike(4);
  EXPECT_EQ(IsTCyclicOrdering(spike.matroid, spike.ordering, 4).parity, Parity::kEven);
}

TEST(TCyclicTest, DirectSumOfTwoDigonsIsEvenTwoCyclic) {
  const Matroid m = DirectSum(Uniform(1, 2), Uniform(1, 2));
  const TCyclicResult r = IsTCyclicOrdering(m, CyclicOrdering::Identity(4), 2);
  EXPECT_EQ(r.parity, Parity::kEven);
}

TEST(TCyclicTest, UniformHasNoThreeCyclicOrdering) {
  const Matroid m = Uniform(3, 6);
  EXPECT_FALSE(IsTCyclicOrdering(m, CyclicOrdering::Identity(6), 3).parity);
  EXPECT_THROW(HasCyclicProperty(m, CyclicOrdering::Identity(6), 6), PreconditionError);
}

TEST(TCyclicProperty, InvarianceUnderSymmetries) {
  for (const auto& b : {Wheel(4), Whirl(5), Spike(5), Swirl(4), Wheel(6)}) {
    const auto base = IsTCyclicOrdering(b.matroid, b.ordering, b.t).parity;
    ASSERT_TRUE(base.has_value());
    for (int k = 0; k < b.matroid.n(); ++k) {
      const CyclicOrdering rotated = b.ordering.Rotated(k);
      EXPECT_TRUE(HasCyclicProperty(b.matroid, rotated, b.t));
      EXPECT_TRUE(HasCyclicProperty(b.matroid, rotated.Reversed(), b.t));
      if (k % 2 == 0) {
        EXPECT_EQ(IsTCyclicOrdering(b.matroid, rotated, b.t).parity, base);
        EXPECT_EQ(IsTCyclicOrdering(b.matroid, rotated.Reversed(), b.t).parity, base)
            << b.matroid.label();
      }
    }
  }
}

TEST(TCyclicTest, CheckerMatchesOracleOnShuffledOrderings) {
  std::mt19937 rng(31);
  for (const auto& b : {Wheel(4), Whirl(4), Spike(4), Swirl(4)}) {
    const OrderingOracle o(b.matroid);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> seq = b.ordering.seq();
      if (trial > 0) {
        const int i = static_cast<int>(rng() % seq.size());
        const int j = static_cast<int>(rng() % seq.size());
        std::swap(seq[i], seq[j]);
      }
      const CyclicOrdering s(seq);
      EXPECT_EQ(IsTCyclicOrdering(b.matroid, s, b.t).parity.has_value(),
                o.TCyclic(seq, b.t));
      EXPECT_EQ(HasCyclicProperty(b.matroid, s, b.t), o.Property(seq, b.t));
    }
  }
}

// The search must find an ordering exactly when one exists.
TEST(SearchTest, ExistenceMatchesExhaustiveOracle) {
  struct Case {
    Matroid m;
    int t;
  };
  const Matroid u12 = Uniform(1, 2);
  std::vector<Case> cases = {
      {Wheel(3).matroid, 3},       {Whirl(3).matroid, 3},
      {Wheel(4).matroid, 3},       {Whirl(4).matroid, 3},
      {Spike(3).matroid, 4},       {Swirl(3).matroid, 4},
      {Uniform(3, 6), 4},          {Uniform(3, 6), 3},
      {Uniform(2, 4), 2},          {Uniform(2, 4), 3},
      {DirectSum(u12, u12), 2},    {DirectSum(DirectSum(u12, u12), u12), 2},
      {Uniform(4, 8), 3},          {Spike(4).matroid, 4},
      {Uniform(2, 5), 3},
  };
  for (const auto& c : cases) {
    const OrderingOracle o(c.m);
    const auto [property, cyclic] = o.Exists(c.t);
    const auto found_property = FindCyclicOrdering(c.m, c.t, SearchMode::kProperty);
    const auto found_cyclic = FindCyclicOrdering(c.m, c.t, SearchMode::kTCyclic);
    EXPECT_EQ(found_property.has_value(), property) << c.m.label() << " t=" << c.t;
    EXPECT_EQ(found_cyclic.has_value(), cyclic) << c.m.label() << " t=" << c.t;
    if (found_property) {
      EXPECT_TRUE(found_property->IsCanonical());
      EXPECT_TRUE(o.Property(found_property->seq(), c.t));
    }
    if (found_cyclic) {
      EXPECT_TRUE(found_cyclic->IsCanonical());
      EXPECT_TRUE(o.TCyclic(found_cyclic->seq(), c.t));
      EXPECT_EQ(c.m.n() % 2, 0);
      EXPECT_EQ(2 * c.m.rank(), c.m.n());
      EXPECT_GE(c.m.n(), 2 * c.t - 2);
    }
  }
}

TEST(SearchTest, FindsWheelOrdering) {
  const Matroid m = Wheel(5).matroid;
  const auto s = FindCyclicOrdering(m, 3, SearchMode::kTCyclic);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(IsTCyclicOrdering(m, *s, 3).parity, Parity::kOdd);
  EXPECT_THROW(FindCyclicOrdering(Uniform(8, 17), 3, SearchMode::kTCyclic),
               SizeCapError);
}

TEST(CertificateTest, WheelIsCaseOne) {
  const auto b = Wheel(4);
  const WindowCertificate c = CertifyWindowStructure(b.matroid, b.ordering, 3);
  EXPECT_TRUE(c.report.all_passed());
  EXPECT_EQ(c.case_tag, "I");
  EXPECT_NE(c.circuit_window_parity, -1);
  ASSERT_EQ(c.windows.size(), 8u);
  for (const auto& w : c.windows) {
    EXPECT_EQ(w.circuits.size(), 1u);
    EXPECT_EQ(w.cocircuits.size(), 1u);
    EXPECT_TRUE(w.circuit_extra.has_value());
    EXPECT_TRUE(w.cocircuit_extra.has_value());
  }
}

TEST(CertificateTest, SpikeIsCaseTwo) {
  for (const auto& b : {Spike(7), Swirl(7)}) {
    const WindowCertificate c = CertifyWindowStructure(b.matroid, b.ordering, 4);
    EXPECT_TRUE(c.report.all_passed()) << b.matroid.label();
    EXPECT_EQ(c.case_tag, "II");
  }
}

TEST(CertificateTest, Preconditions) {
  const auto spike = Spike(4);
  EXPECT_THROW(CertifyWindowStructure(spike.matroid, spike.ordering, 4), PreconditionError);
  const auto wheel = Wheel(4);
  EXPECT_THROW(CertifyWindowStructure(wheel.matroid, wheel.ordering, 2), PreconditionError);
  EXPECT_THROW(CertifyWindowStructure(Uniform(4, 8), CyclicOrdering::Identity(8), 3),
               PreconditionError);
}

TEST(ConcatenationTest, EnumeratesEveryCutSetOnce) {
  for (int n = 1; n <= 10; ++n) {
    const auto all = EnumerateConcatenations(n, 1, n, [](int, int) { return true; });
    EXPECT_EQ(all.size(), (std::size_t{1} << n) - 1);
    for (const auto& c : all) {
      EXPECT_EQ(std::accumulate(c.sizes.begin(), c.sizes.end(), 0), n);
      const auto starts = c.Starts(n);
      EXPECT_EQ(*std::min_element(starts.begin(), starts.end()), c.start);
    }
  }
}

TEST(ConcatenationTest, EvenPetals) {
  EXPECT_TRUE(IsEvenPetal(0, 2, 4, 0));
  EXPECT_FALSE(IsEvenPetal(1, 2, 4, 0));
  EXPECT_TRUE(IsEvenPetal(1, 2, 4, 1));
  EXPECT_FALSE(IsEvenPetal(0, 3, 4, 0));
  EXPECT_FALSE(IsEvenPetal(0, 2, 6, 0));
  const Flower f = MakeFlower(CyclicOrdering::Identity(6), Concatenation{4, {2, 4}}, 2);
  EXPECT_EQ(f.petals[0].members(), (std::vector<int>{4, 5}));
  EXPECT_EQ(f.petals[1].members(), (std::vector<int>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace cyclomat
