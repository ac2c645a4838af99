#include <gtest/gtest.h>

#include <array>

#include "dpfd/canonical.hpp"
#include "dpfd/io.hpp"
#include "dpfd/oracle.hpp"
#include "dpfd/products.hpp"
#include "dpfd/relations.hpp"
#include "dpfd/skeleton.hpp"
#include "test_support.hpp"

namespace dpfd {
namespace {

using testing::C3;
using testing::CodeOf;
using testing::P2;
namespace naive = testing::naive;

// Strong P2 x P2 with ids (a,b) -> 2a+b.
constexpr Vertex k00 = 0, k01 = 1, k10 = 2, k11 = 3;

TEST(NCondition, SquareOfPathDiagonal) {
  Digraph g = testing::Strong(P2(), P2());
  auto m = naive::Adjacency(g);
  // N+[y] = {11} ⊂ N+[z] = {01,11} ⊂ N+[x] = all
  naive::Conds plus = naive::Conditions(m, k00, k11, k01, true);
  ASSERT_TRUE(plus.c2 && !plus.c1 && !plus.c3);
  // N-[x] = {00} ⊂ N-[z] = {00,01} ⊂ N-[y] = all
  naive::Conds minus = naive::Conditions(m, k00, k11, k01, false);
  ASSERT_TRUE(minus.c1 && !minus.c2 && !minus.c3);

  EXPECT_EQ(NConditionsOf(g, k00, k11, k01, Sign::kPlus).first(), NCondition::kCond2);
  EXPECT_EQ(NConditionsOf(g, k00, k11, k01, Sign::kMinus).first(), NCondition::kCond1);
}

TEST(NCondition, EqualNeighborhoodsExcludeAllConditions) {
  // 0 <-> 1 with common out-neighbor 2: N+[0] = N+[1].
  Digraph g = Digraph::Build(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
  for (Vertex z = 0; z < 3; ++z) {
    EXPECT_FALSE(NConditionsOf(g, 0, 1, z, Sign::kPlus).any());
  }
}

TEST(NCondition, ArcRequired) {
  EXPECT_EQ(CodeOf([] { NConditionsOf(P2(), 1, 0, 0, Sign::kPlus); }),
            ErrorCode::kArcNotPresent);
}

TEST(WeakNCondition, Examples) {
  Digraph g = testing::Strong(P2(), P2());
  auto m = naive::Adjacency(g);
  ASSERT_TRUE(naive::Weak(m, k00, k11, k10, true));
  EXPECT_TRUE(WeakNCondition(g, k00, k11, k10, Sign::kPlus));
  for (const Arc& a : g.arcs()) {
    for (Sign s : {Sign::kPlus, Sign::kMinus}) {
      EXPECT_TRUE(WeakNCondition(g, a.first, a.second, a.first, s));
    }
  }
}

TEST(WeakNCondition, StrictImpliesWeakAndMatchesDefinition) {
  SplitMix64 rng(31);
  for (int round = 0; round < 60; ++round) {
    Digraph g = RandomConnectedDigraph(rng.UniformRange(2, 7), rng, {.density = 0.5});
    auto m = naive::Adjacency(g);
    for (const auto& [x, y] : g.arcs()) {
      for (Vertex z = 0; z < g.order(); ++z) {
        for (bool plus : {true, false}) {
          Sign s = plus ? Sign::kPlus : Sign::kMinus;
          NConditions c = NConditionsOf(g, x, y, z, s);
          naive::Conds e = naive::Conditions(m, x, y, z, plus);
          EXPECT_EQ(c.cond1, e.c1);
          EXPECT_EQ(c.cond2, e.c2);
          EXPECT_EQ(c.cond3, e.c3);
          bool weak = WeakNCondition(g, x, y, z, s);
          EXPECT_EQ(weak, naive::Weak(m, x, y, z, plus));
          if (c.cond3) EXPECT_TRUE(weak);
        }
      }
    }
  }
}

TEST(Dispensability, DiagonalIsD1WithZ01) {
  Digraph g = testing::Strong(P2(), P2());
  ASSERT_EQ(naive::FirstRule(naive::Adjacency(g), k00, k11), 1);
  auto w = Dispensability(g, k00, k11);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rule, DispensabilityRule::kD1);
  EXPECT_EQ(w->z, std::optional<Vertex>(k01));
  EXPECT_EQ(w->plus.first(), NCondition::kCond2);
  EXPECT_EQ(w->minus.first(), NCondition::kCond1);
}

TEST(Dispensability, CartesianArcSurvives) {
  Digraph g = testing::Strong(P2(), P2());
  ASSERT_EQ(naive::FirstRule(naive::Adjacency(g), k00, k01), 0);
  EXPECT_FALSE(Dispensability(g, k00, k01).has_value());
  EXPECT_FALSE(Dispensability(g, k00, k10).has_value());
}

// Pruned witness search agrees with an exhaustive scan written from the
// definitions, rule for rule.
TEST(Dispensability, MatchesDefinitionOnRandomGraphs) {
  SplitMix64 rng(37);
  std::array<int, 6> seen{};
  for (int round = 0; round < 400; ++round) {
    Digraph g;
    if (round % 2 == 0) {
      g = RandomConnectedDigraph(rng.UniformRange(2, 8), rng,
                                 {.density = 0.2 + 0.6 * rng.Bernoulli(0.5)});
    } else {
      // Strong products are where D2-D5 fire.
      g = testing::Strong(RandomConnectedDigraph(rng.UniformRange(2, 3), rng),
                          RandomConnectedDigraph(rng.UniformRange(2, 4), rng));
    }
    auto m = naive::Adjacency(g);
    DispensabilityChecker checker(g);
    for (const auto& [x, y] : g.arcs()) {
      int rule = naive::FirstRule(m, x, y);
      ++seen[rule];
      auto w = checker.Dispensability(x, y);
      ASSERT_EQ(w.has_value(), rule != 0) << SerializeEdgeList(g);
      if (w) EXPECT_EQ(static_cast<int>(w->rule) + 1, rule);
      auto we = checker.Dispensability(x, y, {.exhaustive_z = true});
      EXPECT_EQ(w, we);
    }
  }
  // Every rule shows up in the sample, so each branch was exercised.
  for (int r = 0; r <= 5; ++r) EXPECT_GT(seen[r], 0) << "rule " << r;
}

TEST(Dispensability, WitnessesLieInCommonNeighborhood) {
  SplitMix64 rng(41);
  for (int round = 0; round < 100; ++round) {
    Digraph g = RandomConnectedDigraph(rng.UniformRange(2, 10), rng, {.density = 0.5});
    DispensabilityChecker checker(g);
    for (const auto& [x, y] : g.arcs()) {
      auto w = checker.Dispensability(x, y, {.exhaustive_z = true});
      if (!w) continue;
      auto cand = checker.Candidates(x, y);
      for (auto v : {w->z, w->z1, w->z2}) {
        if (v) EXPECT_TRUE(std::binary_search(cand.begin(), cand.end(), *v));
      }
    }
  }
}

TEST(Dispensability, NonCartesianArcsOfThinProductsAreDispensable) {
  SplitMix64 rng(43);
  for (int round = 0; round < 40; ++round) {
    Digraph h = RandomThinDigraph(2, 5, rng.Next());
    Digraph k = RandomThinDigraph(2, 5, rng.Next());
    std::vector<Digraph> f{h, k};
    CoordGraph cg = StrongProduct(f);
    DispensabilityChecker checker(cg.graph);
    for (const Arc& a : cg.graph.arcs()) {
      if (ClassifyEdge(cg, a).kind == EdgeClass::Kind::kNonCartesian) {
        EXPECT_TRUE(checker.Dispensability(a.first, a.second).has_value());
      }
    }
  }
}

TEST(CartesianSkeleton, SquareOfPath) {
  SkeletonResult r = CartesianSkeleton(testing::Strong(P2(), P2()));
  EXPECT_EQ(r.skeleton, testing::Cartesian(P2(), P2()));
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0].first, (Arc{k00, k11}));
}

TEST(CartesianSkeleton, PrimeCycleKeepsEverything) {
  SkeletonResult r = CartesianSkeleton(C3());
  EXPECT_EQ(r.skeleton, C3());
  EXPECT_TRUE(IsConnected(r.skeleton));
}

TEST(CartesianSkeleton, Preconditions) {
  EXPECT_EQ(CodeOf([] { CartesianSkeleton(testing::K(2)); }), ErrorCode::kNotThin);
  EXPECT_EQ(CodeOf([] { CartesianSkeleton(Digraph::Build(3, {{0, 1}})); }),
            ErrorCode::kNotConnected);
}

TEST(CartesianSkeleton, ProductIdentityOnSmallThinPairs) {
  SplitMix64 rng(47);
  for (int round = 0; round < 30; ++round) {
    Digraph h = RandomThinDigraph(2, 5, rng.Next());
    Digraph k = RandomThinDigraph(2, 5, rng.Next());
    Digraph lhs = CartesianSkeleton(testing::Strong(h, k)).skeleton;
    Digraph rhs = testing::Cartesian(CartesianSkeleton(h).skeleton,
                                     CartesianSkeleton(k).skeleton);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(CartesianSkeleton, ExhaustiveLedgerEqualsPrunedLedger) {
  SplitMix64 rng(53);
  for (int round = 0; round < 50; ++round) {
    Digraph g = RandomThinDigraph(3, 14, rng.Next(), {.density = 0.4});
    SkeletonResult a = CartesianSkeleton(g);
    SkeletonResult b = CartesianSkeleton(g, {.exhaustive_z = true});
    EXPECT_EQ(a.skeleton, b.skeleton);
    EXPECT_EQ(a.removed, b.removed);
  }
}

}  // namespace
}  // namespace dpfd
