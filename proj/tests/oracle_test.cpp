#include <gtest/gtest.h>

#include "dpfd/canonical.hpp"
#include "dpfd/io.hpp"
#include "dpfd/oracle.hpp"
#include "dpfd/relations.hpp"
#include "dpfd/strong_pfd.hpp"
#include "test_support.hpp"

namespace dpfd {
namespace {

using testing::C3;
using testing::CodeOf;
using testing::K;
using testing::P2;

TEST(BruteForce, SquareOfPath) {
  Digraph g = testing::Strong(P2(), P2());
  Factorization f = BruteForceStrongPfd(g);
  EXPECT_TRUE(SameFactorMultiset(f.factors, {P2(), P2()}));
  EXPECT_TRUE(ReconstructsExactly(g, f));
}

TEST(BruteForce, CycleIsPrime) {
  Factorization f = BruteForceStrongPfd(C3());
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0], C3());
}

TEST(BruteForce, K4) {
  Factorization f = BruteForceStrongPfd(K(4));
  EXPECT_TRUE(SameFactorMultiset(f.factors, {K(2), K(2)}));
  EXPECT_TRUE(ReconstructsExactly(K(4), f));
}

TEST(BruteForce, ThreeFactors) {
  Digraph g = testing::Strong(testing::Strong(P2(), C3()), P2());
  OracleConfig cfg;
  cfg.max_vertices = 12;
  Factorization f = BruteForceStrongPfd(g, cfg);
  EXPECT_TRUE(SameFactorMultiset(f.factors, {P2(), P2(), C3()}));
  EXPECT_TRUE(ReconstructsExactly(g, f));
}

TEST(BruteForce, Limits) {
  EXPECT_EQ(CodeOf([] { BruteForceStrongPfd(DirectedPath(11)); }),
            ErrorCode::kSizeLimitExceeded);
  EXPECT_EQ(CodeOf([] { BruteForceStrongPfd(Digraph::Build(2, {})); }),
            ErrorCode::kNotConnected);
  OracleConfig instant;
  instant.time_budget = std::chrono::milliseconds(0);
  instant.max_vertices = 64;
  std::vector<Digraph> f{C3(), C3(), C3()};
  // 27 vertices with a zero budget: must give up rather than run.
  EXPECT_EQ(CodeOf([&] { BruteForceStrongPfd(StrongProduct(f).graph, instant); }),
            ErrorCode::kTimeBudgetExceeded);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(EnumerateConnectedDigraphs(1).size(), 1u);
  auto two = EnumerateConnectedDigraphs(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(IsIsomorphic(two[0], P2()) || IsIsomorphic(two[1], P2()));
  EXPECT_EQ(CodeOf([] { EnumerateConnectedDigraphs(6); }), ErrorCode::kSizeLimitExceeded);
}

// Filter-then-canonicalize (library) against canonicalize-then-filter over
// ordered-pair bitmasks with permutation minimization (test side).
TEST(Enumerate, CountsAgreeWithIndependentPass) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t expected = testing::naive::CountConnectedDigraphs(n);
    EXPECT_EQ(EnumerateConnectedDigraphs(n).size(), expected) << "n=" << n;
  }
  // Frozen after the cross-check above.
  EXPECT_EQ(EnumerateConnectedDigraphs(3).size(), 13u);
  EXPECT_EQ(EnumerateConnectedDigraphs(4).size(), 199u);
}

TEST(Enumerate, RepresentativesArePairwiseNonIsomorphic) {
  auto all = EnumerateConnectedDigraphs(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(IsConnected(all[i]));
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      EXPECT_FALSE(IsIsomorphic(all[i], all[j]));
    }
  }
}

TEST(Generators, Deterministic) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    EXPECT_EQ(SerializeEdgeList(RandomThinDigraph(3, 12, seed)),
              SerializeEdgeList(RandomThinDigraph(3, 12, seed)));
    EXPECT_EQ(SerializeEdgeList(RandomPrimeDigraph(2, 6, seed)),
              SerializeEdgeList(RandomPrimeDigraph(2, 6, seed)));
    SplitMix64 a(seed), b(seed);
    EXPECT_EQ(RandomConnectedDigraph(20, a), RandomConnectedDigraph(20, b));
  }
}

TEST(Generators, Postconditions) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph thin = RandomThinDigraph(2, 12, seed);
    EXPECT_TRUE(IsThin(thin));
    EXPECT_TRUE(IsConnected(thin));
    Digraph prime = RandomPrimeDigraph(2, 6, seed);
    EXPECT_EQ(StrongPfd(prime).factors.size(), 1u);
    SplitMix64 rng(seed);
    Digraph sym = RandomConnectedDigraph(10, rng, {.symmetric = true});
    for (const auto& [u, v] : sym.arcs()) EXPECT_TRUE(sym.has_arc(v, u));
  }
}

TEST(Generators, ProductInstance) {
  ProductInstance inst = RandomProductInstance(3, 2, 4, 5);
  ASSERT_EQ(inst.factors.size(), 3u);
  std::size_t n = 1;
  for (const Digraph& f : inst.factors) n *= f.order();
  EXPECT_EQ(inst.graph.order(), n);
  EXPECT_TRUE(IsIsomorphic(inst.graph, StrongProduct(inst.factors).graph));
}

}  // namespace
}  // namespace dpfd
