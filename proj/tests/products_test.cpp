#include <gtest/gtest.h>

#include "dpfd/canonical.hpp"
#include "dpfd/oracle.hpp"
#include "dpfd/products.hpp"
#include "test_support.hpp"

namespace dpfd {
namespace {

using testing::C3;
using testing::CodeOf;
using testing::P2;
namespace naive = testing::naive;

Digraph NaiveProduct(const Digraph& a, const Digraph& b, bool strong) {
  return naive::FromMatrix(
      naive::Product(naive::Adjacency(a), naive::Adjacency(b), strong));
}

TEST(StrongProduct, UnitFactor) {
  std::vector<Digraph> f{Digraph::Build(1, {}), C3()};
  CoordGraph cg = StrongProduct(f);
  EXPECT_EQ(cg.graph, C3());
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(cg.coords(v), (Coordinates{0, v}));
}

TEST(StrongProduct, SquareOfPath) {
  Digraph expected = NaiveProduct(P2(), P2(), true);
  // (0,0)->(1,0), (0,0)->(0,1), (1,0)->(1,1), (0,1)->(1,1), (0,0)->(1,1)
  ASSERT_EQ(expected, Digraph::Build(4, {{0, 2}, {0, 1}, {2, 3}, {1, 3}, {0, 3}}));
  std::vector<Digraph> f{P2(), P2()};
  CoordGraph cg = StrongProduct(f);
  EXPECT_EQ(cg.graph, expected);
  EXPECT_EQ(cg.graph.arc_count(), 5u);
}

TEST(StrongProduct, NeighborhoodIsProductOfNeighborhoods) {
  std::vector<Digraph> f{P2(), P2()};
  CoordGraph cg = StrongProduct(f);
  EXPECT_EQ(OutNeighborhood(cg.graph, cg.vertex(Coordinates{0, 0})),
            (VertexSet{0, 1, 2, 3}));
  SplitMix64 rng(5);
  for (int round = 0; round < 50; ++round) {
    std::vector<Digraph> g{RandomConnectedDigraph(rng.UniformRange(1, 5), rng),
                           RandomConnectedDigraph(rng.UniformRange(1, 5), rng)};
    CoordGraph p = StrongProduct(g);
    for (Vertex v = 0; v < p.graph.order(); ++v) {
      Coordinates c = p.coords(v);
      std::vector<Vertex> expected;
      for (Vertex a : OutNeighborhood(g[0], c[0])) {
        for (Vertex b : OutNeighborhood(g[1], c[1])) {
          expected.push_back(p.vertex(Coordinates{a, b}));
        }
      }
      EXPECT_EQ(OutNeighborhood(p.graph, v), VertexSet::FromUnsorted(expected));
    }
  }
}

TEST(CartesianProduct, UnitFactor) {
  std::vector<Digraph> f{Digraph::Build(1, {}), C3()};
  EXPECT_EQ(CartesianProduct(f).graph, C3());
}

TEST(CartesianProduct, SquareOfPathDropsDiagonal) {
  Digraph expected = NaiveProduct(P2(), P2(), false);
  ASSERT_EQ(expected.arc_count(), 4u);
  EXPECT_EQ(testing::Cartesian(P2(), P2()), expected);
}

TEST(CartesianProduct, PathTimesCycle) {
  Digraph expected = NaiveProduct(P2(), C3(), false);
  // |E(G)|·|V(H)| + |V(G)|·|E(H)|
  ASSERT_EQ(expected.arc_count(), 1u * 3u + 2u * 3u);
  Digraph g = testing::Cartesian(P2(), C3());
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g, expected);
}

TEST(Products, MatchDefinitionOnRandomPairs) {
  SplitMix64 rng(17);
  for (int round = 0; round < 100; ++round) {
    Digraph a = RandomConnectedDigraph(rng.UniformRange(1, 6), rng, {.density = 0.5});
    Digraph b = RandomConnectedDigraph(rng.UniformRange(1, 6), rng, {.density = 0.5});
    EXPECT_EQ(testing::Strong(a, b), NaiveProduct(a, b, true));
    EXPECT_EQ(testing::Cartesian(a, b), NaiveProduct(a, b, false));
  }
}

TEST(Products, ThreeFactorsAreAssociative) {
  std::vector<Digraph> f{P2(), C3(), P2()};
  EXPECT_EQ(StrongProduct(f).graph, testing::Strong(testing::Strong(P2(), C3()), P2()));
  EXPECT_EQ(CartesianProduct(f).graph,
            testing::Cartesian(testing::Cartesian(P2(), C3()), P2()));
}

TEST(Products, EmptyListRejected) {
  std::vector<Digraph> none;
  EXPECT_EQ(CodeOf([&] { StrongProduct(none); }), ErrorCode::kEmptyFactorList);
  EXPECT_EQ(CodeOf([&] { CartesianProduct(none); }), ErrorCode::kEmptyFactorList);
}

TEST(Layer, IsomorphicToFactor) {
  std::vector<Digraph> f{P2(), P2()};
  CoordGraph cg = StrongProduct(f);
  EXPECT_EQ(Layer(cg, 0, cg.vertex(Coordinates{0, 1})), P2());
  EXPECT_EQ(CodeOf([&] { Layer(cg, 2, 0); }), ErrorCode::kIndexOutOfRange);
}

TEST(Layer, SharedAndDisjointLayers) {
  std::vector<Digraph> f{C3(), P2(), C3()};
  CoordGraph cg = StrongProduct(f);
  for (std::size_t j = 0; j < 3; ++j) {
    for (Vertex x = 0; x < cg.graph.order(); ++x) {
      auto lx = LayerVertices(cg, j, x);
      EXPECT_EQ(Layer(cg, j, x), f[j]);
      for (Vertex y : lx) EXPECT_EQ(LayerVertices(cg, j, y), lx);
      // z differing from x outside coordinate j lies in a disjoint layer.
      for (Vertex z = 0; z < cg.graph.order(); ++z) {
        Coordinates cx = cg.coords(x), cz = cg.coords(z);
        cx[j] = cz[j] = 0;
        if (cx == cz) continue;
        auto lz = LayerVertices(cg, j, z);
        for (Vertex v : lz) {
          EXPECT_EQ(std::count(lx.begin(), lx.end(), v), 0);
        }
      }
    }
  }
}

TEST(ClassifyEdge, Examples) {
  std::vector<Digraph> f{P2(), P2()};
  CoordGraph cg = StrongProduct(f);
  Vertex v00 = cg.vertex(Coordinates{0, 0});
  Vertex v10 = cg.vertex(Coordinates{1, 0});
  Vertex v11 = cg.vertex(Coordinates{1, 1});
  EXPECT_EQ(ClassifyEdge(cg, {v00, v10}), (EdgeClass{EdgeClass::Kind::kCartesian, 0}));
  EXPECT_EQ(ClassifyEdge(cg, {v00, v11}).kind, EdgeClass::Kind::kNonCartesian);
  EXPECT_EQ(CodeOf([&] { ClassifyEdge(cg, {v11, v00}); }), ErrorCode::kArcNotPresent);
}

TEST(ClassifyEdge, CartesianProductHasOnlyCartesianArcs) {
  std::vector<Digraph> f{P2(), C3(), testing::K(3)};
  CoordGraph cg = CartesianProduct(f);
  for (const Arc& a : cg.graph.arcs()) {
    EXPECT_EQ(ClassifyEdge(cg, a).kind, EdgeClass::Kind::kCartesian);
  }
}

TEST(ProductHasArc, AgreesWithBuiltGraph) {
  std::vector<Digraph> f{P2(), C3()};
  for (ProductKind kind : {ProductKind::kStrong, ProductKind::kCartesian}) {
    CoordGraph cg = Product(kind, f);
    for (Vertex u = 0; u < cg.graph.order(); ++u) {
      for (Vertex v = 0; v < cg.graph.order(); ++v) {
        EXPECT_EQ(ProductHasArc(kind, f, cg.coords(u), cg.coords(v)), cg.graph.has_arc(u, v));
      }
    }
  }
}

}  // namespace
}  // namespace dpfd
