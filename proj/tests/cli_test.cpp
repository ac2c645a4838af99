#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dpfd/canonical.hpp"
#include "dpfd/io.hpp"
#include "dpfd/oracle.hpp"
#include "test_support.hpp"

namespace dpfd {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dpfd_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string WriteGraph(const std::string& name, const Digraph& g) {
    return Write(name, SerializeEdgeList(g));
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "dpfd");
    return cli::Main(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, FactorStrongFixtureGivesTwoBlocks) {
  std::string g = WriteGraph("g.txt", testing::Strong(testing::P2(), testing::C3()));
  ASSERT_EQ(Run({"factor", g}), cli::kOk) << err_.str();
  Factorization f = ParseFactorization(out_.str());
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_TRUE(SameFactorMultiset(f.factors, {testing::P2(), testing::C3()}));
}

TEST_F(CliTest, FactorThenProductIsIsomorphic) {
  SplitMix64 rng(97);
  Digraph g = testing::Strong(testing::Strong(testing::P2(), testing::C3()), testing::K(2));
  g = Relabel(g, RandomPermutation(g.order(), rng));
  std::string in = WriteGraph("g.txt", g);
  std::string fdir = (dir_ / "factors").string();
  ASSERT_EQ(Run({"factor", in, "--out-dir", fdir}), cli::kOk) << err_.str();
  std::vector<std::string> args{"product", "--kind", "strong"};
  for (int i = 0; i < 3; ++i) args.push_back(fdir + "/factor_" + std::to_string(i) + ".txt");
  std::string prod = (dir_ / "prod.txt").string();
  args.push_back("-o");
  args.push_back(prod);
  ASSERT_EQ(Run(args), cli::kOk) << err_.str();
  EXPECT_EQ(Run({"iso", in, prod}), cli::kOk) << out_.str();
}

TEST_F(CliTest, IsoOnRelabeledCopy) {
  SplitMix64 rng(101);
  Digraph g = RandomConnectedDigraph(12, rng);
  std::string a = WriteGraph("a.txt", g);
  std::string b = WriteGraph("b.txt", Relabel(g, RandomPermutation(12, rng)));
  EXPECT_EQ(Run({"iso", a, b}), cli::kOk);
  std::string c = WriteGraph("c.txt", DirectedPath(12));
  EXPECT_EQ(Run({"iso", a, c}), cli::kFailure);
}

TEST_F(CliTest, SkeletonOnNonThinPointsToQuotient) {
  std::string g = WriteGraph("g.txt", testing::Strong(testing::P2(), testing::K(2)));
  EXPECT_EQ(Run({"skeleton", g}), cli::kFailure);
  EXPECT_NE(err_.str().find("quotient"), std::string::npos) << err_.str();
}

TEST_F(CliTest, SkeletonWithWitnesses) {
  std::string g = WriteGraph("g.txt", testing::Strong(testing::P2(), testing::P2()));
  ASSERT_EQ(Run({"skeleton", g, "--witnesses"}), cli::kOk);
  EXPECT_EQ(out_.str(), "4 4\n0 1\n0 2\n1 3\n2 3\n---\n0 3 D1 z=1 plus=2 minus=1\n");
  std::string pruned = out_.str();
  ASSERT_EQ(Run({"skeleton", g, "--witnesses", "--exhaustive-z"}), cli::kOk);
  EXPECT_EQ(out_.str(), pruned);
}

TEST_F(CliTest, Quotient) {
  std::string g = WriteGraph("g.txt", testing::Strong(testing::P2(), testing::K(2)));
  ASSERT_EQ(Run({"quotient", g}), cli::kOk);
  EXPECT_EQ(out_.str(), "2 1\n0 1\n---\n# class multiplicity members\n0 2 0 1\n1 2 2 3\n");
}

TEST_F(CliTest, ProductWritesCoordinates) {
  std::string a = WriteGraph("a.txt", testing::P2());
  ASSERT_EQ(Run({"product", "--kind", "cartesian", a, a}), cli::kOk);
  EXPECT_EQ(out_.str(), "4 4\n0 1\n0 2\n1 3\n2 3\n---\n0 0 0\n1 0 1\n2 1 0\n3 1 1\n");
}

TEST_F(CliTest, JsonMirror) {
  std::string g = WriteGraph("g.txt", testing::Strong(testing::P2(), testing::P2()));
  ASSERT_EQ(Run({"factor", g, "--json"}), cli::kOk);
  const std::string s = out_.str();
  EXPECT_EQ(s.rfind("{\"n\":4,\"arcs\":[[0,1],[0,2],[0,3],[1,3],[2,3]],\"factors\":[", 0), 0u)
      << s;
  EXPECT_NE(s.find("\"coords\":{\"0\":["), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministic) {
  for (std::string model : {"thin", "prime", "product"}) {
    ASSERT_EQ(Run({"gen", "--model", model, "--n", "2-4", "--seed", "7", "--count", "3"}),
              cli::kOk)
        << err_.str();
    std::string first = out_.str();
    ASSERT_EQ(Run({"gen", "--model", model, "--n", "2-4", "--seed", "7", "--count", "3"}),
              cli::kOk);
    EXPECT_EQ(out_.str(), first);
    EXPECT_FALSE(first.empty());
  }
}

TEST_F(CliTest, OracleFactorMirrorsFactor) {
  std::string g = WriteGraph("g.txt", testing::Strong(testing::P2(), testing::C3()));
  ASSERT_EQ(Run({"oracle-factor", g}), cli::kOk);
  Factorization f = ParseFactorization(out_.str());
  EXPECT_TRUE(SameFactorMultiset(f.factors, {testing::P2(), testing::C3()}));
  EXPECT_EQ(Run({"oracle-factor", g, "--max-n", "4"}), cli::kFailure);
}

TEST_F(CliTest, Dot) {
  std::string g = WriteGraph("g.txt", testing::P2());
  ASSERT_EQ(Run({"dot", g}), cli::kOk);
  EXPECT_EQ(out_.str(), "digraph G {\n  0;\n  1;\n  0 -> 1;\n}\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Run({}), cli::kUsage);
  EXPECT_EQ(Run({"factor"}), cli::kUsage);
  EXPECT_EQ(Run({"factor", (dir_ / "missing.txt").string()}), cli::kUsage);
  EXPECT_EQ(Run({"frobnicate"}), cli::kUsage);
  EXPECT_EQ(Run({"gen", "--model", "prime", "--n", "x", "--seed", "1"}), cli::kUsage);
  EXPECT_EQ(Run({"--help"}), cli::kOk);
  std::string bad = Write("bad.txt", "2 1\n0 0\n");
  EXPECT_EQ(Run({"factor", bad}), cli::kFailure);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();
  std::string disconnected = Write("d.txt", "3 1\n0 1\n");
  EXPECT_EQ(Run({"factor", disconnected}), cli::kFailure);
}

}  // namespace
}  // namespace dpfd
