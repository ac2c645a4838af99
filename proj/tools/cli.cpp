#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpfd/canonical.hpp"
#include "dpfd/cartesian_pfd.hpp"
#include "dpfd/error.hpp"
#include "dpfd/io.hpp"
#include "dpfd/oracle.hpp"
#include "dpfd/products.hpp"
#include "dpfd/relations.hpp"
#include "dpfd/rng.hpp"
#include "dpfd/skeleton.hpp"
#include "dpfd/strong_pfd.hpp"

namespace dpfd::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// File-system trouble after argument validation; reported like a library
// error.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoFailure("cannot write " + path.string());
}

// Graph files may carry trailing "---" blocks (coordinates, ledgers); only
// the first block is the graph.
Digraph ReadGraph(const std::string& path) {
  try {
    return ParseEdgeList(SplitBlocks(ReadFile(path)).front());
  } catch (const Error& e) {
    throw IoFailure(path + ": " + e.what());
  }
}

void Emit(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    WriteFile(out_path, text);
  }
}

Json ArcsJson(const Digraph& g) {
  Json arcs = Json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  return arcs;
}

Json FactorizationJson(const Digraph& g, const Factorization& f) {
  Json j;
  j["n"] = g.order();
  j["arcs"] = ArcsJson(g);
  j["factors"] = Json::array();
  for (const Digraph& factor : f.factors) {
    j["factors"].push_back({{"n", factor.order()}, {"arcs", ArcsJson(factor)}});
  }
  j["coords"] = Json::object();
  for (std::size_t v = 0; v < f.coords.size(); ++v) {
    j["coords"][std::to_string(v)] = f.coords[v];
  }
  return j;
}

void EmitFactorization(const Digraph& g, const Factorization& f, bool json,
                       const std::string& out_dir, std::ostream& out) {
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      WriteFile(fs::path(out_dir) / ("factor_" + std::to_string(i) + ".txt"),
                SerializeEdgeList(f.factors[i]));
    }
    WriteFile(fs::path(out_dir) / "coords.txt", SerializeCoordinates(f.coords));
    if (json) WriteFile(fs::path(out_dir) / "factorization.json",
                        FactorizationJson(g, f).dump() + "\n");
    return;
  }
  if (json) {
    out << FactorizationJson(g, f).dump() << "\n";
  } else {
    out << SerializeFactorization(f);
  }
}

// "5" or "4-8".
std::pair<std::size_t, std::size_t> ParseRange(const std::string& s) {
  auto dash = s.find('-');
  std::size_t lo = std::stoul(s.substr(0, dash));
  std::size_t hi = dash == std::string::npos ? lo : std::stoul(s.substr(dash + 1));
  return {lo, hi};
}

std::string RangeCheck(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto dash = s.find('-');
    std::stoul(s.substr(0, dash), &pos);
    if (pos != s.substr(0, dash).size()) return "expected N or MIN-MAX";
    if (dash != std::string::npos) {
      std::string hi = s.substr(dash + 1);
      std::stoul(hi, &pos);
      if (pos != hi.size()) return "expected N or MIN-MAX";
    }
    auto [lo, up] = ParseRange(s);
    if (lo == 0 || up < lo) return "range must satisfy 1 <= MIN <= MAX";
  } catch (const std::exception&) {
    return "expected N or MIN-MAX";
  }
  return {};
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Strong-product prime factorization of digraphs", "dpfd"};
  app.require_subcommand(1);
  std::function<int()> run;

  const std::map<std::string, ProductKind> kinds{
      {"strong", ProductKind::kStrong}, {"cartesian", ProductKind::kCartesian}};

  // product
  std::vector<std::string> product_inputs;
  ProductKind product_kind = ProductKind::kStrong;
  std::string product_out;
  auto* product = app.add_subcommand("product", "Product of two or more digraphs");
  product->add_option("--kind", product_kind, "strong|cartesian")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  product->add_option("inputs", product_inputs, "Factor edge lists")
      ->required()->expected(2, -1)->check(CLI::ExistingFile);
  product->add_option("-o,--output", product_out, "Output file");
  product->callback([&] {
    run = [&] {
      std::vector<Digraph> factors;
      for (const auto& p : product_inputs) factors.push_back(ReadGraph(p));
      CoordGraph cg = Product(product_kind, factors);
      std::vector<Coordinates> coords;
      for (Vertex v = 0; v < cg.graph.order(); ++v) coords.push_back(cg.coords(v));
      Emit(product_out,
           SerializeEdgeList(cg.graph) + std::string(kBlockSeparator) + "\n" +
               SerializeCoordinates(coords),
           out);
      return kOk;
    };
  });

  // skeleton
  std::string skeleton_input;
  std::string skeleton_out;
  bool witnesses = false;
  bool exhaustive = false;
  auto* skeleton = app.add_subcommand("skeleton", "Cartesian skeleton of a thin digraph");
  skeleton->add_option("input", skeleton_input)->required()->check(CLI::ExistingFile);
  skeleton->add_option("-o,--output", skeleton_out, "Output file");
  skeleton->add_flag("--witnesses", witnesses, "Append the witness ledger");
  skeleton->add_flag("--exhaustive-z", exhaustive,
                     "Scan every vertex as witness candidate (debug)");
  skeleton->callback([&] {
    run = [&] {
      Digraph g = ReadGraph(skeleton_input);
      if (!IsThin(g)) {
        err << "error: " << skeleton_input
            << " is not thin (some vertices share both closed neighborhoods); "
               "run `dpfd quotient` first and take the skeleton of the quotient\n";
        return kFailure;
      }
      SkeletonResult r = CartesianSkeleton(g, SkeletonOptions{exhaustive});
      std::string text = SerializeEdgeList(r.skeleton);
      if (witnesses) {
        text += std::string(kBlockSeparator) + "\n" + SerializeWitnessLedger(r.removed);
      }
      Emit(skeleton_out, text, out);
      return kOk;
    };
  });

  // factor
  std::string factor_input;
  ProductKind factor_kind = ProductKind::kStrong;
  bool factor_json = false;
  std::string factor_dir;
  auto* factor = app.add_subcommand("factor", "Prime factor decomposition");
  factor->add_option("input", factor_input)->required()->check(CLI::ExistingFile);
  factor->add_option("--kind", factor_kind, "strong|cartesian (default strong)")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  factor->add_flag("--json", factor_json, "JSON instead of text");
  factor->add_option("--out-dir", factor_dir,
                     "Write one file per factor plus coords.txt into this directory");
  factor->callback([&] {
    run = [&] {
      Digraph g = ReadGraph(factor_input);
      Factorization f = factor_kind == ProductKind::kStrong ? StrongPfd(g) : CartesianPfd(g);
      EmitFactorization(g, f, factor_json, factor_dir, out);
      return kOk;
    };
  });

  // quotient
  std::string quotient_input;
  std::string quotient_out;
  auto* quotient = app.add_subcommand("quotient", "Quotient by S plus multiplicity table");
  quotient->add_option("input", quotient_input)->required()->check(CLI::ExistingFile);
  quotient->add_option("-o,--output", quotient_out, "Output file");
  quotient->callback([&] {
    run = [&] {
      QuotientWithMultiplicity q = Quotient(ReadGraph(quotient_input));
      Emit(quotient_out,
           SerializeEdgeList(q.quotient) + std::string(kBlockSeparator) + "\n" +
               SerializeMultiplicityTable(q),
           out);
      return kOk;
    };
  });

  // iso
  std::string iso_a, iso_b;
  std::size_t iso_max = kDefaultCanonicalCutoff;
  auto* iso = app.add_subcommand("iso", "Exit 0 iff the two digraphs are isomorphic");
  iso->add_option("a", iso_a)->required()->check(CLI::ExistingFile);
  iso->add_option("b", iso_b)->required()->check(CLI::ExistingFile);
  iso->add_option("--max-n", iso_max, "Canonical-form size cutoff")
      ->default_val(kDefaultCanonicalCutoff);
  iso->callback([&] {
    run = [&] {
      bool same = IsIsomorphic(ReadGraph(iso_a), ReadGraph(iso_b), iso_max);
      out << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? kOk : kFailure;
    };
  });

  // gen
  std::string model;
  std::string n_range;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::size_t gen_factors = 2;
  double density = 0.3;
  bool symmetric = false;
  auto* gen = app.add_subcommand("gen", "Seeded random fixtures");
  gen->add_option("--model", model, "prime|thin|product")
      ->required()->check(CLI::IsMember({"prime", "thin", "product"}));
  gen->add_option("--n", n_range, "Vertex count N or MIN-MAX (per factor for product)")
      ->required()->check(RangeCheck);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--count", count, "Number of fixtures")->check(CLI::PositiveNumber);
  gen->add_option("--factors", gen_factors, "Prime factors per product")
      ->check(CLI::Range(1, 8));
  gen->add_option("--density", density, "Extra-pair probability")->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--symmetric", symmetric, "Only symmetric arc pairs");
  gen->callback([&] {
    run = [&] {
      auto [lo, hi] = ParseRange(n_range);
      RandomDigraphOptions opts;
      opts.density = density;
      opts.symmetric = symmetric;
      SplitMix64 seeds(seed);
      std::string text;
      for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) text += std::string(kBlockSeparator) + "\n";
        const std::uint64_t s = seeds.Next();
        if (model == "thin") {
          text += SerializeEdgeList(RandomThinDigraph(lo, hi, s, opts));
        } else if (model == "prime") {
          text += SerializeEdgeList(RandomPrimeDigraph(lo, hi, s, opts));
        } else {
          ProductInstance inst = RandomProductInstance(gen_factors, lo, hi, s, opts);
          text += SerializeEdgeList(inst.graph);
          for (std::size_t k = 0; k < inst.factors.size(); ++k) {
            text += std::string(kBlockSeparator) + "\n# factor " + std::to_string(k) + "\n";
            text += SerializeEdgeList(inst.factors[k]);
          }
        }
      }
      out << text;
      return kOk;
    };
  });

  // oracle-factor
  std::string oracle_input;
  OracleConfig oracle_cfg;
  std::size_t budget_ms = 120000;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle-factor", "Brute-force strong factorization");
  oracle->add_option("input", oracle_input)->required()->check(CLI::ExistingFile);
  oracle->add_option("--max-n", oracle_cfg.max_vertices, "Refuse larger inputs")
      ->default_val(oracle_cfg.max_vertices);
  oracle->add_option("--time-budget-ms", budget_ms)->default_val(budget_ms);
  oracle->add_flag("--json", oracle_json, "JSON instead of text");
  oracle->callback([&] {
    run = [&] {
      oracle_cfg.time_budget = std::chrono::milliseconds(budget_ms);
      Digraph g = ReadGraph(oracle_input);
      EmitFactorization(g, BruteForceStrongPfd(g, oracle_cfg), oracle_json, "", out);
      return kOk;
    };
  });

  // dot
  std::string dot_input;
  bool dot_skeleton = false;
  bool dot_factor = false;
  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("input", dot_input)->required()->check(CLI::ExistingFile);
  dot->add_flag("--skeleton", dot_skeleton, "Dash dispensable arcs (thin input)");
  dot->add_flag("--factor", dot_factor,
                "Color arcs Cartesian/non-Cartesian w.r.t. the strong factorization");
  dot->callback([&] {
    run = [&] {
      Digraph g = ReadGraph(dot_input);
      DotOptions opts;
      if (dot_skeleton) {
        for (const auto& [arc, w] : CartesianSkeleton(g).removed) {
          opts.dispensable.push_back(arc);
        }
      }
      if (dot_factor) opts.coords = StrongPfd(g).coords;
      out << ExportDot(g, opts);
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::kNotThin) {
      err << "hint: run `dpfd quotient` first\n";
    }
    return kFailure;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace dpfd::cli
