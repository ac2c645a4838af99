#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpfd/digraph.hpp"
#include "dpfd/factorization.hpp"
#include "dpfd/relations.hpp"
#include "dpfd/skeleton.hpp"

namespace dpfd {

// Edge-list text:
//   n m
//   u v      (m lines, arc u -> v)
// Lines whose first non-blank character is '#' and blank lines are skipped.
// Errors carry the 1-based line: kParseError, kLoopArc, kVertexOutOfRange,
// kArityMismatch (body line count differs from m). Repeated arcs collapse.
Digraph ParseEdgeList(std::string_view text);
// Arcs sorted lexicographically, one "u v" per line, trailing newline.
std::string SerializeEdgeList(const Digraph& g);

inline constexpr std::string_view kBlockSeparator = "---";

// Splits concatenated text at lines equal to "---".
std::vector<std::string> SplitBlocks(std::string_view text);

// Factorization text:
//   k                     factor count
//   ---
//   <edge list>           k times, separated by ---
//   ---
//   v c_0 ... c_{k-1}     one line per vertex of the factored digraph
std::string SerializeFactorization(const Factorization& f);
Factorization ParseFactorization(std::string_view text,
                                 ProductKind kind = ProductKind::kStrong);

// "v c_0 ... c_{k-1}" per vertex.
std::string SerializeCoordinates(const std::vector<Coordinates>& coords);

// One line per removed arc: "x y D1 z=1 plus=2 minus=1". D2 and D5 print
// z1/z2; plus/minus give the first satisfied condition (0 if none) and are
// omitted for D5.
std::string FormatWitness(Arc arc, const DispensabilityWitness& w);
std::string SerializeWitnessLedger(
    const std::vector<std::pair<Arc, DispensabilityWitness>>& removed);

// "class multiplicity members..." per quotient vertex.
std::string SerializeMultiplicityTable(const QuotientWithMultiplicity& q);

struct DotOptions {
  // When non-empty (one tuple per vertex), arcs changing one coordinate are
  // drawn as Cartesian and the rest as non-Cartesian.
  std::vector<Coordinates> coords;
  // Drawn dashed.
  std::vector<Arc> dispensable;
  std::string name = "G";
};

std::string ExportDot(const Digraph& g, const DotOptions& options = {});

}  // namespace dpfd
