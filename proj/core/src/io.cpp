#include "dpfd/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dpfd/error.hpp"

namespace dpfd {
namespace {

// Vertex ids are 32-bit; refuse headers that would not fit.
constexpr std::uint64_t kMaxParsedVertices = std::uint64_t{1} << 31;

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> Lines(std::string_view text, std::size_t first_line = 1) {
  std::vector<Line> lines;
  std::size_t number = first_line;
  while (!text.empty()) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool Skippable(std::string_view line) {
  auto pos = line.find_first_not_of(" \t");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::vector<std::uint64_t> Integers(const Line& line) {
  std::vector<std::uint64_t> values;
  std::string_view rest = line.text;
  while (true) {
    auto pos = rest.find_first_not_of(" \t");
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() ||
        (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t')) {
      throw Error(ErrorCode::kParseError,
                  "expected non-negative integers, got '" + std::string(line.text) + "'",
                  line.number);
    }
    values.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  }
  return values;
}

Digraph ParseEdgeListLines(const std::vector<Line>& all, std::size_t eof_line) {
  std::vector<Line> lines;
  for (const Line& l : all) {
    if (!Skippable(l.text)) lines.push_back(l);
  }
  if (lines.empty()) {
    throw Error(ErrorCode::kParseError, "missing 'n m' header", eof_line);
  }
  auto header = Integers(lines[0]);
  if (header.size() != 2) {
    throw Error(ErrorCode::kParseError, "header must be 'n m'", lines[0].number);
  }
  if (header[0] > kMaxParsedVertices) {
    throw Error(ErrorCode::kSizeLimitExceeded, "too many vertices", lines[0].number);
  }
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  std::vector<Arc> arcs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto uv = Integers(lines[k]);
    if (uv.size() != 2) {
      throw Error(ErrorCode::kParseError, "arc line must be 'u v'", lines[k].number);
    }
    if (uv[0] >= n || uv[1] >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "arc endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1),
                  lines[k].number);
    }
    if (uv[0] == uv[1]) {
      throw Error(ErrorCode::kLoopArc, "loop " + std::to_string(uv[0]), lines[k].number);
    }
    arcs.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  if (arcs.size() != m) {
    throw Error(ErrorCode::kArityMismatch,
                "header declares " + std::to_string(m) + " arcs, body has " +
                    std::to_string(arcs.size()),
                arcs.size() > m ? lines[m + 1].number : eof_line);
  }
  return Digraph::Build(n, arcs);
}

std::size_t LastLine(const std::vector<Line>& lines, std::size_t fallback) {
  return lines.empty() ? fallback : lines.back().number;
}

}  // namespace

Digraph ParseEdgeList(std::string_view text) {
  auto lines = Lines(text);
  return ParseEdgeListLines(lines, LastLine(lines, 1));
}

std::string SerializeEdgeList(const Digraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const auto& [u, v] : g.arcs()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<std::string> SplitBlocks(std::string_view text) {
  std::vector<std::string> blocks(1);
  for (const Line& l : Lines(text)) {
    if (l.text == kBlockSeparator) {
      blocks.emplace_back();
    } else {
      blocks.back() += l.text;
      blocks.back() += '\n';
    }
  }
  return blocks;
}

std::string SerializeCoordinates(const std::vector<Coordinates>& coords) {
  std::string out;
  for (std::size_t v = 0; v < coords.size(); ++v) {
    out += std::to_string(v);
    for (Vertex c : coords[v]) {
      out += ' ';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

std::string SerializeFactorization(const Factorization& f) {
  std::string out = std::to_string(f.factors.size()) + "\n";
  for (const Digraph& factor : f.factors) {
    out += kBlockSeparator;
    out += '\n';
    out += SerializeEdgeList(factor);
  }
  out += kBlockSeparator;
  out += '\n';
  out += SerializeCoordinates(f.coords);
  return out;
}

Factorization ParseFactorization(std::string_view text, ProductKind kind) {
  // Work on line numbers of the whole text so errors point into it.
  auto lines = Lines(text);
  std::vector<std::vector<Line>> blocks(1);
  for (const Line& l : lines) {
    if (l.text == kBlockSeparator) {
      blocks.emplace_back();
    } else {
      blocks.back().push_back(l);
    }
  }
  const std::size_t eof = LastLine(lines, 1);
  std::vector<Line> count_lines;
  for (const Line& l : blocks[0]) {
    if (!Skippable(l.text)) count_lines.push_back(l);
  }
  if (count_lines.size() != 1) {
    throw Error(ErrorCode::kParseError, "expected a single factor count line",
                count_lines.empty() ? eof : count_lines[1].number);
  }
  auto count = Integers(count_lines[0]);
  if (count.size() != 1) {
    throw Error(ErrorCode::kParseError, "factor count", count_lines[0].number);
  }
  const std::size_t k = count[0];
  if (blocks.size() != k + 2) {
    throw Error(ErrorCode::kArityMismatch,
                "expected " + std::to_string(k) + " factor blocks and a coordinate block",
                eof);
  }
  Factorization f;
  f.kind = kind;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t fallback = blocks[i + 1].empty() ? eof : blocks[i + 1].back().number;
    f.factors.push_back(ParseEdgeListLines(blocks[i + 1], fallback));
  }
  for (const Line& l : blocks[k + 1]) {
    if (Skippable(l.text)) continue;
    auto values = Integers(l);
    if (values.size() != k + 1 || values[0] != f.coords.size()) {
      throw Error(ErrorCode::kParseError, "coordinate line must be 'v c_0 ... c_k-1'",
                  l.number);
    }
    Coordinates c;
    for (std::size_t i = 0; i < k; ++i) {
      if (values[i + 1] >= f.factors[i].order()) {
        throw Error(ErrorCode::kVertexOutOfRange, "coordinate outside factor", l.number);
      }
      c.push_back(static_cast<Vertex>(values[i + 1]));
    }
    f.coords.push_back(std::move(c));
  }
  return f;
}

std::string FormatWitness(Arc arc, const DispensabilityWitness& w) {
  static constexpr const char* kRule[] = {"D1", "D2", "D3", "D4", "D5"};
  std::ostringstream os;
  os << arc.first << ' ' << arc.second << ' ' << kRule[static_cast<int>(w.rule)];
  if (w.z) os << " z=" << *w.z;
  if (w.z1) os << " z1=" << *w.z1;
  if (w.z2) os << " z2=" << *w.z2;
  if (w.rule != DispensabilityRule::kD5) {
    os << " plus=" << static_cast<int>(w.plus.first())
       << " minus=" << static_cast<int>(w.minus.first());
  }
  return os.str();
}

std::string SerializeWitnessLedger(
    const std::vector<std::pair<Arc, DispensabilityWitness>>& removed) {
  std::string out;
  for (const auto& [arc, w] : removed) {
    out += FormatWitness(arc, w);
    out += '\n';
  }
  return out;
}

std::string SerializeMultiplicityTable(const QuotientWithMultiplicity& q) {
  std::string out = "# class multiplicity members\n";
  for (std::size_t a = 0; a < q.mult.size(); ++a) {
    out += std::to_string(a) + ' ' + std::to_string(q.mult[a]);
    for (Vertex v : q.partition.classes[a].ids()) out += ' ' + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string ExportDot(const Digraph& g, const DotOptions& options) {
  std::vector<Arc> dashed = options.dispensable;
  std::sort(dashed.begin(), dashed.end());
  const bool classify = options.coords.size() == g.order() && g.order() > 0;
  std::ostringstream os;
  os << "digraph " << options.name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (classify) {
      os << " [label=\"" << v << " (";
      for (std::size_t i = 0; i < options.coords[v].size(); ++i) {
        os << (i ? "," : "") << options.coords[v][i];
      }
      os << ")\"]";
    }
    os << ";\n";
  }
  for (const Arc& arc : g.arcs()) {
    std::vector<std::string> attrs;
    if (classify) {
      const auto& cu = options.coords[arc.first];
      const auto& cv = options.coords[arc.second];
      std::size_t diff = 0;
      for (std::size_t i = 0; i < cu.size() && i < cv.size(); ++i) diff += cu[i] != cv[i];
      attrs.push_back(diff == 1 ? "color=black" : "color=red");
    }
    if (std::binary_search(dashed.begin(), dashed.end(), arc)) {
      attrs.push_back("style=dashed");
    }
    os << "  " << arc.first << " -> " << arc.second;
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dpfd
