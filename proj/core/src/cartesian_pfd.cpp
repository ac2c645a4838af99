#include "dpfd/cartesian_pfd.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "dpfd/error.hpp"
#include "union_find.hpp"

namespace dpfd {

using internal::UnionFind;

namespace {

EdgeColoring ColoringFrom(UnionFind& uf) {
  EdgeColoring coloring;
  coloring.num_colors = uf.Classes(coloring.color);
  return coloring;
}

// Closure of the square relation: opposite edges of every chordless square
// are equivalent, and two incident edges are equivalent unless they span
// exactly one chordless square.
void UniteSquareRelation(const UndirectedGraph& ug, UnionFind& uf) {
  std::vector<Vertex> common;
  for (Vertex v = 0; v < ug.order(); ++v) {
    auto nbrs = ug.neighbors(v);
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      for (std::size_t q = p + 1; q < nbrs.size(); ++q) {
        Vertex a = nbrs[p];
        Vertex b = nbrs[q];
        std::size_t va = ug.edge_index(v, a);
        std::size_t vb = ug.edge_index(v, b);
        if (ug.has_edge(a, b)) {
          uf.Unite(va, vb);
          continue;
        }
        common.clear();
        auto na = ug.neighbors(a);
        auto nb = ug.neighbors(b);
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                              std::back_inserter(common));
        std::size_t squares = 0;
        for (Vertex w : common) {
          if (w == v || ug.has_edge(v, w)) continue;
          ++squares;
          uf.Unite(va, ug.edge_index(b, w));
          uf.Unite(vb, ug.edge_index(a, w));
        }
        if (squares != 1) uf.Unite(va, vb);
      }
    }
  }
}

std::vector<std::vector<std::uint32_t>> AllPairsDistances(
    const UndirectedGraph& ug) {
  const std::size_t n = ug.order();
  std::vector<std::vector<std::uint32_t>> dist(
      n, std::vector<std::uint32_t>(n, std::numeric_limits<std::uint32_t>::max()));
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : ug.neighbors(v)) {
        if (d[w] == std::numeric_limits<std::uint32_t>::max()) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

// Djokovic-Winkler relation: xy and uv are related iff
// d(x,u) + d(y,v) != d(x,v) + d(y,u).
void UniteThetaRelation(const UndirectedGraph& ug, UnionFind& uf) {
  auto dist = AllPairsDistances(ug);
  const auto& edges = ug.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [x, y] = edges[e];
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      if (uf.Find(e) == uf.Find(f)) continue;
      const auto [u, v] = edges[f];
      if (dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]) uf.Unite(e, f);
    }
  }
}

}  // namespace

std::optional<ColoringCoordinates> CoordinatesOf(const UndirectedGraph& ug,
                                                 const EdgeColoring& coloring) {
  const std::size_t n = ug.order();
  const std::size_t k = coloring.num_colors;
  if (coloring.color.size() != ug.edge_count() || n == 0) return std::nullopt;
  for (std::size_t c : coloring.color) {
    if (c >= k) return std::nullopt;
  }

  ColoringCoordinates out;
  out.coords.assign(n, Coordinates(k, 0));
  out.dims.resize(k);
  out.layers.resize(k);
  const auto& edges = ug.edges();
  for (std::size_t i = 0; i < k; ++i) {
    UnionFind co(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (coloring.color[e] != i) co.Unite(edges[e].first, edges[e].second);
    }
    // Color-i layer through vertex 0.
    std::vector<Vertex>& layer = out.layers[i];
    std::vector<char> seen(n, 0);
    layer.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < layer.size(); ++head) {
      Vertex v = layer[head];
      for (Vertex w : ug.neighbors(v)) {
        if (!seen[w] && coloring.color[ug.edge_index(v, w)] == i) {
          seen[w] = 1;
          layer.push_back(w);
        }
      }
    }
    std::sort(layer.begin(), layer.end());
    std::vector<std::size_t> label(n, n);
    for (std::size_t r = 0; r < layer.size(); ++r) {
      std::size_t root = co.Find(layer[r]);
      if (label[root] != n) return std::nullopt;
      label[root] = r;
    }
    for (Vertex v = 0; v < n; ++v) {
      std::size_t l = label[co.Find(v)];
      if (l == n) return std::nullopt;
      out.coords[v][i] = static_cast<Vertex>(l);
    }
    out.dims[i] = layer.size();
  }

  std::size_t total = 1;
  for (std::size_t d : out.dims) {
    total *= d;
    if (total > n) return std::nullopt;
  }
  if (total != n) return std::nullopt;
  CoordinateGrid grid(out.dims);
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex idx = grid.Index(out.coords[v]);
    if (hit[idx]) return std::nullopt;
    hit[idx] = 1;
  }

  // Factor edge sets read off the layers through vertex 0.
  std::vector<std::set<std::pair<Vertex, Vertex>>> factor_edges(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex u : out.layers[i]) {
      for (Vertex w : ug.neighbors(u)) {
        if (u < w && coloring.color[ug.edge_index(u, w)] == i &&
            std::binary_search(out.layers[i].begin(), out.layers[i].end(), w)) {
          Vertex a = out.coords[u][i];
          Vertex b = out.coords[w][i];
          factor_edges[i].insert({std::min(a, b), std::max(a, b)});
        }
      }
    }
  }
  std::size_t expected = 0;
  for (std::size_t i = 0; i < k; ++i) {
    expected += factor_edges[i].size() * (n / out.dims[i]);
  }
  if (expected != ug.edge_count()) return std::nullopt;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& cu = out.coords[edges[e].first];
    const auto& cv = out.coords[edges[e].second];
    std::size_t c = coloring.color[e];
    for (std::size_t i = 0; i < k; ++i) {
      if ((i == c) == (cu[i] == cv[i])) return std::nullopt;
    }
    if (!factor_edges[c].contains({std::min(cu[c], cv[c]), std::max(cu[c], cv[c])})) {
      return std::nullopt;
    }
  }
  return out;
}

EdgeColoring UndirectedCartesianPfd(const UndirectedGraph& ug) {
  if (!IsConnected(ug)) {
    throw Error(ErrorCode::kNotConnected, "undirected Cartesian PFD");
  }
  UnionFind uf(ug.edge_count());
  UniteSquareRelation(ug, uf);
  EdgeColoring coloring = ColoringFrom(uf);
  if (ug.edge_count() == 0 || CoordinatesOf(ug, coloring)) return coloring;

  // The square relation only refines the product relation. When its coloring
  // is not a product coloring, adding the Djokovic-Winkler relation gives
  // exactly the product relation.
  UniteThetaRelation(ug, uf);
  coloring = ColoringFrom(uf);
  if (!CoordinatesOf(ug, coloring)) {
    throw Error(ErrorCode::kInternal,
                "product relation closure did not yield a product coloring");
  }
  return coloring;
}

std::vector<std::pair<std::size_t, std::size_t>> DirectionConflicts(
    const Digraph& g, const EdgeColoring& coloring) {
  UndirectedGraph ug = UnderlyingUndirected(g);
  auto coords = CoordinatesOf(ug, coloring);
  if (!coords) {
    throw Error(ErrorCode::kInvalidColoring,
                "coloring is not a Cartesian product coloring");
  }
  CoordinateGrid grid(coords->dims);
  std::vector<Vertex> vertex_at(g.order());
  for (Vertex v = 0; v < g.order(); ++v) vertex_at[grid.Index(coords->coords[v])] = v;

  std::set<std::pair<std::size_t, std::size_t>> conflicts;
  Coordinates shifted;
  for (const auto& [a, b] : g.arcs()) {
    std::size_t i = coloring.color[ug.edge_index(a, b)];
    for (Vertex a2 : ug.neighbors(a)) {
      std::size_t j = coloring.color[ug.edge_index(a, a2)];
      if (j == i || conflicts.contains({i, j})) continue;
      shifted = coords->coords[b];
      shifted[j] = coords->coords[a2][j];
      Vertex b2 = vertex_at[grid.Index(shifted)];
      if (!g.has_arc(a2, b2)) conflicts.insert({i, j});
    }
  }
  return {conflicts.begin(), conflicts.end()};
}

Factorization CartesianPfd(const Digraph& g) {
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kNotConnected, "Cartesian PFD needs a connected digraph");
  }
  Factorization f;
  f.kind = ProductKind::kCartesian;
  if (g.order() <= 1) {
    f.factors.push_back(Digraph::Build(g.order(), {}));
    f.coords.assign(g.order(), Coordinates{0});
    return f;
  }
  UndirectedGraph ug = UnderlyingUndirected(g);
  EdgeColoring coloring = UndirectedCartesianPfd(ug);
  while (true) {
    auto conflicts = DirectionConflicts(g, coloring);
    if (conflicts.empty()) break;
    UnionFind merge(coloring.num_colors);
    for (const auto& [i, j] : conflicts) merge.Unite(i, j);
    // Renumber by first appearance along the edge order.
    std::vector<std::size_t> remap(coloring.num_colors, coloring.num_colors);
    std::size_t next = 0;
    for (auto& c : coloring.color) {
      std::size_t root = merge.Find(c);
      if (remap[root] == coloring.num_colors) remap[root] = next++;
      c = remap[root];
    }
    coloring.num_colors = next;
  }
  auto coords = CoordinatesOf(ug, coloring);
  if (!coords) {
    throw Error(ErrorCode::kInternal, "merged coloring lost product structure");
  }
  for (const auto& layer : coords->layers) {
    f.factors.push_back(InducedSubgraph(g, layer));
  }
  f.coords = std::move(coords->coords);
  if (!ReconstructsExactly(g, f)) {
    throw Error(ErrorCode::kInternal, "Cartesian factors do not reconstruct input");
  }
  return f;
}

}  // namespace dpfd
