#include "dpfd/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dpfd/error.hpp"

namespace dpfd {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(FromUnsorted(std::vector<Vertex>(ids))) {}

VertexSet VertexSet::FromSorted(std::vector<Vertex> ids) {
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::FromUnsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return FromSorted(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  std::size_t count = 0;
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

Digraph Digraph::Build(std::size_t n, std::span<const Arc> arcs) {
  Digraph g;
  g.arcs_.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) +
                      ") with n=" + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::kLoopArc, "arc (" + std::to_string(u) + "," +
                                           std::to_string(v) + ")");
    }
    g.arcs_.push_back({u, v});
  }
  std::sort(g.arcs_.begin(), g.arcs_.end());
  g.arcs_.erase(std::unique(g.arcs_.begin(), g.arcs_.end()), g.arcs_.end());
  g.out_.resize(n);
  g.in_.resize(n);
  // Arcs are sorted by (u,v), so both adjacency views come out sorted.
  for (const auto& [u, v] : g.arcs_) {
    g.out_[u].push_back(v);
    g.in_[v].push_back(u);
  }
  return g;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::size_t Digraph::arc_index(Vertex u, Vertex v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
  if (it == arcs_.end() || *it != Arc{u, v}) {
    throw Error(ErrorCode::kArcNotPresent,
                "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return static_cast<std::size_t>(it - arcs_.begin());
}

UndirectedGraph UndirectedGraph::Build(std::size_t n,
                                       std::span<const Edge> edges) {
  UndirectedGraph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "undirected edge endpoint");
    }
    if (u == v) throw Error(ErrorCode::kLoopArc, "undirected loop");
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());
  g.adj_.resize(n);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  return edge_index(u, v) != edge_count();
}

std::size_t UndirectedGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return edge_count();
  return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

void CheckVertex(const Digraph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" +
                    std::to_string(g.order()));
  }
}

VertexSet Closed(std::span<const Vertex> open, Vertex v) {
  std::vector<Vertex> ids;
  ids.reserve(open.size() + 1);
  auto pos = std::lower_bound(open.begin(), open.end(), v);
  ids.insert(ids.end(), open.begin(), pos);
  ids.push_back(v);
  ids.insert(ids.end(), pos, open.end());
  return VertexSet::FromSorted(std::move(ids));
}

template <typename NeighborFn>
bool BfsReachesAll(std::size_t n, NeighborFn&& for_each_neighbor) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for_each_neighbor(v, [&](Vertex w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    });
  }
  return reached == n;
}

}  // namespace

VertexSet OutNeighborhood(const Digraph& g, Vertex v) {
  CheckVertex(g, v);
  return Closed(g.out(v), v);
}

VertexSet InNeighborhood(const Digraph& g, Vertex v) {
  CheckVertex(g, v);
  return Closed(g.in(v), v);
}

bool IsConnected(const Digraph& g) {
  return BfsReachesAll(g.order(), [&](Vertex v, auto&& visit) {
    for (Vertex w : g.out(v)) visit(w);
    for (Vertex w : g.in(v)) visit(w);
  });
}

bool IsConnected(const UndirectedGraph& g) {
  return BfsReachesAll(g.order(), [&](Vertex v, auto&& visit) {
    for (Vertex w : g.neighbors(v)) visit(w);
  });
}

UndirectedGraph UnderlyingUndirected(const Digraph& g) {
  std::vector<UndirectedGraph::Edge> edges(g.arcs().begin(), g.arcs().end());
  return UndirectedGraph::Build(g.order(), edges);
}

std::size_t MaxDegree(const Digraph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    best = std::max(best, g.out(v).size() + g.in(v).size());
  }
  return best;
}

Digraph Relabel(const Digraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "permutation size mismatch");
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [u, v] : g.arcs()) arcs.push_back({perm[u], perm[v]});
  return Digraph::Build(g.order(), arcs);
}

Digraph InducedSubgraph(const Digraph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    CheckVertex(g, vertices[i]);
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.out(vertices[i])) {
      if (index[w] >= 0) {
        arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(index[w])});
      }
    }
  }
  return Digraph::Build(vertices.size(), arcs);
}

Digraph Reverse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [u, v] : g.arcs()) arcs.push_back({v, u});
  return Digraph::Build(g.order(), arcs);
}

Digraph CompleteDigraph(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph::Build(n, arcs);
}

Digraph DirectedPath(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph::Build(n, arcs);
}

Digraph DirectedCycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) {
    arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
  }
  return Digraph::Build(n, arcs);
}

}  // namespace dpfd
