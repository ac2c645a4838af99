#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dpfd {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

// Strictly increasing list of vertex ids. All set operations are linear
// merges over the two operands.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  // `ids` must already be strictly increasing.
  static VertexSet FromSorted(std::vector<Vertex> ids);
  static VertexSet FromUnsorted(std::vector<Vertex> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  VertexSet intersect(const VertexSet& other) const;
  VertexSet unite(const VertexSet& other) const;
  std::size_t intersection_size(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool is_proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && is_subset_of(other);
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

// Loop-free digraph over the dense ids 0..n-1. Immutable once built; arcs are
// deduplicated and kept in lexicographic order.
class Digraph {
 public:
  Digraph() = default;

  // Throws Error{kLoopArc} or Error{kVertexOutOfRange}.
  static Digraph Build(std::size_t n, std::span<const Arc> arcs);
  static Digraph Build(std::size_t n, std::initializer_list<Arc> arcs) {
    return Build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  // Open adjacency lists, sorted ascending.
  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  bool has_arc(Vertex u, Vertex v) const;
  // Position of the arc in arcs(); throws Error{kArcNotPresent}.
  std::size_t arc_index(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

// Simple undirected graph; edges stored once with first < second.
class UndirectedGraph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  UndirectedGraph() = default;
  static UndirectedGraph Build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  // Index into edges() of {u,v}, or edge_count() if absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Closed neighborhoods N+[v] and N-[v]. Throw Error{kVertexOutOfRange}.
VertexSet OutNeighborhood(const Digraph& g, Vertex v);
VertexSet InNeighborhood(const Digraph& g, Vertex v);

bool IsConnected(const Digraph& g);
bool IsConnected(const UndirectedGraph& g);
UndirectedGraph UnderlyingUndirected(const Digraph& g);
std::size_t MaxDegree(const Digraph& g);

// Vertex v of g becomes perm[v]. `perm` must be a permutation of 0..n-1.
Digraph Relabel(const Digraph& g, std::span<const Vertex> perm);
// Induced subgraph; vertex vertices[i] becomes i.
Digraph InducedSubgraph(const Digraph& g, std::span<const Vertex> vertices);
Digraph Reverse(const Digraph& g);

Digraph CompleteDigraph(std::size_t n);
// 0 -> 1 -> ... -> n-1
Digraph DirectedPath(std::size_t n);
// 0 -> 1 -> ... -> n-1 -> 0
Digraph DirectedCycle(std::size_t n);

}  // namespace dpfd
