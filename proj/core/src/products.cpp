#include "dpfd/products.hpp"

#include <string>

#include "dpfd/error.hpp"

namespace dpfd {

CoordinateGrid::CoordinateGrid(std::vector<std::size_t> dims)
    : dims_(std::move(dims)), strides_(dims_.size(), 1) {
  for (std::size_t i = dims_.size(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= dims_[i];
  }
}

Vertex CoordinateGrid::Index(std::span<const Vertex> coords) const {
  if (coords.size() != dims_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "coordinate tuple arity");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= dims_[i]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "coordinate " + std::to_string(i) + " out of range");
    }
    index += coords[i] * strides_[i];
  }
  return static_cast<Vertex>(index);
}

Coordinates CoordinateGrid::Tuple(Vertex index) const {
  Coordinates out(dims_.size());
  std::size_t rest = index;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    out[i] = static_cast<Vertex>(rest / strides_[i]);
    rest %= strides_[i];
  }
  return out;
}

bool ProductHasArc(ProductKind kind, std::span<const Digraph> factors,
                   std::span<const Vertex> cx, std::span<const Vertex> cy) {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (cx[i] == cy[i]) continue;
    if (!factors[i].has_arc(cx[i], cy[i])) return false;
    ++moved;
  }
  if (kind == ProductKind::kCartesian) return moved == 1;
  return moved >= 1;
}

namespace {

CoordinateGrid GridOf(std::span<const Digraph> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kEmptyFactorList, "product of no factors");
  }
  std::vector<std::size_t> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) dims.push_back(f.order());
  return CoordinateGrid(std::move(dims));
}

// Enumerates the out-neighbors of `coords` by walking the per-factor closed
// out-neighborhoods (strong) or single-coordinate moves (Cartesian).
void AppendOutArcs(ProductKind kind, std::span<const Digraph> factors,
                   const CoordinateGrid& grid, Vertex x,
                   std::vector<Arc>& arcs) {
  const Coordinates cx = grid.Tuple(x);
  if (kind == ProductKind::kCartesian) {
    Coordinates cy = cx;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (Vertex w : factors[i].out(cx[i])) {
        cy[i] = w;
        arcs.push_back({x, grid.Index(cy)});
      }
      cy[i] = cx[i];
    }
    return;
  }
  std::vector<std::vector<Vertex>> choices(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    choices[i] = OutNeighborhood(factors[i], cx[i]).ids();
  }
  std::vector<std::size_t> pos(factors.size(), 0);
  Coordinates cy(factors.size());
  while (true) {
    for (std::size_t i = 0; i < factors.size(); ++i) cy[i] = choices[i][pos[i]];
    Vertex y = grid.Index(cy);
    if (y != x) arcs.push_back({x, y});
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

CoordGraph Product(ProductKind kind, std::span<const Digraph> factors) {
  CoordGraph cg;
  cg.grid = GridOf(factors);
  cg.factors.assign(factors.begin(), factors.end());
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < cg.grid.size(); ++x) {
    AppendOutArcs(kind, factors, cg.grid, x, arcs);
  }
  cg.graph = Digraph::Build(cg.grid.size(), arcs);
  return cg;
}

CoordGraph StrongProduct(std::span<const Digraph> factors) {
  return Product(ProductKind::kStrong, factors);
}

CoordGraph CartesianProduct(std::span<const Digraph> factors) {
  return Product(ProductKind::kCartesian, factors);
}

std::vector<Vertex> LayerVertices(const CoordGraph& cg, std::size_t j,
                                  Vertex x) {
  if (j >= cg.factors.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "factor index " + std::to_string(j));
  }
  if (x >= cg.graph.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(x));
  }
  Coordinates c = cg.coords(x);
  std::vector<Vertex> vertices;
  vertices.reserve(cg.factors[j].order());
  for (Vertex v = 0; v < cg.factors[j].order(); ++v) {
    c[j] = v;
    vertices.push_back(cg.vertex(c));
  }
  return vertices;
}

Digraph Layer(const CoordGraph& cg, std::size_t j, Vertex x) {
  return InducedSubgraph(cg.graph, LayerVertices(cg, j, x));
}

EdgeClass ClassifyEdge(const CoordGraph& cg, Arc arc) {
  if (!cg.graph.has_arc(arc.first, arc.second)) {
    throw Error(ErrorCode::kArcNotPresent,
                "(" + std::to_string(arc.first) + "," +
                    std::to_string(arc.second) + ")");
  }
  const Coordinates a = cg.coords(arc.first);
  const Coordinates b = cg.coords(arc.second);
  std::size_t differing = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      ++differing;
      where = i;
    }
  }
  if (differing == 1) return {EdgeClass::Kind::kCartesian, where};
  return {EdgeClass::Kind::kNonCartesian, 0};
}

}  // namespace dpfd
