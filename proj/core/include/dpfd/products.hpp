#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dpfd/digraph.hpp"

namespace dpfd {

using Coordinates = std::vector<Vertex>;

enum class ProductKind { kStrong, kCartesian };

// Mixed-radix addressing of a product vertex set. Tuples are ordered
// row-major: the last coordinate varies fastest.
class CoordinateGrid {
 public:
  CoordinateGrid() = default;
  explicit CoordinateGrid(std::vector<std::size_t> dims);

  std::size_t rank() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return size_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  Vertex Index(std::span<const Vertex> coords) const;
  Coordinates Tuple(Vertex index) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

// A product digraph together with its factors and the coordinate tuple of
// every vertex. Vertex ids follow the row-major order of the tuples.
struct CoordGraph {
  Digraph graph;
  std::vector<Digraph> factors;
  CoordinateGrid grid;

  Coordinates coords(Vertex v) const { return grid.Tuple(v); }
  Vertex vertex(std::span<const Vertex> coords) const {
    return grid.Index(coords);
  }
};

struct EdgeClass {
  enum class Kind { kCartesian, kNonCartesian };
  Kind kind = Kind::kNonCartesian;
  // Index of the differing coordinate; meaningful only for kCartesian.
  std::size_t coordinate = 0;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

// Both throw Error{kEmptyFactorList}.
CoordGraph StrongProduct(std::span<const Digraph> factors);
CoordGraph CartesianProduct(std::span<const Digraph> factors);
CoordGraph Product(ProductKind kind, std::span<const Digraph> factors);

// Whether (x -> y) is an arc of the product of `factors` when the endpoints
// carry coordinates cx and cy.
bool ProductHasArc(ProductKind kind, std::span<const Digraph> factors,
                   std::span<const Vertex> cx, std::span<const Vertex> cy);

// The G_j-layer through x, relabeled by coordinate j. Throws
// Error{kIndexOutOfRange}.
Digraph Layer(const CoordGraph& cg, std::size_t j, Vertex x);
// Vertex ids of that layer, ordered by coordinate j.
std::vector<Vertex> LayerVertices(const CoordGraph& cg, std::size_t j,
                                  Vertex x);

// Throws Error{kArcNotPresent}.
EdgeClass ClassifyEdge(const CoordGraph& cg, Arc arc);

}  // namespace dpfd
