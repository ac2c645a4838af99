#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dpfd/digraph.hpp"
#include "dpfd/factorization.hpp"

namespace dpfd {

// Factor color per undirected edge, indexed like UndirectedGraph::edges().
// Colors are numbered 0..num_colors-1 in order of first appearance.
struct EdgeColoring {
  std::vector<std::size_t> color;
  std::size_t num_colors = 0;
};

// Coordinates induced by a product coloring: coordinate i of v is the
// position, within the color-i layer through vertex 0, of the layer vertex
// that shares all other coordinates with v. Layer vertices are ranked by id.
struct ColoringCoordinates {
  std::vector<std::size_t> dims;
  std::vector<Coordinates> coords;
  // layers[i]: color-i layer through vertex 0, ascending ids.
  std::vector<std::vector<Vertex>> layers;
};

// Coordinates for `coloring` if it is the coloring of a Cartesian product
// decomposition of ug (bijective coordinates, every edge moves exactly its
// own coordinate, edge set equals the product's).
std::optional<ColoringCoordinates> CoordinatesOf(const UndirectedGraph& ug,
                                                 const EdgeColoring& coloring);

// Prime factor coloring of a connected undirected graph w.r.t. the Cartesian
// product. Throws Error{kNotConnected}.
EdgeColoring UndirectedCartesianPfd(const UndirectedGraph& ug);

// Ordered color pairs (i, j) such that two i-layers joined by a j-edge carry
// different arcs under the coordinate bijection. Throws
// Error{kInvalidColoring} if the coloring is not a product coloring of the
// underlying undirected graph.
std::vector<std::pair<std::size_t, std::size_t>> DirectionConflicts(
    const Digraph& g, const EdgeColoring& coloring);

// Prime factorization w.r.t. the Cartesian product of digraphs. Throws
// Error{kNotConnected}.
Factorization CartesianPfd(const Digraph& g);

}  // namespace dpfd
