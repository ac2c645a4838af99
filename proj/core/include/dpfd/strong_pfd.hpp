#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dpfd/digraph.hpp"
#include "dpfd/factorization.hpp"
#include "dpfd/products.hpp"

namespace dpfd {

// Class sizes D(x) over a coordinate grid, stored row-major.
struct MultiplicityTable {
  CoordinateGrid grid;
  std::vector<std::size_t> values;

  std::size_t at(std::span<const Vertex> coords) const {
    return values[grid.Index(coords)];
  }
};

// Checks whether the Cartesian coordinates `coords` of g (one tuple per
// vertex) split g as A x B with A spanned by the coordinates in `group`.
// A is the group layer through vertex 0, B the complementary layer; both are
// induced subgraphs with vertices ranked by id. Returns the pair iff the
// strong product of A and B, read through the coordinates, equals g arc for
// arc. An empty group is rejected.
std::optional<std::pair<Digraph, Digraph>> VerifyStrongGrouping(
    const Digraph& g, std::span<const Coordinates> coords,
    std::span<const std::size_t> group);

// Prime factors of a connected thin digraph: factor the Cartesian skeleton,
// then group its Cartesian factors into minimal verified groups. Throws
// Error{kNotThin} or Error{kNotConnected}.
Factorization StrongPfdThin(const Digraph& g);

// D_J(x_J) = gcd of D over all completions of x_J. `group` must be strictly
// increasing; the result grid has the dims of the group, in group order.
MultiplicityTable GcdMultiplicity(const MultiplicityTable& table,
                                  std::span<const std::size_t> group);

// Prime factors of any connected digraph w.r.t. the strong product.
// Non-complete factors come first, then one K_p per prime divisor p of the
// largest complete factor, ascending. Throws Error{kNotConnected}.
Factorization StrongPfd(const Digraph& g);

// Prime divisors of n with multiplicity, ascending (trial division).
std::vector<std::size_t> PrimeDivisors(std::size_t n);

}  // namespace dpfd
