#pragma once

#include <vector>

#include "dpfd/canonical.hpp"
#include "dpfd/digraph.hpp"
#include "dpfd/products.hpp"

namespace dpfd {

// Ordered factors plus the coordinate tuple of every vertex of the factored
// digraph (coords[v][i] is a vertex of factors[i]).
struct Factorization {
  ProductKind kind = ProductKind::kStrong;
  std::vector<Digraph> factors;
  std::vector<Coordinates> coords;
};

// True iff coords is a bijection onto the factor grid and the product of the
// factors, read through coords, has exactly the arcs of g.
bool ReconstructsExactly(const Digraph& g, const Factorization& f);

// Sorted canonical forms of the factors, K1 factors dropped.
std::vector<CanonicalForm> FactorMultiset(
    const std::vector<Digraph>& factors,
    std::size_t max_vertices = kDefaultCanonicalCutoff);

bool SameFactorMultiset(const std::vector<Digraph>& a,
                        const std::vector<Digraph>& b,
                        std::size_t max_vertices = kDefaultCanonicalCutoff);

}  // namespace dpfd
