#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "dpfd/digraph.hpp"

namespace dpfd {

inline constexpr std::size_t kDefaultCanonicalCutoff = 64;

// Arc list of a digraph under its canonical relabeling. Two digraphs have
// equal forms iff they are isomorphic.
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<Arc> arcs;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[v] is the canonical id of vertex v.
  std::vector<Vertex> labeling;
};

// Individualization-refinement search over directed color refinement, with
// automorphism pruning. Exponential in the worst case; throws
// Error{kSizeLimitExceeded} when g.order() > max_vertices.
CanonicalLabeling CanonicalLabel(const Digraph& g,
                                 std::size_t max_vertices = kDefaultCanonicalCutoff);
CanonicalForm Canonicalize(const Digraph& g,
                           std::size_t max_vertices = kDefaultCanonicalCutoff);
bool IsIsomorphic(const Digraph& a, const Digraph& b,
                  std::size_t max_vertices = kDefaultCanonicalCutoff);

}  // namespace dpfd
