#include "dpfd/factorization.hpp"

#include <algorithm>

namespace dpfd {

bool ReconstructsExactly(const Digraph& g, const Factorization& f) {
  if (f.factors.empty() || f.coords.size() != g.order()) return false;
  std::vector<std::size_t> dims;
  for (const auto& factor : f.factors) dims.push_back(factor.order());
  CoordinateGrid grid(dims);
  if (grid.size() != g.order()) return false;
  std::vector<Vertex> position(g.order());
  std::vector<char> hit(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Coordinates& c = f.coords[v];
    if (c.size() != dims.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= dims[i]) return false;
    }
    position[v] = grid.Index(c);
    if (hit[position[v]]) return false;
    hit[position[v]] = 1;
  }
  CoordGraph product = Product(f.kind, f.factors);
  return Relabel(g, position) == product.graph;
}

std::vector<CanonicalForm> FactorMultiset(const std::vector<Digraph>& factors,
                                          std::size_t max_vertices) {
  std::vector<CanonicalForm> forms;
  for (const auto& f : factors) {
    if (f.order() > 1) forms.push_back(Canonicalize(f, max_vertices));
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

bool SameFactorMultiset(const std::vector<Digraph>& a,
                        const std::vector<Digraph>& b,
                        std::size_t max_vertices) {
  return FactorMultiset(a, max_vertices) == FactorMultiset(b, max_vertices);
}

}  // namespace dpfd
