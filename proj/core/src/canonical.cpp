#include "dpfd/canonical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "dpfd/error.hpp"
#include "union_find.hpp"

namespace dpfd {
namespace {

using Coloring = std::vector<Vertex>;

constexpr Vertex kSeparator = std::numeric_limits<Vertex>::max();

std::size_t CountColors(const Coloring& c) {
  if (c.empty()) return 0;
  return *std::max_element(c.begin(), c.end()) + 1;
}

// Ranks `keys` so that equal keys share a color and color order follows key
// order.
template <typename Key>
Coloring RankBy(const std::vector<Key>& keys) {
  std::vector<Vertex> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  Coloring out(keys.size());
  Vertex color = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++color;
    out[order[i]] = color;
  }
  return out;
}

// Directed color refinement to the coarsest stable coloring below `c`. The
// new color order refines the old one and depends only on the colored
// structure, never on vertex ids.
Coloring Refine(const Digraph& g, Coloring c) {
  std::size_t colors = CountColors(c);
  std::vector<std::vector<Vertex>> sig(g.order());
  while (true) {
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(c[v]);
      std::size_t mark = s.size();
      for (Vertex w : g.out(v)) s.push_back(c[w]);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
      s.push_back(kSeparator);
      mark = s.size();
      for (Vertex w : g.in(v)) s.push_back(c[w]);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
    }
    Coloring next = RankBy(sig);
    std::size_t next_colors = CountColors(next);
    c = std::move(next);
    if (next_colors == colors) return c;
    colors = next_colors;
  }
}

Coloring Individualize(const Coloring& c, Vertex v) {
  std::vector<std::uint64_t> keys(c.size());
  for (std::size_t w = 0; w < c.size(); ++w) {
    keys[w] = 2 * static_cast<std::uint64_t>(c[w]) + (w == v ? 0 : 1);
  }
  return RankBy(keys);
}

using internal::UnionFind;

class Search {
 public:
  explicit Search(const Digraph& g) : g_(g) {}

  CanonicalLabeling Run() {
    Coloring start(g_.order(), 0);
    Explore(Refine(g_, std::move(start)), /*on_first_path=*/true);
    CanonicalLabeling result;
    result.form.n = g_.order();
    result.form.arcs = std::move(best_cert_);
    result.labeling = std::move(best_lab_);
    return result;
  }

 private:
  std::vector<Arc> Certificate(const Coloring& lab) const {
    std::vector<Arc> cert;
    cert.reserve(g_.arc_count());
    for (const auto& [u, v] : g_.arcs()) cert.push_back({lab[u], lab[v]});
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  // Vertex mapping that sends each vertex to the vertex holding the same
  // label in `target`.
  std::vector<Vertex> AutomorphismTo(const Coloring& lab,
                                     const Coloring& target) const {
    std::vector<Vertex> inverse(target.size());
    for (Vertex v = 0; v < target.size(); ++v) inverse[target[v]] = v;
    std::vector<Vertex> gamma(lab.size());
    for (Vertex v = 0; v < lab.size(); ++v) gamma[v] = inverse[lab[v]];
    return gamma;
  }

  // Returns true when the caller should abandon its subtree because a leaf
  // equivalent to the first leaf was found below a non-first-path node.
  bool Explore(const Coloring& c, bool on_first_path) {
    const std::size_t n = g_.order();
    if (CountColors(c) == n) return Leaf(c, on_first_path);

    // Target cell: first smallest non-singleton cell.
    std::vector<std::size_t> cell_size(n, 0);
    for (Vertex color : c) ++cell_size[color];
    Vertex target = 0;
    std::size_t target_size = std::numeric_limits<std::size_t>::max();
    for (Vertex color = 0; color < n; ++color) {
      if (cell_size[color] > 1 && cell_size[color] < target_size) {
        target = color;
        target_size = cell_size[color];
      }
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v) {
      if (c[v] == target) cell.push_back(v);
    }

    std::vector<Vertex> explored;
    bool first_child = true;
    for (Vertex v : cell) {
      if (Pruned(v, explored)) continue;
      explored.push_back(v);
      prefix_.push_back(v);
      bool abort = Explore(Refine(g_, Individualize(c, v)),
                           on_first_path && first_child);
      prefix_.pop_back();
      first_child = false;
      if (abort && !on_first_path) return true;
    }
    return false;
  }

  bool Leaf(const Coloring& lab, bool on_first_path) {
    std::vector<Arc> cert = Certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = cert;
      first_lab_ = lab;
      best_cert_ = std::move(cert);
      best_lab_ = lab;
      return false;
    }
    if (cert == first_cert_) {
      automorphisms_.push_back(AutomorphismTo(lab, first_lab_));
      return !on_first_path;
    }
    if (cert == best_cert_) {
      automorphisms_.push_back(AutomorphismTo(lab, best_lab_));
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
    return false;
  }

  // Skips v when an automorphism fixing the current prefix maps an
  // already-explored sibling onto it.
  bool Pruned(Vertex v, const std::vector<Vertex>& explored) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    UnionFind orbits(g_.order());
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(),
                               [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (Vertex w = 0; w < gamma.size(); ++w) orbits.Unite(w, gamma[w]);
    }
    if (!any) return false;
    Vertex root = orbits.Find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex u) { return orbits.Find(u) == root; });
  }

  const Digraph& g_;
  std::vector<Vertex> prefix_;
  bool have_first_ = false;
  std::vector<Arc> first_cert_;
  Coloring first_lab_;
  std::vector<Arc> best_cert_;
  Coloring best_lab_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling CanonicalLabel(const Digraph& g, std::size_t max_vertices) {
  if (g.order() > max_vertices) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "canonical form of " + std::to_string(g.order()) +
                    " vertices exceeds cutoff " + std::to_string(max_vertices));
  }
  if (g.order() == 0) return {};
  return Search(g).Run();
}

CanonicalForm Canonicalize(const Digraph& g, std::size_t max_vertices) {
  return CanonicalLabel(g, max_vertices).form;
}

bool IsIsomorphic(const Digraph& a, const Digraph& b,
                  std::size_t max_vertices) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  auto degrees = [](const Digraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> d;
    d.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      d.push_back({g.out(v).size(), g.in(v).size()});
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return Canonicalize(a, max_vertices) == Canonicalize(b, max_vertices);
}

}  // namespace dpfd
