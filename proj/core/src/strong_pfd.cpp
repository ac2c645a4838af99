#include "dpfd/strong_pfd.hpp"

#include <map>
#include <numeric>
#include <string>

#include "dpfd/cartesian_pfd.hpp"
#include "dpfd/error.hpp"
#include "dpfd/relations.hpp"
#include "dpfd/skeleton.hpp"

namespace dpfd {
namespace {

struct GroupSplit {
  Digraph a;
  Digraph b;
  std::vector<Vertex> a_layer;
  std::vector<Vertex> b_layer;
  std::vector<Vertex> a_of;  // vertex -> index into a_layer
  std::vector<Vertex> b_of;
};

Coordinates Restrict(std::span<const Vertex> c, std::span<const std::size_t> idx) {
  Coordinates out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(c[i]);
  return out;
}

std::vector<std::size_t> Complement(std::span<const std::size_t> group,
                                    std::size_t rank) {
  std::vector<char> in(rank, 0);
  for (std::size_t i : group) in[i] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

// Advances a strictly increasing index combination drawn from 0..r-1 to its
// lexicographic successor; false once exhausted.
bool NextCombination(std::vector<std::size_t>& comb, std::size_t r) {
  const std::size_t s = comb.size();
  for (std::size_t i = s; i-- > 0;) {
    if (comb[i] < r - s + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <typename Visit>
bool ForEachProperSubset(std::size_t r, Visit&& visit) {
  for (std::size_t s = 1; s < r; ++s) {
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    do {
      if (visit(comb)) return true;
    } while (NextCombination(comb, r));
  }
  return false;
}

std::optional<GroupSplit> TrySplit(const Digraph& g,
                                   std::span<const Coordinates> coords,
                                   std::span<const std::size_t> group) {
  const std::size_t n = g.order();
  if (group.empty() || n == 0 || coords.size() != n) return std::nullopt;
  const std::size_t rank = coords[0].size();
  for (std::size_t i : group) {
    if (i >= rank) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "group index " + std::to_string(i));
    }
  }
  const std::vector<std::size_t> rest = Complement(group, rank);
  const Coordinates base_rest = Restrict(coords[0], rest);
  const Coordinates base_group = Restrict(coords[0], group);

  GroupSplit split;
  std::map<Coordinates, Vertex> a_index;
  std::map<Coordinates, Vertex> b_index;
  for (Vertex v = 0; v < n; ++v) {
    if (Restrict(coords[v], rest) == base_rest) {
      a_index.emplace(Restrict(coords[v], group),
                      static_cast<Vertex>(split.a_layer.size()));
      split.a_layer.push_back(v);
    }
    if (Restrict(coords[v], group) == base_group) {
      b_index.emplace(Restrict(coords[v], rest),
                      static_cast<Vertex>(split.b_layer.size()));
      split.b_layer.push_back(v);
    }
  }
  if (split.a_layer.size() * split.b_layer.size() != n) return std::nullopt;
  split.a_of.resize(n);
  split.b_of.resize(n);
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto ia = a_index.find(Restrict(coords[v], group));
    auto ib = b_index.find(Restrict(coords[v], rest));
    if (ia == a_index.end() || ib == b_index.end()) return std::nullopt;
    split.a_of[v] = ia->second;
    split.b_of[v] = ib->second;
    std::size_t cell = ia->second * split.b_layer.size() + ib->second;
    if (hit[cell]) return std::nullopt;
    hit[cell] = 1;
  }
  split.a = InducedSubgraph(g, split.a_layer);
  split.b = InducedSubgraph(g, split.b_layer);

  auto step = [](const Digraph& f, Vertex s, Vertex t) {
    return s == t || f.has_arc(s, t);
  };
  for (const auto& [u, v] : g.arcs()) {
    if (!step(split.a, split.a_of[u], split.a_of[v]) ||
        !step(split.b, split.b_of[u], split.b_of[v])) {
      return std::nullopt;
    }
  }
  // Every arc of g is a product arc; equal counts make the sets equal.
  const std::size_t closed_a = split.a.arc_count() + split.a.order();
  const std::size_t closed_b = split.b.arc_count() + split.b.order();
  if (g.arc_count() != closed_a * closed_b - n) return std::nullopt;
  return split;
}

}  // namespace

std::optional<std::pair<Digraph, Digraph>> VerifyStrongGrouping(
    const Digraph& g, std::span<const Coordinates> coords,
    std::span<const std::size_t> group) {
  auto split = TrySplit(g, coords, group);
  if (!split) return std::nullopt;
  return std::make_pair(std::move(split->a), std::move(split->b));
}

Factorization StrongPfdThin(const Digraph& g) {
  if (g.order() == 0 || !IsConnected(g)) {
    throw Error(ErrorCode::kNotConnected, "strong PFD needs a connected digraph");
  }
  if (!IsThin(g)) throw Error(ErrorCode::kNotThin, "strong PFD of thin digraphs");

  const std::size_t n = g.order();
  Factorization f;
  f.kind = ProductKind::kStrong;
  f.coords.assign(n, Coordinates{});
  if (n == 1) {
    f.factors.push_back(g);
    f.coords[0].push_back(0);
    return f;
  }

  Factorization cartesian = CartesianPfd(CartesianSkeleton(g).skeleton);
  Digraph current = g;
  std::vector<Coordinates> current_coords = std::move(cartesian.coords);
  std::vector<Vertex> where(n);
  std::iota(where.begin(), where.end(), Vertex{0});

  while (true) {
    const std::size_t rank = current_coords[0].size();
    std::optional<GroupSplit> accepted;
    std::vector<std::size_t> accepted_group;
    ForEachProperSubset(rank, [&](const std::vector<std::size_t>& group) {
      accepted = TrySplit(current, current_coords, group);
      if (accepted) accepted_group = group;
      return accepted.has_value();
    });
    if (!accepted) {
      f.factors.push_back(current);
      for (Vertex v = 0; v < n; ++v) f.coords[v].push_back(where[v]);
      break;
    }
    f.factors.push_back(accepted->a);
    for (Vertex v = 0; v < n; ++v) {
      f.coords[v].push_back(accepted->a_of[where[v]]);
      where[v] = accepted->b_of[where[v]];
    }
    const std::vector<std::size_t> rest = Complement(accepted_group, rank);
    std::vector<Coordinates> next_coords;
    next_coords.reserve(accepted->b_layer.size());
    for (Vertex v : accepted->b_layer) {
      next_coords.push_back(Restrict(current_coords[v], rest));
    }
    current = std::move(accepted->b);
    current_coords = std::move(next_coords);
  }

  if (!ReconstructsExactly(g, f)) {
    throw Error(ErrorCode::kInternal, "thin strong factors do not reconstruct input");
  }
  return f;
}

MultiplicityTable GcdMultiplicity(const MultiplicityTable& table,
                                  std::span<const std::size_t> group) {
  std::vector<std::size_t> dims;
  for (std::size_t i : group) {
    if (i >= table.grid.rank()) {
      throw Error(ErrorCode::kIndexOutOfRange, "group index " + std::to_string(i));
    }
    dims.push_back(table.grid.dims()[i]);
  }
  MultiplicityTable out;
  out.grid = CoordinateGrid(dims);
  out.values.assign(out.grid.size(), 0);
  for (Vertex x = 0; x < table.grid.size(); ++x) {
    Vertex y = out.grid.Index(Restrict(table.grid.Tuple(x), group));
    out.values[y] = std::gcd(out.values[y], table.values[x]);
  }
  return out;
}

std::vector<std::size_t> PrimeDivisors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

Factorization StrongPfd(const Digraph& g) {
  if (g.order() == 0 || !IsConnected(g)) {
    throw Error(ErrorCode::kNotConnected, "strong PFD needs a connected digraph");
  }
  QuotientWithMultiplicity q = Quotient(g);
  std::size_t l = 0;
  for (std::size_t m : q.mult) l = std::gcd(l, m);
  std::vector<std::size_t> reduced(q.mult);
  for (auto& m : reduced) m /= l;

  // Strong factors of the thin quotient H = G'/S.
  const Digraph& h = q.quotient;
  std::vector<Digraph> h_factors;
  std::vector<Coordinates> h_coords(h.order());
  if (h.order() > 1) {
    Factorization thin = StrongPfdThin(h);
    h_factors = std::move(thin.factors);
    h_coords = std::move(thin.coords);
  }
  std::vector<std::size_t> dims;
  for (const auto& hf : h_factors) dims.push_back(hf.order());

  MultiplicityTable table;
  table.grid = CoordinateGrid(dims);
  table.values.assign(table.grid.size(), 0);
  for (Vertex a = 0; a < h.order(); ++a) {
    table.values[table.grid.Index(h_coords[a])] = reduced[a];
  }

  // Greedy extraction of minimal groups J whose gcd tables multiply back to
  // the residual table.
  struct Group {
    std::vector<std::size_t> members;  // indices into h_factors
    MultiplicityTable table;
  };
  std::vector<Group> groups;
  std::vector<std::size_t> remaining(h_factors.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  while (!remaining.empty()) {
    const std::size_t rank = remaining.size();
    bool found = ForEachProperSubset(rank, [&](const std::vector<std::size_t>& group) {
      const std::vector<std::size_t> rest = Complement(group, rank);
      MultiplicityTable dj = GcdMultiplicity(table, group);
      MultiplicityTable drest = GcdMultiplicity(table, rest);
      for (Vertex x = 0; x < table.grid.size(); ++x) {
        Coordinates c = table.grid.Tuple(x);
        if (table.values[x] != dj.at(Restrict(c, group)) * drest.at(Restrict(c, rest))) {
          return false;
        }
      }
      Group accepted;
      for (std::size_t pos : group) accepted.members.push_back(remaining[pos]);
      accepted.table = std::move(dj);
      groups.push_back(std::move(accepted));
      std::vector<std::size_t> next;
      for (std::size_t pos : rest) next.push_back(remaining[pos]);
      remaining = std::move(next);
      table = std::move(drest);
      return true;
    });
    if (!found) {
      groups.push_back({remaining, table});
      remaining.clear();
    }
  }

  Factorization f;
  f.kind = ProductKind::kStrong;
  std::vector<std::vector<std::size_t>> offsets;
  for (const auto& group : groups) {
    std::vector<Digraph> parts;
    for (std::size_t j : group.members) parts.push_back(h_factors[j]);
    Digraph quotient_part = StrongProduct(parts).graph;
    f.factors.push_back(Blowup(quotient_part, group.table.values));
    std::vector<std::size_t> offset(group.table.values.size() + 1, 0);
    std::partial_sum(group.table.values.begin(), group.table.values.end(),
                     offset.begin() + 1);
    offsets.push_back(std::move(offset));
  }
  const std::vector<std::size_t> primes = PrimeDivisors(l);
  for (std::size_t p : primes) f.factors.push_back(CompleteDigraph(p));
  if (f.factors.empty()) f.factors.push_back(Digraph::Build(1, {}));

  // Vertex t of an S-class of size l*m splits into a K_l position t % l and
  // a copy index t / l, which is spread over the groups in mixed radix.
  f.coords.assign(g.order(), Coordinates{});
  for (std::size_t a = 0; a < q.partition.size(); ++a) {
    const VertexSet& members = q.partition.classes[a];
    const Coordinates& x = h_coords[a];
    for (std::size_t t = 0; t < members.size(); ++t) {
      Coordinates& c = f.coords[members[t]];
      std::size_t copy = t / l;
      for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const Group& group = groups[gi];
        Vertex cell = group.table.grid.Index(Restrict(x, group.members));
        std::size_t d = group.table.values[cell];
        c.push_back(static_cast<Vertex>(offsets[gi][cell] + copy % d));
        copy /= d;
      }
      std::size_t clique = t % l;
      Coordinates digits(primes.size());
      for (std::size_t i = primes.size(); i-- > 0;) {
        digits[i] = static_cast<Vertex>(clique % primes[i]);
        clique /= primes[i];
      }
      c.insert(c.end(), digits.begin(), digits.end());
      if (c.empty()) c.push_back(0);
    }
  }
  if (!ReconstructsExactly(g, f)) {
    throw Error(ErrorCode::kInternal, "strong factors do not reconstruct input");
  }
  return f;
}

}  // namespace dpfd
