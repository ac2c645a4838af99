#include "dpfd/relations.hpp"

#include <map>
#include <numeric>
#include <string>

#include "dpfd/error.hpp"

namespace dpfd {

Partition SPartition(const Digraph& g, RelationKind kind) {
  using Key = std::pair<VertexSet, VertexSet>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<Vertex>> members;
  Partition p;
  p.class_of.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Key key;
    if (kind != RelationKind::kSMinus) key.first = OutNeighborhood(g, v);
    if (kind != RelationKind::kSPlus) key.second = InNeighborhood(g, v);
    auto [it, inserted] = index.try_emplace(std::move(key), members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(v);
    p.class_of[v] = it->second;
  }
  p.classes.reserve(members.size());
  for (auto& m : members) p.classes.push_back(VertexSet::FromSorted(std::move(m)));
  return p;
}

bool IsThin(const Digraph& g) {
  return SPartition(g, RelationKind::kS).size() == g.order();
}

QuotientWithMultiplicity Quotient(const Digraph& g) {
  QuotientWithMultiplicity q;
  q.partition = SPartition(g, RelationKind::kS);
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.arcs()) {
    auto a = static_cast<Vertex>(q.partition.class_of[u]);
    auto b = static_cast<Vertex>(q.partition.class_of[v]);
    if (a != b) arcs.push_back({a, b});
  }
  q.quotient = Digraph::Build(q.partition.size(), arcs);
  q.mult.reserve(q.partition.size());
  for (const auto& c : q.partition.classes) q.mult.push_back(c.size());
  return q;
}

Digraph Blowup(const Digraph& q, std::span<const std::size_t> mult) {
  if (mult.size() != q.order()) {
    throw Error(ErrorCode::kIndexOutOfRange, "multiplicity table size");
  }
  for (std::size_t a = 0; a < mult.size(); ++a) {
    if (mult[a] == 0) {
      throw Error(ErrorCode::kZeroMultiplicity,
                  "class " + std::to_string(a));
    }
  }
  if (!IsThin(q)) throw Error(ErrorCode::kNonThinQuotient, "");
  std::vector<std::size_t> start(q.order() + 1, 0);
  for (std::size_t a = 0; a < q.order(); ++a) start[a + 1] = start[a] + mult[a];
  std::vector<Arc> arcs;
  for (Vertex a = 0; a < q.order(); ++a) {
    for (std::size_t i = start[a]; i < start[a + 1]; ++i) {
      for (std::size_t j = start[a]; j < start[a + 1]; ++j) {
        if (i != j) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  for (const auto& [a, b] : q.arcs()) {
    for (std::size_t i = start[a]; i < start[a + 1]; ++i) {
      for (std::size_t j = start[b]; j < start[b + 1]; ++j) {
        arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Digraph::Build(start.back(), arcs);
}

CompleteFactorSplit ExtractCompleteFactor(const Digraph& g) {
  QuotientWithMultiplicity q = Quotient(g);
  std::size_t l = 0;
  for (std::size_t m : q.mult) l = std::gcd(l, m);
  if (l <= 1) return {g, 1};
  std::vector<std::size_t> reduced(q.mult);
  for (auto& m : reduced) m /= l;
  return {Blowup(q.quotient, reduced), l};
}

}  // namespace dpfd
