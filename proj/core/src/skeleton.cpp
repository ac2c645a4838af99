#include "dpfd/skeleton.hpp"

#include <algorithm>
#include <string>

#include "dpfd/error.hpp"
#include "dpfd/relations.hpp"

namespace dpfd {

// Per-arc data shared by all candidate checks: the closed neighborhoods of
// both endpoints and their intersections.
struct DispensabilityChecker::ArcView {
  Vertex x;
  Vertex y;
  VertexSet common_plus;
  VertexSet common_minus;

  const VertexSet& common(Sign sign) const {
    return sign == Sign::kPlus ? common_plus : common_minus;
  }
};

DispensabilityChecker::DispensabilityChecker(const Digraph& g) : g_(g) {
  out_.reserve(g.order());
  in_.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out_.push_back(OutNeighborhood(g, v));
    in_.push_back(InNeighborhood(g, v));
  }
  Partition plus = SPartition(g, RelationKind::kSPlus);
  Partition minus = SPartition(g, RelationKind::kSMinus);
  plus_class_ = std::move(plus.class_of);
  minus_class_ = std::move(minus.class_of);
  for (const auto& c : plus.classes) plus_members_.push_back(c.ids());
  for (const auto& c : minus.classes) minus_members_.push_back(c.ids());
}

void DispensabilityChecker::CheckArc(Vertex x, Vertex y) const {
  if (!g_.has_arc(x, y)) {
    throw Error(ErrorCode::kArcNotPresent,
                "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
}

NConditions DispensabilityChecker::ConditionsAt(const ArcView& arc, Vertex z,
                                               Sign sign) const {
  const VertexSet& nx = Nbhd(arc.x, sign);
  const VertexSet& ny = Nbhd(arc.y, sign);
  const VertexSet& nz = Nbhd(z, sign);
  const VertexSet& nxy = arc.common(sign);
  NConditions c;
  c.cond1 = nx.is_proper_subset_of(nz) && nz.is_proper_subset_of(ny);
  c.cond2 = ny.is_proper_subset_of(nz) && nz.is_proper_subset_of(nx);
  // X∩Y ⊆ Z makes X∩Y a subset of both X∩Z and Y∩Z; properness is then a
  // size comparison.
  if (nxy.is_subset_of(nz)) {
    c.cond3 = nx.intersection_size(nz) > nxy.size() &&
              ny.intersection_size(nz) > nxy.size();
  }
  return c;
}

bool DispensabilityChecker::WeakAt(const ArcView& arc, Vertex z,
                                  Sign sign) const {
  return arc.common(sign).is_subset_of(Nbhd(z, sign));
}

NConditions DispensabilityChecker::Conditions(Vertex x, Vertex y, Vertex z,
                                             Sign sign) const {
  CheckArc(x, y);
  if (z >= g_.order()) throw Error(ErrorCode::kVertexOutOfRange, "z");
  ArcView arc{x, y, out_[x].intersect(out_[y]), in_[x].intersect(in_[y])};
  return ConditionsAt(arc, z, sign);
}

bool DispensabilityChecker::WeakCondition(Vertex x, Vertex y, Vertex z,
                                         Sign sign) const {
  CheckArc(x, y);
  if (z >= g_.order()) throw Error(ErrorCode::kVertexOutOfRange, "z");
  ArcView arc{x, y, out_[x].intersect(out_[y]), in_[x].intersect(in_[y])};
  return WeakAt(arc, z, sign);
}

std::vector<Vertex> DispensabilityChecker::Candidates(Vertex x,
                                                     Vertex y) const {
  VertexSet around_x = out_[x].unite(in_[x]);
  VertexSet around_y = out_[y].unite(in_[y]);
  return around_x.intersect(around_y).ids();
}

std::optional<std::pair<Vertex, Vertex>> DispensabilityChecker::FindD5(
    Vertex x, Vertex y, bool exhaustive) const {
  auto ok = [&](Vertex z) { return z != x && z != y; };
  if (exhaustive) {
    for (Vertex z1 = 0; z1 < g_.order(); ++z1) {
      if (!ok(z1) || out_[x] != out_[z1] || in_[z1] != in_[y]) continue;
      for (Vertex z2 = 0; z2 < g_.order(); ++z2) {
        if (!ok(z2) || z2 == z1) continue;
        if (in_[x] == in_[z2] && out_[z2] == out_[y]) return {{z1, z2}};
      }
    }
    return std::nullopt;
  }
  // z1 ∈ S+(x) ∩ S-(y), z2 ∈ S-(x) ∩ S+(y).
  for (Vertex z1 : plus_members_[plus_class_[x]]) {
    if (!ok(z1) || minus_class_[z1] != minus_class_[y]) continue;
    for (Vertex z2 : minus_members_[minus_class_[x]]) {
      if (!ok(z2) || z2 == z1 || plus_class_[z2] != plus_class_[y]) continue;
      return {{z1, z2}};
    }
  }
  return std::nullopt;
}

std::optional<DispensabilityWitness> DispensabilityChecker::Dispensability(
    Vertex x, Vertex y, const SkeletonOptions& options) const {
  CheckArc(x, y);
  ArcView arc{x, y, out_[x].intersect(out_[y]), in_[x].intersect(in_[y])};

  std::vector<Vertex> candidates;
  if (options.exhaustive_z) {
    candidates.resize(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) candidates[v] = v;
  } else {
    candidates = Candidates(x, y);
  }

  // Conditions per candidate, evaluated once and reused by D1-D4.
  std::vector<NConditions> plus(candidates.size());
  std::vector<NConditions> minus(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    plus[i] = ConditionsAt(arc, candidates[i], Sign::kPlus);
    minus[i] = ConditionsAt(arc, candidates[i], Sign::kMinus);
  }

  DispensabilityWitness w;
  // D1
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (plus[i].any() && minus[i].any()) {
      w.rule = DispensabilityRule::kD1;
      w.z = candidates[i];
      w.plus = plus[i];
      w.minus = minus[i];
      return w;
    }
  }
  // D2: clause (a) and clause (b) are searched independently.
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  for (std::size_t i = 0; i < candidates.size() && !a; ++i) {
    if (plus[i].cond3 && WeakAt(arc, candidates[i], Sign::kMinus)) a = i;
  }
  for (std::size_t i = 0; a && !b && i < candidates.size(); ++i) {
    if (minus[i].cond3 && WeakAt(arc, candidates[i], Sign::kPlus)) b = i;
  }
  if (a && b) {
    w.rule = DispensabilityRule::kD2;
    w.z1 = candidates[*a];
    w.z2 = candidates[*b];
    w.plus = plus[*a];
    w.minus = minus[*b];
    return w;
  }
  // D3
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vertex z = candidates[i];
    if (plus[i].any() && (in_[x] == in_[z] || in_[y] == in_[z])) {
      w.rule = DispensabilityRule::kD3;
      w.z = z;
      w.plus = plus[i];
      w.minus = minus[i];
      return w;
    }
  }
  // D4
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vertex z = candidates[i];
    if (minus[i].any() && (out_[x] == out_[z] || out_[y] == out_[z])) {
      w.rule = DispensabilityRule::kD4;
      w.z = z;
      w.plus = plus[i];
      w.minus = minus[i];
      return w;
    }
  }
  // D5
  if (auto pair = FindD5(x, y, options.exhaustive_z)) {
    w.rule = DispensabilityRule::kD5;
    w.z1 = pair->first;
    w.z2 = pair->second;
    return w;
  }
  return std::nullopt;
}

NConditions NConditionsOf(const Digraph& g, Vertex x, Vertex y, Vertex z,
                          Sign sign) {
  return DispensabilityChecker(g).Conditions(x, y, z, sign);
}

bool WeakNCondition(const Digraph& g, Vertex x, Vertex y, Vertex z,
                    Sign sign) {
  return DispensabilityChecker(g).WeakCondition(x, y, z, sign);
}

std::optional<DispensabilityWitness> Dispensability(
    const Digraph& g, Vertex x, Vertex y, const SkeletonOptions& options) {
  return DispensabilityChecker(g).Dispensability(x, y, options);
}

SkeletonResult CartesianSkeleton(const Digraph& g,
                                 const SkeletonOptions& options) {
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kNotConnected, "skeleton needs a connected digraph");
  }
  if (!IsThin(g)) {
    throw Error(ErrorCode::kNotThin,
                "skeleton needs a thin digraph; quotient by S first");
  }
  DispensabilityChecker checker(g);
  SkeletonResult result;
  std::vector<Arc> kept;
  kept.reserve(g.arc_count());
  for (const Arc& arc : g.arcs()) {
    if (auto w = checker.Dispensability(arc.first, arc.second, options)) {
      result.removed.emplace_back(arc, *w);
    } else {
      kept.push_back(arc);
    }
  }
  result.skeleton = Digraph::Build(g.order(), kept);
  return result;
}

}  // namespace dpfd
