#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dpfd/digraph.hpp"

namespace dpfd {

enum class Sign { kPlus, kMinus };

enum class NCondition { kNone, kCond1, kCond2, kCond3 };

// Which of the three strict-inclusion conditions an arc xy satisfies with a
// vertex z, for one sign. For sign s and closed s-neighborhoods X, Y, Z of
// x, y, z:
//   (1) X ⊂ Z ⊂ Y
//   (2) Y ⊂ Z ⊂ X
//   (3) X∩Y ⊂ X∩Z and X∩Y ⊂ Y∩Z
// All inclusions are proper. Several may hold at once.
struct NConditions {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;

  bool any() const noexcept { return cond1 || cond2 || cond3; }
  NCondition first() const noexcept {
    if (cond1) return NCondition::kCond1;
    if (cond2) return NCondition::kCond2;
    if (cond3) return NCondition::kCond3;
    return NCondition::kNone;
  }
  friend bool operator==(const NConditions&, const NConditions&) = default;
};

enum class DispensabilityRule { kD1, kD2, kD3, kD4, kD5 };

// Why an arc was removed. D1/D3/D4 populate z; D2/D5 populate z1 and z2.
// `plus` and `minus` hold the N+/N- conditions evaluated at the witness:
// at z for D1/D3/D4, at z1 (plus) and z2 (minus) for D2, unused for D5.
struct DispensabilityWitness {
  DispensabilityRule rule = DispensabilityRule::kD1;
  std::optional<Vertex> z;
  std::optional<Vertex> z1;
  std::optional<Vertex> z2;
  NConditions plus;
  NConditions minus;

  friend bool operator==(const DispensabilityWitness&,
                         const DispensabilityWitness&) = default;
};

struct SkeletonOptions {
  // Scan every vertex as a witness candidate instead of the common
  // neighborhood of the arc's endpoints. Debug cross-check only.
  bool exhaustive_z = false;
};

struct SkeletonResult {
  Digraph skeleton;
  // In arc order of the input.
  std::vector<std::pair<Arc, DispensabilityWitness>> removed;
};

// Precomputed closed neighborhoods and S+/S- classes of a digraph. Every
// query is evaluated against the digraph given at construction.
class DispensabilityChecker {
 public:
  explicit DispensabilityChecker(const Digraph& g);

  const Digraph& graph() const noexcept { return g_; }

  // The following throw Error{kArcNotPresent} unless xy is an arc.
  NConditions Conditions(Vertex x, Vertex y, Vertex z, Sign sign) const;
  bool WeakCondition(Vertex x, Vertex y, Vertex z, Sign sign) const;
  // First firing rule in the order D1..D5, candidates ascending.
  std::optional<DispensabilityWitness> Dispensability(
      Vertex x, Vertex y, const SkeletonOptions& options = {}) const;

  // Vertices adjacent (either direction, or equal) to both x and y.
  std::vector<Vertex> Candidates(Vertex x, Vertex y) const;

 private:
  struct ArcView;

  void CheckArc(Vertex x, Vertex y) const;
  const VertexSet& Nbhd(Vertex v, Sign sign) const {
    return sign == Sign::kPlus ? out_[v] : in_[v];
  }
  NConditions ConditionsAt(const ArcView& arc, Vertex z, Sign sign) const;
  bool WeakAt(const ArcView& arc, Vertex z, Sign sign) const;
  std::optional<std::pair<Vertex, Vertex>> FindD5(Vertex x, Vertex y,
                                                  bool exhaustive) const;

  const Digraph& g_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<std::size_t> plus_class_;
  std::vector<std::size_t> minus_class_;
  std::vector<std::vector<Vertex>> plus_members_;
  std::vector<std::vector<Vertex>> minus_members_;
};

// Convenience wrappers that build a DispensabilityChecker per call.
NConditions NConditionsOf(const Digraph& g, Vertex x, Vertex y, Vertex z,
                          Sign sign);
bool WeakNCondition(const Digraph& g, Vertex x, Vertex y, Vertex z, Sign sign);
std::optional<DispensabilityWitness> Dispensability(
    const Digraph& g, Vertex x, Vertex y, const SkeletonOptions& options = {});

// Removes every dispensable arc. Throws Error{kNotConnected} or
// Error{kNotThin}; non-thin inputs have to be quotiented first.
SkeletonResult CartesianSkeleton(const Digraph& g,
                                 const SkeletonOptions& options = {});

}  // namespace dpfd
