#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dpfd/digraph.hpp"

namespace dpfd {

enum class RelationKind {
  kSPlus,   // equal closed out-neighborhoods
  kSMinus,  // equal closed in-neighborhoods
  kS,       // both
};

// Equivalence classes ordered by their smallest member.
struct Partition {
  std::vector<VertexSet> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

struct QuotientWithMultiplicity {
  Digraph quotient;
  std::vector<std::size_t> mult;
  Partition partition;
};

struct CompleteFactorSplit {
  Digraph reduced;     // G' with G = G' x K_l and no complete factor left
  std::size_t l = 1;
};

Partition SPartition(const Digraph& g, RelationKind kind);
bool IsThin(const Digraph& g);
QuotientWithMultiplicity Quotient(const Digraph& g);

// Replaces quotient vertex a by mult[a] mutually adjacent copies; copies of a
// are numbered consecutively, classes in order. Throws
// Error{kNonThinQuotient} or Error{kZeroMultiplicity}.
Digraph Blowup(const Digraph& q, std::span<const std::size_t> mult);

// Largest l with g = G' x K_l (l is the gcd of the S-class sizes).
CompleteFactorSplit ExtractCompleteFactor(const Digraph& g);

}  // namespace dpfd
