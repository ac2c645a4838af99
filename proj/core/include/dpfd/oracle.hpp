#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dpfd/digraph.hpp"
#include "dpfd/factorization.hpp"
#include "dpfd/rng.hpp"

namespace dpfd {

struct OracleConfig {
  std::size_t max_vertices = 10;
  std::chrono::milliseconds time_budget{std::chrono::minutes(2)};
};

// Exhaustive strong-product factorization. For every split n = a*b with
// 2 <= a <= b it backtracks over coordinate assignments, inferring both
// factors on the way, then recurses into the two factors. Shares no code
// with the skeleton pipeline. Throws Error{kSizeLimitExceeded},
// Error{kTimeBudgetExceeded} or Error{kNotConnected}.
Factorization BruteForceStrongPfd(const Digraph& g, const OracleConfig& cfg = {});

// One representative per isomorphism class of connected digraphs on n
// vertices, in order of first appearance over all 4^(n(n-1)/2) pair states.
// Throws Error{kSizeLimitExceeded} for n > 5.
std::vector<Digraph> EnumerateConnectedDigraphs(std::size_t n);

struct RandomDigraphOptions {
  // Probability that a non-tree vertex pair carries arcs.
  double density = 0.3;
  // Every arc paired with its reverse.
  bool symmetric = false;
  // Rejection sampling gives up with Error{kTimeBudgetExceeded} after this
  // many draws.
  std::size_t max_attempts = 20000;
};

std::vector<Vertex> RandomPermutation(std::size_t n, SplitMix64& rng);

// Random spanning tree with random arc orientations plus random extra pairs,
// randomly relabeled. Always connected.
Digraph RandomConnectedDigraph(std::size_t n, SplitMix64& rng,
                               const RandomDigraphOptions& options = {});

// Rejection samplers; identical seeds give identical graphs.
Digraph RandomThinDigraph(std::size_t min_n, std::size_t max_n,
                          std::uint64_t seed,
                          const RandomDigraphOptions& options = {});
Digraph RandomPrimeDigraph(std::size_t min_n, std::size_t max_n,
                           std::uint64_t seed,
                           const RandomDigraphOptions& options = {},
                           const OracleConfig& oracle = {});

// Strong product of `factor_count` oracle-certified primes under a random
// relabeling.
struct ProductInstance {
  std::vector<Digraph> factors;
  Digraph graph;
};
ProductInstance RandomProductInstance(std::size_t factor_count,
                                      std::size_t min_n, std::size_t max_n,
                                      std::uint64_t seed,
                                      const RandomDigraphOptions& options = {});

}  // namespace dpfd
