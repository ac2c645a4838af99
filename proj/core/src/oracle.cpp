#include "dpfd/oracle.hpp"

#include <optional>
#include <set>
#include <string>

#include "dpfd/canonical.hpp"
#include "dpfd/error.hpp"
#include "dpfd/products.hpp"
#include "dpfd/relations.hpp"

namespace dpfd {
namespace {

using Clock = std::chrono::steady_clock;

// Backtracking search for g = A x B with |A| = a, |B| = b. Vertices receive
// coordinate pairs (i, j) in BFS order; factor arcs are inferred from pairs
// that share a coordinate and checked against every other assigned pair.
class SplitSearch {
 public:
  SplitSearch(const Digraph& g, std::size_t a, std::size_t b,
              Clock::time_point deadline)
      : g_(g), a_(a), b_(b), deadline_(deadline),
        ci_(g.order(), -1), cj_(g.order(), -1),
        cell_(a * b, -1), fa_(a * a, kUnknown), fb_(b * b, kUnknown) {
    out_size_.resize(g.order());
    in_size_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      out_size_[v] = g.out(v).size() + 1;
      in_size_[v] = g.in(v).size() + 1;
    }
    BuildOrder();
  }

  struct Result {
    Digraph a;
    Digraph b;
    std::vector<std::pair<Vertex, Vertex>> coords;
  };

  std::optional<Result> Run() {
    if (!Assign(0, 0, 0)) return std::nullopt;
    Result r;
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < a_; ++i) {
      for (Vertex k = 0; k < a_; ++k) {
        if (i != k && fa_[i * a_ + k] == kYes) arcs.push_back({i, k});
      }
    }
    r.a = Digraph::Build(a_, arcs);
    arcs.clear();
    for (Vertex j = 0; j < b_; ++j) {
      for (Vertex k = 0; k < b_; ++k) {
        if (j != k && fb_[j * b_ + k] == kYes) arcs.push_back({j, k});
      }
    }
    r.b = Digraph::Build(b_, arcs);
    for (Vertex v = 0; v < g_.order(); ++v) {
      r.coords.push_back({static_cast<Vertex>(ci_[v]), static_cast<Vertex>(cj_[v])});
    }
    return r;
  }

 private:
  static constexpr std::int8_t kUnknown = -1;
  static constexpr std::int8_t kNo = 0;
  static constexpr std::int8_t kYes = 1;

  void BuildOrder() {
    std::vector<char> seen(g_.order(), 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      Vertex v = order_[head];
      auto visit = [&](Vertex w) {
        if (!seen[w]) {
          seen[w] = 1;
          order_.push_back(w);
        }
      };
      for (Vertex w : g_.out(v)) visit(w);
      for (Vertex w : g_.in(v)) visit(w);
    }
  }

  // Sets an unknown entry or checks a known one; records changes on the
  // trail so they can be undone.
  bool Require(std::vector<std::int8_t>& m, std::size_t idx, std::int8_t want) {
    if (m[idx] == kUnknown) {
      m[idx] = want;
      trail_.push_back({&m, idx});
      return true;
    }
    return m[idx] == want;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [m, idx] = trail_.back();
      (*m)[idx] = kUnknown;
      trail_.pop_back();
    }
  }

  bool Consistent(Vertex v) {
    const int i = ci_[v];
    const int j = cj_[v];
    for (std::size_t k = 0; k < placed_; ++k) {
      Vertex u = order_[k];
      if (u == v) continue;
      const int iu = ci_[u];
      const int ju = cj_[u];
      const bool uv = g_.has_arc(u, v);
      const bool vu = g_.has_arc(v, u);
      if (ju == j) {
        if (!Require(fa_, iu * a_ + i, uv ? kYes : kNo)) return false;
        if (!Require(fa_, i * a_ + iu, vu ? kYes : kNo)) return false;
      } else if (iu == i) {
        if (!Require(fb_, ju * b_ + j, uv ? kYes : kNo)) return false;
        if (!Require(fb_, j * b_ + ju, vu ? kYes : kNo)) return false;
      } else {
        if (uv && (!Require(fa_, iu * a_ + i, kYes) || !Require(fb_, ju * b_ + j, kYes))) {
          return false;
        }
        if (vu && (!Require(fa_, i * a_ + iu, kYes) || !Require(fb_, j * b_ + ju, kYes))) {
          return false;
        }
        // Closed-neighborhood sizes multiply: |N[(i,j)]| |N[(i',j')]| =
        // |N[(i,j')]| |N[(i',j)]| whenever all four cells are filled.
        int w1 = cell_[i * b_ + ju];
        int w2 = cell_[iu * b_ + j];
        if (w1 >= 0 && w2 >= 0) {
          if (out_size_[v] * out_size_[u] != out_size_[w1] * out_size_[w2] ||
              in_size_[v] * in_size_[u] != in_size_[w1] * in_size_[w2]) {
            return false;
          }
        }
      }
    }
    // Absent diagonal arcs forbid both factor arcs being present.
    for (std::size_t p = 0; p < placed_; ++p) {
      Vertex u = order_[p];
      for (std::size_t q = 0; q < placed_; ++q) {
        Vertex w = order_[q];
        if (ci_[u] == ci_[w] || cj_[u] == cj_[w]) continue;
        if (!g_.has_arc(u, w) && fa_[ci_[u] * a_ + ci_[w]] == kYes &&
            fb_[cj_[u] * b_ + cj_[w]] == kYes) {
          return false;
        }
      }
    }
    return true;
  }

  bool Assign(std::size_t depth, int max_i, int max_j) {
    if ((++nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) {
      throw Error(ErrorCode::kTimeBudgetExceeded, "brute-force split search");
    }
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    // New coordinate values are introduced in increasing order, which fixes
    // the labeling of both factors.
    const int top_i = std::min<int>(static_cast<int>(a_) - 1, depth == 0 ? 0 : max_i + 1);
    const int top_j = std::min<int>(static_cast<int>(b_) - 1, depth == 0 ? 0 : max_j + 1);
    for (int i = 0; i <= top_i; ++i) {
      for (int j = 0; j <= top_j; ++j) {
        if (cell_[i * b_ + j] >= 0) continue;
        const std::size_t mark = trail_.size();
        ci_[v] = i;
        cj_[v] = j;
        cell_[i * b_ + j] = static_cast<int>(v);
        ++placed_;
        if (Consistent(v) &&
            Assign(depth + 1, std::max(max_i, i), std::max(max_j, j))) {
          return true;
        }
        --placed_;
        cell_[i * b_ + j] = -1;
        ci_[v] = -1;
        cj_[v] = -1;
        Undo(mark);
      }
    }
    return false;
  }

  const Digraph& g_;
  const std::size_t a_;
  const std::size_t b_;
  const Clock::time_point deadline_;
  std::vector<Vertex> order_;
  std::vector<int> ci_;
  std::vector<int> cj_;
  std::vector<int> cell_;
  std::vector<std::int8_t> fa_;
  std::vector<std::int8_t> fb_;
  std::vector<std::size_t> out_size_;
  std::vector<std::size_t> in_size_;
  std::vector<std::pair<std::vector<std::int8_t>*, std::size_t>> trail_;
  std::size_t placed_ = 0;
  std::uint64_t nodes_ = 0;
};

Factorization Factor(const Digraph& g, Clock::time_point deadline) {
  if (Clock::now() >= deadline) {
    throw Error(ErrorCode::kTimeBudgetExceeded, "brute-force factorization");
  }
  const std::size_t n = g.order();
  Factorization f;
  f.kind = ProductKind::kStrong;
  for (std::size_t a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    auto split = SplitSearch(g, a, n / a, deadline).Run();
    if (!split) continue;
    Factorization fa = Factor(split->a, deadline);
    Factorization fb = Factor(split->b, deadline);
    f.factors = fa.factors;
    f.factors.insert(f.factors.end(), fb.factors.begin(), fb.factors.end());
    for (Vertex v = 0; v < n; ++v) {
      Coordinates c = fa.coords[split->coords[v].first];
      const Coordinates& cb = fb.coords[split->coords[v].second];
      c.insert(c.end(), cb.begin(), cb.end());
      f.coords.push_back(std::move(c));
    }
    return f;
  }
  f.factors.push_back(g);
  for (Vertex v = 0; v < n; ++v) f.coords.push_back({v});
  return f;
}

}  // namespace

Factorization BruteForceStrongPfd(const Digraph& g, const OracleConfig& cfg) {
  if (g.order() > cfg.max_vertices) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::to_string(g.order()) + " vertices exceeds oracle limit " +
                    std::to_string(cfg.max_vertices));
  }
  if (g.order() == 0 || !IsConnected(g)) {
    throw Error(ErrorCode::kNotConnected, "oracle needs a connected digraph");
  }
  return Factor(g, Clock::now() + cfg.time_budget);
}

std::vector<Digraph> EnumerateConnectedDigraphs(std::size_t n) {
  if (n > 5) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "exhaustive enumeration is limited to 5 vertices");
  }
  std::vector<Digraph> out;
  if (n == 0) return out;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::set<CanonicalForm> seen;
  const std::uint64_t states = std::uint64_t{1} << (2 * pairs.size());
  std::vector<Arc> arcs;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    arcs.clear();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto bits = (mask >> (2 * p)) & 3U;
      if (bits & 1U) arcs.push_back({pairs[p].first, pairs[p].second});
      if (bits & 2U) arcs.push_back({pairs[p].second, pairs[p].first});
    }
    Digraph g = Digraph::Build(n, arcs);
    if (!IsConnected(g)) continue;
    if (seen.insert(Canonicalize(g)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Vertex> RandomPermutation(std::size_t n, SplitMix64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.Shuffle(std::span<Vertex>(perm));
  return perm;
}

Digraph RandomConnectedDigraph(std::size_t n, SplitMix64& rng,
                               const RandomDigraphOptions& options) {
  // state per ordered-pair slot: bit 0 = u->v, bit 1 = v->u (u < v).
  std::vector<std::uint8_t> state(n * n, 0);
  auto draw = [&]() -> std::uint8_t {
    return options.symmetric ? 3 : static_cast<std::uint8_t>(1 + rng.Uniform(3));
  };
  for (Vertex v = 1; v < n; ++v) {
    auto parent = static_cast<Vertex>(rng.Uniform(v));
    state[parent * n + v] = draw();
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (state[u * n + v] == 0 && rng.Bernoulli(options.density)) {
        state[u * n + v] = draw();
      }
    }
  }
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (state[u * n + v] & 1U) arcs.push_back({u, v});
      if (state[u * n + v] & 2U) arcs.push_back({v, u});
    }
  }
  Digraph g = Digraph::Build(n, arcs);
  return Relabel(g, RandomPermutation(n, rng));
}

namespace {

template <typename Accept>
Digraph Sample(std::size_t min_n, std::size_t max_n, std::uint64_t seed,
               const RandomDigraphOptions& options, Accept&& accept) {
  if (min_n == 0 || max_n < min_n) {
    throw Error(ErrorCode::kIndexOutOfRange, "vertex range");
  }
  SplitMix64 rng(seed);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    const std::size_t n = rng.UniformRange(min_n, max_n);
    Digraph g = RandomConnectedDigraph(n, rng, options);
    if (accept(g)) return g;
  }
  throw Error(ErrorCode::kTimeBudgetExceeded, "rejection sampling exhausted");
}

}  // namespace

Digraph RandomThinDigraph(std::size_t min_n, std::size_t max_n,
                          std::uint64_t seed,
                          const RandomDigraphOptions& options) {
  return Sample(min_n, max_n, seed, options,
                [](const Digraph& g) { return IsThin(g); });
}

Digraph RandomPrimeDigraph(std::size_t min_n, std::size_t max_n,
                           std::uint64_t seed,
                           const RandomDigraphOptions& options,
                           const OracleConfig& oracle) {
  return Sample(min_n, max_n, seed, options, [&](const Digraph& g) {
    return g.order() >= 2 && BruteForceStrongPfd(g, oracle).factors.size() == 1;
  });
}

ProductInstance RandomProductInstance(std::size_t factor_count,
                                      std::size_t min_n, std::size_t max_n,
                                      std::uint64_t seed,
                                      const RandomDigraphOptions& options) {
  if (factor_count == 0) throw Error(ErrorCode::kEmptyFactorList, "");
  SplitMix64 rng(seed);
  ProductInstance inst;
  for (std::size_t i = 0; i < factor_count; ++i) {
    inst.factors.push_back(RandomPrimeDigraph(min_n, max_n, rng.Next(), options));
  }
  Digraph product = StrongProduct(inst.factors).graph;
  inst.graph = Relabel(product, RandomPermutation(product.order(), rng));
  return inst;
}

}  // namespace dpfd
