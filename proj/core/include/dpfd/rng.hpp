#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace dpfd {

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
// the output is mixed with shifts 30/27/31 and multipliers
// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB. All derived draws below are
// defined in terms of Next(), so fixtures are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t UniformRange(std::uint64_t lo, std::uint64_t hi) {
    return lo + Uniform(hi - lo + 1);
  }
  // True with probability p, using the top 53 bits.
  bool Bernoulli(double p);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Uniform(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace dpfd
