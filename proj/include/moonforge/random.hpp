#pragma once

#include <cstddef>
#include <cstdint>

#include "moonforge/core.hpp"

namespace moonforge {

// SplitMix64 (Steele, Lea & Flood). The output stream for a given seed is
// part of the CLI contract, so the algorithm is fixed here rather than
// taken from <random>, whose engines and distributions vary by platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound) by rejection of the short final block.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Row sums of a random generalized tournament: for each pair i < j in
// lexicographic order, w(i, j) = k / den with k uniform on {0, ..., den}
// and w(j, i) = 1 - w(i, j). The result is always a score sequence.
ScoreSequence random_feasible(std::size_t n, std::uint64_t den, std::uint64_t seed);

}  // namespace moonforge
