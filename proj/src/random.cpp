#include "moonforge/random.hpp"

#include <vector>

#include "moonforge/errors.hpp"

namespace moonforge {

ScoreSequence random_feasible(std::size_t n, std::uint64_t den, std::uint64_t seed) {
  if (n == 0) throw ValidationError("random_feasible needs n >= 1");
  if (den == 0 || den == UINT64_MAX) throw ValidationError("denominator bound out of range");
  SplitMix64 rng(seed);
  const BigInt d(den);
  std::vector<BigInt> numerators(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const BigInt k(rng.below(den + 1));
      numerators[i] += k;
      numerators[j] += d - k;
    }
  }
  std::vector<Rational> scores;
  scores.reserve(n);
  for (auto& k : numerators) scores.emplace_back(std::move(k), d);
  return ScoreSequence(std::move(scores));
}

}  // namespace moonforge
