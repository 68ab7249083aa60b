#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "moonforge/core.hpp"

namespace moonforge {

struct RealizeOptions {
  // Try the greedy orientation first; it is post-verified and the flow path
  // runs whenever it misses.
  bool greedy_first = false;
};

struct Realization {
  Tournament tournament;
  // binom2(n) on every successful call. For the greedy path this is the
  // number of pairs it oriented.
  std::uint64_t flow_value = 0;
  bool used_greedy = false;
};

// Builds a tournament whose score vector is exactly seq.
// Throws ValidationError for non-integer or negative entries,
// InfeasibleError when check_fast rejects seq, and InternalError if the
// maximum flow fails to orient every pair of a feasible input.
Realization realize_integer_detailed(const ScoreSequence& seq, RealizeOptions options = {});

inline Tournament realize_integer(const ScoreSequence& seq, RealizeOptions options = {}) {
  return realize_integer_detailed(seq, options).tournament;
}

inline constexpr std::size_t kBacktrackCap = 8;

// Exhaustive search over pair orientations with residual-score pruning.
// Independent of the flow path; returns nullopt when no tournament has
// these scores. Throws ValidationError if n > cap or an entry is not a
// non-negative integer.
std::optional<Tournament> realize_backtrack(const ScoreSequence& seq,
                                            std::size_t cap = kBacktrackCap);

}  // namespace moonforge
