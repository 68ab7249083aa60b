#pragma once

#include <cstddef>
#include <optional>

#include "moonforge/core.hpp"

namespace moonforge {

struct FeasibilityVerdict {
  bool feasible = true;
  std::optional<Witness> witness;  // present iff !feasible

  friend bool operator==(const FeasibilityVerdict&, const FeasibilityVerdict&) = default;
};

inline constexpr std::size_t kDefaultExhaustiveCap = 20;

// Sorted-prefix test: feasible iff the total is binom2(n) and every prefix
// of the ascending-sorted sequence of length k sums to at least binom2(k).
// A violating prefix shorter than n is reported as a subset deficit (the
// shortest one); otherwise a wrong total is reported as a full-sum mismatch.
// O(n log n). Throws ValidationError on a negative entry.
FeasibilityVerdict check_fast(const ScoreSequence& seq);

// Literal test over all 2^n subsets. Proper subsets are visited in
// lexicographic order of their sorted index lists and the first deficit is
// returned; the full set is then checked for equality. Throws
// ValidationError if n > cap or an entry is negative.
FeasibilityVerdict check_exhaustive(const ScoreSequence& seq,
                                    std::size_t cap = kDefaultExhaustiveCap);

// Throws InfeasibleError carrying the check_fast witness.
void require_feasible(const ScoreSequence& seq);

// For seq with a maximum in position 0, the largest value of
//   binom2(|J| + 1) - sum_{i in J} seq[i]
// over proper subsets J of {1, ..., n-1}. For fixed |J| = k the k smallest
// entries give the largest value, so only n - 1 candidates are examined.
// Any feasible sequence has seq[0] strictly above this bound. Throws
// ValidationError on the empty sequence.
Rational max_deficit_excluding_first(const ScoreSequence& seq);

}  // namespace moonforge
