#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moonforge/blowup.hpp"
#include "moonforge/core.hpp"

namespace moonforge {

// The rational of least denominator strictly inside (lo, hi); among
// integers, the one of least magnitude. Found by Stern-Brocot descent.
// Throws ValidationError if lo >= hi.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

struct PerturbResult {
  ScoreSequence output;
  // output and targets are processed in the order targets[permutation[k]];
  // permutation[0] is the first maximum.
  std::vector<std::size_t> permutation;
  Rational sup_error;
  std::uint64_t m = 1;
};

// Replaces a feasible sequence by a nearby feasible one with small
// denominators: the first maximum drops by less than 1/m, the others rise,
// and the last entry (in permuted order) closes the total at binom2(n).
// Every entry moves by strictly less than 1/m. Applied even to sequences
// that are already rational.
PerturbResult perturb(const ScoreSequence& targets, std::uint64_t m);

struct ApproxRecord {
  std::uint64_t m = 1;
  ScoreSequence perturbed;
  BigInt lcm_denominator;
  BigInt blowup_vertices;
  Rational sup_error;
  // Empty when the blow-up exceeded the vertex cap.
  std::optional<GeneralizedTournament> tournament;
  std::string skipped_reason;
};

struct ApproxRun {
  std::vector<std::uint64_t> schedule;
  std::vector<ApproxRecord> records;
};

// For each accuracy m in a strictly increasing schedule: perturb, then
// realize the perturbed sequence through the blow-up. Records whose blow-up
// is over the cap are kept with no tournament and the run continues.
ApproxRun approximate_realize(const ScoreSequence& targets,
                              std::span<const std::uint64_t> schedule,
                              const RationalRealizeOptions& options = {});

}  // namespace moonforge
