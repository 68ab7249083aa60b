#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "moonforge/core.hpp"
#include "moonforge/realize.hpp"

namespace moonforge {

// Lift of a rational score sequence to an integer one on m * n vertices.
// Vertex l of cluster i (both 0-based) is index i * m + l and carries the
// integer score m * targets[i] + base[l].
struct BlowupPlan {
  std::size_t n = 0;
  std::size_t m = 1;
  ScoreSequence base;     // length m, sums to binom2(m)
  ScoreSequence targets;  // length n
  ScoreSequence lifted;   // length m * n

  std::size_t vertex(std::size_t cluster, std::size_t member) const { return cluster * m + member; }
};

// Transitive score sequence (0, 1, ..., m - 1).
ScoreSequence base_sequence(std::size_t m);

// Throws ValidationError if m == 0 or some denominator does not divide m,
// InfeasibleError if targets fail check_fast, and InternalError if the
// lifted sequence is not feasible.
BlowupPlan blowup_scores(const ScoreSequence& targets, std::size_t m);

// Averages the m * m cross pairs between every two clusters of h:
// w(i, j) = |edges from cluster i to cluster j| / m^2.
GeneralizedTournament cluster_average(const Tournament& h, std::size_t n, std::size_t m);

inline constexpr std::size_t kDefaultVertexCap = 5000;

struct RationalRealizeOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
  RealizeOptions realize;
};

// Blow up by m = lcm of the target denominators, realize the integer lift,
// and average back down. Row sums of the result equal targets exactly and
// every weight has a denominator dividing m^2. Throws InfeasibleError, or
// BlowupTooLargeError when m * n exceeds the vertex cap.
GeneralizedTournament realize_rational(const ScoreSequence& targets,
                                       const RationalRealizeOptions& options = {});

// Checks the three partition inequalities that together imply feasibility
// of the lifted sequence, for the partition where cluster i contributes
// j[i] vertices (j non-decreasing, each in [0, m]):
//   (1) sum j_i * d_i >= sum j_i * (n - 1 - i)
//   (2) sum over clusters of the j_i smallest base entries
//         >= (sum j_i^2 - sum j_i) / 2
//   (3) m * sum j_i * (n - 1 - i) >= ((sum j_i)^2 - sum j_i^2) / 2
// with i 0-based. Throws ValidationError on malformed j.
bool check_partition_inequalities(const ScoreSequence& targets, std::size_t m,
                                  std::span<const std::int64_t> j);

}  // namespace moonforge
