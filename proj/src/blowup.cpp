#include "moonforge/blowup.hpp"

#include <algorithm>
#include <vector>

#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"

namespace moonforge {

ScoreSequence base_sequence(std::size_t m) {
  if (m == 0) throw ValidationError("base sequence needs m >= 1");
  std::vector<Rational> b;
  b.reserve(m);
  for (std::size_t l = 0; l < m; ++l) b.emplace_back(static_cast<std::int64_t>(l));
  return ScoreSequence(std::move(b));
}

BlowupPlan blowup_scores(const ScoreSequence& targets, std::size_t m) {
  if (m == 0) throw ValidationError("blow-up factor must be positive");
  const BigInt big_m(m);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (big_m % targets[i].den() != 0) {
      throw ValidationError("blow-up factor " + std::to_string(m) +
                            " is not divisible by the denominator of score " +
                            std::to_string(i + 1) + " (" + targets[i].str() + ")");
    }
  }
  require_feasible(targets);

  BlowupPlan plan;
  plan.n = targets.size();
  plan.m = m;
  plan.base = base_sequence(m);
  plan.targets = targets;
  std::vector<Rational> lifted;
  lifted.reserve(plan.n * m);
  for (std::size_t i = 0; i < plan.n; ++i) {
    Rational scaled = targets[i] * Rational(big_m);
    for (std::size_t l = 0; l < m; ++l) lifted.push_back(scaled + plan.base[l]);
  }
  plan.lifted = ScoreSequence(std::move(lifted));

  if (!check_fast(plan.lifted).feasible) {
    throw InternalError("lifted sequence is not a tournament score sequence");
  }
  return plan;
}

GeneralizedTournament cluster_average(const Tournament& h, std::size_t n, std::size_t m) {
  if (m == 0 || h.n() != n * m) {
    throw ValidationError("tournament has " + std::to_string(h.n()) + " vertices, expected " +
                          std::to_string(n) + " clusters of " + std::to_string(m));
  }
  const Rational pairs(BigInt(m) * m);
  std::vector<Rational> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto count = h.count_edges(i * m, (i + 1) * m, j * m, (j + 1) * m);
      w[i * n + j] = Rational(BigInt(count)) / pairs;
    }
  }
  return GeneralizedTournament(n, std::move(w));
}

GeneralizedTournament realize_rational(const ScoreSequence& targets,
                                       const RationalRealizeOptions& options) {
  require_feasible(targets);
  const BigInt m = lcm_denominators(targets);
  const BigInt vertices = m * targets.size();
  if (vertices > options.vertex_cap) throw BlowupTooLargeError(vertices, options.vertex_cap);

  const auto factor = m.convert_to<std::size_t>();
  BlowupPlan plan = blowup_scores(targets, factor);
  Tournament h = realize_integer(plan.lifted, options.realize);
  GeneralizedTournament g = cluster_average(h, plan.n, factor);
  if (g.scores() != targets) {
    throw InternalError("cluster averages do not reproduce the target scores");
  }
  return g;
}

bool check_partition_inequalities(const ScoreSequence& targets, std::size_t m,
                                  std::span<const std::int64_t> j) {
  const std::size_t n = targets.size();
  if (m == 0) throw ValidationError("blow-up factor must be positive");
  if (j.size() != n) {
    throw ValidationError("partition has " + std::to_string(j.size()) + " parts, expected " +
                          std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (j[i] < 0 || j[i] > static_cast<std::int64_t>(m) || (i > 0 && j[i] < j[i - 1])) {
      throw ValidationError("partition sizes must be non-decreasing and within [0, m]");
    }
  }

  BigInt total = 0, squares = 0, weighted_rank = 0;
  Rational weighted_scores;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt ji(j[i]);
    total += ji;
    squares += ji * ji;
    weighted_rank += ji * static_cast<std::uint64_t>(n - 1 - i);
    weighted_scores += targets[i] * Rational(ji);
  }

  // Smallest possible base contribution of j_i cells in one cluster.
  auto base = base_sequence(m);
  std::vector<Rational> sorted_base(base.begin(), base.end());
  std::sort(sorted_base.begin(), sorted_base.end());
  std::vector<Rational> prefix(m + 1);
  for (std::size_t l = 0; l < m; ++l) prefix[l + 1] = prefix[l] + sorted_base[l];
  Rational base_floor;
  for (std::size_t i = 0; i < n; ++i) base_floor += prefix[static_cast<std::size_t>(j[i])];

  const bool first = weighted_scores >= Rational(weighted_rank);
  const bool second = base_floor * 2 >= Rational(squares - total);
  const bool third = BigInt(m) * weighted_rank * 2 >= total * total - squares;
  return first && second && third;
}

}  // namespace moonforge
