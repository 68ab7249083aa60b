#include "moonforge/realize.hpp"

#include <vector>

#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"
#include "moonforge/flow.hpp"

namespace moonforge {

namespace {

std::vector<std::int64_t> integer_scores(const ScoreSequence& seq) {
  seq.require_nonnegative();
  std::vector<std::int64_t> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].is_integer()) {
      throw ValidationError("score " + std::to_string(i + 1) + " is not an integer (" +
                            seq[i].str() + ")");
    }
    // Scores of a tournament are at most n - 1; anything larger is caught
    // by the feasibility check, so clamping here loses nothing.
    const BigInt& v = seq[i].num();
    out.push_back(v > BigInt(seq.size()) ? static_cast<std::int64_t>(seq.size())
                                         : v.convert_to<std::int64_t>());
  }
  return out;
}

// Pairs in lexicographic order; each goes to the endpoint with the larger
// remaining score, ties to the lower index.
std::optional<Tournament> greedy(const std::vector<std::int64_t>& targets) {
  const std::size_t n = targets.size();
  std::vector<std::int64_t> residual = targets;
  Tournament::Builder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (residual[u] >= residual[v]) {
        b.orient(u, v);
        --residual[u];
      } else {
        b.orient(v, u);
        --residual[v];
      }
    }
  }
  for (auto r : residual) {
    if (r != 0) return std::nullopt;
  }
  return std::move(b).build();
}

}  // namespace

Realization realize_integer_detailed(const ScoreSequence& seq, RealizeOptions options) {
  const auto targets = integer_scores(seq);
  require_feasible(seq);
  const std::size_t n = targets.size();

  if (options.greedy_first) {
    if (auto t = greedy(targets); t && scores_of(*t) == seq) {
      return {std::move(*t), binom2(n), true};
    }
  }

  FlowNetwork net(targets);
  const auto value = net.max_flow();
  if (static_cast<std::uint64_t>(value) != binom2(n)) {
    throw InternalError("max flow " + std::to_string(value) + " does not orient all " +
                        std::to_string(binom2(n)) + " pairs of a feasible sequence");
  }
  Tournament::Builder b(n);
  std::size_t p = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++p) {
      if (net.pair_won_by_first(p)) {
        b.orient(u, v);
      } else {
        b.orient(v, u);
      }
    }
  }
  Tournament t = std::move(b).build();
  if (scores_of(t) != seq) throw InternalError("flow orientation does not reproduce the scores");
  return {std::move(t), static_cast<std::uint64_t>(value), false};
}

std::optional<Tournament> realize_backtrack(const ScoreSequence& seq, std::size_t cap) {
  if (seq.size() > cap) {
    throw ValidationError("backtracking realizer limited to " + std::to_string(cap) +
                          " vertices, got " + std::to_string(seq.size()));
  }
  const auto targets = integer_scores(seq);
  const std::size_t n = targets.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::int64_t> residual = targets;
  std::vector<std::int64_t> unplayed(n, n == 0 ? 0 : static_cast<std::int64_t>(n - 1));
  std::vector<bool> first_wins(pairs.size());

  auto ok = [&](std::size_t u) { return residual[u] >= 0 && residual[u] <= unplayed[u]; };
  for (std::size_t u = 0; u < n; ++u) {
    if (!ok(u)) return std::nullopt;
  }

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == pairs.size()) return true;
    auto [u, v] = pairs[k];
    --unplayed[u];
    --unplayed[v];
    for (bool u_wins : {true, false}) {
      std::size_t winner = u_wins ? u : v;
      --residual[winner];
      if (ok(u) && ok(v) && self(self, k + 1)) {
        first_wins[k] = u_wins;
        return true;
      }
      ++residual[winner];
    }
    ++unplayed[u];
    ++unplayed[v];
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  Tournament::Builder b(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [u, v] = pairs[k];
    if (first_wins[k]) {
      b.orient(u, v);
    } else {
      b.orient(v, u);
    }
  }
  return std::move(b).build();
}

}  // namespace moonforge
