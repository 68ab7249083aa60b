#include "moonforge/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "moonforge/errors.hpp"

namespace moonforge {

namespace {

std::vector<std::size_t> ascending_order(const ScoreSequence& seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  return order;
}

std::optional<Witness> full_sum_witness(const ScoreSequence& seq, const Rational& total) {
  Rational deficit = Rational(BigInt(binom2(seq.size()))) - total;
  if (deficit.is_zero()) return std::nullopt;
  std::vector<std::size_t> all(seq.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Witness{std::move(all), std::move(deficit), WitnessKind::kFullSumMismatch};
}

FeasibilityVerdict infeasible(Witness w) { return {false, std::move(w)}; }

}  // namespace

FeasibilityVerdict check_fast(const ScoreSequence& seq) {
  seq.require_nonnegative();
  const std::size_t n = seq.size();
  const auto order = ascending_order(seq);

  Rational prefix;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += seq[order[k - 1]];
    Rational need(BigInt(binom2(k)));
    if (prefix < need) {
      std::vector<std::size_t> idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(idx.begin(), idx.end());
      return infeasible({std::move(idx), need - prefix, WitnessKind::kSubsetDeficit});
    }
  }
  if (n > 0) prefix += seq[order[n - 1]];
  if (auto w = full_sum_witness(seq, prefix)) return infeasible(std::move(*w));
  return {};
}

FeasibilityVerdict check_exhaustive(const ScoreSequence& seq, std::size_t cap) {
  const std::size_t n = seq.size();
  if (n > cap) {
    throw ValidationError("exhaustive check limited to " + std::to_string(cap) + " entries, got " +
                          std::to_string(n));
  }
  seq.require_nonnegative();

  // Scale to integers so the subset walk avoids gcd work.
  const BigInt scale = lcm_denominators(seq);
  std::vector<BigInt> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = seq[i].num() * (scale / seq[i].den());

  // Depth-first preorder over increasing index lists is exactly
  // lexicographic order of the sorted subsets.
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  std::vector<BigInt> sums{BigInt(0)};
  std::optional<Witness> found;

  auto visit = [&](auto&& self, std::size_t next) -> bool {
    for (std::size_t i = next; i < n; ++i) {
      chosen.push_back(i);
      sums.push_back(sums.back() + scaled[i]);
      const std::size_t k = chosen.size();
      if (k < n) {
        BigInt need = BigInt(binom2(k)) * scale;
        if (sums.back() < need) {
          found = Witness{chosen, Rational(need - sums.back(), scale), WitnessKind::kSubsetDeficit};
          return true;
        }
      }
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      sums.pop_back();
    }
    return false;
  };
  if (visit(visit, 0)) return infeasible(std::move(*found));

  if (auto w = full_sum_witness(seq, seq.sum())) return infeasible(std::move(*w));
  return {};
}

void require_feasible(const ScoreSequence& seq) {
  auto verdict = check_fast(seq);
  if (!verdict.feasible) throw InfeasibleError(std::move(*verdict.witness));
}

Rational max_deficit_excluding_first(const ScoreSequence& seq) {
  if (seq.empty()) throw ValidationError("max_deficit_excluding_first needs at least one entry");
  std::vector<Rational> rest(seq.begin() + 1, seq.end());
  std::sort(rest.begin(), rest.end());

  Rational best;  // J empty
  Rational partial;
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    partial += rest[k - 1];
    Rational candidate = Rational(BigInt(binom2(k + 1))) - partial;
    if (candidate > best) best = std::move(candidate);
  }
  return best;
}

}  // namespace moonforge
