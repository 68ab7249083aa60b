#include "moonforge/approx.hpp"

#include <algorithm>

#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"

namespace moonforge {

namespace {

// Stern-Brocot simplest rational in (lo, hi) for lo >= 0; an absent hi is
// +infinity.
Rational simplest_nonnegative(const Rational& lo, const std::optional<Rational>& hi) {
  BigInt whole = lo.floor();
  Rational next(whole + 1);
  if (!hi || next < *hi) return next;
  // (lo, hi) sits inside [whole, whole + 1]; recurse on the reciprocal of
  // the fractional part.
  Rational frac_lo = lo - Rational(whole);
  Rational frac_hi = *hi - Rational(whole);
  std::optional<Rational> upper;
  if (!frac_lo.is_zero()) upper = frac_lo.reciprocal();
  return Rational(whole) + simplest_nonnegative(frac_hi.reciprocal(), upper).reciprocal();
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) {
    throw ValidationError("empty interval (" + lo.str() + ", " + hi.str() + ")");
  }
  if (lo.sign() < 0 && hi.sign() > 0) return Rational();
  if (lo.sign() >= 0) return simplest_nonnegative(lo, hi);
  return -simplest_nonnegative(-hi, -lo);
}

PerturbResult perturb(const ScoreSequence& targets, std::uint64_t m) {
  if (m == 0) throw ValidationError("accuracy parameter m must be positive");
  if (targets.empty()) throw ValidationError("perturb needs at least one score");
  require_feasible(targets);
  const std::size_t n = targets.size();

  PerturbResult result;
  result.m = m;
  if (n == 1) {
    result.output = targets;
    result.permutation = {0};
    return result;
  }

  const auto top = static_cast<std::size_t>(
      std::max_element(targets.begin(), targets.end()) - targets.begin());
  result.permutation.push_back(top);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != top) result.permutation.push_back(i);
  }
  std::vector<Rational> d;
  d.reserve(n);
  for (auto i : result.permutation) d.push_back(targets[i]);

  const Rational step = Rational(BigInt(m)).reciprocal();
  const Rational slack = max_deficit_excluding_first(ScoreSequence(d));
  std::vector<Rational> picked(n);
  picked[0] = simplest_rational_in(std::max(d[0] - step, slack), d[0]);
  const Rational room = (d[0] - picked[0]) / Rational(static_cast<std::int64_t>(n - 1));
  Rational running = picked[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    picked[i] = simplest_rational_in(d[i], d[i] + room);
    running += picked[i];
  }
  picked[n - 1] = Rational(BigInt(binom2(n))) - running;

  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational err = (picked[k] - d[k]).abs();
    if (err > result.sup_error) result.sup_error = err;
    out[result.permutation[k]] = std::move(picked[k]);
  }
  result.output = ScoreSequence(std::move(out));

  if (!check_fast(result.output).feasible) {
    throw InternalError("perturbed sequence " + result.output.str() + " is not feasible");
  }
  if (!(result.sup_error < step)) {
    throw InternalError("perturbation error " + result.sup_error.str() + " is not below 1/" +
                        std::to_string(m));
  }
  return result;
}

ApproxRun approximate_realize(const ScoreSequence& targets,
                              std::span<const std::uint64_t> schedule,
                              const RationalRealizeOptions& options) {
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k] == 0 || (k > 0 && schedule[k] <= schedule[k - 1])) {
      throw ValidationError("schedule must be strictly increasing positive integers");
    }
  }
  ApproxRun run;
  run.schedule.assign(schedule.begin(), schedule.end());
  for (auto m : schedule) {
    PerturbResult p = perturb(targets, m);
    ApproxRecord rec;
    rec.m = m;
    rec.lcm_denominator = lcm_denominators(p.output);
    rec.blowup_vertices = rec.lcm_denominator * p.output.size();
    rec.sup_error = p.sup_error;
    rec.perturbed = std::move(p.output);
    try {
      rec.tournament = realize_rational(rec.perturbed, options);
    } catch (const BlowupTooLargeError& e) {
      rec.skipped_reason = e.what();
    }
    run.records.push_back(std::move(rec));
  }
  return run;
}

}  // namespace moonforge
