// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "moonforge/approx.hpp"
#include "moonforge/blowup.hpp"
#include "moonforge/cli.hpp"
#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"
#include "moonforge/flow.hpp"
#include "moonforge/random.hpp"
#include "moonforge/realize.hpp"
#include "oracles.hpp"

namespace mf = moonforge;
using mf::BigInt;
using mf::Rational;
using mf::ScoreSequence;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

bool weights_valid(const mf::GeneralizedTournament& g, const BigInt& m) {
  const Rational one(1);
  for (std::size_t i = 0; i < g.n(); ++i) {
    if (!g.weight(i, i).is_zero()) return false;
    for (std::size_t j = 0; j < g.n(); ++j) {
      const auto& w = g.weight(i, j);
      if (w.sign() < 0 || w > one) return false;
      if ((m * m) % w.den() != 0) return false;
      if (i != j && w + g.weight(j, i) != one) return false;
    }
  }
  return true;
}

Outcome feasibility_equivalence() {
  Outcome o;
  std::size_t compared = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& v : mf::testing::all_integer_sequences(n, 5)) {
      auto seq = ScoreSequence::from_integers(v);
      if (mf::check_fast(seq).feasible != mf::check_exhaustive(seq).feasible) {
        o.fail("disagreement on " + seq.str());
      }
      ++compared;
    }
  }
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 2000; ++trial) {
    auto seq = mf::testing::random_rational_sequence(rng, rng() % 13, 8);
    if (mf::check_fast(seq).feasible != mf::check_exhaustive(seq).feasible) {
      o.fail("disagreement on " + seq.str());
    }
    ++compared;
  }
  if (o.ok) o.detail = std::to_string(compared) + " sequences, 0 disagreements";
  return o;
}

Outcome integer_round_trip() {
  Outcome o;
  std::size_t realized = 0;
  auto one = [&](const ScoreSequence& seq) {
    auto r = mf::realize_integer_detailed(seq);
    if (mf::scores_of(r.tournament) != seq) o.fail("scores differ for " + seq.str());
    if (r.flow_value != mf::binom2(seq.size())) o.fail("flow value short for " + seq.str());
    ++realized;
  };
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& v : mf::testing::all_integer_sequences(n, n == 0 ? 0 : n - 1)) {
      auto seq = ScoreSequence::from_integers(v);
      if (mf::check_fast(seq).feasible) one(seq);
    }
  }
  std::mt19937_64 rng(2002);
  for (int trial = 0; trial < 500; ++trial) one(mf::random_feasible(1 + rng() % 200, 1, rng()));
  if (o.ok) o.detail = std::to_string(realized) + " realizations, flow = C(n,2) each";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::size_t compared = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& v : mf::testing::all_integer_sequences(n, 4)) {
      auto seq = ScoreSequence::from_integers(v);
      const bool exhaustive = mf::check_exhaustive(seq).feasible;
      const bool backtrack = mf::realize_backtrack(seq).has_value();
      bool flow = true;
      try {
        if (mf::scores_of(mf::realize_integer(seq)) != seq) o.fail("bad realization " + seq.str());
      } catch (const mf::InfeasibleError&) {
        flow = false;
      }
      mf::FlowNetwork net(v);
      const bool raw_flow =
          static_cast<std::uint64_t>(net.max_flow()) == mf::binom2(n) &&
          std::accumulate(v.begin(), v.end(), std::int64_t{0}) ==
              static_cast<std::int64_t>(mf::binom2(n));
      if (!(flow == exhaustive && backtrack == exhaustive && raw_flow == exhaustive)) {
        o.fail("disagreement on " + seq.str());
      }
      ++compared;
    }
  }
  if (o.ok) o.detail = std::to_string(compared) + " sequences, 0 disagreements";
  return o;
}

Outcome rational_pipeline() {
  Outcome o;
  std::mt19937_64 rng(3003);
  std::size_t max_vertices = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto targets = mf::random_feasible(n, 1 + rng() % 12, rng());
    const BigInt m = mf::lcm_denominators(targets);
    if (m > 12) o.fail("generator produced lcm " + m.str());
    auto g = mf::realize_rational(targets);
    if (g.scores() != targets) o.fail("row sums differ for " + targets.str());
    if (!weights_valid(g, m)) o.fail("invalid weights for " + targets.str());
    max_vertices = std::max(max_vertices, m.convert_to<std::size_t>() * n);
  }
  if (o.ok) o.detail = "300 targets exact, largest blow-up " + std::to_string(max_vertices);
  return o;
}

Outcome partition_inequalities() {
  Outcome o;
  std::mt19937_64 rng(4004);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto targets = mf::random_feasible(n, 1 + rng() % 6, rng());
    const auto m = mf::lcm_denominators(targets).convert_to<std::size_t>() * (1 + rng() % 3);
    std::vector<std::int64_t> j(n);
    for (auto& x : j) x = static_cast<std::int64_t>(rng() % (m + 1));
    std::sort(j.begin(), j.end());
    std::vector<Rational> order(targets.begin(), targets.end());
    std::shuffle(order.begin(), order.end(), rng);
    if (!mf::check_partition_inequalities(ScoreSequence(order), m, j)) {
      o.fail("inequality failed for " + targets.str());
    }
    if (!mf::check_fast(mf::blowup_scores(targets, m).lifted).feasible) {
      o.fail("lifted sequence infeasible for " + targets.str());
    }
  }
  if (o.ok) o.detail = "1000 draws, 0 failures";
  return o;
}

Outcome perturb_contract() {
  Outcome o;
  auto worked = mf::perturb(mf::testing::parse("6/5,6/5,3/5"), 10);
  if (worked.output != mf::testing::parse("7/6,17/14,13/21")) {
    o.fail("worked case gave " + worked.output.str());
  }
  std::mt19937_64 rng(5005);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto targets = mf::random_feasible(n, 1 + rng() % 1000000, rng());
    for (std::uint64_t m : {2u, 10u, 100u}) {
      auto r = mf::perturb(targets, m);
      if (!mf::check_exhaustive(r.output).feasible) o.fail("infeasible output for " + targets.str());
      if (r.output.sum() != Rational(BigInt(mf::binom2(n)))) o.fail("total off for " + targets.str());
      if (!(r.sup_error < Rational(BigInt(1), BigInt(m)))) o.fail("error bound for " + targets.str());
    }
  }
  if (o.ok) o.detail = "worked case exact; 3000 perturbations within bound";
  return o;
}

Outcome approx_demo() {
  Outcome o;
  std::vector<std::uint64_t> schedule{10, 20, 40};
  auto run = mf::approximate_realize(mf::testing::parse("6/5,6/5,3/5"), schedule);
  if (run.records.size() != 3) o.fail("expected three records");
  for (const auto& rec : run.records) {
    if (!(rec.sup_error < Rational(BigInt(1), BigInt(rec.m)))) o.fail("error bound at m=" + std::to_string(rec.m));
    if (!rec.tournament || rec.tournament->scores() != rec.perturbed) {
      o.fail("row sums differ at m=" + std::to_string(rec.m));
    }
  }
  auto decimal = mf::testing::parse("1.41421356,1.41421356,0.17157288");
  const BigInt input_lcm = mf::lcm_denominators(decimal);
  std::vector<std::uint64_t> schedule2{10, 100};
  auto run2 = mf::approximate_realize(decimal, schedule2);
  std::string lcms;
  for (const auto& rec : run2.records) {
    if (rec.lcm_denominator * 100 > input_lcm) o.fail("denominator not reduced 100x");
    if (!rec.tournament || rec.tournament->scores() != rec.perturbed) o.fail("decimal row sums differ");
    lcms += (lcms.empty() ? "" : ", ") + rec.lcm_denominator.str();
  }
  if (o.ok) o.detail = "decimal lcm " + input_lcm.str() + " -> " + lcms;
  return o;
}

Outcome simplest_rational() {
  Outcome o;
  std::mt19937_64 rng(6006);
  int compared = 0;
  while (compared < 1000) {
    auto draw = [&] {
      auto den = static_cast<std::int64_t>(1 + rng() % 1000);
      auto num = static_cast<std::int64_t>(rng() % (10 * den)) - 5 * den;
      return Rational(BigInt(num), BigInt(den));
    };
    Rational a = draw(), b = draw();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (mf::simplest_rational_in(a, b) != mf::testing::simplest_by_enumeration(a, b)) {
      o.fail("mismatch on (" + a.str() + ", " + b.str() + ")");
    }
    ++compared;
  }
  if (o.ok) o.detail = "1000 intervals, 0 disagreements";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string dir = MOONFORGE_GOLDEN_DIR;
  std::ifstream cases(dir + "/cases.txt");
  std::string line;
  int checked = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto a = line.find('|');
    auto b = line.find('|', a + 1);
    const std::string name = line.substr(0, a);
    const int expected_code = std::stoi(line.substr(a + 1, b - a - 1));
    std::vector<std::string> args;
    std::istringstream words(line.substr(b + 1));
    for (std::string w; words >> w;) {
      if (auto at = w.find("@GOLDEN@"); at != std::string::npos) w.replace(at, 8, dir);
      args.push_back(w);
    }
    std::ostringstream out1, out2, err;
    int c1 = mf::cli::run(args, out1, err);
    int c2 = mf::cli::run(args, out2, err);
    std::ifstream golden(dir + "/" + name + ".json");
    std::stringstream expected;
    expected << golden.rdbuf();
    if (c1 != expected_code || c2 != c1) o.fail(name + ": exit code");
    if (out1.str() != expected.str() || out2.str() != out1.str()) o.fail(name + ": output differs");
    ++checked;
  }
  if (checked == 0) o.fail("no golden cases found");
  if (o.ok) o.detail = std::to_string(checked) + " golden cases byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "feasibility: sorted-prefix test equals subset enumeration", 60, feasibility_equivalence},
      {"AC2", "integer realization round-trip, flow = C(n,2)", 120, integer_round_trip},
      {"AC3", "flow, backtracking and enumeration agree", 60, oracle_agreement},
      {"AC4", "rational blow-up pipeline is exact", 120, rational_pipeline},
      {"AC5", "partition inequalities and lifted feasibility", 60, partition_inequalities},
      {"AC6", "perturbation contract and worked case", 60, perturb_contract},
      {"AC7", "approximation schedule demonstration", 60, approx_demo},
      {"AC8", "simplest rational equals denominator enumeration", 10, simplest_rational},
      {"AC9", "CLI golden files and determinism", 60, cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      o.fail("took " + std::to_string(seconds) + "s, limit " + std::to_string(c.limit_seconds) + "s");
    }
    std::printf("[%s] %s %s (%.2fs < %.0fs): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
