#include "moonforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "moonforge/approx.hpp"
#include "moonforge/blowup.hpp"
#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"
#include "moonforge/io.hpp"
#include "moonforge/random.hpp"
#include "moonforge/realize.hpp"

namespace moonforge::cli {

namespace {

using io::Json;

struct Options {
  std::string scores;
  std::string in;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::uint64_t den = 1;
  std::uint64_t m = 10;
  std::string schedule = "10,20,40";
  std::size_t cap = kDefaultVertexCap;
  bool plan_only = false;
  bool no_weights = false;
  bool greedy = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ScoreSequence input_scores(const Options& o) {
  if (!o.scores.empty()) return ScoreSequence::parse_list(o.scores);
  if (!o.in.empty()) return io::scores_from_json(read_json(o.in));
  throw UsageError("expected --scores LIST or --in FILE");
}

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& r : ScoreSequence::parse_list(text)) {
    if (!r.is_integer() || r.sign() <= 0) throw UsageError("schedule entries must be positive integers");
    out.push_back(r.num().convert_to<std::uint64_t>());
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_check(const Options& o, std::ostream& out) {
  auto verdict = check_fast(input_scores(o));
  emit(out, io::to_json(verdict));
  return verdict.feasible ? kOk : kInfeasible;
}

int cmd_realize(const Options& o, std::ostream& out) {
  emit(out, io::to_json(realize_integer(input_scores(o), {.greedy_first = o.greedy})));
  return kOk;
}

int cmd_blowup(const Options& o, std::ostream& out) {
  auto targets = input_scores(o);
  if (o.plan_only) {
    require_feasible(targets);
    BigInt m = lcm_denominators(targets);
    if (m * targets.size() > o.cap) throw BlowupTooLargeError(m * targets.size(), o.cap);
    emit(out, io::to_json(blowup_scores(targets, m.convert_to<std::size_t>())));
    return kOk;
  }
  RationalRealizeOptions opts{o.cap, {.greedy_first = o.greedy}};
  emit(out, io::to_json(realize_rational(targets, opts)));
  return kOk;
}

int cmd_perturb(const Options& o, std::ostream& out) {
  auto targets = input_scores(o);
  emit(out, io::to_json(perturb(targets, o.m), targets));
  return kOk;
}

int cmd_approx(const Options& o, std::ostream& out) {
  auto schedule = parse_schedule(o.schedule);
  RationalRealizeOptions opts{o.cap, {.greedy_first = o.greedy}};
  emit(out, io::to_json(approximate_realize(input_scores(o), schedule, opts), !o.no_weights));
  return kOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  emit(out, io::to_json(random_feasible(o.n, o.den, o.seed)));
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct Check {
  std::string kind;
  std::vector<std::string> problems;
  std::optional<ScoreSequence> scores;

  void expect(bool ok, std::string what) {
    if (!ok) problems.push_back(std::move(what));
  }
};

Rational sup_distance(const ScoreSequence& a, const ScoreSequence& b) {
  Rational best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto d = (a[i] - b[i]).abs();
    if (d > best) best = d;
  }
  return best;
}

void verify_approx(const Json& records, const std::optional<ScoreSequence>& targets, Check& c) {
  c.kind = "approx";
  std::optional<std::uint64_t> previous;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const Json& r = records[k];
    const std::string at = "record " + std::to_string(k + 1) + ": ";
    const auto m = r.at("m").get<std::uint64_t>();
    c.expect(m > 0 && (!previous || m > *previous), at + "schedule is not strictly increasing");
    previous = m;
    auto perturbed = io::scores_from_json(r);
    auto sup_error = io::rational_from_json(r.at("sup_error"));
    c.expect(check_fast(perturbed).feasible, at + "perturbed scores are not feasible");
    c.expect(m > 0 && sup_error < Rational(BigInt(1), BigInt(m)), at + "sup_error is not below 1/m");
    c.expect(io::rational_from_json(r.at("lcm_denominator")) == Rational(lcm_denominators(perturbed)),
             at + "lcm_denominator is wrong");
    if (targets) {
      c.expect(targets->size() == perturbed.size() && sup_distance(perturbed, *targets) == sup_error,
               at + "sup_error does not match the given scores");
    }
    if (r.contains("weights")) {
      Json g;
      g["n"] = perturbed.size();
      g["weights"] = r.at("weights");
      c.expect(io::generalized_from_json(g).scores() == perturbed,
               at + "weights do not reproduce the perturbed scores");
    }
  }
}

Check verify_artifact(const Json& j, const std::optional<ScoreSequence>& given) {
  Check c;
  auto compare_to_given = [&](const ScoreSequence& actual) {
    c.scores = actual;
    if (given) c.expect(actual == *given, "scores " + actual.str() + " differ from " + given->str());
  };

  if (j.is_array()) {
    verify_approx(j, given, c);
  } else if (j.contains("edges")) {
    c.kind = "tournament";
    compare_to_given(scores_of(io::tournament_from_json(j)));
  } else if (j.contains("weights")) {
    c.kind = "generalized-tournament";
    compare_to_given(io::generalized_from_json(j).scores());
  } else if (j.contains("lifted")) {
    c.kind = "blowup-plan";
    auto plan = io::plan_from_json(j);
    auto expected = blowup_scores(plan.targets, plan.m);
    c.expect(plan.n == expected.n && plan.base == expected.base && plan.lifted == expected.lifted,
             "plan does not match the lift of its targets");
    if (given) c.expect(plan.targets == *given, "plan targets differ from the given scores");
  } else if (j.contains("sup_error")) {
    c.kind = "perturbation";
    auto targets = io::scores_from_json(Json{{"scores", j.at("targets")}});
    auto recomputed = perturb(targets, j.at("m").get<std::uint64_t>());
    c.expect(io::scores_from_json(j) == recomputed.output, "scores differ from a fresh perturbation");
    c.expect(io::rational_from_json(j.at("sup_error")) == recomputed.sup_error, "sup_error is wrong");
    if (given) c.expect(targets == *given, "perturbation targets differ from the given scores");
    c.scores = recomputed.output;
  } else if (j.contains("feasible")) {
    c.kind = "verdict";
    if (!given) throw UsageError("verifying a verdict needs --scores");
    c.expect(io::verdict_from_json(j) == check_fast(*given), "verdict does not match the scores");
  } else if (j.contains("scores")) {
    c.kind = "scores";
    auto seq = io::scores_from_json(j);
    c.expect(check_fast(seq).feasible, "sequence is not a score sequence");
    compare_to_given(seq);
  } else {
    throw ParseError("unrecognized artifact");
  }
  return c;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw UsageError("verify needs --in FILE");
  std::optional<ScoreSequence> given;
  if (!o.scores.empty()) given = ScoreSequence::parse_list(o.scores);
  Check c;
  try {
    c = verify_artifact(read_json(o.in), given);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed artifact: ") + e.what());
  } catch (const ValidationError& e) {
    c.problems.push_back(e.what());
  } catch (const InfeasibleError& e) {
    c.problems.push_back(e.what());
  }
  Json result;
  result["ok"] = c.problems.empty();
  result["kind"] = c.kind.empty() ? "invalid" : c.kind;
  if (c.scores) result["scores"] = io::to_json(*c.scores)["scores"];
  if (!c.problems.empty()) result["problems"] = c.problems;
  emit(out, result);
  return c.problems.empty() ? kOk : kInfeasible;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Score sequences of tournaments and generalized tournaments", "moonforge"};
  app.require_subcommand(1);
  Options o;

  auto add_scores = [&](CLI::App* sub) {
    auto* s = sub->add_option("--scores", o.scores, "comma-separated rationals, e.g. 1/2,1/2,2");
    sub->add_option("--in", o.in, "JSON input file ('-' for stdin)");
    return s;
  };
  auto add_realize = [&](CLI::App* sub) {
    sub->add_flag("--greedy", o.greedy, "try the greedy orientation before max flow");
  };

  auto* check = app.add_subcommand("check", "test the score-sequence condition");
  add_scores(check);
  auto* realize = app.add_subcommand("realize", "build a tournament with integer scores");
  add_scores(realize);
  add_realize(realize);
  auto* blowup = app.add_subcommand("blowup", "build a generalized tournament with rational scores");
  add_scores(blowup);
  add_realize(blowup);
  blowup->add_option("--cap", o.cap, "blow-up vertex cap");
  blowup->add_flag("--plan-only", o.plan_only, "emit the lifted integer sequence only");
  auto* perturb_cmd = app.add_subcommand("perturb", "move to nearby scores with small denominators");
  add_scores(perturb_cmd);
  perturb_cmd->add_option("--m", o.m, "accuracy: every score moves by less than 1/m")
      ->check(CLI::PositiveNumber);
  auto* approx = app.add_subcommand("approx", "perturb and realize for each accuracy in a schedule");
  add_scores(approx);
  add_realize(approx);
  approx->add_option("--schedule", o.schedule, "increasing accuracies, e.g. 10,20,40");
  approx->add_option("--cap", o.cap, "blow-up vertex cap");
  approx->add_flag("--no-weights", o.no_weights, "omit weight matrices");
  auto* random = app.add_subcommand("random", "seeded random score sequence");
  random->add_option("--n", o.n, "vertex count")->required()->check(CLI::PositiveNumber);
  random->add_option("--den", o.den, "weight denominator (1 gives tournaments)")
      ->check(CLI::PositiveNumber);
  random->add_option("--seed", o.seed, "generator seed");
  auto* verify = app.add_subcommand("verify", "recheck an artifact emitted by another verb");
  add_scores(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (verb == "check") return cmd_check(o, out);
    if (verb == "realize") return cmd_realize(o, out);
    if (verb == "blowup") return cmd_blowup(o, out);
    if (verb == "perturb") return cmd_perturb(o, out);
    if (verb == "approx") return cmd_approx(o, out);
    if (verb == "random") return cmd_random(o, out);
    return cmd_verify(o, out);
  } catch (const InfeasibleError& e) {
    emit(out, io::to_json(FeasibilityVerdict{false, e.witness()}));
    err << "moonforge: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InternalError& e) {
    err << "moonforge: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "moonforge: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "moonforge: malformed JSON: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace moonforge::cli
