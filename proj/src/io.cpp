#include "moonforge/io.hpp"

#include <limits>

#include "moonforge/errors.hpp"

namespace moonforge::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t n) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 ||
      static_cast<std::size_t>(j.get<std::int64_t>()) > n) {
    throw ParseError("index " + j.dump() + " is not in 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(j.get<std::int64_t>()) - 1;
}

std::size_t count_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError("expected a non-negative integer, got " + j.dump());
  }
  return static_cast<std::size_t>(j.get<std::int64_t>());
}

Json rational_array(const ScoreSequence& seq) {
  Json a = Json::array();
  for (const auto& r : seq) a.push_back(to_json(r));
  return a;
}

ScoreSequence sequence_from_array(const Json& a) {
  if (!a.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> entries;
  entries.reserve(a.size());
  for (const auto& e : a) entries.push_back(rational_from_json(e));
  return ScoreSequence(std::move(entries));
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const ScoreSequence& seq) {
  Json j;
  j["scores"] = rational_array(seq);
  return j;
}

ScoreSequence scores_from_json(const Json& j) { return sequence_from_array(field(j, "scores")); }

Json to_json(const Tournament& t) {
  Json edges = Json::array();
  for (auto [u, v] : t.edges()) edges.push_back(Json::array({u + 1, v + 1}));
  Json j;
  j["n"] = t.n();
  j["edges"] = std::move(edges);
  return j;
}

Tournament tournament_from_json(const Json& j) {
  const std::size_t n = count_from_json(field(j, "n"));
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> list;
  list.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [u, v] pair");
    list.emplace_back(index_from_json(e[0], n), index_from_json(e[1], n));
  }
  return Tournament::from_edges(n, list);
}

Json to_json(const GeneralizedTournament& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.n(); ++k) row.push_back(to_json(g.weight(i, k)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = g.n();
  j["weights"] = std::move(rows);
  return j;
}

GeneralizedTournament generalized_from_json(const Json& j) {
  const std::size_t n = count_from_json(field(j, "n"));
  const Json& rows = field(j, "weights");
  if (!rows.is_array() || rows.size() != n) throw ParseError("\"weights\" must have n rows");
  std::vector<Rational> w;
  w.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw ParseError("weight rows must have n entries");
    for (const auto& e : row) w.push_back(rational_from_json(e));
  }
  return GeneralizedTournament(n, std::move(w));
}

Json to_json(const FeasibilityVerdict& v) {
  Json j;
  j["feasible"] = v.feasible;
  if (v.witness) {
    Json idx = Json::array();
    for (auto i : v.witness->indices) idx.push_back(i + 1);
    Json w;
    w["indices"] = std::move(idx);
    w["deficit"] = to_json(v.witness->deficit);
    w["kind"] = to_string(v.witness->kind);
    j["witness"] = std::move(w);
  }
  return j;
}

FeasibilityVerdict verdict_from_json(const Json& j) {
  const Json& f = field(j, "feasible");
  if (!f.is_boolean()) throw ParseError("\"feasible\" must be a boolean");
  FeasibilityVerdict v;
  v.feasible = f.get<bool>();
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    Witness out;
    const Json& idx = field(w, "indices");
    if (!idx.is_array()) throw ParseError("\"indices\" must be an array");
    for (const auto& i : idx) {
      out.indices.push_back(index_from_json(i, std::numeric_limits<std::int32_t>::max()));
    }
    out.deficit = rational_from_json(field(w, "deficit"));
    const Json& kind = field(w, "kind");
    if (kind == "subset-deficit") {
      out.kind = WitnessKind::kSubsetDeficit;
    } else if (kind == "full-sum-mismatch") {
      out.kind = WitnessKind::kFullSumMismatch;
    } else {
      throw ParseError("unknown witness kind " + kind.dump());
    }
    v.witness = std::move(out);
  }
  if (v.feasible == v.witness.has_value()) {
    throw ParseError("a verdict carries a witness exactly when it is infeasible");
  }
  return v;
}

Json to_json(const BlowupPlan& plan) {
  Json j;
  j["n"] = plan.n;
  j["m"] = plan.m;
  j["base"] = rational_array(plan.base);
  j["targets"] = rational_array(plan.targets);
  j["lifted"] = rational_array(plan.lifted);
  return j;
}

BlowupPlan plan_from_json(const Json& j) {
  BlowupPlan plan;
  plan.n = count_from_json(field(j, "n"));
  plan.m = count_from_json(field(j, "m"));
  plan.base = sequence_from_array(field(j, "base"));
  plan.targets = sequence_from_array(field(j, "targets"));
  plan.lifted = sequence_from_array(field(j, "lifted"));
  return plan;
}

Json to_json(const PerturbResult& p, const ScoreSequence& targets) {
  Json perm = Json::array();
  for (auto i : p.permutation) perm.push_back(i + 1);
  Json j;
  j["m"] = p.m;
  j["targets"] = rational_array(targets);
  j["scores"] = rational_array(p.output);
  j["permutation"] = std::move(perm);
  j["sup_error"] = to_json(p.sup_error);
  return j;
}

Json to_json(const ApproxRun& run, bool include_weights) {
  Json records = Json::array();
  for (const auto& rec : run.records) {
    Json r;
    r["m"] = rec.m;
    r["scores"] = rational_array(rec.perturbed);
    r["lcm_denominator"] = rec.lcm_denominator.str();
    r["vertices"] = rec.blowup_vertices.str();
    r["sup_error"] = to_json(rec.sup_error);
    if (rec.tournament) {
      if (include_weights) r["weights"] = to_json(*rec.tournament)["weights"];
    } else {
      r["skipped"] = rec.skipped_reason;
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace moonforge::io
