#pragma once

#include <json.hpp>

#include "moonforge/approx.hpp"
#include "moonforge/blowup.hpp"
#include "moonforge/core.hpp"
#include "moonforge/feasibility.hpp"

// JSON encodings. Rationals are strings ("p/q" or "k"); vertex and witness
// indices are 1-based on the wire and 0-based in memory. Keys keep
// insertion order so emitted documents are byte-stable.
namespace moonforge::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"scores": ["7/6", "17/14", "13/21"]}
Json to_json(const ScoreSequence& seq);
ScoreSequence scores_from_json(const Json& j);

// {"n": N, "edges": [[u, v], ...]}, one entry per unordered pair.
Json to_json(const Tournament& t);
Tournament tournament_from_json(const Json& j);

// {"n": N, "weights": [["0", "3/4", ...], ...]}, row-major.
Json to_json(const GeneralizedTournament& g);
GeneralizedTournament generalized_from_json(const Json& j);

// {"feasible": bool, "witness": {"indices": [...], "deficit": "p/q",
//  "kind": "subset-deficit" | "full-sum-mismatch"}}; witness only when
// infeasible.
Json to_json(const FeasibilityVerdict& v);
FeasibilityVerdict verdict_from_json(const Json& j);

// {"n", "m", "base", "targets", "lifted"}
Json to_json(const BlowupPlan& plan);
BlowupPlan plan_from_json(const Json& j);

// {"m", "targets", "scores", "permutation" (1-based), "sup_error"}
Json to_json(const PerturbResult& p, const ScoreSequence& targets);

// Array of records {"m", "scores", "lcm_denominator", "vertices",
// "sup_error", "weights"?, "skipped"?}.
Json to_json(const ApproxRun& run, bool include_weights = true);

}  // namespace moonforge::io
