#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moonforge/approx.hpp"
#include "moonforge/blowup.hpp"
#include "moonforge/cli.hpp"
#include "moonforge/errors.hpp"
#include "moonforge/feasibility.hpp"
#include "moonforge/random.hpp"
#include "moonforge/realize.hpp"

namespace py = pybind11;
namespace mf = moonforge;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

// Anything Fraction() accepts: int, Fraction, "p/q", "1.25". Floats are
// rejected because their binary expansion is rarely what was meant.
mf::Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    throw mf::ParseError("floats are not accepted; pass a Fraction or a string");
  }
  py::object f = fraction_type()(h);
  return mf::Rational(mf::BigInt(py::str(f.attr("numerator")).cast<std::string>()),
                      mf::BigInt(py::str(f.attr("denominator")).cast<std::string>()));
}

py::object to_py(const mf::Rational& r) {
  return fraction_type()(py::int_(py::str(r.num().str())), py::int_(py::str(r.den().str())));
}

py::object to_py(const mf::BigInt& b) { return py::int_(py::str(b.str())); }

mf::ScoreSequence to_seq(const py::iterable& items) {
  std::vector<mf::Rational> out;
  for (auto h : items) out.push_back(to_rational(h));
  return mf::ScoreSequence(std::move(out));
}

py::list to_py(const mf::ScoreSequence& seq) {
  py::list out;
  for (const auto& r : seq) out.append(to_py(r));
  return out;
}

py::object to_py(const std::optional<mf::Witness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["indices"] = w->indices;
  d["deficit"] = to_py(w->deficit);
  d["kind"] = mf::to_string(w->kind);
  return d;
}

py::dict to_py(const mf::FeasibilityVerdict& v) {
  py::dict d;
  d["feasible"] = v.feasible;
  d["witness"] = to_py(v.witness);
  return d;
}

py::dict to_py(const mf::Tournament& t) {
  py::dict d;
  d["n"] = t.n();
  d["edges"] = t.edges();
  return d;
}

py::dict to_py(const mf::GeneralizedTournament& g) {
  py::list rows;
  for (std::size_t i = 0; i < g.n(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < g.n(); ++j) row.append(to_py(g.weight(i, j)));
    rows.append(row);
  }
  py::dict d;
  d["n"] = g.n();
  d["weights"] = rows;
  return d;
}

py::exception<mf::Error>* g_error = nullptr;
py::exception<mf::ParseError>* g_parse = nullptr;
py::exception<mf::ValidationError>* g_validation = nullptr;
py::exception<mf::InfeasibleError>* g_infeasible = nullptr;
py::exception<mf::BlowupTooLargeError>* g_too_large = nullptr;
py::exception<mf::InternalError>* g_internal = nullptr;

mf::RationalRealizeOptions rational_options(std::size_t cap, bool greedy) {
  mf::RationalRealizeOptions o;
  o.vertex_cap = cap;
  o.realize.greedy_first = greedy;
  return o;
}

}  // namespace

PYBIND11_MODULE(_moonforge, m) {
  m.doc() = "Score sequences of tournaments and generalized tournaments";

  // Leaked on purpose: they must outlive interpreter shutdown.
  g_error = new py::exception<mf::Error>(m, "Error");
  g_parse = new py::exception<mf::ParseError>(m, "ParseError", g_error->ptr());
  g_validation = new py::exception<mf::ValidationError>(m, "ValidationError", g_error->ptr());
  g_infeasible = new py::exception<mf::InfeasibleError>(m, "InfeasibleError", g_error->ptr());
  g_too_large =
      new py::exception<mf::BlowupTooLargeError>(m, "BlowupTooLargeError", g_error->ptr());
  g_internal = new py::exception<mf::InternalError>(m, "InternalError", g_error->ptr());

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mf::InfeasibleError& e) {
      // args = (message, witness dict)
      py::set_error(*g_infeasible,
                    py::object(*g_infeasible)(py::str(e.what()), to_py(std::optional(e.witness()))));
    } catch (const mf::BlowupTooLargeError& e) {
      py::set_error(*g_too_large, py::object(*g_too_large)(py::str(e.what()), to_py(e.vertices()), e.cap()));
    } catch (const mf::ParseError& e) {
      py::set_error(*g_parse, e.what());
    } catch (const mf::ValidationError& e) {
      py::set_error(*g_validation, e.what());
    } catch (const mf::InternalError& e) {
      py::set_error(*g_internal, e.what());
    } catch (const mf::Error& e) {
      py::set_error(*g_error, e.what());
    }
  });

  m.def("parse_scores", [](const std::string& text) { return to_py(mf::ScoreSequence::parse_list(text)); },
        py::arg("text"));

  m.def("check_fast", [](const py::iterable& s) { return to_py(mf::check_fast(to_seq(s))); },
        py::arg("scores"));
  m.def("check_exhaustive",
        [](const py::iterable& s, std::size_t cap) { return to_py(mf::check_exhaustive(to_seq(s), cap)); },
        py::arg("scores"), py::arg("cap") = mf::kDefaultExhaustiveCap);
  m.def("max_deficit_excluding_first",
        [](const py::iterable& s) { return to_py(mf::max_deficit_excluding_first(to_seq(s))); },
        py::arg("scores"));

  m.def("realize_integer",
        [](const py::iterable& s, bool greedy) {
          auto r = mf::realize_integer_detailed(to_seq(s), {.greedy_first = greedy});
          py::dict d = to_py(r.tournament);
          d["flow_value"] = r.flow_value;
          d["used_greedy"] = r.used_greedy;
          return d;
        },
        py::arg("scores"), py::arg("greedy") = false);
  m.def("realize_backtrack",
        [](const py::iterable& s, std::size_t cap) -> py::object {
          auto t = mf::realize_backtrack(to_seq(s), cap);
          if (!t) return py::none();
          return to_py(*t);
        },
        py::arg("scores"), py::arg("cap") = mf::kBacktrackCap);

  m.def("blowup_scores",
        [](const py::iterable& s, std::size_t mult) {
          auto plan = mf::blowup_scores(to_seq(s), mult);
          py::dict d;
          d["n"] = plan.n;
          d["m"] = plan.m;
          d["base"] = to_py(plan.base);
          d["targets"] = to_py(plan.targets);
          d["lifted"] = to_py(plan.lifted);
          return d;
        },
        py::arg("targets"), py::arg("m"));
  m.def("realize_rational",
        [](const py::iterable& s, std::size_t cap, bool greedy) {
          return to_py(mf::realize_rational(to_seq(s), rational_options(cap, greedy)));
        },
        py::arg("targets"), py::arg("cap") = mf::kDefaultVertexCap, py::arg("greedy") = false);
  m.def("check_partition_inequalities",
        [](const py::iterable& s, std::size_t mult, const std::vector<std::int64_t>& j) {
          return mf::check_partition_inequalities(to_seq(s), mult, j);
        },
        py::arg("targets"), py::arg("m"), py::arg("j"));

  m.def("simplest_rational_in",
        [](const py::handle& lo, const py::handle& hi) {
          return to_py(mf::simplest_rational_in(to_rational(lo), to_rational(hi)));
        },
        py::arg("lo"), py::arg("hi"));
  m.def("perturb",
        [](const py::iterable& s, std::uint64_t mult) {
          auto r = mf::perturb(to_seq(s), mult);
          py::dict d;
          d["m"] = r.m;
          d["scores"] = to_py(r.output);
          d["permutation"] = r.permutation;
          d["sup_error"] = to_py(r.sup_error);
          return d;
        },
        py::arg("targets"), py::arg("m"));
  m.def("approximate_realize",
        [](const py::iterable& s, const std::vector<std::uint64_t>& schedule, std::size_t cap,
           bool greedy) {
          auto run = mf::approximate_realize(to_seq(s), schedule, rational_options(cap, greedy));
          py::list out;
          for (const auto& rec : run.records) {
            py::dict d;
            d["m"] = rec.m;
            d["scores"] = to_py(rec.perturbed);
            d["lcm_denominator"] = to_py(rec.lcm_denominator);
            d["vertices"] = to_py(rec.blowup_vertices);
            d["sup_error"] = to_py(rec.sup_error);
            d["weights"] = rec.tournament ? to_py(*rec.tournament)["weights"] : py::object(py::none());
            d["skipped"] = rec.tournament ? py::object(py::none()) : py::str(rec.skipped_reason);
            out.append(d);
          }
          return out;
        },
        py::arg("targets"), py::arg("schedule") = std::vector<std::uint64_t>{10, 20, 40},
        py::arg("cap") = mf::kDefaultVertexCap, py::arg("greedy") = false);

  m.def("random_feasible",
        [](std::size_t n, std::uint64_t den, std::uint64_t seed) {
          return to_py(mf::random_feasible(n, den, seed));
        },
        py::arg("n"), py::arg("den") = 1, py::arg("seed") = 0);

  // Same grammar as the command-line tool; returns (exit code, stdout, stderr).
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = mf::cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
