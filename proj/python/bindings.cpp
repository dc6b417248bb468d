// Python module: systems and LTSs as opaque objects, checks returning plain values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "prsequiv/aut.hpp"
#include "prsequiv/base.hpp"
#include "prsequiv/cli.hpp"
#include "prsequiv/dd.hpp"
#include "prsequiv/encoders.hpp"
#include "prsequiv/error.hpp"
#include "prsequiv/facts.hpp"
#include "prsequiv/game.hpp"
#include "prsequiv/model_check.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/semantics.hpp"

namespace py = pybind11;
using namespace prsequiv;

namespace {

StateId state(const FiniteLts& lts, const std::string& label) {
  auto s = lts.find_state(label);
  if (!s) throw py::key_error("no state labelled " + label);
  return *s;
}

std::vector<std::uint32_t> blocks(const Partition& p) { return p.block; }

// omega maps to float('inf')
py::object ext(const ExtNat& v) {
  if (v.is_omega()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(v.value());
}

GameKind game_kind(const std::string& k) {
  if (k == "bisim") return GameKind::Bisimulation;
  if (k == "weak") return GameKind::WeakBisimulation;
  if (k == "sim") return GameKind::Simulation;
  throw py::value_error("kind must be bisim, weak or sim");
}

}  // namespace

PYBIND11_MODULE(_prsequiv, m) {
  m.doc() = "Equivalence checking for process rewrite systems";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<IncompleteLtsError>(m, "IncompleteLtsError", error);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", error);

  py::class_<FiniteLts>(m, "Lts")
      .def_property_readonly("num_states", &FiniteLts::num_states)
      .def_property_readonly("num_transitions", &FiniteLts::num_transitions)
      .def_property_readonly("actions", &FiniteLts::actions)
      .def_property_readonly("complete", &FiniteLts::all_complete)
      .def("label", &FiniteLts::label)
      .def("state", &state)
      .def("transitions", [](const FiniteLts& l) {
        std::vector<std::tuple<StateId, std::string, StateId>> out;
        for (StateId s = 0; s < l.num_states(); ++s)
          for (const Edge& e : l.out(s)) out.emplace_back(s, l.action_name(e.action), e.target);
        return out;
      })
      .def("to_aut", [](const FiniteLts& l) { return export_aut(l); })
      .def_static("from_aut", [](const std::string& text) { return import_aut(text); })
      .def("__repr__", [](const FiniteLts& l) {
        std::ostringstream os;
        os << "<Lts " << l.num_states() << " states, " << l.num_transitions() << " transitions>";
        return os.str();
      });

  py::class_<PrsSystem>(m, "System")
      .def_property_readonly("name", &PrsSystem::name)
      .def_property_readonly("actions", &PrsSystem::actions)
      .def("classes", [](const PrsSystem& s) {
        std::vector<std::string> out;
        for (ProcessClass c : classify(s)) out.emplace_back(class_name(c));
        return out;
      })
      .def("norm", [](const PrsSystem& s, const std::string& t) { return ext(norm(s, parse_term(t, s.store()))); })
      .def(
          "explore",
          [](const PrsSystem& s, const std::vector<std::string>& terms, std::size_t max_states,
             std::optional<std::size_t> max_depth) {
            std::vector<TermId> roots;
            for (const auto& t : terms) roots.push_back(parse_term(t, s.store()));
            return explore(s, roots, {max_states, max_depth, std::nullopt});
          },
          py::arg("terms"), py::arg("max_states") = 100000, py::arg("max_depth") = py::none())
      .def("__str__", [](const PrsSystem& s) { return print_system(s); });

  m.def("parse_system", [](const std::string& text) { return parse_system(text); });
  m.def("load_system", [](const std::string& path) { return load_system(path); });

  m.def("bisim_classes", [](const FiniteLts& l) { return blocks(bisim_partition(l)); });
  m.def("weak_bisim_classes", [](const FiniteLts& l) { return blocks(weak_bisim_partition(l)); });
  m.def("kbisim_classes", [](const FiniteLts& l, std::size_t k) { return blocks(kbisim(l, k).levels.at(k)); });
  m.def("simulated_by", [](const FiniteLts& l, const std::string& s, const std::string& t) {
    return sim_preorder(l).contains(state(l, s), state(l, t));
  });
  m.def("trace_included", [](const FiniteLts& l, const std::string& s, const std::string& t) {
    return trace_inclusion(l, state(l, s), state(l, t));
  });
  m.def(
      "game",
      [](const FiniteLts& l, const std::string& s, const std::string& t, const std::string& kind,
         std::optional<std::size_t> bound) {
        GameOutcome o = game_solve(l, state(l, s), state(l, t), game_kind(kind), bound);
        return py::make_tuple(o.winner == Player::Attacker ? "attacker" : "defender", o.rounds_to_win);
      },
      py::arg("lts"), py::arg("s"), py::arg("t"), py::arg("kind") = "bisim", py::arg("bound") = py::none());

  m.def("model_check", [](const FiniteLts& l, const std::string& formula) {
    FormulaStore store;
    return satisfying_states(l, store, parse_formula(formula, store));
  });
  m.def("dd", [](const FiniteLts& l, const std::string& spec) {
    py::list out;
    for (const ExtNat& v : dd_eval_all(l, parse_dd_spec(spec))) out.append(ext(v));
    return out;
  });
  m.def("nbpa_bisimilar", [](const PrsSystem& s, const std::string& a, const std::string& b) {
    return decide_nbpa_bisim(s, parse_term(a, s.store()), parse_term(b, s.store()));
  });

  m.def("eval_qbf", [](const std::string& text) { return eval_qbf(parse_qbf(text)); });
  m.def("run_minsky", [](const std::string& text, std::size_t budget) {
    MinskyRun r = run_minsky(parse_minsky(text), budget);
    return py::make_tuple(r.halted, r.steps);
  });

  m.def("fact", [](const std::string& l, const std::string& rel, const std::string& r) -> std::optional<std::string> {
    auto e = lookup_fact(l, rel, r);
    if (!e) return std::nullopt;
    return describe_fact(*e);
  });

  m.def("cli", [](std::vector<std::string> args, const std::string& input) {
    args.insert(args.begin(), "prsequiv");
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli_main(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("input") = "");
}
