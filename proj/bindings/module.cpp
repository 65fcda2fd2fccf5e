// Python surface. Words cross the boundary as rendered text; reports cross
// as plain dicts so callers never hold half-bound aggregate types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rgw/automata.hpp"
#include "rgw/errors.hpp"
#include "rgw/grundy.hpp"
#include "rgw/invariants.hpp"
#include "rgw/octal.hpp"
#include "rgw/pda.hpp"
#include "rgw/synthesis.hpp"
#include "rgw/turing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace rgw;

namespace {

py::dict report_dict(const VerificationReport& rep, const Alphabet& ab) {
    py::list failures;
    for (const VerificationFailure& f : rep.failures) {
        py::dict d;
        d["kind"] = f.kind == VerificationFailure::Kind::Stability ? "stability" : "absorption";
        d["class"] = f.label_i;
        d["target"] = f.label_j;
        d["witness"] = ab.render(f.witness);
        failures.append(d);
    }
    py::dict d;
    d["verified"] = rep.verified;
    d["failures"] = failures;
    return d;
}

} // namespace

PYBIND11_MODULE(_rgw, m) {
    m.doc() = "rewrite games on words";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<RewriteSystem>(m, "RewriteSystem")
        .def_static("parse", [](const std::string& text) { return parse_game(text); },
                    py::arg("text"))
        .def("render", [](const RewriteSystem& s) { return to_game_file(s); })
        .def("__repr__",
             [](const RewriteSystem& s) {
                 return "<RewriteSystem " + std::to_string(s.rules().size()) + " rules over " +
                        s.alphabet().spec() + ">";
             })
        .def("moves",
             [](const RewriteSystem& s, const std::string& w) {
                 std::vector<std::string> out;
                 for (const Move& mv : moves(s, s.alphabet().parse_word(w)))
                     out.push_back(s.alphabet().render(mv.result));
                 return out;
             },
             py::arg("word"))
        .def("grundy",
             [](const RewriteSystem& s, const std::string& w, bool assume_terminating) {
                 GrundyCache cache;
                 GrundyOptions opts;
                 opts.assume_terminating = assume_terminating;
                 return grundy(s, s.alphabet().parse_word(w), cache, opts);
             },
             py::arg("word"), py::arg("assume_terminating") = false)
        .def("outcome",
             [](const RewriteSystem& s, const std::string& w) {
                 GrundyCache cache;
                 return outcome(s, s.alphabet().parse_word(w), cache) == Outcome::P ? "P" : "N";
             },
             py::arg("word"))
        .def("max_grundy_by_length",
             [](const RewriteSystem& s, unsigned n) { return max_grundy_by_length(s, n); },
             py::arg("n"))
        .def("is_strongly_terminating",
             [](const RewriteSystem& s) { return is_strongly_terminating(s); })
        .def("is_taking_and_merging",
             [](const RewriteSystem& s) { return is_taking_and_merging(s); });

    py::class_<MooreMachine>(m, "MooreMachine")
        .def_static("parse", [](const std::string& text) { return parse_moore(text); },
                    py::arg("text"))
        .def("render", [](const MooreMachine& mm) { return to_moore_file(mm); })
        .def("to_dot", [](const MooreMachine& mm) { return to_dot(mm); })
        .def_property_readonly("num_states",
                               [](const MooreMachine& mm) { return mm.num_states(); })
        .def("run_label",
             [](const MooreMachine& mm, const std::string& w) {
                 return mm.run_label(mm.alphabet.parse_word(w));
             },
             py::arg("word"))
        .def("__repr__", [](const MooreMachine& mm) {
            return "<MooreMachine " + std::to_string(mm.num_states()) + " states>";
        });

    m.def("minimize", &minimize_moore, py::arg("machine"));
    m.def("isomorphic", &moore_isomorphic, py::arg("a"), py::arg("b"));

    m.def("verify",
          [](const RewriteSystem& sys, const MooreMachine& mm, std::size_t state_budget) {
              return report_dict(verify_grundy_moore(sys, mm, state_budget), sys.alphabet());
          },
          py::arg("game"), py::arg("machine"), py::arg("state_budget") = 1000000);

    m.def("load_fixture",
          [](const std::string& name, const std::string& dir) { return load_fixture(name, dir); },
          py::arg("name"), py::arg("fixtures_dir"));

    m.def("synthesize",
          [](const RewriteSystem& sys, unsigned n_start, unsigned n_max) {
              SynthesisResult res = synthesize_and_verify(sys, n_start, n_max);
              py::dict d;
              d["status"] = to_string(res.status);
              d["detail"] = res.detail;
              py::list attempts;
              for (const SynthesisAttempt& a : res.attempts) {
                  py::dict e;
                  e["length"] = a.length;
                  e["outcome"] = a.outcome;
                  attempts.append(e);
              }
              d["attempts"] = attempts;
              d["machine"] = res.machine.has_value()
                                 ? py::object(py::cast(*res.machine))
                                 : py::object(py::none());
              return d;
          },
          py::arg("game"), py::arg("n_start") = 4, py::arg("n_max") = 16);

    m.def("pda_run",
          [](unsigned k, unsigned l, const std::string& word) {
              Pda p = build_pda(k, l);
              PdaRun r = run_pda(p, p.alphabet.parse_word(word));
              py::dict d;
              d["parity"] = r.parity;
              d["reductions"] = r.reduction_count;
              d["normal_form"] = p.alphabet.render(word_of_stack(r.stack));
              d["stack"] = stack_display(p, r);
              return d;
          },
          py::arg("k"), py::arg("l"), py::arg("word"));

    m.def("witness_word",
          [](unsigned k, unsigned l, unsigned i, unsigned j) {
              return Alphabet::from_chars("ab").render(witness_word(k, l, i, j));
          },
          py::arg("k"), py::arg("l"), py::arg("i"), py::arg("j"));

    m.def("octal_sequence",
          [](const std::string& code, unsigned n) {
              return octal_grundy_sequence(parse_octal(code), n);
          },
          py::arg("code"), py::arg("n"));

    m.def("octal_period",
          [](const std::string& code, unsigned n) -> py::object {
              OctalCode c = parse_octal(code);
              auto p = find_period(octal_grundy_sequence(c, n), c.max_take());
              if (!p.has_value()) return py::none();
              return py::make_tuple(p->preperiod, p->period);
          },
          py::arg("code"), py::arg("n"));

    m.def("octal_to_rewrite",
          [](const std::string& code) { return octal_to_rewrite(parse_octal(code)); },
          py::arg("code"));

    m.def("octal_crosscheck",
          [](const std::string& code, unsigned n) {
              OctalCheck c = crosscheck_octal(parse_octal(code), n);
              py::dict d;
              d["ok"] = c.ok;
              d["positions_checked"] = c.positions_checked;
              d["detail"] = c.detail;
              return d;
          },
          py::arg("code"), py::arg("n"));

    py::class_<TmGame>(m, "TmGame")
        .def_property_readonly("system", [](const TmGame& g) { return g.sys; })
        .def("canonical_start",
             [](const TmGame& g, unsigned mm) {
                 return g.sys.alphabet().render(canonical_winning_start(g, mm));
             },
             py::arg("m"))
        .def("start_word",
             [](const TmGame& g, const std::vector<std::size_t>& runs) {
                 return g.sys.alphabet().render(start_word(g, runs));
             },
             py::arg("pad_runs"))
        .def("run",
             [](const TmGame& g, const std::string& w, std::size_t budget) {
                 ForcedRun r = forced_run(g, g.sys.alphabet().parse_word(w), budget);
                 py::dict d;
                 d["verdict"] = r.verdict == ForcedRun::Verdict::AWins    ? "AWins"
                                : r.verdict == ForcedRun::Verdict::ALoses ? "ALoses"
                                                                          : "BudgetExceeded";
                 d["moves"] = r.move_count();
                 d["halted"] = r.halted;
                 std::vector<std::string> line;
                 for (const Word& x : r.trajectory) line.push_back(g.sys.alphabet().render(x));
                 d["trajectory"] = line;
                 return d;
             },
             py::arg("word"), py::arg("budget") = 100000)
        .def("crosscheck",
             [](const TmGame& g, const std::string& w, std::size_t budget) {
                 CrosscheckRun c =
                     crosscheck_simulation(g, g.sys.alphabet().parse_word(w), budget);
                 py::dict d;
                 d["ok"] = c.ok;
                 d["game_moves"] = c.game_moves;
                 d["tm_steps"] = c.tm_steps;
                 d["game_halted"] = c.game_halted;
                 d["tm_halted"] = c.tm_halted;
                 d["detail"] = c.detail;
                 return d;
             },
             py::arg("word"), py::arg("budget") = 100000);

    m.def("tm_game", [](const std::string& text) { return build_game(parse_tm(text)); },
          py::arg("text"));
}
