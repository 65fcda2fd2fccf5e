// Command line front end. Exit codes: 0 the command ran and the answer was
// positive (Verified / Ok / Proven / a value), 1 a check answered negative
// (Failed / Mismatch / Refuted), 2 bad usage or unreadable input, 3 a budget
// ran out.

#include "rgw/automata.hpp"
#include "rgw/errors.hpp"
#include "rgw/grundy.hpp"
#include "rgw/invariants.hpp"
#include "rgw/json_io.hpp"
#include "rgw/octal.hpp"
#include "rgw/pda.hpp"
#include "rgw/synthesis.hpp"
#include "rgw/turing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace rgw;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

std::vector<std::size_t> parse_runs(const std::string& text) {
    std::vector<std::size_t> runs;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) runs.push_back(std::stoull(tok));
    return runs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for rewrite games on words"};
    app.require_subcommand(1);

    bool json = false;
    unsigned threads = 1;
    std::size_t state_budget = 1000000;
    app.add_flag("--json", json, "machine readable output");
    app.add_option("--threads", threads, "worker threads for table builds");
    app.add_option("--state-budget", state_budget, "automaton state budget");

    int rc = 0;
    std::string game_path, machine_path, word_text, tm_path, code_text, emit_path, dot_path;
    unsigned length = 0, value = 0, kk = 2, ll = 2, wi = 0, wj = 0, mm = 0;
    unsigned n_start = 4, n_max = 16;
    std::size_t budget = 100000;
    std::string pad_text, dir_path;
    bool assume = false, do_crosscheck = false, do_period = false, trace = false;

    auto* cmd_grundy = app.add_subcommand("grundy", "value of one word");
    cmd_grundy->add_option("--game", game_path, "game file")->required();
    cmd_grundy->add_option("--word", word_text, "word to evaluate")->required();
    cmd_grundy->add_flag("--assume-terminating", assume,
                         "evaluate even if rules do not all shrink");
    cmd_grundy->callback([&] {
        RewriteSystem sys = parse_game(slurp(game_path));
        Word w = sys.alphabet().parse_word(word_text);
        GrundyCache cache;
        GrundyOptions opts;
        opts.assume_terminating = assume;
        unsigned g = grundy(sys, w, cache, opts);
        if (json)
            std::cout << nlohmann::json{{"word", word_text}, {"value", g}} << "\n";
        else
            std::cout << g << "\n";
    });

    auto* cmd_outcome = app.add_subcommand("outcome", "P or N for one word");
    cmd_outcome->add_option("--game", game_path, "game file")->required();
    cmd_outcome->add_option("--word", word_text, "word to evaluate")->required();
    cmd_outcome->add_flag("--assume-terminating", assume,
                          "evaluate even if rules do not all shrink");
    cmd_outcome->callback([&] {
        RewriteSystem sys = parse_game(slurp(game_path));
        Word w = sys.alphabet().parse_word(word_text);
        GrundyCache cache;
        GrundyOptions opts;
        opts.assume_terminating = assume;
        const char* o = outcome(sys, w, cache, opts) == Outcome::P ? "P" : "N";
        if (json)
            std::cout << nlohmann::json{{"word", word_text}, {"outcome", o}} << "\n";
        else
            std::cout << o << "\n";
    });

    auto* cmd_seq = app.add_subcommand("sequence", "largest value per word length");
    cmd_seq->add_option("--game", game_path, "game file")->required();
    cmd_seq->add_option("--length", length, "maximum word length")->required();
    cmd_seq->callback([&] {
        std::vector<unsigned> seq =
            max_grundy_by_length(parse_game(slurp(game_path)), length, threads);
        if (json) {
            std::cout << nlohmann::json{{"max_by_length", seq}} << "\n";
        } else {
            for (std::size_t i = 0; i < seq.size(); ++i)
                std::cout << (i ? "," : "") << seq[i];
            std::cout << "\n";
        }
    });

    auto* cmd_classes = app.add_subcommand("classes", "words holding one value");
    cmd_classes->add_option("--game", game_path, "game file")->required();
    cmd_classes->add_option("--value", value, "value to collect")->required();
    cmd_classes->add_option("--length", length, "maximum word length")->required();
    cmd_classes->callback([&] {
        RewriteSystem sys = parse_game(slurp(game_path));
        GrundyTable table = build_table_up_to(sys, length, threads);
        std::vector<Word> words = grundy_language_sample(table, value);
        if (json) {
            std::vector<std::string> out;
            for (const Word& w : words) out.push_back(sys.alphabet().render(w));
            std::cout << nlohmann::json{{"value", value}, {"words", out}} << "\n";
        } else {
            for (const Word& w : words) std::cout << sys.alphabet().render(w) << "\n";
        }
    });

    auto* cmd_verify = app.add_subcommand("verify", "check a machine against a game");
    cmd_verify->add_option("--game", game_path, "game file")->required();
    cmd_verify->add_option("--machine", machine_path, "machine file")->required();
    cmd_verify->callback([&] {
        RewriteSystem sys = parse_game(slurp(game_path));
        MooreMachine m = parse_moore(slurp(machine_path));
        VerificationReport rep = verify_grundy_moore(sys, m, state_budget);
        if (json) {
            std::cout << to_json(rep, sys.alphabet()) << "\n";
        } else if (rep.verified) {
            std::cout << "Verified\n";
        } else {
            std::cout << "Failed\n";
            for (const VerificationFailure& f : rep.failures) {
                if (f.kind == VerificationFailure::Kind::Stability)
                    std::cout << "stability class " << f.label_i << " witness "
                              << sys.alphabet().render(f.witness) << "\n";
                else
                    std::cout << "absorption class " << f.label_i << " misses " << f.label_j
                              << " witness " << sys.alphabet().render(f.witness) << "\n";
            }
        }
        if (!rep.verified) rc = 1;
    });

    auto* cmd_synth = app.add_subcommand("synth", "infer and certify a machine");
    cmd_synth->add_option("--game", game_path, "game file")->required();
    cmd_synth->add_option("--n-start", n_start, "first table length");
    cmd_synth->add_option("--n-max", n_max, "last table length");
    cmd_synth->add_option("--emit", emit_path, "write the proven machine here");
    cmd_synth->add_option("--dot", dot_path, "write a dot rendering here");
    cmd_synth->callback([&] {
        RewriteSystem sys = parse_game(slurp(game_path));
        SynthesisOptions opts;
        opts.state_budget = state_budget;
        opts.threads = threads;
        SynthesisResult res = synthesize_and_verify(sys, n_start, n_max, opts);
        if (json) {
            std::cout << to_json(res, sys.alphabet()) << "\n";
        } else {
            for (const SynthesisAttempt& a : res.attempts)
                std::cout << "length " << a.length << ": " << a.outcome << "\n";
            std::cout << to_string(res.status);
            if (!res.detail.empty()) std::cout << " (" << res.detail << ")";
            std::cout << "\n";
        }
        if (res.machine.has_value() && !emit_path.empty())
            spill(emit_path, to_moore_file(*res.machine));
        if (res.machine.has_value() && !dot_path.empty())
            spill(dot_path, to_dot(*res.machine));
        if (res.status == SynthesisResult::Status::Refuted) rc = 1;
    });

    auto* cmd_pda = app.add_subcommand("pda", "run the two-power pushdown machine");
    cmd_pda->add_option("--k", kk, "erasure power of a")->required();
    cmd_pda->add_option("--l", ll, "erasure power of b")->required();
    cmd_pda->add_option("--word", word_text, "input word")->required();
    cmd_pda->callback([&] {
        Pda p = build_pda(kk, ll);
        Word w = p.alphabet.parse_word(word_text);
        PdaRun r = run_pda(p, w);
        std::string nf = p.alphabet.render(word_of_stack(r.stack));
        if (json)
            std::cout << nlohmann::json{{"parity", r.parity},
                                        {"reductions", r.reduction_count},
                                        {"normal_form", nf},
                                        {"stack", stack_display(p, r)}}
                      << "\n";
        else
            std::cout << "value " << r.parity << " reductions " << r.reduction_count
                      << " normal-form \"" << nf << "\" stack " << stack_display(p, r)
                      << "\n";
    });

    auto* cmd_nf = app.add_subcommand("normal-form", "unique irreducible descendant");
    cmd_nf->add_option("--game", game_path, "game file")->required();
    cmd_nf->add_option("--word", word_text, "input word")->required();
    cmd_nf->callback([&] {
        RewriteSystem sys = parse_game(slurp(game_path));
        Word w = sys.alphabet().parse_word(word_text);
        NormalForm nf = normal_form(sys, w);
        if (json)
            std::cout << nlohmann::json{{"word", sys.alphabet().render(nf.word)},
                                        {"reductions", nf.reduction_count}}
                      << "\n";
        else
            std::cout << "\"" << sys.alphabet().render(nf.word) << "\" after "
                      << nf.reduction_count << " reductions\n";
    });

    auto* cmd_witness = app.add_subcommand("witness", "history-pinning word family");
    cmd_witness->add_option("--k", kk, "erasure power of a")->required();
    cmd_witness->add_option("--l", ll, "erasure power of b")->required();
    cmd_witness->add_option("--i", wi, "left block count")->required();
    cmd_witness->add_option("--j", wj, "right block count")->required();
    cmd_witness->callback([&] {
        Word u = witness_word(kk, ll, wi, wj);
        std::string text = Alphabet::from_chars("ab").render(u);
        if (json)
            std::cout << nlohmann::json{{"word", text}} << "\n";
        else
            std::cout << text << "\n";
    });

    auto* cmd_octal = app.add_subcommand("octal", "pile game tools");
    cmd_octal->add_option("--code", code_text, "code like 0.37")->required();
    cmd_octal->add_option("--n", length, "largest pile")->required();
    cmd_octal->add_flag("--crosscheck", do_crosscheck, "compare against the word engine");
    cmd_octal->add_flag("--period", do_period, "report the eventual period");
    cmd_octal->callback([&] {
        OctalCode code = parse_octal(code_text);
        if (do_crosscheck) {
            OctalCheck c = crosscheck_octal(code, length);
            if (json)
                std::cout << to_json(c) << "\n";
            else
                std::cout << (c.ok ? "Ok" : "Mismatch: " + c.detail) << "\n";
            if (!c.ok) rc = 1;
            return;
        }
        std::vector<unsigned> seq = octal_grundy_sequence(code, length);
        if (do_period) {
            auto p = find_period(seq, code.max_take());
            if (json) {
                nlohmann::json j;
                if (p.has_value())
                    j = {{"preperiod", p->preperiod}, {"period", p->period}};
                std::cout << j << "\n";
            } else if (p.has_value()) {
                std::cout << "preperiod " << p->preperiod << " period " << p->period << "\n";
            } else {
                std::cout << "no period within the computed range\n";
            }
            return;
        }
        if (json) {
            std::cout << nlohmann::json{{"sequence", seq}} << "\n";
        } else {
            for (std::size_t i = 0; i < seq.size(); ++i)
                std::cout << (i ? "," : "") << seq[i];
            std::cout << "\n";
        }
    });

    auto* cmd_tm = app.add_subcommand("tm", "machine games");
    cmd_tm->require_subcommand(1);

    auto* tm_build = cmd_tm->add_subcommand("build", "emit the game for a machine");
    tm_build->add_option("--tm", tm_path, "machine file")->required();
    tm_build->callback([&] {
        TmGame game = build_game(parse_tm(slurp(tm_path)));
        std::cout << to_game_file(game.sys);
    });

    auto* tm_run = cmd_tm->add_subcommand("run", "play out the forced line");
    tm_run->add_option("--tm", tm_path, "machine file")->required();
    tm_run->add_option("--pad", pad_text, "fuel runs, comma separated");
    tm_run->add_option("--m", mm, "canonical start with m blank cells");
    tm_run->add_option("--budget", budget, "move budget");
    tm_run->add_flag("--trace", trace, "print every word of the line");
    tm_run->callback([&] {
        TmGame game = build_game(parse_tm(slurp(tm_path)));
        Word w0 = pad_text.empty() ? canonical_winning_start(game, mm)
                                   : start_word(game, parse_runs(pad_text));
        ForcedRun run = forced_run(game, w0, budget);
        if (json) {
            std::cout << to_json(run, game.sys.alphabet()) << "\n";
        } else {
            if (trace)
                for (const Word& w : run.trajectory)
                    std::cout << game.sys.alphabet().render(w) << "\n";
            const char* v = run.verdict == ForcedRun::Verdict::AWins      ? "AWins"
                            : run.verdict == ForcedRun::Verdict::ALoses   ? "ALoses"
                                                                          : "BudgetExceeded";
            std::cout << v << " after " << run.move_count() << " moves"
                      << (run.halted ? ", halted" : "") << "\n";
        }
        if (run.verdict == ForcedRun::Verdict::BudgetExceeded) rc = 3;
    });

    auto* tm_cross = cmd_tm->add_subcommand("crosscheck", "replay the line on the interpreter");
    tm_cross->add_option("--tm", tm_path, "machine file")->required();
    tm_cross->add_option("--pad", pad_text, "fuel runs, comma separated");
    tm_cross->add_option("--m", mm, "canonical start with m blank cells");
    tm_cross->add_option("--budget", budget, "move budget");
    tm_cross->callback([&] {
        TmGame game = build_game(parse_tm(slurp(tm_path)));
        Word w0 = pad_text.empty() ? canonical_winning_start(game, mm)
                                   : start_word(game, parse_runs(pad_text));
        CrosscheckRun c = crosscheck_simulation(game, w0, budget);
        if (json)
            std::cout << to_json(c) << "\n";
        else
            std::cout << (c.ok ? "Ok" : "Mismatch: " + c.detail) << "\n";
        if (!c.ok) rc = 1;
    });

    auto* cmd_fixtures = app.add_subcommand("fixtures", "shipped data checks");
    auto* fix_all = cmd_fixtures->add_subcommand("verify-all", "verify every shipped machine");
    fix_all->add_option("--dir", dir_path, "fixtures directory")->required();
    fix_all->callback([&] {
        for (const std::string& name : {"fig1", "fig2", "fig3", "fig4"}) {
            auto [sys, m] = load_fixture(name, dir_path);
            VerificationReport rep = verify_grundy_moore(sys, m, state_budget);
            std::cout << name << ": " << (rep.verified ? "Verified" : "Failed") << "\n";
            if (!rep.verified) rc = 1;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
