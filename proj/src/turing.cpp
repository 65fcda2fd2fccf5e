#include "rgw/turing.hpp"

#include <algorithm>
#include <sstream>

namespace rgw {

namespace {

std::string trimmed(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

void TuringMachine::validate() const {
    auto in_states = [&](const std::string& q) {
        return std::find(states.begin(), states.end(), q) != states.end();
    };
    auto in_tape = [&](const std::string& x) {
        return std::find(tape.begin(), tape.end(), x) != tape.end();
    };
    if (states.empty()) throw DomainError("machine has no states");
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (states[i] == states[j]) throw DomainError("duplicate state " + states[i]);
    for (std::size_t i = 0; i < tape.size(); ++i)
        for (std::size_t j = i + 1; j < tape.size(); ++j)
            if (tape[i] == tape[j]) throw DomainError("duplicate tape letter " + tape[i]);
    if (!in_states(initial) || !in_states(accept) || !in_states(reject))
        throw DomainError("initial/accept/reject must be declared states");
    if (accept == reject) throw DomainError("accept and reject must differ");
    if (!in_tape("$") || !in_tape("_"))
        throw DomainError("tape alphabet must contain $ and _");
    for (const auto& [key, t] : delta) {
        const auto& [p, x] = key;
        if (!in_states(p) || !in_tape(x) || !in_states(t.next) || !in_tape(t.write))
            throw DomainError("transition over undeclared state or letter");
        if (is_halt(p)) throw DomainError("transition out of a halting state");
        if (x == "$" && (t.write != "$" || !t.right))
            throw DomainError("reading $ must rewrite $ and move right");
        if (x != "$" && t.write == "$")
            throw DomainError("only the end marker cell may hold $");
    }
}

TuringMachine parse_tm(std::string_view text) {
    TuringMachine tm;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        auto err = [&](const std::string& msg) {
            return ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (t.rfind("states:", 0) == 0) {
            tm.states = split_ws(t.substr(7));
        } else if (t.rfind("initial:", 0) == 0) {
            tm.initial = trimmed(t.substr(8));
        } else if (t.rfind("accept:", 0) == 0) {
            tm.accept = trimmed(t.substr(7));
        } else if (t.rfind("reject:", 0) == 0) {
            tm.reject = trimmed(t.substr(7));
        } else if (t.rfind("tape:", 0) == 0) {
            tm.tape = split_ws(t.substr(5));
        } else if (t.rfind("delta", 0) == 0) {
            auto tok = split_ws(t);
            if (tok.size() != 7 || tok[3] != "->") throw err("delta p x -> q y L|R");
            if (tok[6] != "L" && tok[6] != "R") throw err("direction must be L or R");
            auto key = std::make_pair(tok[1], tok[2]);
            if (tm.delta.count(key)) throw err("duplicate transition");
            tm.delta[key] = {tok[4], tok[5], tok[6] == "R"};
        } else {
            throw err("unknown line: " + t);
        }
    }
    try {
        tm.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return tm;
}

const char* to_string(RuleKind k) {
    switch (k) {
    case RuleKind::LeftShift: return "left-shift";
    case RuleKind::RightShift: return "right-shift";
    case RuleKind::LeftTransition: return "left-transition";
    case RuleKind::RightTransition: return "right-transition";
    default: return "halting";
    }
}

TmGame build_game(const TuringMachine& tm) {
    tm.validate();
    const std::vector<std::string> special = {".", "La", "Lb", "Ra", "Rb"};
    for (const auto& s : special) {
        if (std::find(tm.states.begin(), tm.states.end(), s) != tm.states.end() ||
            std::find(tm.tape.begin(), tm.tape.end(), s) != tm.tape.end())
            throw DomainError("name collides with a game token: " + s);
    }
    for (const auto& q : tm.states)
        if (std::find(tm.tape.begin(), tm.tape.end(), q) != tm.tape.end())
            throw DomainError("state and tape letter share a name: " + q);

    std::vector<std::string> tokens = special;
    tokens.insert(tokens.end(), tm.tape.begin(), tm.tape.end());
    tokens.insert(tokens.end(), tm.states.begin(), tm.states.end());
    Alphabet ab = Alphabet::from_tokens(tokens);

    auto sym = [&](const std::string& name) { return ab.index_of(name); };
    const Symbol pad = sym(".");
    const Symbol la = sym("La"), lb = sym("Lb"), ra = sym("Ra"), rb = sym("Rb");

    auto word = [](std::initializer_list<Symbol> ss) {
        Word w;
        for (Symbol s : ss) w.push_back(static_cast<char>(s));
        return w;
    };
    auto pads = [&](std::size_t n) { return Word(n, static_cast<char>(pad)); };

    std::vector<RewriteRule> rules;
    std::vector<RuleKind> kinds;
    auto add = [&](Word lhs, Word rhs, RuleKind k) {
        rules.push_back({std::move(lhs), std::move(rhs)});
        kinds.push_back(k);
    };

    for (const auto& qn : tm.states) {
        if (tm.is_halt(qn)) continue;
        Symbol q = sym(qn);
        add(pads(4) + word({la, q}), pads(1) + word({lb, q}) + pads(2), RuleKind::LeftShift);
        add(pads(1) + word({lb, q}), word({la, q}), RuleKind::LeftShift);
        add(word({q, ra}) + pads(4), pads(2) + word({q, rb}) + pads(1), RuleKind::RightShift);
        add(word({q, rb}) + pads(1), word({q, ra}), RuleKind::RightShift);
    }

    for (const auto& [key, t] : tm.delta) {
        Symbol p = sym(key.first), x = sym(key.second);
        Symbol q = sym(t.next), y = sym(t.write);
        if (tm.is_halt(t.next)) {
            add(word({x, la, p}), word({q}), RuleKind::Halting);
            add(word({p, ra, x}), word({q}), RuleKind::Halting);
        } else if (t.right) {
            Word rhs = word({y}) + pads(2) + word({q, rb}) + pads(1);
            add(word({x, la, p}) + pads(4), rhs, RuleKind::LeftTransition);
            add(word({p, ra, x}) + pads(4), rhs, RuleKind::RightTransition);
        } else {
            Word rhs = pads(1) + word({lb, q}) + pads(2) + word({y});
            add(pads(4) + word({x, la, p}), rhs, RuleKind::LeftTransition);
            add(pads(4) + word({p, ra, x}), rhs, RuleKind::RightTransition);
        }
    }

    TmGame game(RewriteSystem(ab, std::move(rules)), tm);
    game.pad = pad;
    game.mark_la = la;
    game.mark_lb = lb;
    game.mark_ra = ra;
    game.mark_rb = rb;
    for (const auto& x : tm.tape) game.tape_sym.push_back(sym(x));
    for (const auto& q : tm.states) game.state_sym.push_back(sym(q));
    game.dollar = sym("$");
    game.blank = sym("_");
    game.kinds = std::move(kinds);
    return game;
}

Word start_word(const TmGame& game, const std::vector<std::size_t>& pad_runs) {
    Word w;
    w.push_back(static_cast<char>(game.dollar));
    w.push_back(static_cast<char>(game.mark_la));
    w.push_back(static_cast<char>(game.state_sym[std::find(game.tm.states.begin(),
                                                           game.tm.states.end(), game.tm.initial) -
                                                 game.tm.states.begin()]));
    for (std::size_t run : pad_runs) {
        w.append(run, static_cast<char>(game.pad));
        w.push_back(static_cast<char>(game.blank));
    }
    return w;
}

Word canonical_winning_start(const TmGame& game, unsigned m) {
    if (m > 20) throw DomainError("start word would be unreasonably long");
    return start_word(game, std::vector<std::size_t>(m, std::size_t(1) << (m + 1)));
}

bool is_start(const TmGame& game, const Word& w) {
    if (w.size() < 3) return false;
    Symbol q0 = 0;
    for (std::size_t i = 0; i < game.tm.states.size(); ++i)
        if (game.tm.states[i] == game.tm.initial) q0 = game.state_sym[i];
    if (static_cast<Symbol>(w[0]) != game.dollar || static_cast<Symbol>(w[1]) != game.mark_la ||
        static_cast<Symbol>(w[2]) != q0)
        return false;
    return std::all_of(w.begin() + 3, w.end(), [&](char c) {
        Symbol s = static_cast<Symbol>(static_cast<unsigned char>(c));
        return s == game.pad || s == game.blank;
    });
}

ForcedRun forced_run(const TmGame& game, const Word& w, std::size_t step_budget) {
    ForcedRun run;
    run.trajectory.push_back(w);
    Word cur = w;
    bool out_of_budget = false;
    for (;;) {
        if (run.applied.size() >= step_budget) {
            out_of_budget = true;
            break;
        }
        auto ms = moves(game.sys, cur);
        if (ms.empty()) break;
        for (std::size_t i = 1; i < ms.size(); ++i)
            if (ms[i].result != ms[0].result)
                throw NonUniqueMoveError("position admits two distinct moves: " +
                                         game.sys.alphabet().render(cur));
        run.applied.push_back(game.kinds[ms[0].rule_index]);
        cur = ms[0].result;
        run.trajectory.push_back(cur);
    }
    run.halted = !run.applied.empty() && run.applied.back() == RuleKind::Halting;
    if (out_of_budget)
        run.verdict = ForcedRun::Verdict::BudgetExceeded;
    else
        run.verdict = (run.applied.size() % 2 == 1 && run.halted) ? ForcedRun::Verdict::AWins
                                                                  : ForcedRun::Verdict::ALoses;
    return run;
}

std::optional<TmConfig> decode(const TmGame& game, const Word& w) {
    std::vector<int> state_of(game.sys.alphabet().size(), -1);
    std::vector<int> tape_of(game.sys.alphabet().size(), -1);
    for (std::size_t i = 0; i < game.state_sym.size(); ++i) state_of[game.state_sym[i]] = int(i);
    for (std::size_t i = 0; i < game.tape_sym.size(); ++i) tape_of[game.tape_sym[i]] = int(i);

    std::vector<Symbol> u;
    for (char c : w) {
        Symbol s = static_cast<Symbol>(static_cast<unsigned char>(c));
        if (s != game.pad) u.push_back(s);
    }
    std::size_t markers = 0, marker_at = 0, states = 0, state_at = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Symbol s = u[i];
        if (s == game.mark_lb || s == game.mark_rb) return std::nullopt;
        if (s == game.mark_la || s == game.mark_ra) {
            ++markers;
            marker_at = i;
        } else if (state_of[s] >= 0) {
            ++states;
            state_at = i;
        } else if (tape_of[s] < 0) {
            return std::nullopt;
        }
    }
    if (states != 1) return std::nullopt;

    TmConfig cfg;
    auto tape_name = [&](Symbol s) { return game.tm.tape[tape_of[s]]; };

    if (markers != 1) return std::nullopt;
    const std::size_t j = marker_at;
    if (j == 0 || j + 1 >= u.size()) return std::nullopt;
    if (u[j] == game.mark_ra) {
        if (state_at != j - 1 || tape_of[u[j + 1]] < 0) return std::nullopt;
    } else {
        if (state_at != j + 1 || tape_of[u[j - 1]] < 0) return std::nullopt;
    }
    cfg.state = game.tm.states[state_of[u[state_at]]];
    cfg.head = j - 1;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (i != j && i != state_at) cfg.tape.push_back(tape_name(u[i]));
    if (cfg.head >= cfg.tape.size()) return std::nullopt;
    return cfg;
}

SimRun simulate_tm(const TuringMachine& tm, std::size_t step_budget) {
    SimRun out;
    TmConfig c;
    c.state = tm.initial;
    c.head = 0;
    c.tape = {"$"};
    for (;;) {
        out.configs.push_back(c);
        if (tm.is_halt(c.state)) {
            out.halted = true;
            break;
        }
        if (out.steps >= step_budget) break;
        auto it = tm.delta.find({c.state, c.tape[c.head]});
        if (it == tm.delta.end()) break;
        c.tape[c.head] = it->second.write;
        c.state = it->second.next;
        if (it->second.right) {
            ++c.head;
            if (c.head == c.tape.size()) c.tape.push_back("_");
        } else {
            if (c.head == 0) throw DomainError("head fell off the left end");
            --c.head;
        }
        ++out.steps;
    }
    return out;
}

CrosscheckRun crosscheck_simulation(const TmGame& game, const Word& w0,
                                    std::size_t step_budget) {
    ForcedRun run = forced_run(game, w0, step_budget);
    SimRun sim = simulate_tm(game.tm, step_budget);

    CrosscheckRun out;
    out.game_moves = run.move_count();
    out.tm_steps = sim.steps;
    out.game_halted = run.halted;
    out.tm_halted = sim.halted;

    auto equal_run = [](TmConfig a, TmConfig b) {
        if (a.state != b.state || a.head != b.head) return false;
        while (a.tape.size() < b.tape.size()) a.tape.push_back("_");
        while (b.tape.size() < a.tape.size()) b.tape.push_back("_");
        return a.tape == b.tape;
    };

    std::size_t ptr = 0, snapshot = 0;
    for (const Word& word : run.trajectory) {
        auto c = decode(game, word);
        if (!c) continue;
        ++snapshot;
        if (ptr < sim.configs.size() && equal_run(*c, sim.configs[ptr])) continue;
        if (ptr + 1 < sim.configs.size() && equal_run(*c, sim.configs[ptr + 1])) {
            ++ptr;
            continue;
        }
        std::ostringstream os;
        os << "snapshot " << snapshot << " matches neither interpreter step " << ptr << " nor "
           << ptr + 1;
        out.detail = os.str();
        return out;
    }
    if (snapshot == 0) {
        out.detail = "no decodable snapshot";
        return out;
    }
    if (run.halted && (!sim.halted || ptr + 2 != sim.configs.size())) {
        out.detail = "game halted but the interpreter run does not agree";
        return out;
    }
    out.ok = true;
    return out;
}

} // namespace rgw
