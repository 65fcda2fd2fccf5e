#pragma once

#include "rgw/core.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgw {

using State = std::uint32_t;

// Complete deterministic automaton with a Grundy label on every state.
struct MooreMachine {
    Alphabet alphabet;
    State initial = 0;
    std::vector<State> delta;         // num_states * sigma entries
    std::vector<std::uint8_t> labels; // one per state
    std::vector<std::string> names;   // optional; empty means s0, s1, ...

    std::size_t num_states() const { return labels.size(); }
    State step(State s, Symbol c) const { return delta[s * alphabet.size() + c]; }
    State run_state(const Word& w) const;
    unsigned run_label(const Word& w) const { return labels[run_state(w)]; }
    std::string state_name(State s) const;
    void validate() const; // completeness, ranges
};

// Machine file format:
//   alphabet: ab
//   states: 4
//   initial: s0
//   s0 label=0 name=0.0
//   s0 --a--> s1
MooreMachine parse_moore(std::string_view text);
std::string to_moore_file(const MooreMachine& m);
std::string to_dot(const MooreMachine& m);

// Complete DFA over the same word representation.
struct Dfa {
    Alphabet alphabet;
    State initial = 0;
    std::vector<State> delta;
    std::vector<bool> accepting;
    std::size_t num_states() const { return accepting.size(); }
    State step(State s, Symbol c) const { return delta[s * alphabet.size() + c]; }
    bool accepts(const Word& w) const;
};

struct Nfa {
    std::size_t sigma = 0;
    // adj[s] lists (symbol, target); symbol == sigma encodes an epsilon edge.
    std::vector<std::vector<std::pair<std::uint32_t, State>>> adj;
    std::vector<State> initial;
    std::vector<bool> accepting;
    std::size_t num_states() const { return accepting.size(); }
};

// Words labelled `label` by the machine, as a complete DFA.
Dfa class_dfa(const MooreMachine& m, unsigned label);

Nfa nfa_of_dfa(const Dfa& d);

// Language { x rhs y : x lhs y accepted by K }: the one-step successors of
// L(K) under the rule. Built with two copies of K and one bridge per state
// reading rhs, so the bridge is crossed exactly once. K must be complete.
Nfa one_step_image(const Dfa& K, const RewriteRule& rule);
// Language { x lhs y : x rhs y accepted by K }: the one-step predecessors.
Nfa one_step_preimage(const Dfa& K, const RewriteRule& rule);
// Predecessors under any rule of the set. Equivalent to the union of the
// per-rule languages but built over one shared pair of K layers, which keeps
// the machine small under determinization.
Nfa one_step_preimage(const Dfa& K, const std::vector<RewriteRule>& rules);

// Subset construction (epsilon-aware). Throws BudgetError past state_budget.
Dfa determinize(const Nfa& a, std::size_t state_budget = 1000000);
Dfa complement(Dfa d);
Dfa intersect(const Dfa& a, const Dfa& b, std::size_t state_budget = 1000000);
Dfa difference(const Dfa& a, const Dfa& b, std::size_t state_budget = 1000000);
Dfa minimize(const Dfa& d);
bool dfa_empty(const Dfa& d);
bool dfa_equal(const Dfa& a, const Dfa& b, std::size_t state_budget = 1000000);

// Least accepted word in canonical order, if any.
std::optional<Word> shortest_member(const Dfa& d);
std::optional<Word> shortest_member(const Nfa& a);

Nfa nfa_union(const std::vector<Nfa>& parts);
// Product with a DFA (epsilon edges move only the NFA side).
Nfa nfa_intersect_dfa(const Nfa& a, const Dfa& d, std::size_t state_budget = 1000000);

// Small builders, mostly for tests and witnesses.
Dfa dfa_of_word(const Alphabet& alphabet, const Word& w);
Dfa dfa_universal(const Alphabet& alphabet);

struct VerificationFailure {
    enum class Kind { Stability, Absorption };
    Kind kind;
    unsigned label_i = 0;
    unsigned label_j = 0; // absorption target class, unused for stability
    Word witness;         // shortest word violating the condition
};

struct VerificationReport {
    bool verified = false;
    std::vector<VerificationFailure> failures;
};

// Certificate check: the machine's label classes M_0..M_K are exactly the
// Grundy classes of the game iff (stability) no move leads from M_i back
// into M_i, and (absorption) every word of M_i has a move into each M_j,
// j < i. Checked per class with one-step image/preimage automata; failure
// witnesses are the shortest words that break the named condition.
VerificationReport verify_grundy_moore(const RewriteSystem& sys, const MooreMachine& m,
                                       std::size_t state_budget = 1000000);

// Paired (game, machine) data files shipped under the fixtures directory:
// fig1 {aa,b}, fig2 {aaa,b}, fig3 {a,aa,b}, fig4 {a,aa,aaa,b}.
std::pair<RewriteSystem, MooreMachine> load_fixture(const std::string& name,
                                                    const std::filesystem::path& fixtures_dir);

MooreMachine minimize_moore(const MooreMachine& m);
// Structural equality up to state renumbering (labels included).
bool moore_isomorphic(const MooreMachine& a, const MooreMachine& b);

} // namespace rgw
