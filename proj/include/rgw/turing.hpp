#pragma once

#include "rgw/core.hpp"
#include "rgw/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rgw {

// Single-tape machine with a left end marker convention: cell 0 always holds
// $, reading $ rewrites $ and moves right, nothing else writes $, and the
// head therefore never falls off. Accept and reject states both halt.
struct TmTransition {
    std::string next;
    std::string write;
    bool right = true;
};

struct TuringMachine {
    std::vector<std::string> states;
    std::string initial;
    std::string accept;
    std::string reject;
    std::vector<std::string> tape; // contains "$" and the blank "_"
    std::map<std::pair<std::string, std::string>, TmTransition> delta;

    bool is_halt(const std::string& q) const { return q == accept || q == reject; }
    void validate() const;
};

// Machine file format:
//   states: q0 q1 qacc qrej
//   initial: q0
//   accept: qacc
//   reject: qrej
//   tape: $ _ 1
//   delta q0 $ -> q1 $ R
TuringMachine parse_tm(std::string_view text);

// Rules are named for the marker in their left side: left-* rules act on a
// head facing left (La/Lb), right-* rules on one facing right (Ra/Rb).
enum class RuleKind { LeftShift, RightShift, LeftTransition, RightTransition, Halting };

// The machine as a word game. Tokens: the tape letters, the states, a fuel
// token ".", and four head markers La/Lb/Ra/Rb (side the head faces x walk
// phase). [x][La][q] is a head on cell x facing left in state q; [q][Ra][x]
// faces right. Every rule shortens the word, shifts burn fuel, transitions
// re-emit some, and a halting transition collapses the head block to the
// halt state token, which no rule mentions. From a start word the game is a
// single forced line, so who wins is decided by the parity of its length,
// and predicting the winner means predicting halting within the fuel.
struct TmGame {
    RewriteSystem sys;
    TuringMachine tm;
    Symbol pad = 0;
    Symbol mark_la = 0, mark_lb = 0, mark_ra = 0, mark_rb = 0;
    std::vector<Symbol> state_sym; // indexed like tm.states
    std::vector<Symbol> tape_sym;  // indexed like tm.tape
    Symbol dollar = 0, blank = 0;
    std::vector<RuleKind> kinds; // one per rule of sys

    TmGame(RewriteSystem s, TuringMachine t) : sys(std::move(s)), tm(std::move(t)) {}
};

TmGame build_game(const TuringMachine& tm);

const char* to_string(RuleKind k);

// $ [La] [q0] followed by one blank cell per entry, each preceded by that
// many fuel tokens.
Word start_word(const TmGame& game, const std::vector<std::size_t>& pad_runs);
// Any word $ [La] [q0] (fuel|blank)* is a legal start.
bool is_start(const TmGame& game, const Word& w);

// The start word with m blank cells and 2^(m+1) fuel tokens before each,
// enough for the head to make m full sweeps; if the machine halts on the
// empty tape within m steps, the first player wins from here.
Word canonical_winning_start(const TmGame& game, unsigned m);

struct NonUniqueMoveError : DomainError {
    using DomainError::DomainError;
};

struct ForcedRun {
    std::vector<Word> trajectory; // start first, stuck or halted word last
    std::vector<RuleKind> applied;
    bool halted = false; // last applied rule was Halting
    enum class Verdict { AWins, ALoses, BudgetExceeded } verdict = Verdict::ALoses;
    std::size_t move_count() const { return applied.size(); }
};

// Plays out the unique line from w. Throws NonUniqueMoveError if a position
// ever has two distinct successors; a line longer than step_budget stops
// with the BudgetExceeded verdict. The first player wins when the line has
// odd length and ends in the halting rule.
ForcedRun forced_run(const TmGame& game, const Word& w, std::size_t step_budget = 100000);

struct TmConfig {
    std::string state;
    std::size_t head = 0;
    std::vector<std::string> tape; // token names, cell 0 first
};

// Reads a machine configuration back out of a game word: drop fuel, then
// expect tape* (Q Ra x | x La Q) tape* with the head on the marker's letter.
// Mid-shift words (Lb/Rb) and halted words do not decode.
std::optional<TmConfig> decode(const TmGame& game, const Word& w);

struct SimRun {
    std::vector<TmConfig> configs; // before each step, final one last
    std::size_t steps = 0;
    bool halted = false;
};

// Reference interpreter, head on cell 0 of tape "$" padded with blanks.
SimRun simulate_tm(const TuringMachine& tm, std::size_t step_budget);

struct CrosscheckRun {
    bool ok = false;
    std::size_t game_moves = 0;
    std::size_t tm_steps = 0;
    bool game_halted = false;
    bool tm_halted = false;
    std::string detail;
};

// The decodable snapshots of the forced line from w0 must replay the
// interpreter's configuration sequence in order, stepping at most one
// configuration at a time, and a halted line must have witnessed every
// configuration up to the interpreter's final step.
CrosscheckRun crosscheck_simulation(const TmGame& game, const Word& w0,
                                    std::size_t step_budget = 100000);

} // namespace rgw
