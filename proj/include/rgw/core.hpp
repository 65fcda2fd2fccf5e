#pragma once

#include "rgw/word.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rgw {

// One rewrite rule lhs -> rhs; lhs is never empty and never equals rhs.
struct RewriteRule {
    Word lhs;
    Word rhs;
};

class RewriteSystem {
public:
    RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::string rule_text(std::size_t i) const;

private:
    Alphabet alphabet_;
    std::vector<RewriteRule> rules_;
};

// Game file format:
//   # comment
//   alphabet: ab
//   aa -> eps
//   b -> eps
// Token alphabets list bracketed symbols: "alphabet: [$] [_] [q0] ...".
RewriteSystem parse_game(std::string_view text);
std::string to_game_file(const RewriteSystem& sys);

// A move rewrites the lhs occurrence of rule `rule_index` at `position`.
struct Move {
    std::size_t rule_index;
    std::size_t position;
    Word result;
};

Word apply_rule(const Word& w, const RewriteRule& r, std::size_t position);

// All legal moves, ordered by (position, rule_index). Overlapping occurrences
// of the same lhs count once per position.
std::vector<Move> moves(const RewriteSystem& sys, const Word& w);

// Deduplicated move results in canonical (length-lex) order.
std::vector<Word> successor_set(const RewriteSystem& sys, const Word& w);

// Every rule strictly shortens the word.
bool is_strongly_terminating(const RewriteSystem& sys);

// Every rule erases a power of a single letter (x^k -> eps).
bool is_taking_and_merging(const RewriteSystem& sys);

} // namespace rgw
