#pragma once

#include "rgw/core.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rgw {

// Deterministic pushdown acceptor for the two-letter game {a^k, b^l}.
// Control state is the running parity of erasures; the stack keeps the
// partially cancelled suffix, so reading the whole word leaves the normal
// form on the stack (bottom to top) and the Grundy value in the control
// state.
struct Pda {
    struct Rule {
        unsigned state;              // 0 or 1
        Symbol input;                // letter read
        std::uint32_t top;           // stack symbol index, 0 = bottom
        unsigned next_state;
        std::vector<std::uint32_t> push; // replaces top, bottom to top
    };

    Alphabet alphabet;
    std::size_t k = 0; // erasure power for a
    std::size_t l = 0; // erasure power for b
    // Index 0 is the bottom marker; others are (letter, count) with
    // 1 <= count < power(letter).
    std::vector<std::pair<Symbol, std::uint32_t>> stack_symbols;
    std::vector<Rule> rules; // dense: ((state * sigma + input) * #symbols + top)

    std::string stack_symbol_name(std::uint32_t idx) const;
    const Rule& rule_for(unsigned state, Symbol input, std::uint32_t top) const;
    std::string describe() const;
};

// Machine for {a^k, b^l}; k = 1 or l = 1 degenerates to flipping on every
// such letter with no stack traffic for it.
Pda build_pda(unsigned k, unsigned l);

struct PdaRun {
    unsigned parity = 0;
    std::vector<std::pair<Symbol, std::uint32_t>> stack; // bottom marker omitted
    std::size_t reduction_count = 0;
};

PdaRun run_pda(const Pda& p, const Word& w);

Word word_of_stack(const std::vector<std::pair<Symbol, std::uint32_t>>& stack);

// Stack rendered top to bottom, ending at the bottom marker: "(b,1)(a,1)Z".
std::string stack_display(const Pda& p, const PdaRun& r);

struct NormalForm {
    Word word;
    std::size_t reduction_count = 0;
};

// Unique irreducible descendant for systems whose rules each erase a power
// of one letter, at most one power per letter (letters without a rule never
// cancel). Any alphabet size.
NormalForm normal_form(const RewriteSystem& sys, const Word& w);

// Grundy value in {a^k, b^l}: the parity of the reduction count, since every
// move changes it by one and the normal form is unique.
unsigned grundy_akbl(unsigned k, unsigned l, const Word& w);

// Family showing that games with both erasure powers >= 2 have no finite
// certificate: u(i,j) = b^(l-1) (a b^(l-1))^i (b a^(k-1))^j is a P-position
// iff i >= j, which pins an unbounded amount of history.
Word witness_word(unsigned k, unsigned l, unsigned i, unsigned j);

} // namespace rgw
