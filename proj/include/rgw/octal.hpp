#pragma once

#include "rgw/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgw {

// Take-and-split pile game "0.d1 d2 ...": digit dk has bit 1 if k tokens may
// be removed emptying the pile, bit 2 if k may be removed leaving one pile,
// bit 4 if k may be removed splitting the rest into two nonempty piles.
struct OctalCode {
    std::vector<unsigned> digits; // digits[i] rules removal of i+1 tokens
    unsigned max_take() const { return static_cast<unsigned>(digits.size()); }
    std::string text() const;
};

OctalCode parse_octal(const std::string& text);

// G(0..n) by direct mex recursion over pile options.
std::vector<unsigned> octal_grundy_sequence(const OctalCode& code, std::size_t n);

struct Period {
    unsigned preperiod; // least n0
    unsigned period;    // least p for that n0
};

// Least (preperiod, period) whose match window is long enough to propagate
// forever: G(n+p) = G(n) for n0 <= n <= 2*n0 + p + t with t the largest
// take size, which closes the induction for all larger piles.
std::optional<Period> find_period(const std::vector<unsigned>& seq, unsigned t);

// Piles as a word: b separators around runs of a, one run per pile, so
// encode_piles({2,1}) = "baabab".
Word encode_piles(const std::vector<unsigned>& piles);

// The same game as word rewriting over {a,b}: bit 1 of digit k becomes
// b a^k b -> b, bit 2 becomes a^(k+1) -> a, bit 4 becomes a^(k+2) -> a b a.
// Always terminating (the a-count drops), not always strongly terminating.
RewriteSystem octal_to_rewrite(const OctalCode& code);

struct OctalCheck {
    bool ok = true;
    std::size_t positions_checked = 0;
    std::string detail; // first mismatch, empty when ok
};

// Engine values of encoded single piles 0..n vs pile arithmetic; for 0.37
// also against the two-route hand system {a->eps, aa->eps, aa->b}, which
// plays the same game on the same encodings.
OctalCheck crosscheck_octal(const OctalCode& code, unsigned n);

} // namespace rgw
