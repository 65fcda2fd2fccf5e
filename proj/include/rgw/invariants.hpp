#pragma once

#include "rgw/core.hpp"
#include "rgw/grundy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgw {

// Decomposition of a word over {a,b} into the a-blocks between b's.
// k = number of b's, so there are k+1 blocks (possibly empty). residues[r] is
// the r-th block length mod `modulus`; alpha[r] counts blocks with residue r.
struct BlockProfile {
    unsigned modulus;
    unsigned k;
    std::vector<unsigned> residues;
    std::vector<unsigned> alpha;
    unsigned last_residue;
};

// Words for these closed forms use symbol 0 as a and symbol 1 as b.
BlockProfile block_profile(const Word& w, unsigned modulus);

// (count_a - 2*count_b) mod 4; constant under no move of {aa, b}.
unsigned s_a2b(const Word& w);
// Grundy value of w in the game {aa, b}: 0 when the statistic is 0 or 1.
unsigned grundy_a2b(const Word& w);
// Grundy value in games {a, b} extended by odd-length single-letter erasures:
// total letter count mod 2. Refuses systems outside that family.
unsigned grundy_a_odd_b(const RewriteSystem& sys, const Word& w);
// Grundy value in the game {a, aa, b} from the mod-3 block profile.
unsigned grundy_aa2b(const Word& w);
// Grundy value in the game {a, aa, aaa, b} from the mod-4 block profile.
unsigned grundy_a123b(const Word& w);
// Outcome in the game {a, aa, b, bb}: P exactly when count_a - count_b = 0 mod 3.
Outcome p_test_a12b12(const Word& w);
// Grundy value in the game {a^k, b}, k > 1: parity of count_b + floor(count_a/k).
unsigned grundy_akb(unsigned k, const Word& w);

// Closed-form registry. Stable identifiers:
//   s-a2b g-a2b g-aoddb g-aa2b g-a123b p-a12b12 g-akb:<k>
// Value formulas evaluate on any two-letter {a,b} word; g-aoddb carries a
// family precondition; s-a2b is a statistic, not a game value.
std::vector<std::string> formula_ids();
bool formula_known(const std::string& id);
// Evaluates a formula on one word ("P"/"N" for outcome formulas, a number
// otherwise). May need the system (g-aoddb).
std::string eval_formula(const std::string& id, const RewriteSystem& sys, const Word& w);

struct CrosscheckResult {
    bool ok;
    // First disagreement in canonical order, when !ok.
    Word word;
    std::string expected; // exact engine
    std::string got;      // closed form
};

// Compares the named closed form against the exact table on every word of
// length <= n. Refuses ids that are not game-value formulas and systems a
// formula cannot be evaluated against.
CrosscheckResult crosscheck(const RewriteSystem& sys, const std::string& formula_id,
                            unsigned n, unsigned threads = 1);

} // namespace rgw
