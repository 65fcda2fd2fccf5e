#include "rgw/invariants.hpp"

#include "rgw/errors.hpp"

#include <array>

namespace rgw {

namespace {
constexpr char A = 0;
constexpr char B = 1;

void require_two_letters(const Word& w) {
    for (char c : w)
        if (c != A && c != B) throw DomainError("closed form needs a word over {a,b}");
}

std::pair<long, long> letter_counts(const Word& w) {
    long na = 0, nb = 0;
    for (char c : w) (c == A ? na : nb)++;
    return {na, nb};
}

unsigned positive_mod(long v, long m) { return static_cast<unsigned>(((v % m) + m) % m); }
} // namespace

BlockProfile block_profile(const Word& w, unsigned modulus) {
    if (modulus < 2) throw DomainError("block profile modulus must be at least 2");
    require_two_letters(w);
    BlockProfile p;
    p.modulus = modulus;
    p.k = 0;
    unsigned run = 0;
    for (char c : w) {
        if (c == A) {
            ++run;
        } else {
            p.residues.push_back(run % modulus);
            run = 0;
            ++p.k;
        }
    }
    p.residues.push_back(run % modulus);
    p.alpha.assign(modulus, 0);
    for (unsigned r : p.residues) ++p.alpha[r];
    p.last_residue = p.residues.back();
    return p;
}

unsigned s_a2b(const Word& w) {
    require_two_letters(w);
    auto [na, nb] = letter_counts(w);
    return positive_mod(na - 2 * nb, 4);
}

unsigned grundy_a2b(const Word& w) {
    unsigned s = s_a2b(w);
    return (s == 0 || s == 1) ? 0 : 1;
}

unsigned grundy_a_odd_b(const RewriteSystem& sys, const Word& w) {
    if (sys.alphabet().size() != 2)
        throw DomainError("single-letter odd-erasure family needs a two-letter alphabet");
    bool has_a1 = false, has_b1 = false;
    for (const auto& r : sys.rules()) {
        if (!r.rhs.empty()) throw DomainError("family rules must erase");
        for (char c : r.lhs)
            if (c != r.lhs[0]) throw DomainError("family rules erase powers of one letter");
        if (r.lhs.size() % 2 == 0)
            throw DomainError("family rules must erase an odd number of letters");
        if (r.lhs.size() == 1) (r.lhs[0] == A ? has_a1 : has_b1) = true;
    }
    if (!has_a1 || !has_b1)
        throw DomainError("family requires both single-letter erasures a and b");
    require_two_letters(w);
    return static_cast<unsigned>(w.size() % 2);
}

unsigned grundy_aa2b(const Word& w) {
    BlockProfile p = block_profile(w, 3);
    unsigned s = (2 * p.k + 2 * p.alpha[1] + p.alpha[2]) % 4;
    static constexpr std::array<unsigned, 4> value_of_s = {0, 2, 1, 3};
    return value_of_s[s];
}

unsigned grundy_a123b(const Word& w) {
    BlockProfile p = block_profile(w, 4);
    unsigned c1 = (p.k + p.alpha[1]) % 2;
    unsigned c2 = p.alpha[2] % 2;
    unsigned c3 = p.alpha[3] % 2;
    static constexpr std::array<unsigned, 8> value_of_triplet = {
        0, // 000
        3, // 001
        2, // 010
        1, // 011
        1, // 100
        2, // 101
        3, // 110
        0, // 111
    };
    return value_of_triplet[c1 * 4 + c2 * 2 + c3];
}

Outcome p_test_a12b12(const Word& w) {
    require_two_letters(w);
    auto [na, nb] = letter_counts(w);
    return positive_mod(na - nb, 3) == 0 ? Outcome::P : Outcome::N;
}

unsigned grundy_akb(unsigned k, const Word& w) {
    if (k < 2) throw DomainError("grundy_akb needs k > 1");
    require_two_letters(w);
    auto [na, nb] = letter_counts(w);
    return static_cast<unsigned>((nb + na / k) % 2);
}

namespace {

struct FormulaEntry {
    bool crosscheckable;             // game-value (or outcome) formula
    bool outcome_kind;               // compares P/N instead of a value
    bool needs_system;               // evaluation consults the system
    std::string (*eval)(const RewriteSystem*, const Word&, unsigned k);
    unsigned k; // for g-akb:<k>
};

std::string num(unsigned v) { return std::to_string(v); }

std::optional<FormulaEntry> lookup(const std::string& id) {
    if (id == "s-a2b")
        return FormulaEntry{false, false, false,
                            [](const RewriteSystem*, const Word& w, unsigned) { return num(s_a2b(w)); }, 0};
    if (id == "g-a2b")
        return FormulaEntry{true, false, false,
                            [](const RewriteSystem*, const Word& w, unsigned) { return num(grundy_a2b(w)); }, 0};
    if (id == "g-aoddb")
        return FormulaEntry{true, false, true,
                            [](const RewriteSystem* s, const Word& w, unsigned) {
                                return num(grundy_a_odd_b(*s, w));
                            }, 0};
    if (id == "g-aa2b")
        return FormulaEntry{true, false, false,
                            [](const RewriteSystem*, const Word& w, unsigned) { return num(grundy_aa2b(w)); }, 0};
    if (id == "g-a123b")
        return FormulaEntry{true, false, false,
                            [](const RewriteSystem*, const Word& w, unsigned) { return num(grundy_a123b(w)); }, 0};
    if (id == "p-a12b12")
        return FormulaEntry{true, true, false,
                            [](const RewriteSystem*, const Word& w, unsigned) {
                                return std::string(p_test_a12b12(w) == Outcome::P ? "P" : "N");
                            }, 0};
    if (id.rfind("g-akb:", 0) == 0) {
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(id.substr(6)));
        } catch (...) {
            return std::nullopt;
        }
        if (k < 2) return std::nullopt;
        return FormulaEntry{true, false, false,
                            [](const RewriteSystem*, const Word& w, unsigned kk) {
                                return num(grundy_akb(kk, w));
                            }, k};
    }
    return std::nullopt;
}

} // namespace

std::vector<std::string> formula_ids() {
    return {"s-a2b", "g-a2b", "g-aoddb", "g-aa2b", "g-a123b", "p-a12b12", "g-akb:<k>"};
}

bool formula_known(const std::string& id) { return lookup(id).has_value(); }

std::string eval_formula(const std::string& id, const RewriteSystem& sys, const Word& w) {
    auto entry = lookup(id);
    if (!entry) throw DomainError("unknown formula id: " + id);
    return entry->eval(&sys, w, entry->k);
}

CrosscheckResult crosscheck(const RewriteSystem& sys, const std::string& formula_id,
                            unsigned n, unsigned threads) {
    auto entry = lookup(formula_id);
    if (!entry) throw DomainError("unknown formula id: " + formula_id);
    if (!entry->crosscheckable)
        throw DomainError("formula " + formula_id + " is a statistic, not a game value");
    if (sys.alphabet().size() != 2)
        throw DomainError("crosscheck formulas apply to two-letter games only");
    GrundyTable table = build_table_up_to(sys, n, threads);
    const std::size_t sigma = 2;
    for (unsigned len = 0; len <= n; ++len) {
        for (std::uint64_t rank = 0; rank < table.stratum(len).size(); ++rank) {
            Word w = word_unrank(len, rank, sigma);
            unsigned exact = table.at(len, rank);
            std::string got = entry->eval(&sys, w, entry->k);
            std::string expected =
                entry->outcome_kind ? std::string(exact == 0 ? "P" : "N") : std::to_string(exact);
            if (got != expected) return {false, w, expected, got};
        }
    }
    return {true, Word(), "", ""};
}

} // namespace rgw
