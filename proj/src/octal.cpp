#include "rgw/octal.hpp"

#include "rgw/errors.hpp"
#include "rgw/grundy.hpp"

#include <algorithm>
#include <sstream>

namespace rgw {

std::string OctalCode::text() const {
    std::string s = "0.";
    for (unsigned d : digits) s += static_cast<char>('0' + d);
    return s;
}

OctalCode parse_octal(const std::string& text) {
    if (text.rfind("0.", 0) != 0 || text.size() < 3)
        throw ParseError("pile game code must look like 0.37");
    OctalCode code;
    for (std::size_t i = 2; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '7') throw ParseError("pile game digits are 0..7");
        code.digits.push_back(static_cast<unsigned>(c - '0'));
    }
    if (std::all_of(code.digits.begin(), code.digits.end(), [](unsigned d) { return d == 0; }))
        throw ParseError("pile game code needs a nonzero digit");
    return code;
}

std::vector<unsigned> octal_grundy_sequence(const OctalCode& code, std::size_t n) {
    std::vector<unsigned> g(n + 1, 0);
    std::vector<unsigned> opts;
    for (std::size_t m = 1; m <= n; ++m) {
        opts.clear();
        for (std::size_t k = 1; k <= code.digits.size() && k <= m; ++k) {
            unsigned d = code.digits[k - 1];
            if ((d & 1) && m == k) opts.push_back(0);
            if ((d & 2) && m > k) opts.push_back(g[m - k]);
            if ((d & 4) && m >= k + 2)
                for (std::size_t i = 1; 2 * i <= m - k; ++i)
                    opts.push_back(g[i] ^ g[m - k - i]);
        }
        g[m] = mex(opts);
    }
    return g;
}

std::optional<Period> find_period(const std::vector<unsigned>& seq, unsigned t) {
    const std::size_t N = seq.size();
    for (unsigned n0 = 0; n0 < N; ++n0) {
        // the window ends at 2*n0 + p + t and looks ahead p more entries
        for (unsigned p = 1; 2 * std::size_t(n0) + 2 * p + t < N; ++p) {
            bool ok = true;
            for (std::size_t n = n0; n <= 2 * std::size_t(n0) + p + t && ok; ++n)
                ok = (seq[n + p] == seq[n]);
            if (ok) return Period{n0, p};
        }
    }
    return std::nullopt;
}

Word encode_piles(const std::vector<unsigned>& piles) {
    Word w;
    w.push_back(1);
    for (unsigned n : piles) {
        w.append(n, static_cast<char>(0));
        w.push_back(1);
    }
    return w;
}

RewriteSystem octal_to_rewrite(const OctalCode& code) {
    Alphabet ab = Alphabet::from_chars("ab");
    std::vector<RewriteRule> rules;
    const Word a(1, static_cast<char>(0));
    const Word b(1, static_cast<char>(1));
    for (std::size_t k = 1; k <= code.digits.size(); ++k) {
        unsigned d = code.digits[k - 1];
        Word ak(k, static_cast<char>(0));
        if (d & 1) rules.push_back({b + ak + b, b});
        if (d & 2) rules.push_back({ak + a, a});
        if (d & 4) rules.push_back({ak + a + a, a + b + a});
    }
    return RewriteSystem(ab, rules);
}

OctalCheck crosscheck_octal(const OctalCode& code, unsigned n) {
    OctalCheck out;
    auto seq = octal_grundy_sequence(code, n);

    std::vector<std::pair<std::string, RewriteSystem>> systems;
    systems.push_back({"translated", octal_to_rewrite(code)});
    if (code.digits == std::vector<unsigned>{3, 7}) {
        Alphabet ab = Alphabet::from_chars("ab");
        const Word a(1, static_cast<char>(0));
        const Word b(1, static_cast<char>(1));
        systems.push_back(
            {"hand", RewriteSystem(ab, {{a, {}}, {a + a, {}}, {a + a, b}})});
    }

    GrundyOptions opts;
    opts.assume_terminating = true; // the a-count strictly decreases
    opts.depth_budget = 10000;

    for (const auto& [name, sys] : systems) {
        GrundyCache cache;
        for (unsigned m = 0; m <= n; ++m) {
            unsigned got = grundy(sys, encode_piles({m}), cache, opts);
            ++out.positions_checked;
            if (got != seq[m]) {
                std::ostringstream os;
                os << name << " system, pile " << m << ": expected " << seq[m]
                   << ", engine got " << got;
                out.detail = os.str();
                out.ok = false;
                return out;
            }
        }
    }
    return out;
}

} // namespace rgw
