#include "rgw/grundy.hpp"

#include "rgw/errors.hpp"
#include "rgw/util.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace rgw {

unsigned mex(const std::vector<unsigned>& values) {
    std::unordered_set<unsigned> present(values.begin(), values.end());
    unsigned g = 0;
    while (present.count(g)) ++g;
    return g;
}

GrundyTable::GrundyTable(Alphabet alphabet, unsigned completed_length)
    : alphabet_(std::move(alphabet)) {
    std::uint64_t size = 1;
    for (unsigned len = 0; len <= completed_length; ++len) {
        strata_.emplace_back(size, std::uint8_t(0));
        size *= alphabet_.size();
    }
}

unsigned GrundyTable::value(const Word& w) const {
    if (w.size() > completed_length()) throw DomainError("word longer than completed table");
    return strata_[w.size()][word_rank(w, alphabet_.size())];
}

namespace {

// 256-bit presence mask; Grundy values here are bounded by the move count of
// a single word, which stays far below 256 at table scale.
struct MexMask {
    std::array<std::uint64_t, 4> bits{};
    void set(std::uint8_t v) { bits[v >> 6] |= std::uint64_t(1) << (v & 63); }
    unsigned mex() const {
        for (unsigned blk = 0; blk < 4; ++blk) {
            std::uint64_t inv = ~bits[blk];
            if (inv) return blk * 64 + static_cast<unsigned>(__builtin_ctzll(inv));
        }
        return 256;
    }
};

} // namespace

GrundyTable build_table_up_to(const RewriteSystem& sys, unsigned n, unsigned threads,
                              std::uint64_t memory_budget) {
    if (!is_strongly_terminating(sys))
        throw DomainError("stratified table requires a strongly terminating system");
    const std::size_t sigma = sys.alphabet().size();
    std::uint64_t total = 0, size = 1;
    for (unsigned len = 0; len <= n; ++len) {
        total += size;
        if (total > memory_budget) throw BudgetError("table memory budget exceeded");
        size *= sigma;
    }
    GrundyTable table(sys.alphabet(), n);

    std::vector<std::uint64_t> pow(n + 2, 1);
    for (std::size_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * sigma;

    const auto& rules = sys.rules();
    std::vector<std::uint64_t> rhs_rank(rules.size());
    for (std::size_t ri = 0; ri < rules.size(); ++ri)
        rhs_rank[ri] = word_rank(rules[ri].rhs, sigma);

    for (unsigned m = 0; m <= n; ++m) {
        auto& out = table.stratum(m);
        auto work = [&](std::size_t begin, std::size_t end) {
            std::vector<std::uint64_t> pre(m + 1), suf(m + 1);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                Word w = word_unrank(m, rank, sigma);
                pre[0] = 0;
                for (unsigned i = 0; i < m; ++i)
                    pre[i + 1] = pre[i] * sigma + static_cast<unsigned char>(w[i]);
                suf[m] = 0;
                for (unsigned i = m; i-- > 0;)
                    suf[i] = static_cast<unsigned char>(w[i]) * pow[m - i - 1] + suf[i + 1];
                MexMask mask;
                for (std::size_t pos = 0; pos < m; ++pos) {
                    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
                        const auto& r = rules[ri];
                        if (r.lhs.size() > m - pos) continue;
                        if (w.compare(pos, r.lhs.size(), r.lhs) != 0) continue;
                        std::size_t len2 = m - r.lhs.size() + r.rhs.size();
                        std::uint64_t rank2 =
                            (pre[pos] * pow[r.rhs.size()] + rhs_rank[ri]) *
                                pow[m - pos - r.lhs.size()] +
                            suf[pos + r.lhs.size()];
                        mask.set(table.at(len2, rank2));
                    }
                }
                unsigned g = mask.mex();
                if (g > 255) throw DomainError("grundy value exceeds byte storage");
                out[rank] = static_cast<std::uint8_t>(g);
            }
        };
        parallel_for(out.size(), threads, work);
    }
    return table;
}

void GrundyTable::write_jsonl(std::ostream& out) const {
    const std::size_t sigma = alphabet_.size();
    for (std::size_t len = 0; len < strata_.size(); ++len) {
        for (std::uint64_t rank = 0; rank < strata_[len].size(); ++rank) {
            out << "{\"word\":\"" << alphabet_.render(word_unrank(len, rank, sigma))
                << "\",\"g\":" << unsigned(strata_[len][rank]) << "}\n";
        }
    }
}

void GrundyTable::write_binary(std::ostream& out) const {
    out << "rgw-table v1\n";
    out << "alphabet: " << alphabet_.spec() << "\n";
    out << "max-length: " << completed_length() << "\n\n";
    for (const auto& s : strata_)
        out.write(reinterpret_cast<const char*>(s.data()), static_cast<std::streamsize>(s.size()));
}

GrundyTable read_table_binary_impl(std::istream& in) {
    std::string magic, alpha_line, len_line, blank;
    std::getline(in, magic);
    std::getline(in, alpha_line);
    std::getline(in, len_line);
    std::getline(in, blank);
    if (magic != "rgw-table v1" || alpha_line.rfind("alphabet: ", 0) != 0 ||
        len_line.rfind("max-length: ", 0) != 0 || !blank.empty())
        throw ParseError("not a rgw-table v1 stream");
    std::string spec = alpha_line.substr(10);
    Alphabet alphabet;
    if (spec.find('[') != std::string::npos) {
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < spec.size()) {
            if (spec[i] == ' ') { ++i; continue; }
            auto close = spec.find(']', i);
            if (spec[i] != '[' || close == std::string::npos)
                throw ParseError("bad alphabet header");
            tokens.push_back(spec.substr(i + 1, close - i - 1));
            i = close + 1;
        }
        alphabet = Alphabet::from_tokens(tokens);
    } else {
        alphabet = Alphabet::from_chars(spec);
    }
    unsigned n = static_cast<unsigned>(std::stoul(len_line.substr(12)));
    GrundyTable table(alphabet, n);
    for (unsigned len = 0; len <= n; ++len) {
        auto& s = table.stratum(len);
        in.read(reinterpret_cast<char*>(s.data()), static_cast<std::streamsize>(s.size()));
        if (static_cast<std::size_t>(in.gcount()) != s.size())
            throw ParseError("truncated rgw-table stream");
    }
    return table;
}

GrundyTable GrundyTable::read_binary(std::istream& in) { return read_table_binary_impl(in); }

namespace {

struct TopDown {
    const RewriteSystem& sys;
    GrundyCache& cache;
    std::size_t budget;
    std::unordered_set<Word> in_progress;

    unsigned go(const Word& u, std::size_t depth) {
        auto hit = cache.find(u);
        if (hit != cache.end()) return hit->second;
        if (depth > budget)
            throw BudgetError("recursion depth budget exceeded (non-terminating or too-deep system)");
        if (!in_progress.insert(u).second)
            throw BudgetError("rewrite cycle reached from the queried word");
        std::vector<unsigned> vals;
        for (const auto& mv : moves(sys, u)) vals.push_back(go(mv.result, depth + 1));
        unsigned g = mex(vals);
        in_progress.erase(u);
        cache.emplace(u, g);
        return g;
    }
};

} // namespace

unsigned grundy(const RewriteSystem& sys, const Word& w, GrundyCache& cache,
                const GrundyOptions& opts) {
    if (!opts.assume_terminating && !is_strongly_terminating(sys))
        throw DomainError("system is not strongly terminating; pass assume_terminating "
                          "to assert termination");
    std::size_t budget = opts.depth_budget ? opts.depth_budget
                                           : std::max<std::size_t>(64, 10 * w.size());
    TopDown td{sys, cache, budget, {}};
    return td.go(w, 0);
}

Outcome outcome(const RewriteSystem& sys, const Word& w, GrundyCache& cache,
                const GrundyOptions& opts) {
    return grundy(sys, w, cache, opts) == 0 ? Outcome::P : Outcome::N;
}

std::vector<unsigned> max_grundy_by_length(const GrundyTable& table) {
    std::vector<unsigned> out;
    unsigned best = 0;
    for (unsigned len = 0; len <= table.completed_length(); ++len) {
        const auto& s = table.stratum(len);
        best = std::max<unsigned>(best, *std::max_element(s.begin(), s.end()));
        out.push_back(best);
    }
    return out;
}

std::vector<unsigned> max_grundy_by_length(const RewriteSystem& sys, unsigned n,
                                           unsigned threads) {
    return max_grundy_by_length(build_table_up_to(sys, n, threads));
}

std::vector<Word> grundy_language_sample(const GrundyTable& table, unsigned value) {
    std::vector<Word> out;
    const std::size_t sigma = table.alphabet().size();
    for (unsigned len = 0; len <= table.completed_length(); ++len) {
        const auto& s = table.stratum(len);
        for (std::uint64_t rank = 0; rank < s.size(); ++rank)
            if (s[rank] == value) out.push_back(word_unrank(len, rank, sigma));
    }
    return out;
}

} // namespace rgw
