#include "rgw/synthesis.hpp"

#include "rgw/errors.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace rgw {

namespace {

struct Prefix {
    unsigned length;
    std::uint64_t rank;
};

// Equal value subtrees down to `depth` levels below the two prefixes.
bool compatible(const GrundyTable& t, std::size_t sigma, const Prefix& a, const Prefix& b,
                unsigned depth) {
    std::uint64_t span = 1;
    for (unsigned d = 0; d <= depth; ++d, span *= sigma) {
        const auto& sa = t.stratum(a.length + d);
        const auto& sb = t.stratum(b.length + d);
        if (std::memcmp(sa.data() + a.rank * span, sb.data() + b.rank * span, span) != 0)
            return false;
    }
    return true;
}

} // namespace

InferenceOutcome infer_moore(const RewriteSystem& sys, std::size_t n,
                             const GrundyTable& table, std::size_t class_cap) {
    if (table.completed_length() < n)
        throw DomainError("table not complete to the training length");
    if (sys.alphabet() != table.alphabet())
        throw DomainError("table built over a different alphabet");
    const std::size_t sigma = table.alphabet().size();
    InferenceOutcome out;
    out.training_length = n;

    std::vector<Prefix> reps;
    auto class_of = [&](const Prefix& w) -> std::size_t {
        unsigned depth = n - w.length;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (compatible(table, sigma, reps[i], w, depth)) return i;
        return reps.size();
    };

    std::uint64_t span = 1;
    for (unsigned len = 0; len <= n; ++len, span *= sigma) {
        for (std::uint64_t rank = 0; rank < span; ++rank) {
            Prefix w{len, rank};
            ++out.words_examined;
            if (class_of(w) < reps.size()) continue;
            if (reps.size() == class_cap) throw BudgetError("prefix class budget exceeded");
            reps.push_back(w);
        }
    }
    out.classes = reps.size();

    for (const auto& r : reps)
        if (r.length == n) {
            out.detail = "class founded at the data horizon; transitions undefined";
            return out;
        }

    MooreMachine m;
    m.alphabet = table.alphabet();
    m.initial = 0; // the empty word always founds class 0
    m.labels.resize(reps.size());
    m.names.resize(reps.size());
    m.delta.resize(reps.size() * sigma);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        m.labels[i] = table.at(reps[i].length, reps[i].rank);
        m.names[i] = table.alphabet().render(word_unrank(reps[i].length, reps[i].rank, sigma));
        for (Symbol c = 0; c < sigma; ++c) {
            Prefix child{reps[i].length + 1, reps[i].rank * sigma + c};
            std::size_t cls = class_of(child);
            if (cls == reps.size())
                throw DomainError("child prefix escaped every class"); // cannot happen
            m.delta[i * sigma + c] = static_cast<State>(cls);
        }
    }

    // The hypothesis must reproduce every training value, not only the ones
    // its own class representatives saw.
    std::vector<State> prev{m.initial}, cur;
    if (m.labels[m.initial] != table.at(0, 0)) {
        out.detail = "hypothesis disagrees with data at the empty word";
        return out;
    }
    span = sigma;
    for (unsigned len = 1; len <= n; ++len, span *= sigma) {
        cur.resize(span);
        for (std::uint64_t rank = 0; rank < span; ++rank) {
            State s = m.step(prev[rank / sigma], static_cast<Symbol>(rank % sigma));
            cur[rank] = s;
            if (m.labels[s] != table.at(len, rank)) {
                out.detail = "hypothesis disagrees with data at " +
                             table.alphabet().render(word_unrank(len, rank, sigma));
                return out;
            }
        }
        std::swap(prev, cur);
    }

    out.machine = std::move(m);
    return out;
}

const char* to_string(SynthesisResult::Status s) {
    switch (s) {
    case SynthesisResult::Status::Proven: return "Proven";
    case SynthesisResult::Status::Refuted: return "Refuted";
    default: return "Inconclusive";
    }
}

SynthesisResult synthesize_and_verify(const RewriteSystem& sys, unsigned n_start,
                                      unsigned n_max, const SynthesisOptions& opts) {
    if (n_start > n_max) throw DomainError("n_start exceeds n_max");
    SynthesisResult result;

    for (unsigned n = n_start; n <= n_max; ++n) {
        InferenceOutcome inf;
        try {
            GrundyTable table = build_table_up_to(sys, n, opts.threads);
            inf = infer_moore(sys, n, table, opts.class_cap);
        } catch (const BudgetError& e) {
            result.attempts.push_back({n, std::string("budget: ") + e.what()});
            result.detail = e.what();
            break; // more data costs strictly more
        }
        if (!inf.machine) {
            result.attempts.push_back({n, inf.detail});
            result.detail = inf.detail;
            continue;
        }

        VerificationReport report;
        try {
            report = verify_grundy_moore(sys, *inf.machine, opts.state_budget);
        } catch (const BudgetError& e) {
            result.attempts.push_back({n, std::string("budget: ") + e.what()});
            result.detail = e.what();
            continue;
        }
        if (report.verified) {
            std::ostringstream os;
            os << "proven with " << inf.machine->num_states() << " states";
            result.attempts.push_back({n, os.str()});
            result.status = SynthesisResult::Status::Proven;
            result.machine = std::move(inf.machine);
            result.report = std::move(report);
            result.table_length = n;
            result.classes = inf.classes;
            result.detail = os.str();
            return result;
        }

        std::ostringstream os;
        os << "refuted: " << report.failures.size() << " failure(s), shortest witness "
           << sys.alphabet().render(report.failures.front().witness);
        result.attempts.push_back({n, os.str()});
        result.status = SynthesisResult::Status::Refuted;
        result.machine = std::move(inf.machine);
        result.report = std::move(report);
        result.table_length = n;
        result.classes = inf.classes;
        result.detail = os.str();
    }
    return result;
}

} // namespace rgw
