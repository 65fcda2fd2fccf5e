#pragma once

#include "rgw/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rgw {

// Least natural number not present in values.
unsigned mex(const std::vector<unsigned>& values);

// Exhaustive Grundy values for every word of length <= completed_length,
// stored as one dense byte array per length stratum, indexed by word_rank.
class GrundyTable {
public:
    GrundyTable(Alphabet alphabet, unsigned completed_length);

    const Alphabet& alphabet() const { return alphabet_; }
    unsigned completed_length() const { return static_cast<unsigned>(strata_.size()) - 1; }
    std::uint8_t at(std::size_t length, std::uint64_t rank) const { return strata_[length][rank]; }
    unsigned value(const Word& w) const;

    std::vector<std::uint8_t>& stratum(std::size_t length) { return strata_[length]; }
    const std::vector<std::uint8_t>& stratum(std::size_t length) const { return strata_[length]; }

    // One line per word in canonical order: {"word":"eps","g":0}
    void write_jsonl(std::ostream& out) const;
    // Compact form: textual header (magic, alphabet, max length), then the
    // raw strata back to back, one byte per word in rank order.
    void write_binary(std::ostream& out) const;
    static GrundyTable read_binary(std::istream& in);

    bool operator==(const GrundyTable& o) const {
        return alphabet_ == o.alphabet_ && strata_ == o.strata_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::vector<std::uint8_t>> strata_;
};

// Bottom-up stratified build; requires a strongly terminating system (every
// move lands in an already-computed stratum). Strata are filled with
// data-parallel workers when threads > 1; the result does not depend on the
// thread count. memory_budget caps the total number of table entries.
GrundyTable build_table_up_to(const RewriteSystem& sys, unsigned n, unsigned threads = 1,
                              std::uint64_t memory_budget = std::uint64_t(1) << 28);

struct GrundyOptions {
    // Required for systems that are not strongly terminating: the caller
    // asserts the rewrite relation terminates from the queried words.
    bool assume_terminating = false;
    std::size_t depth_budget = 0; // 0 = max(64, 10*|w|)
};

// Reachable-position memoization from w. The cache may be shared across calls
// for the same system. Detected cycles and exhausted depth raise BudgetError.
using GrundyCache = std::unordered_map<Word, unsigned>;
unsigned grundy(const RewriteSystem& sys, const Word& w, GrundyCache& cache,
                const GrundyOptions& opts = {});

enum class Outcome { P, N };
Outcome outcome(const RewriteSystem& sys, const Word& w, GrundyCache& cache,
                const GrundyOptions& opts = {});

// Running maximum: max over |w| <= len of g(w), for each len in 0..n.
std::vector<unsigned> max_grundy_by_length(const RewriteSystem& sys, unsigned n,
                                           unsigned threads = 1);
std::vector<unsigned> max_grundy_by_length(const GrundyTable& table);

// All words of length <= n with Grundy value `value`, canonical order.
std::vector<Word> grundy_language_sample(const GrundyTable& table, unsigned value);

} // namespace rgw
