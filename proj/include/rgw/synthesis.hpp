#pragma once

#include "rgw/automata.hpp"
#include "rgw/grundy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgw {

// Hypothesis machine inferred from an exhaustive value table by greedy
// prefix-class merging: words are scanned in canonical order and each joins
// the first earlier class whose value subtree matches on the suffix depths
// both can see; unmatched words found new classes. The hypothesis is kept
// only if (a) no class is founded at the data horizon, so every transition
// is defined, and (b) running the machine reproduces the whole table.
struct InferenceOutcome {
    std::optional<MooreMachine> machine;
    std::size_t training_length = 0;
    std::size_t classes = 0;        // prefix classes found
    std::size_t words_examined = 0; // training words scanned
    std::string detail;             // why there is no machine, when empty
};

// Table must be complete to length n; classes are merged over all prefixes
// of length <= n.
InferenceOutcome infer_moore(const RewriteSystem& sys, std::size_t n,
                             const GrundyTable& table, std::size_t class_cap = 200);

struct SynthesisOptions {
    std::size_t class_cap = 200;
    std::size_t state_budget = 1000000;
    unsigned threads = 1;
};

struct SynthesisAttempt {
    unsigned length;
    std::string outcome;
};

// One line per table length tried, then the final verdict: Proven means the
// certificate check established the hypothesis correct on all words, Refuted
// means the best hypothesis was disproved with a witness, Inconclusive means
// no hypothesis survived its own training data or the budgets.
struct SynthesisResult {
    enum class Status { Proven, Refuted, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<MooreMachine> machine;
    VerificationReport report; // populated for Proven and Refuted
    unsigned table_length = 0; // length of the deciding attempt
    std::size_t classes = 0;
    std::string detail;
    std::vector<SynthesisAttempt> attempts;
};

SynthesisResult synthesize_and_verify(const RewriteSystem& sys, unsigned n_start = 4,
                                      unsigned n_max = 16,
                                      const SynthesisOptions& opts = {});

const char* to_string(SynthesisResult::Status s);

} // namespace rgw
