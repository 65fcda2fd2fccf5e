#include <doctest.h>

#include "rgw/core.hpp"
#include "rgw/errors.hpp"
#include "rgw/grundy.hpp"
#include "rgw/octal.hpp"

#include "test_helpers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace rgw;
using rgwtest::w2;

namespace {

// Independent pile recursion written directly against the digit semantics,
// kept separate from the library's sequence builder on purpose.
unsigned pile_value(const OctalCode& code, unsigned n, std::map<unsigned, unsigned>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::set<unsigned> options;
    for (unsigned k = 1; k <= code.max_take() && k <= n; ++k) {
        unsigned digit = code.digits[k - 1];
        if ((digit & 1) && n == k) options.insert(0);
        if ((digit & 2) && n > k) options.insert(pile_value(code, n - k, memo));
        if (digit & 4)
            for (unsigned left = 1; left + 1 <= n - k; ++left)
                options.insert(pile_value(code, left, memo) ^
                               pile_value(code, n - k - left, memo));
    }
    unsigned g = 0;
    while (options.count(g)) ++g;
    memo[n] = g;
    return g;
}

} // namespace

TEST_SUITE("octal") {

TEST_CASE("code strings parse and print") {
    OctalCode c = parse_octal("0.37");
    REQUIRE(c.digits.size() == 2);
    CHECK(c.digits[0] == 3);
    CHECK(c.digits[1] == 7);
    CHECK(c.max_take() == 2);
    CHECK(c.text() == "0.37");
    CHECK(parse_octal("0.007").text() == "0.007");

    CHECK_THROWS_AS(parse_octal("37"), ParseError);
    CHECK_THROWS_AS(parse_octal("0."), ParseError);
    CHECK_THROWS_AS(parse_octal("0.8"), ParseError);
    CHECK_THROWS_AS(parse_octal("0.19"), ParseError);
    CHECK_THROWS_AS(parse_octal("0.00"), ParseError);
}

TEST_CASE("first values of the split-capable game") {
    std::vector<unsigned> seq = octal_grundy_sequence(parse_octal("0.37"), 8);
    REQUIRE(seq.size() == 9);
    CHECK(seq[0] == 0);
    CHECK(seq[1] == 1);
    CHECK(seq[2] == 2);
}

TEST_CASE("sequence matches an independent pile recursion") {
    for (const char* text : {"0.37", "0.3", "0.137", "0.77"}) {
        OctalCode code = parse_octal(text);
        std::vector<unsigned> seq = octal_grundy_sequence(code, 40);
        std::map<unsigned, unsigned> memo;
        for (unsigned n = 0; n <= 40; ++n) {
            CAPTURE(text);
            CAPTURE(n);
            CHECK(seq[n] == pile_value(code, n, memo));
        }
    }
}

TEST_CASE("subtraction-style game alternates") {
    std::vector<unsigned> seq = octal_grundy_sequence(parse_octal("0.3"), 20);
    for (unsigned n = 0; n <= 20; ++n) CHECK(seq[n] == n % 2);
}

TEST_CASE("period detection on pinned sequences") {
    auto p = find_period({0, 1, 0, 1, 0, 1}, 1);
    REQUIRE(p.has_value());
    CHECK(p->preperiod == 0);
    CHECK(p->period == 2);

    CHECK(!find_period({0, 1, 2, 3, 4, 5}, 1).has_value());

    auto p3 = find_period(octal_grundy_sequence(parse_octal("0.3"), 30), 1);
    REQUIRE(p3.has_value());
    CHECK(p3->preperiod == 0);
    CHECK(p3->period == 2);
}

TEST_CASE("a detected period really extends") {
    // (code, window) pairs where the window already certifies the period
    for (auto [text, window] : {std::pair<const char*, unsigned>{"0.137", 200}, {"0.77", 200}}) {
        OctalCode code = parse_octal(text);
        std::vector<unsigned> seq = octal_grundy_sequence(code, 500);
        std::vector<unsigned> head(seq.begin(), seq.begin() + window + 1);
        auto p = find_period(head, code.max_take());
        REQUIRE(p.has_value());
        for (unsigned n = p->preperiod; n + p->period <= 500; ++n)
            CHECK(seq[n + p->period] == seq[n]);
    }
    auto p137 = find_period(octal_grundy_sequence(parse_octal("0.137"), 200), 3);
    REQUIRE(p137.has_value());
    CHECK(p137->preperiod == 52);
    CHECK(p137->period == 34);
}

TEST_CASE("pile encoding uses separators") {
    CHECK(encode_piles({3, 2}) == w2("baaabaab"));
    CHECK(encode_piles({}) == w2("b"));
    CHECK(encode_piles({1}) == w2("bab"));
    CHECK(encode_piles({2, 1}) == w2("baabab"));
}

TEST_CASE("digit translation produces the expected rule set") {
    RewriteSystem sys37 = octal_to_rewrite(parse_octal("0.37"));
    std::set<std::string> rules;
    for (const RewriteRule& r : sys37.rules())
        rules.insert(sys37.alphabet().render(r.lhs) + ">" + sys37.alphabet().render(r.rhs));
    CHECK(rules == std::set<std::string>{"bab>b", "aa>a", "baab>b", "aaa>a", "aaaa>aba"});

    RewriteSystem sys1 = octal_to_rewrite(parse_octal("0.1"));
    REQUIRE(sys1.rules().size() == 1);
    CHECK(sys1.alphabet().render(sys1.rules()[0].lhs) == "bab");
    CHECK(sys1.alphabet().render(sys1.rules()[0].rhs) == "b");
}

TEST_CASE("translated systems are not always strongly terminating") {
    CHECK(is_strongly_terminating(octal_to_rewrite(parse_octal("0.37"))));
    CHECK(!is_strongly_terminating(octal_to_rewrite(parse_octal("0.4"))));
}

TEST_CASE("single pile crosscheck agrees on both routes") {
    OctalCheck c37 = crosscheck_octal(parse_octal("0.37"), 10);
    CHECK(c37.ok);
    CHECK(c37.detail.empty());
    // Eleven piles through the translated system plus eleven through the
    // two-route hand system.
    CHECK(c37.positions_checked == 22);

    OctalCheck c3 = crosscheck_octal(parse_octal("0.3"), 20);
    CHECK(c3.ok);
    CHECK(c3.positions_checked == 21);

    CHECK(crosscheck_octal(parse_octal("0.1"), 6).ok);
}

TEST_CASE("the worked trace is legal move by move") {
    RewriteSystem sys = rgwtest::load_game("pile037");
    std::vector<Word> trace = {w2("baaabaab"), w2("baaabab"), w2("babab"), w2("bbab"),
                               w2("bbb")};
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        auto succ = successor_set(sys, trace[i]);
        CHECK(std::find(succ.begin(), succ.end(), trace[i + 1]) != succ.end());
    }
}

TEST_CASE("pair of piles behaves like the bitwise sum of its parts") {
    OctalCode code = parse_octal("0.37");
    std::vector<unsigned> seq = octal_grundy_sequence(code, 12);
    RewriteSystem hand = rgwtest::load_game("pile037");
    RewriteSystem translated = octal_to_rewrite(code);

    GrundyCache memo_hand;
    GrundyCache memo_tr;
    GrundyOptions opts;
    opts.assume_terminating = true;
    for (unsigned n1 = 0; n1 <= 6; ++n1)
        for (unsigned n2 = 0; n2 + n1 <= 12; ++n2) {
            Word w = encode_piles({n1, n2});
            unsigned expect = seq[n1] ^ seq[n2];
            CAPTURE(n1);
            CAPTURE(n2);
            CHECK(grundy(hand, w, memo_hand) == expect);
            CHECK(grundy(translated, w, memo_tr, opts) == expect);
        }
}

} // TEST_SUITE
