#include "rgw/core.hpp"

#include "rgw/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rgw {

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    if (alphabet_.size() == 0) throw DomainError("rewrite system needs a nonempty alphabet");
    for (const auto& r : rules_) {
        if (r.lhs.empty()) throw DomainError("rule with empty lhs");
        if (r.lhs == r.rhs) throw DomainError("rule with lhs equal to rhs");
        for (char c : r.lhs + r.rhs)
            if (static_cast<unsigned char>(c) >= alphabet_.size())
                throw DomainError("rule uses symbol outside the alphabet");
    }
}

std::string RewriteSystem::rule_text(std::size_t i) const {
    const auto& r = rules_.at(i);
    return alphabet_.render(r.lhs) + " -> " + alphabet_.render(r.rhs);
}

namespace {
std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}
} // namespace

RewriteSystem parse_game(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Alphabet alphabet;
    bool have_alphabet = false;
    std::vector<RewriteRule> rules;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_alphabet) {
            const std::string key = "alphabet:";
            if (t.rfind(key, 0) != 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'alphabet: ...'");
            std::string rest = trim(t.substr(key.size()));
            if (rest.find('[') != std::string::npos) {
                std::vector<std::string> tokens;
                std::size_t i = 0;
                while (i < rest.size()) {
                    if (rest[i] == ' ' || rest[i] == '\t') { ++i; continue; }
                    if (rest[i] != '[')
                        throw ParseError("line " + std::to_string(lineno) + ": expected '[' in alphabet");
                    auto close = rest.find(']', i);
                    if (close == std::string::npos)
                        throw ParseError("line " + std::to_string(lineno) + ": unterminated token");
                    tokens.push_back(rest.substr(i + 1, close - i - 1));
                    i = close + 1;
                }
                alphabet = Alphabet::from_tokens(tokens);
            } else {
                std::string compact;
                for (char c : rest)
                    if (c != ' ' && c != '\t') compact += c;
                alphabet = Alphabet::from_chars(compact);
            }
            have_alphabet = true;
            continue;
        }
        auto arrow = t.find("->");
        if (arrow == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected '<lhs> -> <rhs>'");
        Word lhs, rhs;
        try {
            lhs = alphabet.parse_word(t.substr(0, arrow));
            rhs = alphabet.parse_word(t.substr(arrow + 2));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (lhs.empty())
            throw ParseError("line " + std::to_string(lineno) + ": rule lhs is empty");
        if (lhs == rhs)
            throw ParseError("line " + std::to_string(lineno) + ": rule lhs equals rhs");
        rules.push_back({std::move(lhs), std::move(rhs)});
    }
    if (!have_alphabet) throw ParseError("missing 'alphabet:' line");
    return RewriteSystem(std::move(alphabet), std::move(rules));
}

std::string to_game_file(const RewriteSystem& sys) {
    std::string out = "alphabet: " + sys.alphabet().spec() + "\n";
    for (std::size_t i = 0; i < sys.rules().size(); ++i) out += sys.rule_text(i) + "\n";
    return out;
}

Word apply_rule(const Word& w, const RewriteRule& r, std::size_t position) {
    Word out;
    out.reserve(w.size() - r.lhs.size() + r.rhs.size());
    out.append(w, 0, position);
    out.append(r.rhs);
    out.append(w, position + r.lhs.size(), Word::npos);
    return out;
}

std::vector<Move> moves(const RewriteSystem& sys, const Word& w) {
    std::vector<Move> out;
    const auto& rules = sys.rules();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t ri = 0; ri < rules.size(); ++ri) {
            const auto& r = rules[ri];
            if (r.lhs.size() > w.size() - pos) continue;
            if (w.compare(pos, r.lhs.size(), r.lhs) != 0) continue;
            out.push_back({ri, pos, apply_rule(w, r, pos)});
        }
    }
    return out;
}

std::vector<Word> successor_set(const RewriteSystem& sys, const Word& w) {
    std::set<Word, LengthLexLess> set;
    for (auto& m : moves(sys, w)) set.insert(std::move(m.result));
    return std::vector<Word>(set.begin(), set.end());
}

bool is_strongly_terminating(const RewriteSystem& sys) {
    return std::all_of(sys.rules().begin(), sys.rules().end(),
                       [](const RewriteRule& r) { return r.lhs.size() > r.rhs.size(); });
}

bool is_taking_and_merging(const RewriteSystem& sys) {
    for (const auto& r : sys.rules()) {
        if (!r.rhs.empty()) return false;
        for (char c : r.lhs)
            if (c != r.lhs[0]) return false;
    }
    return true;
}

} // namespace rgw
