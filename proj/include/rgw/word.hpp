#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rgw {

// A symbol is an index into an Alphabet. Words store raw indices, not
// characters; use Alphabet::render / parse_word to cross the text boundary.
using Symbol = std::uint8_t;
using Word = std::string;

// Canonical order everywhere: shorter first, then lexicographic by symbol index.
struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Ordered set of named symbols. Names are single characters for letter games
// ("ab") and bracketed tokens ("[q0]", "[#]", "[<A]") for generated games.
class Alphabet {
public:
    Alphabet() = default;
    static Alphabet from_chars(std::string_view letters);
    static Alphabet from_tokens(const std::vector<std::string>& tokens);

    std::size_t size() const { return names_.size(); }
    bool contains(std::string_view name) const;
    Symbol index_of(std::string_view name) const; // throws ParseError
    const std::string& name(Symbol s) const;
    bool single_char() const { return single_char_; }

    // "eps" denotes the empty word. Single-char alphabets read one symbol per
    // character; token alphabets read a sequence of [token] groups.
    Word parse_word(std::string_view text) const;
    std::string render(const Word& w) const; // empty word renders as "eps"

    // The alphabet as it appears after "alphabet:" in game files.
    std::string spec() const;

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
    bool single_char_ = true;
    void add(const std::string& name);
};

// Mixed-radix rank of w within its length stratum: the position of w in the
// lexicographic enumeration of all sigma^{|w|} words of that length.
std::uint64_t word_rank(const Word& w, std::size_t sigma);
Word word_unrank(std::size_t length, std::uint64_t rank, std::size_t sigma);

} // namespace rgw
