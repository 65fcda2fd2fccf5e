#include "rgw/word.hpp"

#include "rgw/errors.hpp"

#include <sstream>

namespace rgw {

namespace {
bool is_plain_symbol_char(char c) {
    if (c == '#' || c == '[' || c == ']' || c == '-' || c == '>') return false;
    return c > ' ' && c < 127;
}
} // namespace

void Alphabet::add(const std::string& name) {
    if (name.empty()) throw ParseError("empty symbol name");
    if (index_.count(name)) throw ParseError("duplicate symbol: " + name);
    if (names_.size() >= 255) throw ParseError("alphabet too large");
    index_[name] = static_cast<Symbol>(names_.size());
    names_.push_back(name);
    if (name.size() != 1) single_char_ = false;
}

Alphabet Alphabet::from_chars(std::string_view letters) {
    Alphabet a;
    for (char c : letters) {
        if (!is_plain_symbol_char(c))
            throw ParseError(std::string("symbol character not allowed: '") + c + "'");
        a.add(std::string(1, c));
    }
    if (a.size() == 0) throw ParseError("alphabet is empty");
    return a;
}

Alphabet Alphabet::from_tokens(const std::vector<std::string>& tokens) {
    Alphabet a;
    for (const auto& t : tokens) a.add(t);
    if (a.size() == 0) throw ParseError("alphabet is empty");
    a.single_char_ = false; // token alphabets always render bracketed
    return a;
}

bool Alphabet::contains(std::string_view name) const {
    return index_.count(std::string(name)) != 0;
}

Symbol Alphabet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw ParseError("unknown symbol: " + std::string(name));
    return it->second;
}

const std::string& Alphabet::name(Symbol s) const {
    if (s >= names_.size()) throw DomainError("symbol index out of range");
    return names_[s];
}

Word Alphabet::parse_word(std::string_view text) const {
    // Trim surrounding whitespace.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty() || text == "eps") return Word();
    Word w;
    if (single_char_) {
        w.reserve(text.size());
        for (char c : text) {
            if (c == ' ' || c == '\t') continue;
            w.push_back(static_cast<char>(index_of(std::string_view(&c, 1))));
        }
        return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') { ++i; continue; }
        if (text[i] != '[') throw ParseError("expected '[' in word over token alphabet");
        auto close = text.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unterminated token in word");
        w.push_back(static_cast<char>(index_of(text.substr(i + 1, close - i - 1))));
        i = close + 1;
    }
    return w;
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty()) return "eps";
    std::string out;
    for (char c : w) {
        const std::string& n = name(static_cast<Symbol>(static_cast<unsigned char>(c)));
        if (single_char_) out += n;
        else out += "[" + n + "]";
    }
    return out;
}

std::string Alphabet::spec() const {
    std::string out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (single_char_) out += names_[i];
        else {
            if (i) out += " ";
            out += "[" + names_[i] + "]";
        }
    }
    return out;
}

std::uint64_t word_rank(const Word& w, std::size_t sigma) {
    std::uint64_t r = 0;
    for (char c : w) r = r * sigma + static_cast<unsigned char>(c);
    return r;
}

Word word_unrank(std::size_t length, std::uint64_t rank, std::size_t sigma) {
    Word w(length, '\0');
    for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<char>(rank % sigma);
        rank /= sigma;
    }
    return w;
}

} // namespace rgw
