#include "rgw/pda.hpp"

#include "rgw/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rgw {

namespace {

bool single_letter_power(const Word& w, Symbol& letter) {
    if (w.empty()) return false;
    letter = static_cast<Symbol>(static_cast<unsigned char>(w[0]));
    return std::all_of(w.begin(), w.end(), [&](char c) {
        return static_cast<unsigned char>(c) == letter;
    });
}

// power[x] = k if the system has x^k -> eps, 0 if x has no rule.
std::vector<std::size_t> erasure_powers(const RewriteSystem& sys) {
    std::vector<std::size_t> th(sys.alphabet().size(), 0);
    for (const auto& r : sys.rules()) {
        Symbol letter = 0;
        if (!r.rhs.empty() || !single_letter_power(r.lhs, letter))
            throw DomainError("rules must erase a power of one letter");
        if (th[letter] != 0)
            throw DomainError("letter has more than one erasure power");
        th[letter] = r.lhs.size();
    }
    return th;
}

} // namespace

std::string Pda::stack_symbol_name(std::uint32_t idx) const {
    if (idx == 0) return "Z";
    auto [letter, count] = stack_symbols[idx];
    return "(" + alphabet.name(letter) + "," + std::to_string(count) + ")";
}

const Pda::Rule& Pda::rule_for(unsigned state, Symbol input, std::uint32_t top) const {
    std::size_t i = (state * alphabet.size() + input) * stack_symbols.size() + top;
    return rules[i];
}

std::string Pda::describe() const {
    std::ostringstream out;
    out << "states: 2 (erasure parity), initial 0\n";
    out << "stack: Z";
    for (std::uint32_t i = 1; i < stack_symbols.size(); ++i)
        out << " " << stack_symbol_name(i);
    out << "\n";
    for (const auto& r : rules) {
        out << "d(" << r.state << ", " << alphabet.name(r.input) << ", "
            << stack_symbol_name(r.top) << ") = (" << r.next_state << ", [";
        for (std::size_t i = 0; i < r.push.size(); ++i) {
            if (i) out << " ";
            out << stack_symbol_name(r.push[i]);
        }
        out << "])\n";
    }
    return out.str();
}

Pda build_pda(unsigned k, unsigned l) {
    if (k < 1 || l < 1) throw DomainError("erasure powers must be at least 1");

    Pda p;
    p.alphabet = Alphabet::from_chars("ab");
    p.k = k;
    p.l = l;
    const std::size_t th[2] = {k, l};
    p.stack_symbols.push_back({0, 0}); // bottom
    std::vector<std::vector<std::uint32_t>> sym_idx(2);
    for (Symbol x = 0; x < 2; ++x) {
        sym_idx[x].assign(th[x], 0);
        for (std::uint32_t c = 1; c < th[x]; ++c) {
            sym_idx[x][c] = static_cast<std::uint32_t>(p.stack_symbols.size());
            p.stack_symbols.push_back({x, c});
        }
    }

    for (unsigned state = 0; state < 2; ++state)
        for (Symbol x = 0; x < 2; ++x)
            for (std::uint32_t top = 0; top < p.stack_symbols.size(); ++top) {
                Pda::Rule r{state, x, top, state, {}};
                std::size_t m = th[x];
                auto [tl, tc] = p.stack_symbols[top];
                if (m == 1) {
                    r.next_state = 1 - state; // erases on arrival
                    r.push = {top};
                } else if (top != 0 && tl == x) {
                    if (tc + 1 < m) {
                        r.push = {sym_idx[x][tc + 1]};
                    } else {
                        r.next_state = 1 - state; // block complete, cancels
                        r.push = {};
                    }
                } else {
                    r.push = {top, sym_idx[x][1]};
                }
                p.rules.push_back(std::move(r));
            }
    return p;
}

PdaRun run_pda(const Pda& p, const Word& w) {
    std::vector<std::uint32_t> stack{0};
    PdaRun out;
    for (char ch : w) {
        Symbol x = static_cast<Symbol>(static_cast<unsigned char>(ch));
        if (x >= p.alphabet.size()) throw DomainError("word uses a letter the machine lacks");
        const auto& r = p.rule_for(out.parity, x, stack.back());
        if (r.next_state != out.parity) ++out.reduction_count;
        out.parity = r.next_state;
        stack.pop_back();
        stack.insert(stack.end(), r.push.begin(), r.push.end());
    }
    for (std::size_t i = 1; i < stack.size(); ++i)
        out.stack.push_back(p.stack_symbols[stack[i]]);
    return out;
}

Word word_of_stack(const std::vector<std::pair<Symbol, std::uint32_t>>& stack) {
    Word w;
    for (auto [letter, count] : stack)
        w.append(count, static_cast<char>(letter));
    return w;
}

std::string stack_display(const Pda& p, const PdaRun& r) {
    std::string out;
    for (auto it = r.stack.rbegin(); it != r.stack.rend(); ++it)
        out += "(" + p.alphabet.name(it->first) + "," + std::to_string(it->second) + ")";
    out += "Z";
    return out;
}

NormalForm normal_form(const RewriteSystem& sys, const Word& w) {
    auto th = erasure_powers(sys);
    NormalForm out;
    std::vector<std::pair<Symbol, std::size_t>> stack;
    for (char ch : w) {
        Symbol x = static_cast<Symbol>(static_cast<unsigned char>(ch));
        std::size_t m = th[x];
        if (m == 1) {
            ++out.reduction_count;
            continue;
        }
        if (m > 1 && !stack.empty() && stack.back().first == x) {
            if (stack.back().second + 1 == m) {
                stack.pop_back();
                ++out.reduction_count;
            } else {
                ++stack.back().second;
            }
        } else {
            stack.push_back({x, 1});
        }
    }
    for (auto [letter, count] : stack)
        out.word.append(count, static_cast<char>(letter));
    return out;
}

unsigned grundy_akbl(unsigned k, unsigned l, const Word& w) {
    return run_pda(build_pda(k, l), w).parity;
}

Word witness_word(unsigned k, unsigned l, unsigned i, unsigned j) {
    if (k < 2 || l < 2)
        throw DomainError("witness family needs both erasure powers >= 2");
    Word w;
    auto rep = [&w](Symbol x, std::size_t n) { w.append(n, static_cast<char>(x)); };
    rep(1, l - 1);
    for (unsigned t = 0; t < i; ++t) {
        rep(0, 1);
        rep(1, l - 1);
    }
    for (unsigned t = 0; t < j; ++t) {
        rep(1, 1);
        rep(0, k - 1);
    }
    return w;
}

} // namespace rgw
