#include "rgw/automata.hpp"

#include "rgw/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace rgw {

State MooreMachine::run_state(const Word& w) const {
    State s = initial;
    for (char c : w) s = step(s, static_cast<Symbol>(static_cast<unsigned char>(c)));
    return s;
}

std::string MooreMachine::state_name(State s) const {
    if (s < names.size() && !names[s].empty()) return names[s];
    return "s" + std::to_string(s);
}

void MooreMachine::validate() const {
    const std::size_t n = num_states();
    const std::size_t sigma = alphabet.size();
    if (n == 0) throw DomainError("machine has no states");
    if (delta.size() != n * sigma) throw DomainError("machine transition table incomplete");
    if (initial >= n) throw DomainError("machine initial state out of range");
    for (State t : delta)
        if (t >= n) throw DomainError("machine transition target out of range");
    if (!names.empty() && names.size() != n)
        throw DomainError("machine state name list has wrong length");
}

bool Dfa::accepts(const Word& w) const {
    State s = initial;
    for (char c : w) s = step(s, static_cast<Symbol>(static_cast<unsigned char>(c)));
    return accepting[s];
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

State parse_state_id(const std::string& tok, std::size_t n, std::size_t lineno) {
    if (tok.size() < 2 || tok[0] != 's')
        throw ParseError("line " + std::to_string(lineno) + ": expected state id s<k>");
    unsigned long v = 0;
    try {
        v = std::stoul(tok.substr(1));
    } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": bad state id " + tok);
    }
    if (v >= n) throw ParseError("line " + std::to_string(lineno) + ": state id out of range");
    return static_cast<State>(v);
}

} // namespace

MooreMachine parse_moore(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    MooreMachine m;
    bool have_alphabet = false, have_states = false, have_initial = false;
    std::size_t n = 0;
    std::vector<bool> label_seen;
    std::vector<bool> delta_seen;
    std::string initial_tok;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_alphabet) {
            if (t.rfind("alphabet:", 0) != 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'alphabet: ...'");
            std::string rest = trim(t.substr(9));
            if (rest.find('[') != std::string::npos) {
                std::vector<std::string> tokens;
                std::size_t i = 0;
                while (i < rest.size()) {
                    if (rest[i] == ' ' || rest[i] == '\t') { ++i; continue; }
                    auto close = rest.find(']', i);
                    if (rest[i] != '[' || close == std::string::npos)
                        throw ParseError("line " + std::to_string(lineno) + ": bad alphabet");
                    tokens.push_back(rest.substr(i + 1, close - i - 1));
                    i = close + 1;
                }
                m.alphabet = Alphabet::from_tokens(tokens);
            } else {
                m.alphabet = Alphabet::from_chars(rest);
            }
            have_alphabet = true;
            continue;
        }
        if (!have_states) {
            if (t.rfind("states:", 0) != 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'states: <n>'");
            n = std::stoul(trim(t.substr(7)));
            if (n == 0) throw ParseError("line " + std::to_string(lineno) + ": zero states");
            m.labels.assign(n, 0);
            m.names.assign(n, "");
            m.delta.assign(n * m.alphabet.size(), 0);
            label_seen.assign(n, false);
            delta_seen.assign(n * m.alphabet.size(), false);
            have_states = true;
            continue;
        }
        if (!have_initial) {
            if (t.rfind("initial:", 0) != 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'initial: s<k>'");
            m.initial = parse_state_id(trim(t.substr(8)), n, lineno);
            have_initial = true;
            continue;
        }
        auto arrow_open = t.find("--");
        if (arrow_open != std::string::npos && t.find("-->", arrow_open) != std::string::npos) {
            auto arrow_close = t.find("-->", arrow_open);
            State src = parse_state_id(trim(t.substr(0, arrow_open)), n, lineno);
            State dst = parse_state_id(trim(t.substr(arrow_close + 3)), n, lineno);
            std::string sym_text = trim(t.substr(arrow_open + 2, arrow_close - arrow_open - 2));
            Word sym = m.alphabet.parse_word(sym_text);
            if (sym.size() != 1)
                throw ParseError("line " + std::to_string(lineno) + ": transition needs one symbol");
            std::size_t slot = src * m.alphabet.size() + static_cast<unsigned char>(sym[0]);
            if (delta_seen[slot])
                throw ParseError("line " + std::to_string(lineno) + ": duplicate transition");
            delta_seen[slot] = true;
            m.delta[slot] = dst;
            continue;
        }
        // State declaration: s<k> label=<g> [name=<text>]
        std::istringstream ls(t);
        std::string sid, field;
        ls >> sid;
        State s = parse_state_id(sid, n, lineno);
        bool got_label = false;
        while (ls >> field) {
            if (field.rfind("label=", 0) == 0) {
                m.labels[s] = static_cast<std::uint8_t>(std::stoul(field.substr(6)));
                got_label = true;
            } else if (field.rfind("name=", 0) == 0) {
                m.names[s] = field.substr(5);
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown field " + field);
            }
        }
        if (!got_label)
            throw ParseError("line " + std::to_string(lineno) + ": state without label");
        if (label_seen[s])
            throw ParseError("line " + std::to_string(lineno) + ": duplicate state " + sid);
        label_seen[s] = true;
    }
    if (!have_alphabet || !have_states || !have_initial)
        throw ParseError("machine file missing header lines");
    for (std::size_t s = 0; s < n; ++s)
        if (!label_seen[s]) throw ParseError("state s" + std::to_string(s) + " not declared");
    for (std::size_t slot = 0; slot < delta_seen.size(); ++slot)
        if (!delta_seen[slot])
            throw ParseError("machine transition table incomplete at s" +
                             std::to_string(slot / m.alphabet.size()));
    if (std::all_of(m.names.begin(), m.names.end(),
                    [](const std::string& s) { return s.empty(); }))
        m.names.clear();
    m.validate();
    return m;
}

std::string to_moore_file(const MooreMachine& m) {
    std::ostringstream out;
    out << "alphabet: " << m.alphabet.spec() << "\n";
    out << "states: " << m.num_states() << "\n";
    out << "initial: s" << m.initial << "\n";
    for (std::size_t s = 0; s < m.num_states(); ++s) {
        out << "s" << s << " label=" << unsigned(m.labels[s]);
        if (s < m.names.size() && !m.names[s].empty()) out << " name=" << m.names[s];
        out << "\n";
    }
    for (std::size_t s = 0; s < m.num_states(); ++s)
        for (Symbol c = 0; c < m.alphabet.size(); ++c) {
            std::string sym = m.alphabet.single_char() ? m.alphabet.name(c)
                                                       : "[" + m.alphabet.name(c) + "]";
            out << "s" << s << " --" << sym << "--> s" << m.step(static_cast<State>(s), c)
                << "\n";
        }
    return out.str();
}

std::string to_dot(const MooreMachine& m) {
    std::ostringstream out;
    out << "digraph moore {\n  rankdir=LR;\n  start [shape=point];\n";
    for (std::size_t s = 0; s < m.num_states(); ++s)
        out << "  s" << s << " [shape=circle, label=\"" << m.state_name(static_cast<State>(s))
            << "\\ng=" << unsigned(m.labels[s]) << "\"];\n";
    out << "  start -> s" << m.initial << ";\n";
    for (std::size_t s = 0; s < m.num_states(); ++s)
        for (Symbol c = 0; c < m.alphabet.size(); ++c)
            out << "  s" << s << " -> s" << m.step(static_cast<State>(s), c) << " [label=\""
                << m.alphabet.name(c) << "\"];\n";
    out << "}\n";
    return out.str();
}

Dfa class_dfa(const MooreMachine& m, unsigned label) {
    Dfa d;
    d.alphabet = m.alphabet;
    d.initial = m.initial;
    d.delta = m.delta;
    d.accepting.assign(m.num_states(), false);
    for (std::size_t s = 0; s < m.num_states(); ++s) d.accepting[s] = (m.labels[s] == label);
    return d;
}

Nfa nfa_of_dfa(const Dfa& d) {
    Nfa a;
    a.sigma = d.alphabet.size();
    a.adj.resize(d.num_states());
    a.accepting = d.accepting;
    a.initial = {d.initial};
    for (std::size_t s = 0; s < d.num_states(); ++s)
        for (Symbol c = 0; c < a.sigma; ++c)
            a.adj[s].push_back({c, d.step(static_cast<State>(s), c)});
    return a;
}

namespace {

State delta_star(const Dfa& d, State s, const Word& w) {
    for (char c : w) s = d.step(s, static_cast<Symbol>(static_cast<unsigned char>(c)));
    return s;
}

// Two layers of K plus one bridge per (state, pair): from s in layer 0, read
// `bridge_read`, land in layer 1 at delta*(s, bridge_jump). Accepting states
// live in layer 1, so accepted words cross exactly one bridge. All bridges
// share the two layers; keeping one layer-1 copy is what keeps the subset
// construction of this NFA small.
Nfa bridged(const Dfa& K, const std::vector<std::pair<Word, Word>>& bridges) {
    const std::size_t n = K.num_states();
    const std::size_t sigma = K.alphabet.size();
    Nfa a;
    a.sigma = sigma;
    a.adj.resize(2 * n);
    a.accepting.assign(2 * n, false);
    a.initial = {K.initial};
    for (std::size_t s = 0; s < n; ++s) {
        a.accepting[n + s] = K.accepting[s];
        for (Symbol c = 0; c < sigma; ++c) {
            State t = K.step(static_cast<State>(s), c);
            a.adj[s].push_back({c, t});
            a.adj[n + s].push_back({c, static_cast<State>(n + t)});
        }
    }
    for (const auto& [bridge_read, bridge_jump] : bridges) {
        for (std::size_t s = 0; s < n; ++s) {
            State target =
                static_cast<State>(n + delta_star(K, static_cast<State>(s), bridge_jump));
            if (bridge_read.empty()) {
                a.adj[s].push_back({static_cast<std::uint32_t>(sigma), target});
                continue;
            }
            State cur = static_cast<State>(s);
            for (std::size_t i = 0; i < bridge_read.size(); ++i) {
                State next;
                if (i + 1 == bridge_read.size()) {
                    next = target;
                } else {
                    next = static_cast<State>(a.adj.size());
                    a.adj.emplace_back();
                    a.accepting.push_back(false);
                }
                a.adj[cur].push_back(
                    {static_cast<std::uint32_t>(static_cast<unsigned char>(bridge_read[i])),
                     next});
                cur = next;
            }
        }
    }
    return a;
}

} // namespace

Nfa one_step_image(const Dfa& K, const RewriteRule& rule) {
    return bridged(K, {{rule.rhs, rule.lhs}});
}

Nfa one_step_preimage(const Dfa& K, const RewriteRule& rule) {
    return bridged(K, {{rule.lhs, rule.rhs}});
}

Nfa one_step_preimage(const Dfa& K, const std::vector<RewriteRule>& rules) {
    std::vector<std::pair<Word, Word>> bridges;
    for (const auto& r : rules) bridges.push_back({r.lhs, r.rhs});
    return bridged(K, bridges);
}

namespace {

void close_epsilon(const Nfa& a, std::vector<State>& set) {
    std::vector<bool> in(a.num_states(), false);
    for (State s : set) in[s] = true;
    std::deque<State> q(set.begin(), set.end());
    while (!q.empty()) {
        State s = q.front();
        q.pop_front();
        for (auto [c, t] : a.adj[s])
            if (c == a.sigma && !in[t]) {
                in[t] = true;
                set.push_back(t);
                q.push_back(t);
            }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

struct SubsetHash {
    std::size_t operator()(const std::vector<State>& v) const {
        std::size_t h = v.size();
        for (State s : v) h = h * 1000003u + s + 1;
        return h;
    }
};

} // namespace

Dfa determinize(const Nfa& a, std::size_t state_budget) {
    Dfa d;
    d.alphabet = Alphabet(); // callers re-attach a real alphabet when needed
    const std::size_t sigma = a.sigma;
    std::unordered_map<std::vector<State>, State, SubsetHash> id;
    std::vector<std::vector<State>> subsets;
    std::vector<State> start(a.initial);
    close_epsilon(a, start);
    id[start] = 0;
    subsets.push_back(start);
    std::vector<State> delta;
    std::vector<bool> accepting;
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        const auto here = subsets[cur];
        bool acc = std::any_of(here.begin(), here.end(),
                               [&](State s) { return a.accepting[s]; });
        accepting.push_back(acc);
        for (Symbol c = 0; c < sigma; ++c) {
            std::vector<State> next;
            for (State s : here)
                for (auto [sym, t] : a.adj[s])
                    if (sym == c) next.push_back(t);
            close_epsilon(a, next);
            auto it = id.find(next);
            State nid;
            if (it == id.end()) {
                nid = static_cast<State>(subsets.size());
                if (subsets.size() + 1 > state_budget)
                    throw BudgetError("determinization state budget exceeded");
                id[next] = nid;
                subsets.push_back(std::move(next));
            } else {
                nid = it->second;
            }
            delta.push_back(nid);
        }
    }
    d.initial = 0;
    d.delta = std::move(delta);
    d.accepting = std::move(accepting);
    return d;
}

Dfa complement(Dfa d) {
    for (std::size_t i = 0; i < d.accepting.size(); ++i) d.accepting[i] = !d.accepting[i];
    return d;
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool b_accept_sense, std::size_t state_budget) {
    const std::size_t sigma = a.delta.size() / a.num_states();
    if (b.delta.size() / b.num_states() != sigma)
        throw DomainError("product over different alphabets");
    Dfa out;
    out.alphabet = a.alphabet.size() ? a.alphabet : b.alphabet;
    std::unordered_map<std::uint64_t, State> id;
    std::vector<std::pair<State, State>> pairs;
    auto key = [](State x, State y) { return (std::uint64_t(x) << 32) | y; };
    id[key(a.initial, b.initial)] = 0;
    pairs.push_back({a.initial, b.initial});
    for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
        auto [x, y] = pairs[cur];
        out.accepting.push_back(a.accepting[x] && (b.accepting[y] == b_accept_sense));
        for (Symbol c = 0; c < sigma; ++c) {
            State nx = a.delta[x * sigma + c];
            State ny = b.delta[y * sigma + c];
            auto k = key(nx, ny);
            auto it = id.find(k);
            State nid;
            if (it == id.end()) {
                nid = static_cast<State>(pairs.size());
                if (pairs.size() + 1 > state_budget)
                    throw BudgetError("product state budget exceeded");
                id[k] = nid;
                pairs.push_back({nx, ny});
            } else {
                nid = it->second;
            }
            out.delta.push_back(nid);
        }
    }
    out.initial = 0;
    return out;
}

} // namespace

Dfa intersect(const Dfa& a, const Dfa& b, std::size_t state_budget) {
    return product(a, b, true, state_budget);
}

Dfa difference(const Dfa& a, const Dfa& b, std::size_t state_budget) {
    return product(a, b, false, state_budget);
}

bool dfa_empty(const Dfa& d) { return !shortest_member(d).has_value(); }

bool dfa_equal(const Dfa& a, const Dfa& b, std::size_t state_budget) {
    return dfa_empty(difference(a, b, state_budget)) &&
           dfa_empty(difference(b, a, state_budget));
}

std::optional<Word> shortest_member(const Dfa& d) {
    const std::size_t sigma = d.num_states() ? d.delta.size() / d.num_states() : 0;
    std::vector<int> parent(d.num_states(), -1);
    std::vector<Symbol> via(d.num_states(), 0);
    std::vector<bool> seen(d.num_states(), false);
    std::deque<State> q;
    seen[d.initial] = true;
    q.push_back(d.initial);
    auto build = [&](State s) {
        Word w;
        while (parent[s] >= 0) {
            w.push_back(static_cast<char>(via[s]));
            s = static_cast<State>(parent[s]);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    if (d.accepting[d.initial]) return Word();
    while (!q.empty()) {
        State s = q.front();
        q.pop_front();
        for (Symbol c = 0; c < sigma; ++c) {
            State t = d.delta[s * sigma + c];
            if (seen[t]) continue;
            seen[t] = true;
            parent[t] = static_cast<int>(s);
            via[t] = c;
            if (d.accepting[t]) return build(t);
            q.push_back(t);
        }
    }
    return std::nullopt;
}

std::optional<Word> shortest_member(const Nfa& a) {
    // Canonical-order search: plain BFS over a multi-initial NFA returns a
    // shortest word but not necessarily the least one, so compute the
    // distance-to-accept of every state first and then walk greedily,
    // smallest symbol first, never leaving the shortest-path layer.
    const std::uint32_t eps = static_cast<std::uint32_t>(a.sigma);
    const std::size_t n = a.num_states();
    if (n == 0 || a.initial.empty()) return std::nullopt;

    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::pair<std::uint32_t, State>>> rev(n);
    for (std::size_t s = 0; s < n; ++s)
        for (auto [c, t] : a.adj[s]) rev[t].push_back({c, static_cast<State>(s)});

    // 0-1 BFS on reversed edges: epsilon costs nothing, a symbol costs one.
    std::vector<std::size_t> dist(n, kInf);
    std::deque<State> dq;
    for (std::size_t s = 0; s < n; ++s)
        if (a.accepting[s]) {
            dist[s] = 0;
            dq.push_back(static_cast<State>(s));
        }
    while (!dq.empty()) {
        State u = dq.front();
        dq.pop_front();
        for (auto [c, p] : rev[u]) {
            std::size_t nd = dist[u] + (c == eps ? 0 : 1);
            if (nd < dist[p]) {
                dist[p] = nd;
                if (c == eps)
                    dq.push_front(p);
                else
                    dq.push_back(p);
            }
        }
    }

    std::vector<bool> in(n, false);
    std::vector<State> cur;
    auto add_closed = [&](State s) {
        if (in[s]) return;
        in[s] = true;
        cur.push_back(s);
        for (std::size_t i = cur.size() - 1; i < cur.size(); ++i)
            for (auto [c, t] : a.adj[cur[i]])
                if (c == eps && !in[t]) {
                    in[t] = true;
                    cur.push_back(t);
                }
    };
    for (State s : a.initial) add_closed(s);

    std::size_t d = kInf;
    for (State s : cur) d = std::min(d, dist[s]);
    if (d == kInf) return std::nullopt;

    Word w;
    w.reserve(d);
    for (std::size_t remaining = d; remaining > 0; --remaining) {
        std::vector<State> prev;
        prev.swap(cur);
        bool advanced = false;
        for (std::uint32_t c = 0; c < a.sigma && !advanced; ++c) {
            cur.clear();
            std::fill(in.begin(), in.end(), false);
            for (State s : prev)
                for (auto [cc, t] : a.adj[s])
                    if (cc == c) add_closed(t);
            for (State s : cur)
                if (dist[s] < remaining) {
                    w.push_back(static_cast<char>(c));
                    advanced = true;
                    break;
                }
        }
        if (!advanced) return std::nullopt; // unreachable if dist is consistent
    }
    return w;
}

Nfa nfa_union(const std::vector<Nfa>& parts) {
    Nfa out;
    if (parts.empty()) return out;
    out.sigma = parts[0].sigma;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        if (p.sigma != out.sigma) throw DomainError("union over different alphabets");
        for (std::size_t s = 0; s < p.num_states(); ++s) {
            out.adj.emplace_back();
            for (auto [c, t] : p.adj[s])
                out.adj.back().push_back({c, static_cast<State>(t + offset)});
            out.accepting.push_back(p.accepting[s]);
        }
        for (State s : p.initial) out.initial.push_back(static_cast<State>(s + offset));
        offset += p.num_states();
    }
    return out;
}

Nfa nfa_intersect_dfa(const Nfa& a, const Dfa& d, std::size_t state_budget) {
    const std::size_t sigma = a.sigma;
    Nfa out;
    out.sigma = sigma;
    std::unordered_map<std::uint64_t, State> id;
    std::vector<std::pair<State, State>> pairs;
    auto key = [](State x, State y) { return (std::uint64_t(x) << 32) | y; };
    auto intern = [&](State x, State y) {
        auto k = key(x, y);
        auto it = id.find(k);
        if (it != id.end()) return it->second;
        if (pairs.size() + 1 > state_budget) throw BudgetError("product state budget exceeded");
        State nid = static_cast<State>(pairs.size());
        id[k] = nid;
        pairs.push_back({x, y});
        out.adj.emplace_back();
        out.accepting.push_back(false);
        return nid;
    };
    for (State s : a.initial) out.initial.push_back(intern(s, d.initial));
    for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
        auto [x, y] = pairs[cur];
        out.accepting[cur] = a.accepting[x] && d.accepting[y];
        for (auto [c, t] : a.adj[x]) {
            if (c == sigma) {
                State nid = intern(t, y);
                out.adj[cur].push_back({static_cast<std::uint32_t>(sigma), nid});
            } else {
                State nid = intern(t, d.step(y, static_cast<Symbol>(c)));
                out.adj[cur].push_back({c, nid});
            }
        }
    }
    return out;
}

Dfa dfa_of_word(const Alphabet& alphabet, const Word& w) {
    Dfa d;
    d.alphabet = alphabet;
    const std::size_t sigma = alphabet.size();
    const std::size_t n = w.size() + 2; // word spine + sink
    const State sink = static_cast<State>(n - 1);
    d.initial = 0;
    d.accepting.assign(n, false);
    d.accepting[w.size()] = true;
    d.delta.assign(n * sigma, sink);
    for (std::size_t i = 0; i < w.size(); ++i)
        d.delta[i * sigma + static_cast<unsigned char>(w[i])] = static_cast<State>(i + 1);
    return d;
}

Dfa dfa_universal(const Alphabet& alphabet) {
    Dfa d;
    d.alphabet = alphabet;
    d.initial = 0;
    d.accepting = {true};
    d.delta.assign(alphabet.size(), 0);
    return d;
}

Dfa minimize(const Dfa& d) {
    const std::size_t sigma = d.num_states() ? d.delta.size() / d.num_states() : 0;
    // Reachable pruning in BFS order.
    std::vector<int> order(d.num_states(), -1);
    std::vector<State> bfs{d.initial};
    order[d.initial] = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (Symbol c = 0; c < sigma; ++c) {
            State t = d.step(bfs[i], c);
            if (order[t] < 0) {
                order[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    const std::size_t n = bfs.size();
    std::vector<unsigned> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = d.accepting[bfs[i]] ? 1 : 0;
    for (;;) {
        std::map<std::vector<unsigned>, unsigned> sig_id;
        std::vector<unsigned> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<unsigned> sig{cls[i]};
            for (Symbol c = 0; c < sigma; ++c)
                sig.push_back(cls[order[d.step(bfs[i], c)]]);
            auto [it, fresh] = sig_id.emplace(std::move(sig), 0);
            if (fresh) it->second = static_cast<unsigned>(sig_id.size() - 1);
            next[i] = it->second;
        }
        bool changed = (next != cls);
        cls = std::move(next);
        if (!changed) break;
    }
    // Renumber classes in BFS discovery order for a canonical result.
    unsigned num_cls = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> canon(num_cls, -1);
    unsigned next_id = 0;
    std::vector<unsigned> canon_order;
    canon[cls[0]] = static_cast<int>(next_id++);
    canon_order.push_back(cls[0]);
    for (std::size_t i = 0; i < canon_order.size(); ++i) {
        // Representative: first BFS state in this class.
        std::size_t rep = 0;
        while (cls[rep] != canon_order[i]) ++rep;
        for (Symbol c = 0; c < sigma; ++c) {
            unsigned t = cls[order[d.step(bfs[rep], c)]];
            if (canon[t] < 0) {
                canon[t] = static_cast<int>(next_id++);
                canon_order.push_back(t);
            }
        }
    }
    Dfa out;
    out.alphabet = d.alphabet;
    out.initial = 0;
    out.accepting.assign(next_id, false);
    out.delta.assign(next_id * sigma, 0);
    for (std::size_t i = 0; i < canon_order.size(); ++i) {
        std::size_t rep = 0;
        while (cls[rep] != canon_order[i]) ++rep;
        out.accepting[i] = d.accepting[bfs[rep]];
        for (Symbol c = 0; c < sigma; ++c)
            out.delta[i * sigma + c] =
                static_cast<State>(canon[cls[order[d.step(bfs[rep], c)]]]);
    }
    return out;
}

VerificationReport verify_grundy_moore(const RewriteSystem& sys, const MooreMachine& m,
                                       std::size_t state_budget) {
    m.validate();
    if (!(m.alphabet == sys.alphabet()))
        throw DomainError("machine and game use different alphabets");
    VerificationReport report;
    unsigned max_label = *std::max_element(m.labels.begin(), m.labels.end());

    std::vector<Dfa> classes;
    for (unsigned i = 0; i <= max_label; ++i) classes.push_back(class_dfa(m, i));

    for (unsigned i = 0; i <= max_label; ++i) {
        const Dfa& Mi = classes[i];
        // Stability: no one-step image of M_i meets M_i again.
        bool violated = false;
        for (const auto& rule : sys.rules()) {
            Nfa img = one_step_image(Mi, rule);
            if (shortest_member(nfa_intersect_dfa(img, Mi, state_budget)).has_value()) {
                violated = true;
                break;
            }
        }
        if (violated) {
            // Witness on the source side: a word of M_i with a move into M_i.
            auto wit = shortest_member(
                nfa_intersect_dfa(one_step_preimage(Mi, sys.rules()), Mi, state_budget));
            if (!wit) throw DomainError("stability witness vanished; inconsistent automata");
            report.failures.push_back(
                {VerificationFailure::Kind::Stability, i, 0, std::move(*wit)});
        }
        // Absorption: every word of M_i reaches each lower class in one move.
        for (unsigned j = 0; j < i; ++j) {
            Dfa can_reach_j = determinize(one_step_preimage(classes[j], sys.rules()), state_budget);
            can_reach_j.alphabet = m.alphabet;
            auto wit = shortest_member(difference(Mi, can_reach_j, state_budget));
            if (wit)
                report.failures.push_back(
                    {VerificationFailure::Kind::Absorption, i, j, std::move(*wit)});
        }
    }
    report.verified = report.failures.empty();
    return report;
}

std::pair<RewriteSystem, MooreMachine> load_fixture(const std::string& name,
                                                    const std::filesystem::path& fixtures_dir) {
    static const std::unordered_map<std::string, std::string> game_of = {
        {"fig1", "a2b.game"},
        {"fig2", "a3b.game"},
        {"fig3", "a12b.game"},
        {"fig4", "a123b.game"},
    };
    auto it = game_of.find(name);
    if (it == game_of.end()) throw DomainError("unknown fixture: " + name);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) throw ParseError("cannot open " + p.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    RewriteSystem sys = parse_game(slurp(fixtures_dir / it->second));
    MooreMachine m = parse_moore(slurp(fixtures_dir / (name + ".moore")));
    return {std::move(sys), std::move(m)};
}

MooreMachine minimize_moore(const MooreMachine& m) {
    const std::size_t sigma = m.alphabet.size();
    std::vector<int> order(m.num_states(), -1);
    std::vector<State> bfs{m.initial};
    order[m.initial] = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (Symbol c = 0; c < sigma; ++c) {
            State t = m.step(bfs[i], c);
            if (order[t] < 0) {
                order[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    const std::size_t n = bfs.size();
    std::vector<unsigned> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = m.labels[bfs[i]];
    // Make label classes dense.
    {
        std::map<unsigned, unsigned> dense;
        for (auto& c : cls) {
            auto [it, fresh] = dense.emplace(c, 0);
            if (fresh) it->second = static_cast<unsigned>(dense.size() - 1);
            c = it->second;
        }
    }
    for (;;) {
        std::map<std::vector<unsigned>, unsigned> sig_id;
        std::vector<unsigned> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<unsigned> sig{cls[i]};
            for (Symbol c = 0; c < sigma; ++c) sig.push_back(cls[order[m.step(bfs[i], c)]]);
            auto [it, fresh] = sig_id.emplace(std::move(sig), 0);
            if (fresh) it->second = static_cast<unsigned>(sig_id.size() - 1);
            next[i] = it->second;
        }
        bool changed = (next != cls);
        cls = std::move(next);
        if (!changed) break;
    }
    unsigned num_cls = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> canon(num_cls, -1);
    std::vector<unsigned> canon_order;
    canon[cls[0]] = 0;
    canon_order.push_back(cls[0]);
    std::vector<std::size_t> rep_of;
    for (std::size_t i = 0; i < canon_order.size(); ++i) {
        std::size_t rep = 0;
        while (cls[rep] != canon_order[i]) ++rep;
        rep_of.push_back(rep);
        for (Symbol c = 0; c < sigma; ++c) {
            unsigned t = cls[order[m.step(bfs[rep], c)]];
            if (canon[t] < 0) {
                canon[t] = static_cast<int>(canon_order.size());
                canon_order.push_back(t);
            }
        }
    }
    MooreMachine out;
    out.alphabet = m.alphabet;
    out.initial = 0;
    out.labels.assign(canon_order.size(), 0);
    out.delta.assign(canon_order.size() * sigma, 0);
    for (std::size_t i = 0; i < canon_order.size(); ++i) {
        out.labels[i] = m.labels[bfs[rep_of[i]]];
        for (Symbol c = 0; c < sigma; ++c)
            out.delta[i * sigma + c] =
                static_cast<State>(canon[cls[order[m.step(bfs[rep_of[i]], c)]]]);
    }
    return out;
}

bool moore_isomorphic(const MooreMachine& a, const MooreMachine& b) {
    if (a.alphabet.size() != b.alphabet.size()) return false;
    if (a.num_states() != b.num_states()) return false;
    const std::size_t sigma = a.alphabet.size();
    std::vector<int> map_ab(a.num_states(), -1);
    std::vector<bool> used_b(b.num_states(), false);
    map_ab[a.initial] = static_cast<int>(b.initial);
    used_b[b.initial] = true;
    std::deque<State> q{a.initial};
    while (!q.empty()) {
        State x = q.front();
        q.pop_front();
        State y = static_cast<State>(map_ab[x]);
        if (a.labels[x] != b.labels[y]) return false;
        for (Symbol c = 0; c < sigma; ++c) {
            State nx = a.step(x, c);
            State ny = b.step(y, c);
            if (map_ab[nx] < 0) {
                if (used_b[ny]) return false;
                map_ab[nx] = static_cast<int>(ny);
                used_b[ny] = true;
                q.push_back(nx);
            } else if (map_ab[nx] != static_cast<int>(ny)) {
                return false;
            }
        }
    }
    // All states must be reachable for the mapping to be a bijection.
    return std::find(map_ab.begin(), map_ab.end(), -1) == map_ab.end();
}

} // namespace rgw
