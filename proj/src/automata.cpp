#include "atomkit/automata.hpp"

#include <stdexcept>
#include <string>

namespace atomkit {

namespace {

void check_alphabet(const std::vector<char>& alphabet, bool allow_empty) {
    if (alphabet.empty() && !allow_empty)
        throw std::invalid_argument("alphabet must be non-empty");
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet.size(); ++j)
            if (alphabet[i] == alphabet[j])
                throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                            alphabet[i] + "'");
}

} // namespace

void validate(const Dfa& d) {
    if (d.n <= 0)
        throw std::invalid_argument("DFA must have at least one state");
    check_alphabet(d.alphabet, false);
    if (d.initial < 0 || d.initial >= d.n)
        throw std::invalid_argument("initial state out of range");
    if (d.finals.width() != d.n)
        throw std::invalid_argument("finals width does not match state count");
    if (static_cast<int>(d.delta.size()) != d.n)
        throw std::invalid_argument("delta must have one row per state");
    for (int q = 0; q < d.n; ++q) {
        if (d.delta[q].size() != d.alphabet.size())
            throw std::invalid_argument("delta row " + std::to_string(q) +
                                        " does not cover the alphabet");
        for (int t : d.delta[q])
            if (t < 0 || t >= d.n)
                throw std::invalid_argument("transition target out of range in state " +
                                            std::to_string(q));
    }
}

void validate(const Nfa& m) {
    if (m.n < 0)
        throw std::invalid_argument("negative state count");
    check_alphabet(m.alphabet, true);
    if (m.initials.width() != m.n || m.finals.width() != m.n)
        throw std::invalid_argument("initials/finals width does not match state count");
    if (static_cast<int>(m.eta.size()) != m.n)
        throw std::invalid_argument("eta must have one row per state");
    for (int q = 0; q < m.n; ++q) {
        if (m.eta[q].size() != m.alphabet.size())
            throw std::invalid_argument("eta row " + std::to_string(q) +
                                        " does not cover the alphabet");
        for (const StateSet& s : m.eta[q])
            if (s.width() != m.n)
                throw std::invalid_argument("successor set width mismatch in state " +
                                            std::to_string(q));
    }
}

Nfa as_nfa(const Dfa& d) {
    Nfa m;
    m.n = d.n;
    m.alphabet = d.alphabet;
    m.eta.assign(d.n, std::vector<StateSet>(d.alphabet.size(), StateSet(d.n)));
    for (int q = 0; q < d.n; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            m.eta[q][a].set(d.delta[q][a]);
    m.initials = StateSet::single(d.n, d.initial);
    m.finals = d.finals;
    return m;
}

int run(const Dfa& d, int from, std::string_view word) {
    int q = from;
    for (char c : word) {
        int a = d.symbol_index(c);
        if (a < 0)
            throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
        q = d.delta[q][a];
    }
    return q;
}

bool accepts(const Dfa& d, std::string_view word) {
    return d.finals.test(run(d, d.initial, word));
}

} // namespace atomkit
