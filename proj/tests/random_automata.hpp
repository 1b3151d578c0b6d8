// random_automata.hpp -- seeded generators and a set-walk NFA acceptance
// oracle for property tests.

#ifndef ATOMKIT_TESTS_RANDOM_AUTOMATA_HPP
#define ATOMKIT_TESTS_RANDOM_AUTOMATA_HPP

#include <random>
#include <string>

#include "atomkit/automata.hpp"

namespace testutil {

inline atomkit::Dfa random_dfa(int n, int k, std::mt19937_64& rng) {
    atomkit::Dfa d;
    d.n = n;
    for (int a = 0; a < k; ++a)
        d.alphabet.push_back(static_cast<char>('a' + a));
    std::uniform_int_distribution<int> state(0, n - 1);
    d.delta.assign(n, std::vector<int>(k));
    for (int q = 0; q < n; ++q)
        for (int a = 0; a < k; ++a)
            d.delta[q][a] = state(rng);
    d.initial = state(rng);
    d.finals = atomkit::StateSet(n);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int q = 0; q < n; ++q)
        if (bit(rng))
            d.finals.set(q);
    return d;
}

inline atomkit::Nfa random_nfa(int n, int k, std::mt19937_64& rng) {
    atomkit::Nfa m;
    m.n = n;
    for (int a = 0; a < k; ++a)
        m.alphabet.push_back(static_cast<char>('a' + a));
    std::uniform_int_distribution<int> bit(0, 3); // sparse-ish transitions
    m.eta.assign(n, std::vector<atomkit::StateSet>(k, atomkit::StateSet(n)));
    for (int q = 0; q < n; ++q)
        for (int a = 0; a < k; ++a)
            for (int t = 0; t < n; ++t)
                if (bit(rng) == 0)
                    m.eta[q][a].set(t);
    m.initials = atomkit::StateSet(n);
    m.finals = atomkit::StateSet(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int q = 0; q < n; ++q) {
        if (coin(rng))
            m.initials.set(q);
        if (coin(rng))
            m.finals.set(q);
    }
    return m;
}

inline std::string random_word(const std::vector<char>& alphabet, int max_len,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
    std::string w;
    int l = len(rng);
    for (int i = 0; i < l; ++i)
        w += alphabet[sym(rng)];
    return w;
}

// Direct set-walk acceptance, independent of the subset construction.
inline bool nfa_accepts(const atomkit::Nfa& m, std::string_view word) {
    atomkit::StateSet current = m.initials;
    for (char c : word) {
        int a = m.symbol_index(c);
        atomkit::StateSet next(m.n);
        current.for_each([&](int q) { next |= m.eta[q][a]; });
        current = next;
    }
    return current.intersects(m.finals);
}

} // namespace testutil

#endif
