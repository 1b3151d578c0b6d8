// automata.hpp -- deterministic and nondeterministic finite automata.
//
// A Dfa is complete: delta is defined for every (state, symbol) pair. An Nfa
// may have several initial states and empty successor sets. Both are plain
// value types; operations never mutate their inputs.

#ifndef ATOMKIT_AUTOMATA_HPP
#define ATOMKIT_AUTOMATA_HPP

#include <string_view>
#include <vector>

#include "atomkit/state_set.hpp"

namespace atomkit {

struct Dfa {
    int n = 0;
    std::vector<char> alphabet;
    std::vector<std::vector<int>> delta; // delta[state][symbol_index]
    int initial = 0;
    StateSet finals;

    // Index of a symbol in the alphabet, -1 if absent.
    int symbol_index(char c) const {
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == c)
                return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

struct Nfa {
    int n = 0;
    std::vector<char> alphabet;
    std::vector<std::vector<StateSet>> eta; // eta[state][symbol_index]
    StateSet initials;
    StateSet finals;

    int symbol_index(char c) const {
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == c)
                return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

// Throw std::invalid_argument if the structural invariants are violated:
// non-empty duplicate-free alphabet, total transition table, indices in range.
void validate(const Dfa& d);

// An Nfa must have all state sets within range and eta of the right shape.
// The alphabet may be empty (a trimmed empty-language NFA keeps none of its
// structure but remains a value).
void validate(const Nfa& m);

// A Dfa viewed as an Nfa with singleton transitions.
Nfa as_nfa(const Dfa& d);

// Membership of a word. Every symbol must be in the alphabet.
bool accepts(const Dfa& d, std::string_view word);

// The state reached from `from` on `word`.
int run(const Dfa& d, int from, std::string_view word);

} // namespace atomkit

#endif
