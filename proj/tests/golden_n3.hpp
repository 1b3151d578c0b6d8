// golden_n3.hpp -- the fully worked three-state example as literal automata:
// the witness DFA, its reverse, the determinized reverse, the atomaton, and
// the minimal DFAs of four of its atoms. Shared by the unit and acceptance
// suites as frozen expected values.

#ifndef ATOMKIT_TESTS_GOLDEN_N3_HPP
#define ATOMKIT_TESTS_GOLDEN_N3_HPP

#include <vector>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"

namespace golden {

using atomkit::Atomaton;
using atomkit::Dfa;
using atomkit::Nfa;
using atomkit::StateSet;

// The three-state witness: a cycles, b swaps 0 and 1, c sends 2 to 0.
inline Dfa d3() {
    Dfa d;
    d.n = 3;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 0;
    d.finals = StateSet::single(3, 2);
    d.delta = {{1, 1, 0}, {2, 0, 1}, {0, 2, 0}};
    return d;
}

// Its reverse: initial 2, final 0, transposed transitions.
inline Nfa d3_reverse() {
    Nfa m;
    m.n = 3;
    m.alphabet = {'a', 'b', 'c'};
    m.eta = {
        {StateSet::of(3, {2}), StateSet::of(3, {1}), StateSet::of(3, {0, 2})},
        {StateSet::of(3, {0}), StateSet::of(3, {0}), StateSet::of(3, {1})},
        {StateSet::of(3, {1}), StateSet::of(3, {2}), StateSet(3)},
    };
    m.initials = StateSet::single(3, 2);
    m.finals = StateSet::single(3, 0);
    return m;
}

// State order used by the determinized-reverse and atomaton literals:
// {}, 0, 1, 2, 01, 02, 12, 012.
inline std::vector<StateSet> subset_labels() {
    return {
        StateSet(3),
        StateSet::of(3, {0}),
        StateSet::of(3, {1}),
        StateSet::of(3, {2}),
        StateSet::of(3, {0, 1}),
        StateSet::of(3, {0, 2}),
        StateSet::of(3, {1, 2}),
        StateSet::of(3, {0, 1, 2}),
    };
}

// Determinization of the reverse: 8 states, initial {2}, final iff the
// subset contains 0.
inline Dfa d3_reverse_det() {
    Dfa d;
    d.n = 8;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 3;
    d.finals = StateSet::of(8, {1, 4, 5, 7});
    d.delta = {
        {0, 0, 0}, // {}
        {3, 2, 5}, // 0
        {1, 1, 2}, // 1
        {2, 3, 0}, // 2
        {5, 4, 7}, // 01
        {6, 6, 5}, // 02
        {4, 5, 2}, // 12
        {7, 7, 7}, // 012
    };
    return d;
}

// The atomaton: reverse of d3_reverse_det, states in the same order.
inline Atomaton d3_atomaton() {
    Atomaton a;
    a.source_n = 3;
    a.labels = subset_labels();
    Nfa& m = a.nfa;
    m.n = 8;
    m.alphabet = {'a', 'b', 'c'};
    auto set8 = [](std::initializer_list<int> bits) { return StateSet::of(8, bits); };
    m.eta = {
        {set8({0}), set8({0}), set8({0, 3})}, // {}
        {set8({2}), set8({2}), set8({})},     // 0
        {set8({3}), set8({1}), set8({2, 6})}, // 1
        {set8({1}), set8({3}), set8({})},     // 2
        {set8({6}), set8({4}), set8({})},     // 01
        {set8({4}), set8({6}), set8({1, 5})}, // 02
        {set8({5}), set8({5}), set8({})},     // 12
        {set8({7}), set8({7}), set8({4, 7})}, // 012
    };
    m.initials = StateSet::of(8, {1, 4, 5, 7});
    m.finals = StateSet::single(8, 3);
    return a;
}

// Minimal DFA of the atom with every quotient uncomplemented: 7 states.
// Order: 012 | 01,012 | 02,012 | 12,012 | 0,01,02,012 | 1,01,12,012
// | 2,02,12,012.
inline Dfa d3_atom_all() {
    Dfa d;
    d.n = 7;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 0;
    d.finals = StateSet::single(7, 6);
    d.delta = {
        {0, 0, 1}, {3, 1, 1}, {1, 3, 4}, {2, 2, 1}, {5, 5, 4}, {6, 4, 5}, {4, 6, 4},
    };
    return d;
}

// Minimal DFA of the atom labeled {0,1}: 10 states.
// Order: {} | 01 | 02 | 12 | 0,01 | 0,02 | 1,01 | 1,12 | 2,02 | 2,12.
inline Dfa d3_atom_01() {
    Dfa d;
    d.n = 10;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 1;
    d.finals = StateSet::of(10, {8, 9});
    d.delta = {
        {0, 0, 0}, // {}
        {3, 1, 0}, // 01
        {1, 3, 5}, // 02
        {2, 2, 0}, // 12
        {7, 6, 0}, // 0,01
        {6, 7, 5}, // 0,02
        {9, 4, 7}, // 1,01
        {8, 5, 7}, // 1,12
        {4, 9, 5}, // 2,02
        {5, 8, 0}, // 2,12
    };
    return d;
}

// Minimal DFA of the atom labeled {2}: 10 states.
// Order: {} | 0 | 1 | 2 | 0,01 | 0,02 | 1,01 | 1,12 | 2,02 | 2,12.
inline Dfa d3_atom_2() {
    Dfa d;
    d.n = 10;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 3;
    d.finals = StateSet::of(10, {3, 8, 9});
    d.delta = {
        {0, 0, 0}, // {}
        {2, 2, 0}, // 0
        {3, 1, 7}, // 1
        {1, 3, 0}, // 2
        {7, 6, 0}, // 0,01
        {6, 7, 5}, // 0,02
        {9, 4, 7}, // 1,01
        {8, 5, 7}, // 1,12
        {4, 9, 5}, // 2,02
        {5, 8, 0}, // 2,12
    };
    return d;
}

// Minimal DFA of the atom with every quotient complemented: 7 states.
// Order: {} | {},0 | {},1 | {},2 | {},0,1,01 | {},0,2,02 | {},1,2,12.
inline Dfa d3_atom_none() {
    Dfa d;
    d.n = 7;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 0;
    d.finals = StateSet::of(7, {3, 5, 6});
    d.delta = {
        {0, 0, 3}, {2, 2, 3}, {3, 1, 6}, {1, 3, 3}, {6, 4, 6}, {4, 6, 5}, {5, 5, 6},
    };
    return d;
}

// The witness pair at n = 2 and its four-atom atomaton, from the quotient
// equations of the two-state example. States in label order {}, 0, 1, 01.
inline Atomaton d2_atomaton() {
    Atomaton a;
    a.source_n = 2;
    a.labels = {StateSet(2), StateSet::of(2, {0}), StateSet::of(2, {1}),
                StateSet::of(2, {0, 1})};
    Nfa& m = a.nfa;
    m.n = 4;
    m.alphabet = {'a', 'b', 'c'};
    auto set4 = [](std::initializer_list<int> bits) { return StateSet::of(4, bits); };
    m.eta = {
        {set4({0}), set4({0}), set4({0, 2})}, // {}
        {set4({2}), set4({2}), set4({})},     // 0
        {set4({1}), set4({1}), set4({})},     // 1
        {set4({3}), set4({3}), set4({3, 1})}, // 01
    };
    m.initials = set4({1, 3});
    m.finals = set4({2});
    return a;
}

} // namespace golden

#endif
