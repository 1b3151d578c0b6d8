// atoms.hpp -- the atomaton of a minimal DFA and the quotient complexity of
// its atoms.
//
// An atom is identified by its label P, the set of subscripts of the source
// quotients it keeps uncomplemented; r = n - |P| counts the complemented
// ones. The atomaton is built through the reverse/determinize/reverse
// pipeline; restarting it in a single state and determinizing yields the
// minimal DFA of that atom, whose state count is the atom's quotient
// complexity.

#ifndef ATOMKIT_ATOMS_HPP
#define ATOMKIT_ATOMS_HPP

#include <vector>

#include "atomkit/automata.hpp"
#include "atomkit/bounds.hpp"

namespace atomkit {

// NFA whose states are the atoms of the source language, each carrying the
// subset of source states it is labeled by.
struct Atomaton {
    Nfa nfa;
    std::vector<StateSet> labels; // labels[state], width = source_n
    int source_n = 0;
};

struct AtomReport {
    StateSet label;     // P
    int r = 0;          // source_n - |P|
    int complexity = 0; // states of the minimal DFA of the atom
    BigCount bound;     // 2^n - 1 when r is 0 or n, f(n,r) otherwise
    bool tight = false; // complexity == bound
};

// The atomaton of L(d). Requires d minimal; throws otherwise, since atoms
// are defined over distinct quotients.
Atomaton atomaton(const Dfa& d);

// Number of atoms = number of atomaton states.
int atom_count(const Dfa& d);

// Minimal DFA of the atom labeled P: the atomaton restarted in the single
// state carrying P, determinized. The result is minimal outright because the
// atomaton has no empty states and its reverse is deterministic. Throws when
// P labels no atomaton state.
Dfa atom_dfa(const Atomaton& a, const StateSet& label);

// One report per atom, labels in increasing bitset-encoding order. Requires
// d.n <= 64. Independent per-atom work fans out over `jobs` threads when
// jobs > 1; the result order does not depend on scheduling.
std::vector<AtomReport> atom_complexities(const Dfa& d, int jobs = 1);

// Cross-check that an independent minimizer never shrinks any atom DFA.
bool verify_minimality_of_atom_dfas(const Dfa& d);

// True iff the two atomata have the same label set and, per label, the same
// per-symbol successor labels, initial labels and final labels.
bool same_labeled_nfa(const Atomaton& a, const Atomaton& b);

} // namespace atomkit

#endif
