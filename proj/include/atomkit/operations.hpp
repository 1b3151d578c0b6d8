// operations.hpp -- reversal, determinization, trimming, minimization and
// isomorphism checks on automata.

#ifndef ATOMKIT_OPERATIONS_HPP
#define ATOMKIT_OPERATIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "atomkit/automata.hpp"

namespace atomkit {

// Reverse of a DFA: initial and final sets are interchanged and every
// transition is reversed. q is a successor of p on a iff delta(q, a) = p.
Nfa reverse(const Dfa& d);

// Reverse of an NFA: initials/finals swapped, transition relation transposed.
Nfa reverse_nfa(const Nfa& m);

struct DeterminizeResult {
    Dfa dfa;
    // subsets[q] is the set of NFA states the DFA state q stands for. The
    // empty subset is a state whenever it is reachable (a non-final sink).
    std::vector<StateSet> subsets;
};

// Subset construction from m.initials. Only reachable subsets become states,
// numbered in breadth-first discovery order with symbols scanned in alphabet
// order; the initial subset is state 0. A subset is final iff it intersects
// m.finals. Rejects the degenerate NFA with empty initials and empty alphabet.
DeterminizeResult determinize(const Nfa& m);

struct TrimResult {
    Nfa nfa;
    // kept[new_index] = old_index; survivors keep their relative order.
    std::vector<int> kept;
};

// Removes states that are unreachable from the initials or cannot reach a
// final state. May return a 0-state NFA when the language is empty.
TrimResult trim(const Nfa& m);

// Minimal complete DFA of L(d): unreachable states dropped, equivalent states
// merged by partition refinement (Hopcroft), result renumbered canonically by
// BFS from the initial state. A dead state survives when the language needs
// one, so the output stays complete.
Dfa minimize(const Dfa& d);

// BFS renumbering of the reachable part; symbols scanned in alphabet order.
Dfa canonical_form(const Dfa& d);

// True iff some state bijection maps d1 onto d2 preserving initial, finals
// and transitions, decided by comparing canonical forms (reachable parts
// only). With ignore_finals the final-state sets are left out of the
// comparison. Throws on alphabet mismatch.
bool isomorphic(const Dfa& d1, const Dfa& d2, bool ignore_finals = false);

struct MinimalityReport {
    bool minimal = false;
    std::vector<int> unreachable;                   // states BFS never visits
    std::optional<std::pair<int, int>> merged_pair; // two equivalent states
};

// Diagnoses why a DFA is not minimal; used for input rejection messages.
MinimalityReport check_minimal(const Dfa& d);

} // namespace atomkit

#endif
