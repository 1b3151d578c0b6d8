// oracle.hpp -- brute-force cross-checks for atom counts and complexities
// that never touch the atomaton pipeline.

#ifndef ATOMKIT_ORACLE_HPP
#define ATOMKIT_ORACLE_HPP

#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "atomkit/automata.hpp"

namespace atomkit {

// The set of states of d from which `word` is accepted. A word belongs to
// the atom labeled P exactly when its signature is P.
StateSet signature(const Dfa& d, std::string_view word);

// All signatures that any word realizes, sorted by bitset encoding. Without
// max_len this is the fixpoint of one-letter extensions of the finals set
// (preimage closure over the transformation action); the result equals the
// atom label set. With max_len only words up to that length contribute.
std::vector<StateSet> reachable_signatures(const Dfa& d,
                                           std::optional<int> max_len = std::nullopt);

// Atom-complexity oracle independent of the atomaton: track the reachable
// n-tuples (delta(0,w), ..., delta(n-1,w)), accept a tuple iff the states it
// sends into the finals are exactly P, then minimize with the partition
// refinement minimizer. Recognizes the atom labeled P; accepts d.n <= 6 only
// (the tuple space grows as n^n).
Dfa tuple_product_atom_dfa(const Dfa& d, const StateSet& label);

// Every word up to max_len lies in exactly one atom, the one labeled by the
// word's signature. Requires d minimal.
bool partition_check(const Dfa& d, int max_len);

// The union of the atoms whose label contains `state` equals the right
// language of `state`, decided by product-automaton emptiness of the
// symmetric difference. Requires d minimal.
bool quotient_union_check(const Dfa& d, int state);

// Product automaton over reachable state pairs; a pair is final per
// `mode`: union, intersection or symmetric difference of the two languages.
enum class ProductMode { Union, Intersection, SymmetricDifference };
Dfa product(const Dfa& d1, const Dfa& d2, ProductMode mode);

// Emptiness of the symmetric difference, i.e. language equality.
bool same_language(const Dfa& d1, const Dfa& d2);

// The same automaton started in a different state.
Dfa restart(const Dfa& d, int state);

// Uniformly random complete DFA over the first `alphabet_size` letters,
// rejection-sampled until minimal (all states reachable and pairwise
// distinguishable). Finals are a uniform non-empty subset.
Dfa random_minimal_dfa(int n, int alphabet_size, std::mt19937_64& rng);

} // namespace atomkit

#endif
