// io.hpp -- the JSON automaton format and Graphviz DOT export.
//
// JSON shape:
//   {"type": "dfa"|"nfa", "n": int, "alphabet": ["a", ...],
//    "transitions": dfa: [n][|alphabet|] ints, nfa: [n][|alphabet|] int arrays,
//    "initial": int (dfa) | int array (nfa), "finals": int array}
// Atomaton export is the NFA shape plus a "labels" array of int arrays.

#ifndef ATOMKIT_IO_HPP
#define ATOMKIT_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"

namespace atomkit {

nlohmann::json dfa_to_json(const Dfa& d);
nlohmann::json nfa_to_json(const Nfa& m);
nlohmann::json atomaton_to_json(const Atomaton& a);
nlohmann::json reports_to_json(const std::vector<AtomReport>& reports);

Dfa dfa_from_json(const nlohmann::json& j);
Nfa nfa_from_json(const nlohmann::json& j);

// Dispatches on the "type" field.
std::variant<Dfa, Nfa> automaton_from_json(const nlohmann::json& j);

// Graphviz export: one node per state, doubled circle for final states, one
// edge per state pair labeled with the symbols joined by commas.
std::string dfa_to_dot(const Dfa& d);
std::string nfa_to_dot(const Nfa& m, const std::vector<std::string>* node_names = nullptr);
std::string atomaton_to_dot(const Atomaton& a);

// Display form of an atom label: subscripts concatenated ("012"), the empty
// label as "{}". Widths beyond 10 separate subscripts with commas.
std::string label_string(const StateSet& label);

} // namespace atomkit

#endif
