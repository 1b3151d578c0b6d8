#include "atomkit/io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace atomkit {

using nlohmann::json;

namespace {

json alphabet_to_json(const std::vector<char>& alphabet) {
    json arr = json::array();
    for (char c : alphabet)
        arr.push_back(std::string(1, c));
    return arr;
}

std::vector<char> alphabet_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("alphabet must be an array");
    std::vector<char> alphabet;
    for (const json& sym : j) {
        std::string s = sym.get<std::string>();
        if (s.size() != 1)
            throw std::invalid_argument("alphabet symbols must be single characters");
        alphabet.push_back(s[0]);
    }
    return alphabet;
}

json set_to_json(const StateSet& s) {
    json arr = json::array();
    s.for_each([&](int i) { arr.push_back(i); });
    return arr;
}

StateSet set_from_json(const json& j, int width, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array");
    StateSet s(width);
    for (const json& v : j) {
        int i = v.get<int>();
        if (i < 0 || i >= width)
            throw std::invalid_argument(std::string(what) + " index out of range");
        s.set(i);
    }
    return s;
}

int get_n(const json& j) {
    int n = j.at("n").get<int>();
    if (n < 0)
        throw std::invalid_argument("negative state count");
    return n;
}

} // namespace

json dfa_to_json(const Dfa& d) {
    json j;
    j["type"] = "dfa";
    j["n"] = d.n;
    j["alphabet"] = alphabet_to_json(d.alphabet);
    j["transitions"] = d.delta;
    j["initial"] = d.initial;
    j["finals"] = set_to_json(d.finals);
    return j;
}

json nfa_to_json(const Nfa& m) {
    json j;
    j["type"] = "nfa";
    j["n"] = m.n;
    j["alphabet"] = alphabet_to_json(m.alphabet);
    json rows = json::array();
    for (int q = 0; q < m.n; ++q) {
        json row = json::array();
        for (const StateSet& s : m.eta[q])
            row.push_back(set_to_json(s));
        rows.push_back(std::move(row));
    }
    j["transitions"] = std::move(rows);
    j["initial"] = set_to_json(m.initials);
    j["finals"] = set_to_json(m.finals);
    return j;
}

json atomaton_to_json(const Atomaton& a) {
    json j = nfa_to_json(a.nfa);
    json labels = json::array();
    for (const StateSet& label : a.labels)
        labels.push_back(set_to_json(label));
    j["labels"] = std::move(labels);
    return j;
}

json reports_to_json(const std::vector<AtomReport>& reports) {
    json arr = json::array();
    for (const AtomReport& r : reports) {
        json item;
        item["P"] = set_to_json(r.label);
        item["r"] = r.r;
        item["complexity"] = r.complexity;
        item["bound"] = r.bound.get_str();
        item["tight"] = r.tight;
        arr.push_back(std::move(item));
    }
    return arr;
}

Dfa dfa_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "dfa")
        throw std::invalid_argument("expected \"type\": \"dfa\"");
    Dfa d;
    d.n = get_n(j);
    d.alphabet = alphabet_from_json(j.at("alphabet"));
    d.delta = j.at("transitions").get<std::vector<std::vector<int>>>();
    d.initial = j.at("initial").get<int>();
    d.finals = set_from_json(j.at("finals"), d.n, "finals");
    validate(d);
    return d;
}

Nfa nfa_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "nfa")
        throw std::invalid_argument("expected \"type\": \"nfa\"");
    Nfa m;
    m.n = get_n(j);
    m.alphabet = alphabet_from_json(j.at("alphabet"));
    const json& rows = j.at("transitions");
    if (!rows.is_array() || static_cast<int>(rows.size()) != m.n)
        throw std::invalid_argument("transitions must have one row per state");
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != m.alphabet.size())
            throw std::invalid_argument("transition row does not cover the alphabet");
        std::vector<StateSet> sets;
        for (const json& cell : row)
            sets.push_back(set_from_json(cell, m.n, "transition target"));
        m.eta.push_back(std::move(sets));
    }
    m.initials = set_from_json(j.at("initial"), m.n, "initial");
    m.finals = set_from_json(j.at("finals"), m.n, "finals");
    validate(m);
    return m;
}

std::variant<Dfa, Nfa> automaton_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "dfa")
        return dfa_from_json(j);
    if (type == "nfa")
        return nfa_from_json(j);
    throw std::invalid_argument("unknown automaton type \"" + type + "\"");
}

namespace {

// Shared DOT skeleton; `arrows` feeds initial-state markers, `edges` the
// labeled transitions.
std::string render_dot(int n, const StateSet& finals,
                       const std::vector<int>& initial_states,
                       const std::vector<std::vector<std::string>>& edge_labels,
                       const std::vector<std::string>* node_names) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir = LR;\n  node [shape = circle];\n";
    for (std::size_t i = 0; i < initial_states.size(); ++i)
        out << "  __start" << i << " [shape = point];\n";
    for (int q = 0; q < n; ++q) {
        out << "  " << q << " [";
        if (node_names)
            out << "label = \"" << (*node_names)[q] << "\", ";
        out << "shape = " << (finals.test(q) ? "doublecircle" : "circle") << "];\n";
    }
    for (std::size_t i = 0; i < initial_states.size(); ++i)
        out << "  __start" << i << " -> " << initial_states[i] << ";\n";
    for (int q = 0; q < n; ++q)
        for (int t = 0; t < n; ++t)
            if (!edge_labels[q][t].empty())
                out << "  " << q << " -> " << t << " [label = \"" << edge_labels[q][t]
                    << "\"];\n";
    out << "}\n";
    return out.str();
}

void append_symbol(std::string& labels, char symbol) {
    if (!labels.empty())
        labels += ',';
    labels += symbol;
}

} // namespace

std::string dfa_to_dot(const Dfa& d) {
    std::vector<std::vector<std::string>> edges(d.n, std::vector<std::string>(d.n));
    for (int q = 0; q < d.n; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            append_symbol(edges[q][d.delta[q][a]], d.alphabet[a]);
    return render_dot(d.n, d.finals, {d.initial}, edges, nullptr);
}

std::string nfa_to_dot(const Nfa& m, const std::vector<std::string>* node_names) {
    std::vector<std::vector<std::string>> edges(m.n, std::vector<std::string>(m.n));
    for (int q = 0; q < m.n; ++q)
        for (std::size_t a = 0; a < m.alphabet.size(); ++a)
            m.eta[q][a].for_each([&](int t) { append_symbol(edges[q][t], m.alphabet[a]); });
    return render_dot(m.n, m.finals, m.initials.to_vector(), edges, node_names);
}

std::string atomaton_to_dot(const Atomaton& a) {
    std::vector<std::string> names;
    names.reserve(a.labels.size());
    for (const StateSet& label : a.labels)
        names.push_back(label_string(label));
    return nfa_to_dot(a.nfa, &names);
}

std::string label_string(const StateSet& label) {
    if (label.empty())
        return "{}";
    std::string out;
    label.for_each([&](int i) {
        if (label.width() > 10 && !out.empty())
            out += ',';
        out += std::to_string(i);
    });
    return out;
}

} // namespace atomkit
