#include "atomkit/atoms.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "atomkit/operations.hpp"

namespace atomkit {

Atomaton atomaton(const Dfa& d) {
    validate(d);
    MinimalityReport mr = check_minimal(d);
    if (!mr.minimal)
        throw std::invalid_argument("atomaton requires a minimal DFA");

    DeterminizeResult det = determinize(reverse(d));
    Atomaton a;
    a.nfa = reverse_nfa(as_nfa(det.dfa));
    a.labels = std::move(det.subsets);
    a.source_n = d.n;
    return a;
}

int atom_count(const Dfa& d) {
    return atomaton(d).nfa.n;
}

Dfa atom_dfa(const Atomaton& a, const StateSet& label) {
    int state = -1;
    for (int q = 0; q < a.nfa.n; ++q)
        if (a.labels[q] == label) {
            state = q;
            break;
        }
    if (state < 0)
        throw std::invalid_argument("no atom has label " + label.to_string());

    Nfa restarted = a.nfa;
    restarted.initials = StateSet::single(a.nfa.n, state);
    return determinize(restarted).dfa;
}

std::vector<AtomReport> atom_complexities(const Dfa& d, int jobs) {
    if (d.n > 64)
        throw std::invalid_argument("atom enumeration is limited to 64 source states");
    Atomaton a = atomaton(d);

    std::vector<StateSet> labels = a.labels;
    std::sort(labels.begin(), labels.end());

    std::vector<AtomReport> reports(labels.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < labels.size();) {
            AtomReport& rep = reports[i];
            rep.label = labels[i];
            rep.r = d.n - labels[i].count();
            rep.complexity = atom_dfa(a, labels[i]).n;
            rep.bound = atom_bound(d.n, rep.r);
            rep.tight = (rep.bound == rep.complexity);
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    return reports;
}

bool verify_minimality_of_atom_dfas(const Dfa& d) {
    Atomaton a = atomaton(d);
    for (const StateSet& label : a.labels) {
        Dfa atom = atom_dfa(a, label);
        if (minimize(atom).n != atom.n)
            return false;
    }
    return true;
}

bool same_labeled_nfa(const Atomaton& a, const Atomaton& b) {
    if (a.source_n != b.source_n || a.nfa.n != b.nfa.n || a.nfa.alphabet != b.nfa.alphabet)
        return false;

    std::map<StateSet, int> index_a, index_b;
    for (int q = 0; q < a.nfa.n; ++q)
        index_a[a.labels[q]] = q;
    for (int q = 0; q < b.nfa.n; ++q)
        index_b[b.labels[q]] = q;
    if (index_a.size() != static_cast<std::size_t>(a.nfa.n) || index_b.size() != index_a.size())
        return false;

    auto successor_labels = [](const Atomaton& x, int state, int sym) {
        std::vector<StateSet> out;
        x.nfa.eta[state][sym].for_each([&](int t) { out.push_back(x.labels[t]); });
        std::sort(out.begin(), out.end());
        return out;
    };

    for (const auto& [label, qa] : index_a) {
        auto it = index_b.find(label);
        if (it == index_b.end())
            return false;
        int qb = it->second;
        if (a.nfa.initials.test(qa) != b.nfa.initials.test(qb) ||
            a.nfa.finals.test(qa) != b.nfa.finals.test(qb))
            return false;
        for (std::size_t s = 0; s < a.nfa.alphabet.size(); ++s)
            if (successor_labels(a, qa, static_cast<int>(s)) !=
                successor_labels(b, qb, static_cast<int>(s)))
                return false;
    }
    return true;
}

} // namespace atomkit
