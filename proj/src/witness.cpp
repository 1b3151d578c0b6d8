#include "atomkit/witness.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace atomkit {

Transformation word_transformation(const Dfa& d, std::string_view word) {
    Transformation t = Transformation::identity(d.n);
    for (char c : word) {
        int a = d.symbol_index(c);
        if (a < 0)
            throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
        for (int i = 0; i < d.n; ++i)
            t.image[i] = d.delta[t.image[i]][a];
    }
    return t;
}

Dfa witness(int n) {
    if (n < 2)
        throw std::invalid_argument("witness family starts at n = 2");
    Dfa d;
    d.n = n;
    d.alphabet = {'a', 'b', 'c'};
    d.initial = 0;
    d.finals = StateSet::single(n, n - 1);
    d.delta.assign(n, std::vector<int>(3));
    for (int i = 0; i < n; ++i) {
        d.delta[i][0] = (i + 1) % n;
        d.delta[i][1] = i == 0 ? 1 : (i == 1 ? 0 : i);
        d.delta[i][2] = i == n - 1 ? 0 : i;
    }
    return d;
}

std::optional<std::uint64_t> semigroup_size(const Dfa& d, std::uint64_t cap) {
    validate(d);
    std::vector<Transformation> letters;
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        Transformation t;
        t.image.resize(d.n);
        for (int i = 0; i < d.n; ++i)
            t.image[i] = d.delta[i][a];
        letters.push_back(std::move(t));
    }

    std::unordered_set<Transformation, Transformation::Hash> seen;
    std::deque<Transformation> queue;
    for (const Transformation& t : letters)
        if (seen.insert(t).second)
            queue.push_back(t);

    while (!queue.empty()) {
        Transformation t = std::move(queue.front());
        queue.pop_front();
        for (const Transformation& g : letters) {
            Transformation composed = t.then(g);
            if (seen.insert(composed).second) {
                if (seen.size() > cap)
                    return std::nullopt;
                queue.push_back(std::move(composed));
            }
        }
    }
    return seen.size();
}

Atomaton witness_atomaton_direct(int n) {
    if (n < 2)
        throw std::invalid_argument("witness family starts at n = 2");
    if (n > 24)
        throw std::invalid_argument("direct atomaton limited to n <= 24");

    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t mask = count - 1;
    const std::uint64_t lowest = 1;                        // state 0 of the source
    const std::uint64_t highest = std::uint64_t{1} << (n - 1); // state n-1

    Atomaton a;
    a.source_n = n;
    a.nfa.n = static_cast<int>(count);
    a.nfa.alphabet = {'a', 'b', 'c'};
    a.nfa.eta.assign(a.nfa.n, std::vector<StateSet>(3, StateSet(a.nfa.n)));
    a.nfa.initials = StateSet(a.nfa.n);
    a.nfa.finals = StateSet(a.nfa.n);
    a.labels.reserve(count);

    for (std::uint64_t v = 0; v < count; ++v) {
        StateSet label(n);
        for (int i = 0; i < n; ++i)
            if ((v >> i) & 1)
                label.set(i);
        a.labels.push_back(label);

        // a: every member advances by one, modulo n (the empty label stays).
        std::uint64_t rotated = ((v << 1) | (v >> (n - 1))) & mask;
        a.nfa.eta[v][0].set(static_cast<int>(rotated));

        // b: membership of 0 and 1 is swapped.
        std::uint64_t swapped = (v & ~std::uint64_t{3}) | ((v & 1) << 1) | ((v >> 1) & 1);
        a.nfa.eta[v][1].set(static_cast<int>(swapped));

        // c: two successors when 0 and n-1 are both in or both out of the
        // label, none when exactly one of them is.
        bool has0 = (v & lowest) != 0;
        bool hasTop = (v & highest) != 0;
        if (!has0 && !hasTop) {
            a.nfa.eta[v][2].set(static_cast<int>(v));
            a.nfa.eta[v][2].set(static_cast<int>(v | highest));
        } else if (has0 && hasTop) {
            a.nfa.eta[v][2].set(static_cast<int>(v));
            a.nfa.eta[v][2].set(static_cast<int>(v & ~highest));
        }

        if (has0)
            a.nfa.initials.set(static_cast<int>(v));
    }
    a.nfa.finals.set(static_cast<int>(highest)); // the label {n-1}
    return a;
}

} // namespace atomkit
