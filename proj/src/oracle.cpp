#include "atomkit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "atomkit/atoms.hpp"
#include "atomkit/operations.hpp"
#include "atomkit/witness.hpp"

namespace atomkit {

StateSet signature(const Dfa& d, std::string_view word) {
    validate(d);
    Transformation t = word_transformation(d, word);
    StateSet sig(d.n);
    for (int i = 0; i < d.n; ++i)
        if (d.finals.test(t.apply(i)))
            sig.set(i);
    return sig;
}

std::vector<StateSet> reachable_signatures(const Dfa& d, std::optional<int> max_len) {
    validate(d);
    // Extending a word on the left by letter x turns its signature S into the
    // preimage {i : delta(i,x) in S}; closing the finals set (the signature
    // of the empty word) under these preimages yields every signature.
    std::unordered_set<StateSet, StateSet::Hash> seen;
    std::deque<std::pair<StateSet, int>> queue;
    seen.insert(d.finals);
    queue.emplace_back(d.finals, 0);

    while (!queue.empty()) {
        auto [sig, depth] = std::move(queue.front());
        queue.pop_front();
        if (max_len && depth >= *max_len)
            continue;
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            StateSet pre(d.n);
            for (int i = 0; i < d.n; ++i)
                if (sig.test(d.delta[i][a]))
                    pre.set(i);
            if (seen.insert(pre).second)
                queue.emplace_back(std::move(pre), depth + 1);
        }
    }

    std::vector<StateSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Dfa tuple_product_atom_dfa(const Dfa& d, const StateSet& label) {
    validate(d);
    if (d.n > 6)
        throw std::invalid_argument("tuple oracle is capped at 6 states");
    if (label.width() != d.n)
        throw std::invalid_argument("label width must match the state count");

    int k = static_cast<int>(d.alphabet.size());
    std::unordered_map<Transformation, int, Transformation::Hash> index;
    std::vector<Transformation> tuples{Transformation::identity(d.n)};
    index.emplace(tuples[0], 0);

    Dfa t;
    t.alphabet = d.alphabet;
    for (std::size_t qi = 0; qi < tuples.size(); ++qi) {
        t.delta.emplace_back(k);
        for (int a = 0; a < k; ++a) {
            Transformation next = tuples[qi];
            for (int i = 0; i < d.n; ++i)
                next.image[i] = d.delta[next.image[i]][a];
            auto [it, fresh] = index.emplace(next, static_cast<int>(tuples.size()));
            if (fresh)
                tuples.push_back(std::move(next));
            t.delta[qi][a] = it->second;
        }
    }

    t.n = static_cast<int>(tuples.size());
    t.initial = 0;
    t.finals = StateSet(t.n);
    for (int q = 0; q < t.n; ++q) {
        StateSet sig(d.n);
        for (int i = 0; i < d.n; ++i)
            if (d.finals.test(tuples[q].image[i]))
                sig.set(i);
        if (sig == label)
            t.finals.set(q);
    }
    return minimize(t);
}

namespace {

void require_minimal(const Dfa& d) {
    if (!check_minimal(d).minimal)
        throw std::invalid_argument("a minimal DFA is required");
}

} // namespace

bool partition_check(const Dfa& d, int max_len) {
    validate(d);
    require_minimal(d);

    Atomaton a = atomaton(d);
    std::vector<Dfa> atoms;
    atoms.reserve(a.labels.size());
    for (const StateSet& label : a.labels)
        atoms.push_back(atom_dfa(a, label));

    // DFS over all words up to max_len, advancing every atom DFA and the
    // per-source-state runs (whose finals pattern is the signature) in step.
    std::vector<int> atom_state(atoms.size());
    for (std::size_t j = 0; j < atoms.size(); ++j)
        atom_state[j] = atoms[j].initial;
    std::vector<int> source_state(d.n);
    for (int i = 0; i < d.n; ++i)
        source_state[i] = i;

    struct Frame {
        std::vector<int> atom_state;
        std::vector<int> source_state;
        int depth;
    };
    std::deque<Frame> stack;
    stack.push_back({atom_state, source_state, 0});

    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();

        int accepting = -1;
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (atoms[j].finals.test(f.atom_state[j])) {
                if (accepting >= 0)
                    return false; // two atoms claim the word
                accepting = static_cast<int>(j);
            }
        if (accepting < 0)
            return false; // no atom claims the word
        StateSet sig(d.n);
        for (int i = 0; i < d.n; ++i)
            if (d.finals.test(f.source_state[i]))
                sig.set(i);
        if (!(a.labels[accepting] == sig))
            return false;

        if (f.depth == max_len)
            continue;
        for (std::size_t sym = 0; sym < d.alphabet.size(); ++sym) {
            Frame next;
            next.depth = f.depth + 1;
            next.atom_state.resize(atoms.size());
            for (std::size_t j = 0; j < atoms.size(); ++j)
                next.atom_state[j] = atoms[j].delta[f.atom_state[j]][sym];
            next.source_state.resize(d.n);
            for (int i = 0; i < d.n; ++i)
                next.source_state[i] = d.delta[f.source_state[i]][sym];
            stack.push_back(std::move(next));
        }
    }
    return true;
}

Dfa product(const Dfa& d1, const Dfa& d2, ProductMode mode) {
    validate(d1);
    validate(d2);
    if (d1.alphabet != d2.alphabet)
        throw std::invalid_argument("product requires identical alphabets");

    int k = static_cast<int>(d1.alphabet.size());
    auto key = [&](int p, int q) {
        return static_cast<std::int64_t>(p) * d2.n + q;
    };
    std::unordered_map<std::int64_t, int> index;
    std::vector<std::pair<int, int>> pairs{{d1.initial, d2.initial}};
    index.emplace(key(d1.initial, d2.initial), 0);

    Dfa p;
    p.alphabet = d1.alphabet;
    for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
        p.delta.emplace_back(k);
        for (int a = 0; a < k; ++a) {
            int t1 = d1.delta[pairs[qi].first][a];
            int t2 = d2.delta[pairs[qi].second][a];
            auto [it, fresh] = index.emplace(key(t1, t2), static_cast<int>(pairs.size()));
            if (fresh)
                pairs.emplace_back(t1, t2);
            p.delta[qi][a] = it->second;
        }
    }

    p.n = static_cast<int>(pairs.size());
    p.initial = 0;
    p.finals = StateSet(p.n);
    for (int q = 0; q < p.n; ++q) {
        bool f1 = d1.finals.test(pairs[q].first);
        bool f2 = d2.finals.test(pairs[q].second);
        bool f = mode == ProductMode::Union          ? (f1 || f2)
                 : mode == ProductMode::Intersection ? (f1 && f2)
                                                     : (f1 != f2);
        if (f)
            p.finals.set(q);
    }
    return p;
}

bool same_language(const Dfa& d1, const Dfa& d2) {
    return product(d1, d2, ProductMode::SymmetricDifference).finals.empty();
}

Dfa restart(const Dfa& d, int state) {
    validate(d);
    if (state < 0 || state >= d.n)
        throw std::invalid_argument("restart state out of range");
    Dfa r = d;
    r.initial = state;
    return r;
}

bool quotient_union_check(const Dfa& d, int state) {
    validate(d);
    require_minimal(d);
    if (state < 0 || state >= d.n)
        throw std::invalid_argument("state out of range");

    Atomaton a = atomaton(d);

    // Dead DFA recognizing the empty language, the union's seed.
    Dfa acc;
    acc.n = 1;
    acc.alphabet = d.alphabet;
    acc.initial = 0;
    acc.finals = StateSet(1);
    acc.delta.assign(1, std::vector<int>(d.alphabet.size(), 0));

    for (const StateSet& label : a.labels)
        if (label.test(state))
            acc = minimize(product(acc, atom_dfa(a, label), ProductMode::Union));

    return same_language(acc, restart(d, state));
}

Dfa random_minimal_dfa(int n, int alphabet_size, std::mt19937_64& rng) {
    if (n < 1 || alphabet_size < 1 || alphabet_size > 26)
        throw std::invalid_argument("bad random DFA shape");

    Dfa d;
    d.n = n;
    d.alphabet.resize(alphabet_size);
    for (int a = 0; a < alphabet_size; ++a)
        d.alphabet[a] = static_cast<char>('a' + a);
    d.initial = 0;

    std::uniform_int_distribution<int> state_dist(0, n - 1);
    std::uniform_int_distribution<int> bit_dist(0, 1);
    while (true) {
        d.delta.assign(n, std::vector<int>(alphabet_size));
        for (int q = 0; q < n; ++q)
            for (int a = 0; a < alphabet_size; ++a)
                d.delta[q][a] = state_dist(rng);
        d.finals = StateSet(n);
        for (int q = 0; q < n; ++q)
            if (bit_dist(rng))
                d.finals.set(q);
        if (d.finals.empty())
            continue;
        if (check_minimal(d).minimal)
            return d;
    }
}

} // namespace atomkit
