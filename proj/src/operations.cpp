#include "atomkit/operations.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace atomkit {

namespace {

// BFS over the transition graph from the initial state; returns visit order.
std::vector<int> reachable_order(const Dfa& d) {
    std::vector<int> order;
    order.reserve(d.n);
    std::vector<char> seen(d.n, 0);
    seen[d.initial] = 1;
    order.push_back(d.initial);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int t : d.delta[order[i]])
            if (!seen[t]) {
                seen[t] = 1;
                order.push_back(t);
            }
    return order;
}

// Hopcroft partition refinement on a complete DFA given by compact tables.
// Returns a class id per state; ids are not canonical.
std::vector<int> hopcroft_classes(int m, int k, const std::vector<std::vector<int>>& t,
                                  const std::vector<char>& is_final) {
    std::vector<std::vector<std::vector<int>>> inv(k, std::vector<std::vector<int>>(m));
    for (int q = 0; q < m; ++q)
        for (int a = 0; a < k; ++a)
            inv[a][t[q][a]].push_back(q);

    std::vector<int> block_of(m, 0);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> fin, nonfin;
        for (int q = 0; q < m; ++q)
            (is_final[q] ? fin : nonfin).push_back(q);
        if (!fin.empty()) {
            for (int q : fin)
                block_of[q] = static_cast<int>(blocks.size());
            blocks.push_back(std::move(fin));
        }
        if (!nonfin.empty()) {
            for (int q : nonfin)
                block_of[q] = static_cast<int>(blocks.size());
            blocks.push_back(std::move(nonfin));
        }
    }

    std::deque<std::pair<int, int>> work; // (block, symbol)
    std::vector<std::vector<char>> in_work(blocks.size(), std::vector<char>(k, 0));
    auto push_work = [&](int b, int a) {
        if (!in_work[b][a]) {
            in_work[b][a] = 1;
            work.emplace_back(b, a);
        }
    };
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int a = 0; a < k; ++a)
            push_work(b, a);

    std::vector<char> marked(m, 0);
    std::vector<int> mark_count(blocks.size(), 0);
    std::vector<int> preimage, touched;

    while (!work.empty()) {
        auto [splitter, a] = work.front();
        work.pop_front();
        in_work[splitter][a] = 0;

        preimage.clear();
        for (int q : blocks[splitter])
            for (int p : inv[a][q])
                preimage.push_back(p);
        if (preimage.empty())
            continue;

        touched.clear();
        for (int p : preimage)
            if (!marked[p]) {
                marked[p] = 1;
                int b = block_of[p];
                if (mark_count[b]++ == 0)
                    touched.push_back(b);
            }

        for (int b : touched) {
            if (mark_count[b] < static_cast<int>(blocks[b].size())) {
                std::vector<int> stay, moved;
                for (int q : blocks[b])
                    (marked[q] ? moved : stay).push_back(q);
                int nb = static_cast<int>(blocks.size());
                blocks[b] = std::move(stay);
                for (int q : moved)
                    block_of[q] = nb;
                blocks.push_back(std::move(moved));
                mark_count.push_back(0);
                in_work.emplace_back(k, 0);
                for (int b2sym = 0; b2sym < k; ++b2sym) {
                    if (in_work[b][b2sym])
                        push_work(nb, b2sym);
                    else
                        push_work(blocks[b].size() <= blocks[nb].size() ? b : nb, b2sym);
                }
            }
            mark_count[b] = 0;
        }
        for (int p : preimage)
            marked[p] = 0;
    }

    std::vector<int> classes(m);
    for (int q = 0; q < m; ++q)
        classes[q] = block_of[q];
    return classes;
}

// Equivalence classes of the reachable part. Returns the visit order, a
// compact index per original state (-1 if unreachable) and a class id per
// compact state.
struct ReachableClasses {
    std::vector<int> order;
    std::vector<int> compact;
    std::vector<int> classes;
};

ReachableClasses reachable_classes(const Dfa& d) {
    ReachableClasses rc;
    rc.order = reachable_order(d);
    rc.compact.assign(d.n, -1);
    for (std::size_t i = 0; i < rc.order.size(); ++i)
        rc.compact[rc.order[i]] = static_cast<int>(i);

    int m = static_cast<int>(rc.order.size());
    int k = static_cast<int>(d.alphabet.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(k));
    std::vector<char> fin(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int a = 0; a < k; ++a)
            t[i][a] = rc.compact[d.delta[rc.order[i]][a]];
        fin[i] = d.finals.test(rc.order[i]);
    }
    rc.classes = hopcroft_classes(m, k, t, fin);
    return rc;
}

} // namespace

Nfa reverse(const Dfa& d) {
    validate(d);
    Nfa m;
    m.n = d.n;
    m.alphabet = d.alphabet;
    m.eta.assign(d.n, std::vector<StateSet>(d.alphabet.size(), StateSet(d.n)));
    for (int q = 0; q < d.n; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            m.eta[d.delta[q][a]][a].set(q);
    m.initials = d.finals;
    m.finals = StateSet::single(d.n, d.initial);
    return m;
}

Nfa reverse_nfa(const Nfa& m) {
    validate(m);
    Nfa r;
    r.n = m.n;
    r.alphabet = m.alphabet;
    r.eta.assign(m.n, std::vector<StateSet>(m.alphabet.size(), StateSet(m.n)));
    for (int q = 0; q < m.n; ++q)
        for (std::size_t a = 0; a < m.alphabet.size(); ++a)
            m.eta[q][a].for_each([&](int p) { r.eta[p][a].set(q); });
    r.initials = m.finals;
    r.finals = m.initials;
    return r;
}

DeterminizeResult determinize(const Nfa& m) {
    validate(m);
    if (m.initials.empty() && m.alphabet.empty())
        throw std::invalid_argument(
            "cannot determinize an NFA with no initial states and no alphabet");

    int k = static_cast<int>(m.alphabet.size());
    DeterminizeResult res;
    res.dfa.alphabet = m.alphabet;

    std::unordered_map<StateSet, int, StateSet::Hash> index;
    index.emplace(m.initials, 0);
    res.subsets.push_back(m.initials);

    for (std::size_t qi = 0; qi < res.subsets.size(); ++qi) {
        res.dfa.delta.emplace_back(k);
        for (int a = 0; a < k; ++a) {
            StateSet next(m.n);
            res.subsets[qi].for_each([&](int p) { next |= m.eta[p][a]; });
            auto [it, fresh] = index.emplace(next, static_cast<int>(res.subsets.size()));
            if (fresh)
                res.subsets.push_back(std::move(next));
            res.dfa.delta[qi][a] = it->second;
        }
    }

    res.dfa.n = static_cast<int>(res.subsets.size());
    res.dfa.initial = 0;
    res.dfa.finals = StateSet(res.dfa.n);
    for (int q = 0; q < res.dfa.n; ++q)
        if (res.subsets[q].intersects(m.finals))
            res.dfa.finals.set(q);
    return res;
}

TrimResult trim(const Nfa& m) {
    validate(m);
    int k = static_cast<int>(m.alphabet.size());

    std::vector<char> reach(m.n, 0), coreach(m.n, 0);
    std::deque<int> queue;
    m.initials.for_each([&](int q) {
        reach[q] = 1;
        queue.push_back(q);
    });
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int a = 0; a < k; ++a)
            m.eta[q][a].for_each([&](int t) {
                if (!reach[t]) {
                    reach[t] = 1;
                    queue.push_back(t);
                }
            });
    }

    std::vector<std::vector<std::vector<int>>> inv(m.n);
    for (int q = 0; q < m.n; ++q)
        inv[q].assign(k, {});
    for (int q = 0; q < m.n; ++q)
        for (int a = 0; a < k; ++a)
            m.eta[q][a].for_each([&](int t) { inv[t][a].push_back(q); });
    m.finals.for_each([&](int q) {
        coreach[q] = 1;
        queue.push_back(q);
    });
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int a = 0; a < k; ++a)
            for (int p : inv[q][a])
                if (!coreach[p]) {
                    coreach[p] = 1;
                    queue.push_back(p);
                }
    }

    TrimResult res;
    std::vector<int> renum(m.n, -1);
    for (int q = 0; q < m.n; ++q)
        if (reach[q] && coreach[q]) {
            renum[q] = static_cast<int>(res.kept.size());
            res.kept.push_back(q);
        }

    int nn = static_cast<int>(res.kept.size());
    res.nfa.n = nn;
    res.nfa.alphabet = m.alphabet;
    res.nfa.eta.assign(nn, std::vector<StateSet>(k, StateSet(nn)));
    res.nfa.initials = StateSet(nn);
    res.nfa.finals = StateSet(nn);
    for (int q2 = 0; q2 < nn; ++q2) {
        int q = res.kept[q2];
        for (int a = 0; a < k; ++a)
            m.eta[q][a].for_each([&](int t) {
                if (renum[t] >= 0)
                    res.nfa.eta[q2][a].set(renum[t]);
            });
        if (m.initials.test(q))
            res.nfa.initials.set(q2);
        if (m.finals.test(q))
            res.nfa.finals.set(q2);
    }
    return res;
}

Dfa canonical_form(const Dfa& d) {
    validate(d);
    std::vector<int> order = reachable_order(d);
    std::vector<int> newid(d.n, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        newid[order[i]] = static_cast<int>(i);

    Dfa c;
    c.n = static_cast<int>(order.size());
    c.alphabet = d.alphabet;
    c.initial = 0;
    c.finals = StateSet(c.n);
    c.delta.resize(c.n);
    for (int q = 0; q < c.n; ++q) {
        c.delta[q].resize(d.alphabet.size());
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            c.delta[q][a] = newid[d.delta[order[q]][a]];
        if (d.finals.test(order[q]))
            c.finals.set(q);
    }
    return c;
}

Dfa minimize(const Dfa& d) {
    ReachableClasses rc = reachable_classes(d);
    int m = static_cast<int>(rc.order.size());
    int k = static_cast<int>(d.alphabet.size());

    int nclasses = *std::max_element(rc.classes.begin(), rc.classes.end()) + 1;
    std::vector<int> rep(nclasses, -1); // a compact state per class
    for (int i = 0; i < m; ++i)
        if (rep[rc.classes[i]] < 0)
            rep[rc.classes[i]] = i;

    Dfa q;
    q.n = nclasses;
    q.alphabet = d.alphabet;
    q.initial = rc.classes[rc.compact[d.initial]];
    q.finals = StateSet(nclasses);
    q.delta.assign(nclasses, std::vector<int>(k));
    for (int c = 0; c < nclasses; ++c) {
        int orig = rc.order[rep[c]];
        for (int a = 0; a < k; ++a)
            q.delta[c][a] = rc.classes[rc.compact[d.delta[orig][a]]];
        if (d.finals.test(orig))
            q.finals.set(c);
    }
    return canonical_form(q);
}

bool isomorphic(const Dfa& d1, const Dfa& d2, bool ignore_finals) {
    validate(d1);
    validate(d2);
    if (d1.alphabet != d2.alphabet)
        throw std::invalid_argument("isomorphism check requires identical alphabets");
    Dfa c1 = canonical_form(d1);
    Dfa c2 = canonical_form(d2);
    if (c1.n != c2.n || c1.delta != c2.delta)
        return false;
    return ignore_finals || c1.finals == c2.finals;
}

MinimalityReport check_minimal(const Dfa& d) {
    ReachableClasses rc = reachable_classes(d);
    MinimalityReport rep;

    std::vector<char> reach(d.n, 0);
    for (int q : rc.order)
        reach[q] = 1;
    for (int q = 0; q < d.n; ++q)
        if (!reach[q])
            rep.unreachable.push_back(q);

    std::vector<int> first_of_class(rc.order.size(), -1);
    std::optional<std::pair<int, int>> pair;
    for (int q = 0; q < d.n; ++q) {
        if (!reach[q])
            continue;
        int c = rc.classes[rc.compact[q]];
        if (first_of_class[c] >= 0) {
            pair = {first_of_class[c], q};
            break;
        }
        first_of_class[c] = q;
    }
    rep.merged_pair = pair;
    rep.minimal = rep.unreachable.empty() && !pair;
    return rep;
}

} // namespace atomkit
