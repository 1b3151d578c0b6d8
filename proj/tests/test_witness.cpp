#include <doctest.h>

#include <algorithm>

#include "atomkit/atoms.hpp"
#include "atomkit/operations.hpp"
#include "atomkit/witness.hpp"
#include "golden_n3.hpp"

using namespace atomkit;

TEST_CASE("witness(3) transition table") {
    CHECK(witness(3) == golden::d3());
}

TEST_CASE("witness(2): a and b act identically, final state is 1") {
    Dfa d = witness(2);
    CHECK(d.alphabet == std::vector<char>{'a', 'b', 'c'});
    CHECK(d.finals == StateSet::single(2, 1));
    CHECK_FALSE(d.finals.test(0));
    for (int q = 0; q < 2; ++q)
        CHECK(d.delta[q][0] == d.delta[q][1]);
    CHECK(d.delta[1][2] == 0); // the singular letter resets the final state
}

TEST_CASE("witness range check") {
    CHECK_THROWS_AS(witness(1), std::invalid_argument);
    CHECK_THROWS_AS(witness(0), std::invalid_argument);
}

TEST_CASE("witness DFAs are minimal") {
    for (int n = 2; n <= 8; ++n)
        CHECK(check_minimal(witness(n)).minimal);
}

TEST_CASE("state i accepts exactly a^(n-1-i)") {
    for (int n = 2; n <= 6; ++n) {
        Dfa d = witness(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::string word(static_cast<std::size_t>(n - 1 - i), 'a');
                CHECK(d.finals.test(run(d, j, word)) == (i == j));
            }
    }
}

TEST_CASE("transformation semigroup of the witness has n^n elements") {
    CHECK(semigroup_size(witness(4)) == 256);
    CHECK(semigroup_size(witness(6)) == 46656);
}

TEST_CASE("semigroup cap is honored") {
    CHECK(semigroup_size(witness(4), 10) == std::nullopt);
    CHECK(semigroup_size(witness(4), 256) == 256);
}

TEST_CASE("semigroup of a single identity letter") {
    Dfa d;
    d.n = 3;
    d.alphabet = {'a'};
    d.initial = 0;
    d.finals = StateSet::single(3, 0);
    d.delta = {{0}, {1}, {2}};
    CHECK(semigroup_size(d) == 1);
}

TEST_CASE("word transformations compose") {
    Dfa d = witness(5);
    Transformation ab = word_transformation(d, "ab");
    CHECK(ab == word_transformation(d, "a").then(word_transformation(d, "b")));
    CHECK(word_transformation(d, "") == Transformation::identity(5));
    CHECK(word_transformation(d, "bb") == Transformation::identity(5));
}

TEST_CASE("direct atomaton of witness(3) matches the worked table") {
    Atomaton direct = witness_atomaton_direct(3);
    CHECK(direct.nfa.n == 8);
    CHECK(same_labeled_nfa(direct, golden::d3_atomaton()));

    // state with label {0} has no c-successor; the empty label moves on c to
    // itself and {2}
    int s0 = -1, sempty = -1;
    for (int q = 0; q < direct.nfa.n; ++q) {
        if (direct.labels[q] == StateSet::of(3, {0}))
            s0 = q;
        if (direct.labels[q].empty())
            sempty = q;
    }
    REQUIRE(s0 >= 0);
    REQUIRE(sempty >= 0);
    CHECK(direct.nfa.eta[s0][2].empty());
    std::vector<StateSet> succ;
    direct.nfa.eta[sempty][2].for_each([&](int t) { succ.push_back(direct.labels[t]); });
    std::sort(succ.begin(), succ.end());
    CHECK(succ == std::vector<StateSet>{StateSet(3), StateSet::of(3, {2})});
}

TEST_CASE("direct atomaton case split for c when 0 and n-1 are both present") {
    Atomaton direct = witness_atomaton_direct(4);
    int s = -1;
    for (int q = 0; q < direct.nfa.n; ++q)
        if (direct.labels[q] == StateSet::of(4, {0, 3}))
            s = q;
    REQUIRE(s >= 0);
    std::vector<StateSet> succ;
    direct.nfa.eta[s][2].for_each([&](int t) { succ.push_back(direct.labels[t]); });
    std::sort(succ.begin(), succ.end());
    CHECK(succ == std::vector<StateSet>{StateSet::of(4, {0}), StateSet::of(4, {0, 3})});
}

TEST_CASE("direct atomaton agrees with the pipeline") {
    for (int n = 2; n <= 6; ++n)
        CHECK(same_labeled_nfa(witness_atomaton_direct(n), atomaton(witness(n))));
}

TEST_CASE("direct atomaton end markers") {
    Atomaton a = witness_atomaton_direct(5);
    CHECK(a.nfa.finals.count() == 1);
    a.nfa.finals.for_each([&](int q) { CHECK(a.labels[q] == StateSet::single(5, 4)); });
    for (int q = 0; q < a.nfa.n; ++q)
        CHECK(a.nfa.initials.test(q) == a.labels[q].test(0));
}
