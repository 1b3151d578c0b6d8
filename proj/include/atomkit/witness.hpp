// witness.hpp -- the n-state three-letter DFA family whose atoms meet the
// complexity bounds, its transformation-semigroup certificate, and a direct
// construction of its atomaton used as an independent oracle.

#ifndef ATOMKIT_WITNESS_HPP
#define ATOMKIT_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "atomkit/atoms.hpp"
#include "atomkit/automata.hpp"

namespace atomkit {

// A self-map of {0, ..., n-1}; image[i] is where i goes.
struct Transformation {
    std::vector<int> image;

    static Transformation identity(int n) {
        Transformation t;
        t.image.resize(n);
        for (int i = 0; i < n; ++i)
            t.image[i] = i;
        return t;
    }

    int apply(int i) const { return image[i]; }

    // Composition "this first, then next".
    Transformation then(const Transformation& next) const {
        Transformation t;
        t.image.resize(image.size());
        for (std::size_t i = 0; i < image.size(); ++i)
            t.image[i] = next.image[image[i]];
        return t;
    }

    friend bool operator==(const Transformation&, const Transformation&) = default;

    struct Hash {
        std::size_t operator()(const Transformation& t) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (int v : t.image)
                h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
            return h;
        }
    };
};

// The transformation a word performs on the states of d.
Transformation word_transformation(const Dfa& d, std::string_view word);

// Witness DFA: states 0..n-1, alphabet (a, b, c), initial 0, final n-1.
// a cycles the states, b transposes 0 and 1, c sends n-1 to 0 and fixes the
// rest. Requires n >= 2; for n = 2 the letters a and b coincide as
// transformations but stay distinct symbols.
Dfa witness(int n);

// Size of the transformation semigroup of d (closure of the letter
// transformations under composition), or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> semigroup_size(const Dfa& d, std::uint64_t cap = 2'000'000);

// The atomaton of witness(n) built directly from its transition rules over
// subset labels, bypassing the reverse/determinize/reverse pipeline. State i
// carries the label whose bitset encoding is i.
Atomaton witness_atomaton_direct(int n);

} // namespace atomkit

#endif
