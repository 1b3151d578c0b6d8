// state_set.hpp -- fixed-width bitsets over automaton state indices.

#ifndef ATOMKIT_STATE_SET_HPP
#define ATOMKIT_STATE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomkit {

// A subset of {0, ..., width-1}. The width is fixed at construction; bits at
// or above the width are never set. Instances of width <= 64 occupy a single
// word, which keeps atom labels cheap to hash and order.
class StateSet {
public:
    StateSet() = default;

    explicit StateSet(int width) : width_(check_width(width)), words_(word_count(width), 0) {}

    static StateSet full(int width) {
        StateSet s(width);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    static StateSet single(int width, int i) {
        StateSet s(width);
        s.set(i);
        return s;
    }

    static StateSet of(int width, std::initializer_list<int> bits) {
        StateSet s(width);
        for (int i : bits)
            s.set(i);
        return s;
    }

    int width() const { return width_; }

    bool test(int i) const {
        return i >= 0 && i < width_ && (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        range_check(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        range_check(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w != 0)
                return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_)
            c += std::popcount(w);
        return c;
    }

    bool contains_all(const StateSet& other) const {
        width_check(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((other.words_[i] & ~words_[i]) != 0)
                return false;
        return true;
    }

    bool intersects(const StateSet& other) const {
        width_check(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    StateSet& operator|=(const StateSet& other) {
        width_check(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    StateSet& operator&=(const StateSet& other) {
        width_check(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    // Complement within {0, ..., width-1}.
    StateSet complement() const {
        StateSet s(width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            s.words_[i] = ~words_[i];
        s.mask_tail();
        return s;
    }

    // Visits members in increasing index order.
    template <typename F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    friend bool operator==(const StateSet& a, const StateSet& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

    // Numeric encoding order: the set read as a width-bit integer.
    friend bool operator<(const StateSet& a, const StateSet& b) {
        if (a.width_ != b.width_)
            return a.width_ < b.width_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i])
                return a.words_[i] < b.words_[i];
        return false;
    }

    struct Hash {
        std::size_t operator()(const StateSet& s) const {
            std::size_t h = static_cast<std::size_t>(s.width_) * 0x9e3779b97f4a7c15ull;
            for (std::uint64_t w : s.words_)
                h = (h ^ w) * 0x100000001b3ull;
            return h;
        }
    };

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first)
                out += ',';
            out += std::to_string(i);
            first = false;
        });
        out += '}';
        return out;
    }

private:
    static int check_width(int width) {
        if (width < 0)
            throw std::invalid_argument("StateSet width must be nonnegative");
        return width;
    }

    static std::size_t word_count(int width) { return (static_cast<std::size_t>(width) + 63) / 64; }

    void range_check(int i) const {
        if (i < 0 || i >= width_)
            throw std::out_of_range("StateSet index " + std::to_string(i) + " out of width " +
                                    std::to_string(width_));
    }

    void width_check(const StateSet& other) const {
        if (width_ != other.width_)
            throw std::invalid_argument("StateSet width mismatch");
    }

    void mask_tail() {
        if (width_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
    }

    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace atomkit

#endif
