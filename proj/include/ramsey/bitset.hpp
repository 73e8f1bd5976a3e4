#pragma once

#include <bit>
#include <cstdint>
#include <cassert>
#include <vector>

namespace ramsey {

/**
 * Dynamically sized bitset used as a vertex set over ids 0..n-1.
 *
 * All intersection/union/popcount operations work a word at a time, which is
 * what makes the dense-adjacency representation pay off for the set-heavy
 * proof steps.
 */
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset full(int nbits) {
        Bitset s(nbits);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference: removes every bit set in `o`.
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    /// Flips every bit in 0..n-1.
    void flip_all() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersection_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Lowest set bit, or -1 when empty.
    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// Lowest set bit strictly greater than `i`, or -1.
    int next_set(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t wi = std::size_t(i) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first_set(); v >= 0; v = next_set(v)) out.push_back(v);
        return out;
    }

    struct Iterator {
        const Bitset* s;
        int v;
        int operator*() const { return v; }
        Iterator& operator++() { v = s->next_set(v); return *this; }
        bool operator!=(const Iterator& o) const { return v != o.v; }
    };

    Iterator begin() const { return {this, first_set()}; }
    Iterator end() const { return {this, -1}; }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ramsey
