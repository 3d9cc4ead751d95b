#pragma once

// Runtime-sized bitset with a fixed capacity chosen at construction.
// Used for color sets over E(H) and image sets over V(H).

#include <cstdint>
#include <vector>

namespace hcoloring::detail {

class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int capacity, bool fill = false)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {
        if (fill) {
            for (auto& w : words_) w = ~std::uint64_t{0};
            trim();
        }
    }

    int capacity() const { return capacity_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    void intersect_with(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    // Smallest set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() {
        if (capacity_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
    }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hcoloring::detail
