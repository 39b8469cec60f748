#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace charlab {

// Fixed-width dynamic bitset over 64-bit words. Width is the field size p, so
// rotations are cyclic shifts modulo p. The innermost Sarkozy-search and
// sumset operations live here.
class Bitset {
public:
    Bitset() : width_(0) {}
    explicit Bitset(std::size_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }
    void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (std::uint64_t w : words_) if (w) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // this |= rotate_left(o, k): bit i of o lands on (i + k) mod width.
    void or_rotated(const Bitset& o, std::size_t k);

    // Lowest set bit at index >= from, or width() if none.
    std::size_t next_set(std::size_t from) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    std::size_t width_;
    std::vector<std::uint64_t> words_;
};

} // namespace charlab
