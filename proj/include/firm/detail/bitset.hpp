#ifndef FIRM_DETAIL_BITSET_HPP
#define FIRM_DETAIL_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace firm::detail {

// Fixed-capacity dynamic bitset sized at construction. Graphs here have at
// most a few hundred vertices, so one or two words is the common case.
class SmallBitset {
public:
    SmallBitset() = default;
    explicit SmallBitset(int bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    int capacity() const { return bits_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int count() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    int first_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    int next_set(int after) const {
        for (int i = after + 1; i < bits_;) {
            std::uint64_t w = words_[i >> 6] >> (i & 63);
            if (w) return i + std::countr_zero(w);
            i = (i | 63) + 1;
        }
        return -1;
    }

    SmallBitset& operator&=(const SmallBitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    SmallBitset& operator|=(const SmallBitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    // this &= ~o
    SmallBitset& subtract(const SmallBitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend SmallBitset operator&(SmallBitset a, const SmallBitset& b) { return a &= b; }
    friend SmallBitset operator|(SmallBitset a, const SmallBitset& b) { return a |= b; }

    bool intersects(const SmallBitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool is_subset_of(const SmallBitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool operator==(const SmallBitset&) const = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace firm::detail

#endif
