#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace mcc {

// Dynamically sized bitset over small integer ids (component-local vertex
// ids). Word-based so that intersections and population counts stay cheap.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int nbits) { resize(nbits); }

    void resize(int nbits) {
        nbits_ = nbits;
        words_.assign((nbits + 63) / 64, 0ULL);
    }

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    void clear() { std::fill(words_.begin(), words_.end(), 0ULL); }

    void set_all() {
        std::fill(words_.begin(), words_.end(), ~0ULL);
        trim();
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i << 6) + std::countr_zero(words_[i]);
        return -1;
    }

    // index of the pos-th set bit (0-based); -1 if fewer bits are set
    int nth_set(int pos) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            int c = std::popcount(words_[i]);
            if (pos < c) {
                std::uint64_t w = words_[i];
                while (pos--) w &= w - 1;
                return int(i << 6) + std::countr_zero(w);
            }
            pos -= c;
        }
        return -1;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // true iff every bit of *this is also set in o
    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    bool operator==(const DynBitset& o) const = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    template <class F>
    void for_each_desc(F&& f) const {
        for (std::size_t i = words_.size(); i-- > 0;) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = 63 - std::countl_zero(w);
                f(int(i << 6) + b);
                w &= ~(1ULL << b);
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (words_.empty()) return;
        int r = nbits_ & 63;
        if (r) words_.back() &= (1ULL << r) - 1ULL;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mcc
