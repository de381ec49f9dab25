#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mcc {

// A subset of the label universe {1..2^k}, k <= 6, as a 64-bit mask.
// Label l occupies bit l-1. This is the shared currency for L(.) label
// sets throughout the solver.
struct LabelSet {
    std::uint64_t bits = 0;

    constexpr LabelSet() = default;
    constexpr explicit LabelSet(std::uint64_t b) : bits(b) {}

    static constexpr LabelSet single(int label) { return LabelSet(1ULL << (label - 1)); }

    // {1..n}
    static constexpr LabelSet first_n(int n) {
        return LabelSet(n >= 64 ? ~0ULL : (1ULL << n) - 1ULL);
    }

    static LabelSet of(std::initializer_list<int> labels) {
        LabelSet s;
        for (int l : labels) s.insert(l);
        return s;
    }

    bool contains(int label) const { return (bits >> (label - 1)) & 1ULL; }
    void insert(int label) { bits |= 1ULL << (label - 1); }
    void erase(int label) { bits &= ~(1ULL << (label - 1)); }

    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    LabelSet& operator|=(LabelSet o) { bits |= o.bits; return *this; }
    LabelSet& operator&=(LabelSet o) { bits &= o.bits; return *this; }
    friend LabelSet operator|(LabelSet a, LabelSet b) { return LabelSet(a.bits | b.bits); }
    friend LabelSet operator&(LabelSet a, LabelSet b) { return LabelSet(a.bits & b.bits); }

    bool is_subset_of(LabelSet o) const { return (bits & ~o.bits) == 0; }

    bool operator==(const LabelSet&) const = default;

    int max_label() const { return bits == 0 ? 0 : 64 - std::countl_zero(bits); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        std::uint64_t w = bits;
        while (w) {
            v.push_back(std::countr_zero(w) + 1);
            w &= w - 1;
        }
        return v;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int l : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(l);
            first = false;
        }
        return s + "}";
    }
};

}  // namespace mcc
