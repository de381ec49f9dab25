#pragma once

#include <stdexcept>
#include <vector>

#include "mcc/label_set.hpp"

namespace mcc {

struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The dyadic family Z over {1..2^k}: level r holds the 2^(k-r) consecutive
// blocks of size 2^r. Level 0 is the singletons, level k the full set.
struct ZFamily {
    int k = 0;

    int levels() const { return k + 1; }
    int blocks_at(int level) const { return 1 << (k - level); }

    // block c (0-based) at `level` spans labels [lo, hi]
    int block_lo(int level, int c) const { return c * (1 << level) + 1; }
    int block_hi(int level, int c) const { return (c + 1) * (1 << level); }

    LabelSet block(int level, int c) const {
        LabelSet s;
        for (int l = block_lo(level, c); l <= block_hi(level, c); ++l) s.insert(l);
        return s;
    }

    int member_count() const { return (1 << (k + 1)) - 1; }

    std::vector<LabelSet> members() const {
        std::vector<LabelSet> out;
        out.reserve(member_count());
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < blocks_at(r); ++c) out.push_back(block(r, c));
        return out;
    }
};

inline ZFamily build_z_family(int k, bool allow_large = false) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k > 6 && !allow_large)
        throw ResourceGuardError("k > 6 refused without the large-build override");
    if (k > 6) throw ResourceGuardError("label sets beyond 64 labels are unsupported");
    return ZFamily{k};
}

}  // namespace mcc
