#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mcc/bitset.hpp"
#include "mcc/graph.hpp"
#include "mcc/label_set.hpp"
#include "mcc/z_family.hpp"

namespace mcc {

// One component P(A, b1, b2) of the auxiliary graph H, or a grade-1
// singleton P({l}) when b2 == 0. Vertices are component-local ids; the same
// label may appear on several vertices, never across an edge (Condition B).
//
// Local vertex order is fixed by construction: the vertices of the first
// same-grade-union copy in union enumeration order, then the second copy.
struct Component {
    std::uint16_t span_lo = 0, span_hi = 0;  // dyadic label interval A
    std::uint16_t b1 = 0, b2 = 0;            // b2 == 0 marks grade 1
    std::vector<std::uint16_t> labels;       // label per local vertex id
    std::vector<DynBitset> adj;              // symmetric bit rows over local ids

    int grade() const { return b2 == 0 ? 1 : b1 + b2; }
    int order() const { return int(labels.size()); }

    LabelSet span() const {
        LabelSet s;
        for (int l = span_lo; l <= span_hi; ++l) s.insert(l);
        return s;
    }

    void add_edge(int i, int j) {
        adj[i].set(j);
        adj[j].set(i);
    }

    bool operator==(const Component&) const = default;
};

// Vertex count |V(H)| per the closed-form product.
inline std::uint64_t mcc_vertex_count(int k) {
    std::uint64_t p = 1;
    for (int i = 1; i <= k; ++i) p *= (1ULL << i) + 2;
    return p;
}

// Component count: c(1) = 3, c(k) = 2 c(k-1) + 4^(k-1).
inline std::uint64_t mcc_component_count(int k) {
    std::uint64_t c = 3;
    for (int i = 2; i <= k; ++i) c = 2 * c + (1ULL << (2 * (i - 1)));
    return c;
}

// The minimum-covering-computation graph H: all components in canonical
// enumeration order (grade asc, then b1 asc, then span size asc, then span
// minimum asc), which is also construction order.
struct MccGraph {
    int k = 0;
    std::vector<Component> components;

    std::size_t total_vertices() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.labels.size();
        return n;
    }

    static std::uint64_t index_key(int grade, int b1, int span_lo, int span_hi) {
        return (std::uint64_t(grade) << 48) | (std::uint64_t(b1) << 32) |
               (std::uint64_t(span_lo) << 16) | std::uint64_t(span_hi);
    }

    const Component* find(int grade, int b1, int span_lo, int span_hi) const {
        auto it = index_.find(index_key(grade, b1, span_lo, span_hi));
        return it == index_.end() ? nullptr : &components[it->second];
    }

    int find_index(int grade, int b1, int span_lo, int span_hi) const {
        auto it = index_.find(index_key(grade, b1, span_lo, span_hi));
        return it == index_.end() ? -1 : int(it->second);
    }

    void rebuild_index() {
        index_.clear();
        index_.reserve(components.size());
        for (std::size_t i = 0; i < components.size(); ++i) {
            const auto& c = components[i];
            int b1 = c.b2 == 0 ? 1 : c.b1;
            index_[index_key(c.grade(), b1, c.span_lo, c.span_hi)] = std::uint32_t(i);
        }
    }

    bool operator==(const MccGraph& o) const {
        return k == o.k && components == o.components;
    }

private:
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// Builds H by grades: grade-1 singletons for every label, then for each
// grade b every P(A, b1, b2) as a fresh copy of U(A1, b1) joined to a fresh
// copy of U(A2, b2). Union membership lists, not materialized unions, carry
// the already-built components.
inline MccGraph build_h(int k, bool allow_large = false) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k >= 7) throw ResourceGuardError("k >= 7 is unsupported");
    if (k == 6 && !allow_large)
        throw ResourceGuardError(
            "k = 6 needs several GB of memory; pass the large-build override to proceed");

    ZFamily z = build_z_family(k);
    MccGraph h;
    h.k = k;
    h.components.reserve(mcc_component_count(k));

    // unions[r][c][b-1]: indices of built components with span inside block
    // (r, c) and grade b, in canonical order
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> unions(k + 1);
    for (int r = 0; r <= k; ++r) {
        unions[r].resize(z.blocks_at(r));
        for (auto& per_grade : unions[r]) per_grade.resize(std::size_t(1) << r);
    }

    auto register_component = [&](std::uint32_t idx, int span_level, int span_block, int grade) {
        int r = span_level, c = span_block;
        while (r <= k) {
            unions[r][c][grade - 1].push_back(idx);
            ++r;
            c >>= 1;
        }
    };

    // grade 1: one isolated vertex per label
    for (int l = 1; l <= (1 << k); ++l) {
        Component c;
        c.span_lo = c.span_hi = std::uint16_t(l);
        c.b1 = 1;
        c.b2 = 0;
        c.labels = {std::uint16_t(l)};
        c.adj.emplace_back(1);
        c.split_ = 1;
        h.components.push_back(std::move(c));
        register_component(std::uint32_t(h.components.size() - 1), 0, l - 1, 1);
    }

    int half_cap = 1 << (k - 1);
    for (int b = 2; b <= (1 << k); ++b) {
        for (int b1 = std::max(1, b - half_cap); b1 <= std::min(b - 1, half_cap); ++b1) {
            int b2 = b - b1;
            for (int r = 1; r <= k; ++r) {
                int half = 1 << (r - 1);
                if (b1 > half || b2 > half) continue;
                for (int c = 0; c < z.blocks_at(r); ++c) {
                    const auto& part1 = unions[r - 1][2 * c][b1 - 1];
                    const auto& part2 = unions[r - 1][2 * c + 1][b2 - 1];

                    Component comp;
                    comp.span_lo = std::uint16_t(z.block_lo(r, c));
                    comp.span_hi = std::uint16_t(z.block_hi(r, c));
                    comp.b1 = std::uint16_t(b1);
                    comp.b2 = std::uint16_t(b2);

                    int n1 = 0, n2 = 0;
                    for (auto idx : part1) n1 += h.components[idx].order();
                    for (auto idx : part2) n2 += h.components[idx].order();
                    int n = n1 + n2;
                    comp.split_ = std::uint16_t(n1);
                    comp.labels.reserve(n);
                    comp.adj.assign(n, DynBitset(n));

                    int base = 0;
                    auto copy_part = [&](const std::vector<std::uint32_t>& part) {
                        for (auto idx : part) {
                            const Component& src = h.components[idx];
                            for (int i = 0; i < src.order(); ++i) {
                                comp.labels.push_back(src.labels[i]);
                                src.adj[i].for_each(
                                    [&](int j) { comp.adj[base + i].set(base + j); });
                            }
                            base += src.order();
                        }
                    };
                    copy_part(part1);
                    copy_part(part2);

                    // the join: every first-part vertex adjacent to every
                    // second-part vertex
                    for (int i = 0; i < n1; ++i)
                        for (int j = n1; j < n; ++j) comp.add_edge(i, j);

                    h.components.push_back(std::move(comp));
                    register_component(std::uint32_t(h.components.size() - 1), r, c, b);
                }
            }
        }
    }

    h.rebuild_index();
    return h;
}

}  // namespace mcc
