#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcc/bitset.hpp"
#include "mcc/label_set.hpp"

namespace mcc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph with vertex labels 1..n (label == vertex id).
struct LabeledGraph {
    int order = 0;
    // u < v, sorted, no duplicates
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges;

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(std::uint16_t(u), std::uint16_t(v));
        return std::binary_search(edges.begin(), edges.end(), e);
    }

    std::size_t edge_count() const { return edges.size(); }

    // Per-label neighbor masks (bit l-1 for label l). Only for order <= 64,
    // which covers every order the solver and the oracle accept.
    std::vector<std::uint64_t> adjacency_masks() const {
        if (order > 64) throw std::invalid_argument("adjacency masks require order <= 64");
        std::vector<std::uint64_t> adj(std::size_t(order) + 1, 0);
        for (auto [u, v] : edges) {
            adj[u] |= 1ULL << (v - 1);
            adj[v] |= 1ULL << (u - 1);
        }
        return adj;
    }

    bool operator==(const LabeledGraph&) const = default;
};

// G padded with isolated vertices up to order 2^k, the order every
// downstream stage works at. Edge set is identical to the base graph.
struct PaddedGraph {
    LabeledGraph base;
    int k = 0;
    std::vector<std::uint64_t> adj;  // 1-based by label; rows for fill labels are 0

    int padded_order() const { return 1 << k; }
    LabelSet all_labels() const { return LabelSet::first_n(1 << k); }
    bool has_edges() const { return !base.edges.empty(); }
};

inline int smallest_exponent_covering(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
}

inline PaddedGraph pad_to_power_of_two(const LabeledGraph& g) {
    if (g.order < 1) throw std::invalid_argument("graph order must be >= 1");
    if (g.order > 64)
        throw std::invalid_argument("padding beyond 64 labels (k > 6) is unsupported");
    PaddedGraph p;
    p.base = g;
    p.k = smallest_exponent_covering(g.order);
    p.adj.assign(std::size_t(p.padded_order()) + 1, 0);
    for (auto [u, v] : g.edges) {
        p.adj[u] |= 1ULL << (v - 1);
        p.adj[v] |= 1ULL << (u - 1);
    }
    return p;
}

// True iff every edge has an endpoint whose label is in s; equivalently the
// complement of s is independent. This is the predicate behind "there exists
// a vertex cover C with L(C) = s" for uniquely labeled graphs.
inline bool is_vertex_cover(const PaddedGraph& g, LabelSet s) {
    std::uint64_t rest = g.all_labels().bits & ~s.bits;
    std::uint64_t w = rest;
    while (w) {
        int l = std::countr_zero(w) + 1;
        if (g.adj[l] & rest) return false;
        w &= w - 1;
    }
    return true;
}

inline bool is_vertex_cover(const LabeledGraph& g, LabelSet s) {
    for (auto [u, v] : g.edges)
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

// All distinct pairs in verts adjacent; a single vertex counts as a clique.
inline bool is_clique(const std::vector<DynBitset>& adj, const DynBitset& verts) {
    bool ok = true;
    verts.for_each([&](int v) {
        if (!ok) return;
        DynBitset need = verts;
        need.reset(v);
        if (!need.is_subset_of(adj[v])) ok = false;
    });
    return ok;
}

namespace detail {

inline std::vector<std::pair<std::uint16_t, std::uint16_t>> normalize_edges(
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace detail

inline LabeledGraph make_graph(int order,
                               std::vector<std::pair<std::uint16_t, std::uint16_t>> edges) {
    LabeledGraph g;
    g.order = order;
    g.edges = detail::normalize_edges(std::move(edges));
    for (auto [u, v] : g.edges) {
        if (u < 1 || v > order) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }
    return g;
}

// DIMACS-like edge list: "p edge <n> <m>" header, one "e <u> <v>" line per
// edge, "c ..." comments. Duplicate edge lines are idempotent.
inline LabeledGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int order = -1;
    long declared_edges = -1;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> edges;

    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (order >= 0) fail("duplicate problem line");
            std::string kind;
            long n = 0, m = 0;
            if (!(ls >> kind >> n >> m) || kind != "edge")
                fail("malformed problem line, expected 'p edge <n> <m>'");
            if (n < 1 || n > 65535) fail("vertex count out of range");
            if (m < 0) fail("negative edge count");
            order = int(n);
            declared_edges = m;
        } else if (tag == "e") {
            if (order < 0) fail("edge before problem line");
            long u = 0, v = 0;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || v < 1 || u > order || v > order) fail("edge endpoint out of range");
            if (u == v) fail("self-loop");
            edges.emplace_back(std::uint16_t(u), std::uint16_t(v));
        } else {
            fail("unrecognized line type '" + tag + "'");
        }
    }
    if (order < 0) throw ParseError("missing problem line");
    (void)declared_edges;  // advisory; duplicates make a strict check ill-defined

    LabeledGraph g;
    g.order = order;
    g.edges = detail::normalize_edges(std::move(edges));
    return g;
}

inline LabeledGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(const LabeledGraph& g, std::ostream& out) {
    out << "p edge " << g.order << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
}

inline std::string write_graph(const LabeledGraph& g) {
    std::ostringstream out;
    write_graph(g, out);
    return out.str();
}

}  // namespace mcc
