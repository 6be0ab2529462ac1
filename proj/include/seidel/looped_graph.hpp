#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seidel/vertex_set.hpp"

namespace seidel {

using Edge = std::pair<std::size_t, std::size_t>;

// Finite simple graph on {0..n-1} together with a loop set W.
//
// The adjacency relation is irreflexive: loops are tracked only in the loop
// set, never on the diagonal of the adjacency relation. The strict upper
// triangle is packed column by column, so the pair (i, j) with i < j lives at
// bit j(j-1)/2 + i. This is the same bit order graph6 uses.
class LoopedGraph {
  public:
    LoopedGraph() = default;
    explicit LoopedGraph(std::size_t n) : n_(n), triangle_((pair_count(n) + 63) / 64, 0), loops_(n) {}

    static LoopedGraph from_edge_list(std::size_t n, std::span<const Edge> edges, const VertexSet& loops) {
        if (loops.universe() != n)
            throw std::invalid_argument("from_edge_list: loop set bound to order " +
                                        std::to_string(loops.universe()) + ", graph has order " +
                                        std::to_string(n));
        LoopedGraph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::out_of_range("from_edge_list: endpoint out of range in edge (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("from_edge_list: self-pair (" + std::to_string(u) + "," +
                                            std::to_string(v) + "); loops go in the loop set");
            g.add_edge(u, v);
        }
        g.loops_ = loops;
        return g;
    }

    static LoopedGraph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()), VertexSet(n));
    }

    static LoopedGraph from_edge_list(std::size_t n, std::initializer_list<Edge> edges, const VertexSet& loops) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()), loops);
    }

    static constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

    // Bit position of the unordered pair {u, v}, u != v.
    static constexpr std::size_t pair_index(std::size_t u, std::size_t v) noexcept {
        if (u > v) std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t loop_count() const noexcept { return loops_.size(); }
    const VertexSet& loops() const noexcept { return loops_; }

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
        if (u == v || u >= n_ || v >= n_) return false;
        return pair_bit(pair_index(u, v));
    }

    bool has_loop(std::size_t v) const noexcept { return loops_.contains(v); }

    std::size_t edge_count() const noexcept {
        std::size_t total = 0;
        for (auto w : triangle_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    // Simple-graph degree; loops never contribute.
    std::size_t degree(std::size_t v) const noexcept {
        std::size_t d = 0;
        for (std::size_t u = 0; u < n_; ++u) d += adjacent(u, v) ? 1 : 0;
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t j = 1; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (pair_bit(pair_index(i, j))) out.emplace_back(i, j);
        return out;
    }

    bool pair_bit(std::size_t index) const noexcept { return ((triangle_[index / 64] >> (index % 64)) & 1U) != 0; }

    void add_edge(std::size_t u, std::size_t v) { set_pair(u, v, true); }
    void remove_edge(std::size_t u, std::size_t v) { set_pair(u, v, false); }

    void set_pair(std::size_t u, std::size_t v, bool on) {
        if (u >= n_ || v >= n_) throw std::out_of_range("LoopedGraph: vertex out of range");
        if (u == v) throw std::invalid_argument("LoopedGraph: adjacency is irreflexive; use the loop set");
        set_pair_bit(pair_index(u, v), on);
    }

    void set_pair_bit(std::size_t index, bool on) noexcept {
        auto mask = std::uint64_t{1} << (index % 64);
        if (on)
            triangle_[index / 64] |= mask;
        else
            triangle_[index / 64] &= ~mask;
    }

    void set_loops(const VertexSet& w) {
        if (w.universe() != n_) throw std::invalid_argument("LoopedGraph: loop set bound to a different order");
        loops_ = w;
    }

    friend bool operator==(const LoopedGraph&, const LoopedGraph&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> triangle_;
    VertexSet loops_;
};

namespace detail {
inline void require_bound(const LoopedGraph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.order())
        throw std::invalid_argument(std::string(what) + ": vertex set bound to order " +
                                    std::to_string(s.universe()) + ", graph has order " +
                                    std::to_string(g.order()));
}
} // namespace detail

// Looped complement: distinct pairs flip adjacency and every vertex flips its
// loop. Total on W = {} as well, which keeps it an involution.
inline LoopedGraph complement(const LoopedGraph& g) {
    LoopedGraph out(g.order());
    for (std::size_t k = 0; k < LoopedGraph::pair_count(g.order()); ++k) out.set_pair_bit(k, !g.pair_bit(k));
    out.set_loops(g.loops().complement());
    return out;
}

// Flips every adjacency across the cut (X, V \ X); loops are untouched.
inline LoopedGraph seidel_switch(const LoopedGraph& g, const VertexSet& x) {
    detail::require_bound(g, x, "seidel_switch");
    LoopedGraph out = g;
    for (std::size_t j = 1; j < g.order(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (x.contains(i) != x.contains(j)) out.set_pair(i, j, !g.adjacent(i, j));
    return out;
}

inline LoopedGraph disjoint_union(const LoopedGraph& g, const LoopedGraph& h) {
    const auto ng = g.order();
    LoopedGraph out(ng + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    VertexSet loops(out.order());
    for (auto v : g.loops().members()) loops.insert(v);
    for (auto v : h.loops().members()) loops.insert(ng + v);
    out.set_loops(loops);
    return out;
}

inline LoopedGraph join(const LoopedGraph& g, const LoopedGraph& h) {
    LoopedGraph out = disjoint_union(g, h);
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

inline LoopedGraph add_loops(const LoopedGraph& g, const VertexSet& w) {
    detail::require_bound(g, w, "add_loops");
    LoopedGraph out = g;
    out.set_loops(w);
    return out;
}

inline LoopedGraph underlying(const LoopedGraph& g) {
    LoopedGraph out = g;
    out.set_loops(VertexSet(g.order()));
    return out;
}

// Common degree if all (loop-free) degrees agree. The empty graph of order 0
// is vacuously 0-regular.
inline std::optional<std::size_t> regularity(const LoopedGraph& g) {
    if (g.order() == 0) return std::size_t{0};
    const auto r = g.degree(0);
    for (std::size_t v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

// Relabels vertex v as perm[v].
inline LoopedGraph permute(const LoopedGraph& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("permute: permutation length differs from order");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw std::invalid_argument("permute: not a permutation");
        seen[p] = true;
    }
    LoopedGraph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    VertexSet loops(g.order());
    for (auto v : g.loops().members()) loops.insert(perm[v]);
    out.set_loops(loops);
    return out;
}

namespace graphs {

inline LoopedGraph empty(std::size_t n) { return LoopedGraph(n); }

inline LoopedGraph complete(std::size_t n) {
    LoopedGraph g(n);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

inline LoopedGraph path(std::size_t n) {
    LoopedGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline LoopedGraph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
    LoopedGraph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline LoopedGraph petersen() {
    LoopedGraph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

} // namespace graphs

} // namespace seidel
