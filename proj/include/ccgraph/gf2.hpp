#pragma once

// GF(2) edge-space linear algebra. Edge sets are bit-packed; the cycle
// space is the kernel of the vertex-edge incidence matrix (loop columns
// are zero), the cut space its row space.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ccgraph/graph.hpp"

namespace ccg {

class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(const MultiGraph& g) : owner_(g.id()), m_(g.edge_count()), words_(word_count(), 0) {}
    EdgeSet(const MultiGraph& g, const std::vector<EdgeId>& ids) : EdgeSet(g) {
        for (EdgeId e : ids) set(e);
    }

    std::uint64_t owner() const { return owner_; }
    int universe_size() const { return m_; }

    bool test(EdgeId e) const { return words_[e >> 6] >> (e & 63) & 1; }
    void set(EdgeId e) {
        if (e < 0 || e >= m_) throw std::out_of_range("edge id outside edge set universe");
        words_[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
    void flip(EdgeId e) {
        if (e < 0 || e >= m_) throw std::out_of_range("edge id outside edge set universe");
        words_[e >> 6] ^= std::uint64_t{1} << (e & 63);
    }

    EdgeSet& operator^=(const EdgeSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    int weight() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    // index of lowest set bit, or -1
    int lowest() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(words_[i]);
        return -1;
    }
    std::vector<EdgeId> members() const {
        std::vector<EdgeId> out;
        for (int e = 0; e < m_; ++e)
            if (test(e)) out.push_back(e);
        return out;
    }

    bool operator==(const EdgeSet& o) const { return m_ == o.m_ && words_ == o.words_; }
    bool operator<(const EdgeSet& o) const { return members() < o.members(); }

private:
    size_t word_count() const { return static_cast<size_t>((m_ + 63) / 64); }
    std::uint64_t owner_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-reduced GF(2) basis of a subspace of the edge space. Rows are kept
// in reduced row echelon form with strictly increasing pivots.
class Gf2Basis {
public:
    Gf2Basis() = default;
    explicit Gf2Basis(const MultiGraph& g) : owner_(g.id()) {}

    std::uint64_t owner() const { return owner_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<EdgeSet>& rows() const { return rows_; }

    // Insert a vector; returns false if it was already in the span.
    bool insert(EdgeSet v) {
        reduce(v);
        if (v.empty()) return false;
        int p = v.lowest();
        // clear bit p from existing rows to keep reduced form
        for (auto& r : rows_)
            if (r.test(p)) r ^= v;
        auto it = std::lower_bound(rows_.begin(), rows_.end(), v,
                                   [](const EdgeSet& a, const EdgeSet& b) {
                                       return a.lowest() < b.lowest();
                                   });
        rows_.insert(it, std::move(v));
        return true;
    }

    bool contains(EdgeSet v) const {
        check_owner(v);
        reduce(v);
        return v.empty();
    }

    void check_owner(const EdgeSet& v) const {
        if (v.owner() != owner_) throw std::invalid_argument("edge set owner mismatch");
    }

private:
    void reduce(EdgeSet& v) const {
        for (const auto& r : rows_) {
            int p = r.lowest();
            if (v.test(p)) v ^= r;
        }
    }
    std::uint64_t owner_ = 0;
    std::vector<EdgeSet> rows_;
};

// Fundamental cycles from a spanning forest; every loop is a singleton
// basis element. Dimension is m - n + #components.
inline Gf2Basis cycle_space_basis(const MultiGraph& g) {
    int n = g.vertex_count();
    std::vector<int> parent_edge(n, -1), parent_vertex(n, -1), depth(n, -1);
    std::vector<bool> tree_edge(g.edge_count(), false);
    for (Vertex s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                if (g.edge(e).is_loop()) continue;
                Vertex w = g.edge(e).other(v);
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = e;
                    parent_vertex[w] = v;
                    tree_edge[e] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    Gf2Basis basis(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (tree_edge[e]) continue;
        EdgeSet cyc(g);
        cyc.set(e);
        if (!g.edge(e).is_loop()) {
            Vertex a = g.edge(e).u, b = g.edge(e).v;
            while (a != b) {
                if (depth[a] < depth[b]) std::swap(a, b);
                cyc.flip(parent_edge[a]);
                a = parent_vertex[a];
            }
        }
        basis.insert(std::move(cyc));
    }
    return basis;
}

// Row space of the incidence matrix: one row per vertex, loops
// contributing nothing. Dimension is n - #components.
inline Gf2Basis cut_space_basis(const MultiGraph& g) {
    Gf2Basis basis(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EdgeSet row(g);
        for (EdgeId e : g.incident(v))
            if (!g.edge(e).is_loop()) row.flip(e);
        basis.insert(std::move(row));
    }
    return basis;
}

inline bool in_span(const Gf2Basis& basis, const EdgeSet& s) { return basis.contains(s); }

// Even non-loop degree at every vertex, checked directly.
inline bool is_cycle(const MultiGraph& g, const EdgeSet& s) {
    if (s.owner() != g.id()) throw std::invalid_argument("edge set owner mismatch");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int parity = 0;
        for (EdgeId e : g.incident(v))
            if (!g.edge(e).is_loop() && s.test(e)) parity ^= 1;
        if (parity) return false;
    }
    return true;
}

inline bool is_cut(const MultiGraph& g, const EdgeSet& s) {
    return cut_space_basis(g).contains(s);
}

// All nonzero cut-space members of weight <= k, in increasing member
// order. Exact by direct enumeration of small edge subsets.
inline std::vector<EdgeSet> enumerate_small_cut_vectors(const MultiGraph& g, int k,
                                                        long long guard = 100000000LL) {
    int m = g.edge_count();
    Gf2Basis cuts = cut_space_basis(g);
    std::vector<EdgeSet> out;
    long long visited = 0;
    std::vector<EdgeId> pick;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (!pick.empty()) {
            if (++visited > guard)
                throw std::runtime_error("enumerate_small_cut_vectors: explosion guard");
            EdgeSet s(g, pick);
            if (cuts.contains(s)) out.push_back(std::move(s));
        }
        if (remaining == 0) return;
        for (int e = start; e < m; ++e) {
            pick.push_back(e);
            self(self, e + 1, remaining - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ccg
