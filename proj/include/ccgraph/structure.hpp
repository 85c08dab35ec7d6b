#pragma once

// Structural predicates: connectivity, bridges, girth, cyclic edge
// connectivity. All exact; sized for graphs of at most a few dozen
// vertices.

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>

#include "ccgraph/graph.hpp"

namespace ccg {

// Sentinel for "no finite value" (girth of a forest, cyclic edge
// connectivity of a graph without two disjoint cycles).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline int connected_components(const MultiGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.edge(e).other(v);
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
        ++c;
    }
    return c;
}

inline bool is_connected(const MultiGraph& g) {
    return g.vertex_count() <= 1 || connected_components(g) == 1;
}

// An edge is a bridge iff it is a loop-free edge whose removal separates
// its endpoints. Parallel edges are never bridges.
inline std::vector<EdgeId> bridges(const MultiGraph& g) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        if (g.multiplicity(ed.u, ed.v) > 1) continue;
        // BFS from u avoiding e
        std::vector<bool> seen(g.vertex_count(), false);
        std::queue<Vertex> q;
        seen[ed.u] = true;
        q.push(ed.u);
        bool reached = false;
        while (!q.empty() && !reached) {
            Vertex v = q.front();
            q.pop();
            for (EdgeId f : g.incident(v)) {
                if (f == e) continue;
                Vertex w = g.edge(f).other(v);
                if (!seen[w]) {
                    seen[w] = true;
                    if (w == ed.v) { reached = true; break; }
                    q.push(w);
                }
            }
        }
        if (!reached) out.push_back(e);
    }
    return out;
}

inline bool is_bridgeless(const MultiGraph& g) { return bridges(g).empty(); }

// Shortest cycle length; a loop is a 1-cycle, a pair of parallel edges a
// 2-cycle. kInfinity on forests.
inline int girth(const MultiGraph& g) {
    for (const Edge& e : g.edges())
        if (e.is_loop()) return 1;
    int best = kInfinity;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        // shortest u-v walk avoiding e, plus e itself
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<Vertex> q;
        dist[ed.u] = 0;
        q.push(ed.u);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (v == ed.v) break;
            if (dist[v] + 1 >= best) continue;
            for (EdgeId f : g.incident(v)) {
                if (f == e || g.edge(f).is_loop()) continue;
                Vertex w = g.edge(f).other(v);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        if (dist[ed.v] >= 0) best = std::min(best, dist[ed.v] + 1);
    }
    return best;
}

namespace detail {

// Does the subgraph induced by the vertex set `in` contain a cycle
// (loop, parallel pair, or longer)?
inline bool induced_has_cycle(const MultiGraph& g, const std::vector<bool>& in) {
    int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (!in[e.u] || !in[e.v]) continue;
        if (e.is_loop()) return true;
        int a = find(e.u), b = find(e.v);
        if (a == b) return true;
        parent[a] = b;
    }
    return false;
}

}  // namespace detail

// Minimum size of an edge cut delta(U) such that both sides contain a
// cycle; kInfinity when no such cut exists (e.g. K_2^3). Exhaustive over
// vertex subsets, guarded by size.
inline int cyclic_edge_connectivity(const MultiGraph& g, int vertex_guard = 24) {
    int n = g.vertex_count();
    if (n > vertex_guard)
        throw std::invalid_argument("cyclic_edge_connectivity: size guard exceeded");
    if (n == 0) return kInfinity;
    int best = kInfinity;
    std::vector<bool> side(n);
    // fix vertex 0 outside U; iterate U over subsets of {1..n-1}
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<bool> in(n, false), out_(n, false);
        out_[0] = true;
        for (int i = 1; i < n; ++i) {
            if (mask >> (i - 1) & 1)
                in[i] = true;
            else
                out_[i] = true;
        }
        int cut = 0;
        for (const Edge& e : g.edges())
            if (!e.is_loop() && in[e.u] != in[e.v]) ++cut;
        if (cut >= best) continue;
        if (detail::induced_has_cycle(g, in) && detail::induced_has_cycle(g, out_))
            best = cut;
    }
    return best;
}

}  // namespace ccg
