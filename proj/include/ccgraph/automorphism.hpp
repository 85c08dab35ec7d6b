#pragma once

// Automorphism and isomorphism search by backtracking over vertex maps
// with invariant pruning (degrees, loop counts, neighbor multiplicity
// profiles, distance profiles). Parallel edge classes permute freely, so
// each vertex bijection fans out into a product of per-class bijections.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

#include "ccgraph/graph.hpp"

namespace ccg {

struct Automorphism {
    std::vector<Vertex> vertex_perm;
    std::vector<EdgeId> edge_perm;

    bool operator==(const Automorphism&) const = default;
    bool operator<(const Automorphism& o) const {
        return std::tie(vertex_perm, edge_perm) < std::tie(o.vertex_perm, o.edge_perm);
    }
};

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
    // (a after b)
    Automorphism c;
    c.vertex_perm.resize(b.vertex_perm.size());
    c.edge_perm.resize(b.edge_perm.size());
    for (size_t i = 0; i < b.vertex_perm.size(); ++i) c.vertex_perm[i] = a.vertex_perm[b.vertex_perm[i]];
    for (size_t i = 0; i < b.edge_perm.size(); ++i) c.edge_perm[i] = a.edge_perm[b.edge_perm[i]];
    return c;
}

inline Automorphism invert(const Automorphism& a) {
    Automorphism c;
    c.vertex_perm.resize(a.vertex_perm.size());
    c.edge_perm.resize(a.edge_perm.size());
    for (size_t i = 0; i < a.vertex_perm.size(); ++i) c.vertex_perm[a.vertex_perm[i]] = static_cast<Vertex>(i);
    for (size_t i = 0; i < a.edge_perm.size(); ++i) c.edge_perm[a.edge_perm[i]] = static_cast<EdgeId>(i);
    return c;
}

namespace detail {

inline std::vector<std::vector<int>> vertex_invariants(const MultiGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> inv(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> profile;
        profile.push_back(g.degree(v));
        profile.push_back(g.loop_count(v));
        std::vector<std::pair<int, int>> nb;
        for (Vertex w : g.neighbors(v)) nb.emplace_back(g.multiplicity(v, w), g.degree(w));
        std::sort(nb.begin(), nb.end());
        for (auto [mult, deg] : nb) {
            profile.push_back(mult);
            profile.push_back(deg);
        }
        // BFS distance profile
        std::vector<int> dist(n, -1);
        std::queue<Vertex> q;
        dist[v] = 0;
        q.push(v);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
        }
        std::sort(dist.begin(), dist.end());
        profile.insert(profile.end(), dist.begin(), dist.end());
        inv[v] = std::move(profile);
    }
    return inv;
}

// Enumerate incidence-preserving vertex bijections G -> H. Stops after
// `limit` results (limit < 0 means all).
inline std::vector<std::vector<Vertex>> vertex_bijections(const MultiGraph& g,
                                                          const MultiGraph& h,
                                                          long long limit = -1) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return {};
    auto gi = vertex_invariants(g);
    auto hi = vertex_invariants(h);
    {
        auto gs = gi, hs = hi;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return {};
    }
    // order source vertices to keep the mapped part connected
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    for (int round = 0; round < n; ++round) {
        Vertex best = -1;
        int best_links = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (Vertex w : g.neighbors(v))
                if (placed[w]) ++links;
            if (links > best_links) {
                best_links = links;
                best = v;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    std::vector<std::vector<Vertex>> results;
    std::vector<Vertex> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int pos) -> bool {  // returns true to abort
        if (pos == n) {
            results.push_back(map);
            return limit >= 0 && static_cast<long long>(results.size()) >= limit;
        }
        Vertex v = order[pos];
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || gi[v] != hi[w]) continue;
            bool ok = g.loop_count(v) == h.loop_count(w);
            for (int p = 0; ok && p < pos; ++p) {
                Vertex u = order[p];
                ok = g.multiplicity(v, u) == h.multiplicity(w, map[u]);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            bool stop = self(self, pos + 1);
            map[v] = -1;
            used[w] = false;
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return results;
}

// Expand a vertex bijection into all compatible edge bijections.
inline std::vector<std::vector<EdgeId>> edge_bijections(const MultiGraph& g,
                                                        const MultiGraph& h,
                                                        const std::vector<Vertex>& vmap) {
    // group edges by unordered endpoint pair
    std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> gcls, hcls;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto& ed = g.edge(e);
        gcls[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto& ed = h.edge(e);
        hcls[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> classes;
    for (auto& [key, src] : gcls) {
        auto tgt_key = std::make_pair(std::min(vmap[key.first], vmap[key.second]),
                                      std::max(vmap[key.first], vmap[key.second]));
        auto it = hcls.find(tgt_key);
        if (it == hcls.end() || it->second.size() != src.size()) return {};
        classes.emplace_back(src, it->second);
    }
    std::vector<std::vector<EdgeId>> results;
    std::vector<EdgeId> emap(g.edge_count(), -1);
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            results.push_back(emap);
            return;
        }
        auto& [src, tgt] = classes[ci];
        std::vector<EdgeId> perm = tgt;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t i = 0; i < src.size(); ++i) emap[src[i]] = perm[i];
            self(self, ci + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
    return results;
}

}  // namespace detail

// Full automorphism group as (vertex, edge) permutation pairs, sorted.
inline std::vector<Automorphism> automorphisms(const MultiGraph& g, int vertex_guard = 64) {
    if (g.vertex_count() > vertex_guard)
        throw std::invalid_argument("automorphisms: size guard exceeded");
    std::vector<Automorphism> out;
    for (auto& vmap : detail::vertex_bijections(g, g))
        for (auto& emap : detail::edge_bijections(g, g, vmap))
            out.push_back({vmap, emap});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::optional<Automorphism> is_isomorphic(const MultiGraph& g, const MultiGraph& h,
                                                 int vertex_guard = 64) {
    if (g.vertex_count() > vertex_guard || h.vertex_count() > vertex_guard)
        throw std::invalid_argument("is_isomorphic: size guard exceeded");
    // any multiplicity-preserving vertex bijection extends to an edge
    // bijection, so the first hit settles the question
    for (auto& vmap : detail::vertex_bijections(g, h, /*limit=*/1)) {
        auto emaps = detail::edge_bijections(g, h, vmap);
        if (!emaps.empty()) return Automorphism{vmap, emaps.front()};
    }
    return std::nullopt;
}

// Does Aut(G) act transitively on edge identities?
inline bool is_edge_transitive(const MultiGraph& g, int vertex_guard = 64) {
    if (g.edge_count() == 0) return true;
    auto auts = automorphisms(g, vertex_guard);
    std::vector<bool> orbit(g.edge_count(), false);
    orbit[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& a : auts)
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (orbit[e] && !orbit[a.edge_perm[e]]) {
                    orbit[a.edge_perm[e]] = true;
                    grew = true;
                }
    }
    return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

// For cubic graphs: does Aut(G) act transitively on (vertex, ordered
// incident edge triple) flags?
inline bool has_ordered_star_transitivity(const MultiGraph& g, int vertex_guard = 64) {
    if (!g.is_cubic()) throw std::invalid_argument("ordered-star transitivity needs a cubic graph");
    auto auts = automorphisms(g, vertex_guard);
    // orbit of the base flag (vertex 0 with its incident edges in id order)
    std::vector<EdgeId> base = g.incident(0);
    std::set<std::pair<Vertex, std::vector<EdgeId>>> seen;
    for (const auto& a : auts) {
        std::vector<EdgeId> image(3);
        for (int i = 0; i < 3; ++i) image[i] = a.edge_perm[base[i]];
        seen.insert({a.vertex_perm[0], image});
    }
    return seen.size() == static_cast<size_t>(6 * g.vertex_count());
}

}  // namespace ccg
