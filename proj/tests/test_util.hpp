#pragma once

// Shared helpers for the test suites: seeded random multigraphs and
// brute-force oracles kept independent of the library internals.

#include <random>

#include <ccgraph/ccgraph.hpp>

namespace ccgtest {

inline ccg::MultiGraph random_multigraph(std::mt19937& rng, int max_n = 8, int max_m = 12,
                                         bool allow_loops = true) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, max_m);
    int m = md(rng);
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::vector<std::pair<ccg::Vertex, ccg::Vertex>> es;
    for (int i = 0; i < m; ++i) {
        int u = vd(rng), v = vd(rng);
        if (!allow_loops && u == v) {
            --i;
            continue;
        }
        es.emplace_back(u, v);
    }
    return ccg::MultiGraph(n, std::move(es));
}

// Random connected cubic graph on n vertices (n even) via the pairing
// model with rejection; simple output.
inline ccg::MultiGraph random_cubic_graph(std::mt19937& rng, int n) {
    while (true) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<ccg::Vertex, ccg::Vertex>> es;
        bool ok = true;
        std::set<std::pair<int, int>> seen;
        for (size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen.count({std::min(u, v), std::max(u, v)})) {
                ok = false;
                break;
            }
            seen.insert({std::min(u, v), std::max(u, v)});
            es.emplace_back(u, v);
        }
        if (!ok) continue;
        ccg::MultiGraph g(n, std::move(es));
        if (ccg::is_connected(g)) return g;
    }
}

// Brute force: is S a cut delta(U) for some vertex subset U?
inline bool is_cut_by_subsets(const ccg::MultiGraph& g, const ccg::EdgeSet& s) {
    int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ccg::EdgeSet delta(g);
        for (ccg::EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edge(e);
            if (ed.is_loop()) continue;
            if (((mask >> ed.u) & 1) != ((mask >> ed.v) & 1)) delta.flip(e);
        }
        if (delta == s) return true;
    }
    return false;
}

}  // namespace ccgtest
