#pragma once

// 2-join and 3-join constructions with natural-inclusion mappings.

#include <algorithm>
#include <array>

#include "ccgraph/graph.hpp"
#include "ccgraph/mapping.hpp"

namespace ccg {

struct TwoJoin {
    MultiGraph graph;
    EdgeMapping inclusion1;  // E(G1) -> E(join)
    EdgeMapping inclusion2;
    EdgeId bridge_x;  // the new edge x1x2
    EdgeId bridge_y;  // the new edge y1y2
};

// Delete e1 = x1y1 from G1 and e2 = x2y2 from G2, add x1x2 and y1y2.
// The first-listed endpoint of each deleted edge plays the role of x.
// Vertices of G2 are shifted by |V(G1)|; edges are ordered as
// (G1 minus e1, G2 minus e2, x1x2, y1y2). The deleted edge of each
// factor maps to x1x2 under its natural inclusion.
inline TwoJoin two_join(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, EdgeId e2) {
    g1.check_edge(e1);
    g2.check_edge(e2);
    if (g1.edge(e1).is_loop() || g2.edge(e2).is_loop())
        throw std::invalid_argument("two_join: cannot join on a loop");
    int n1 = g1.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<EdgeId> inc1(g1.edge_count()), inc2(g2.edge_count());
    for (EdgeId i = 0; i < g1.edge_count(); ++i) {
        if (i == e1) continue;
        inc1[i] = static_cast<EdgeId>(es.size());
        es.emplace_back(g1.edge(i).u, g1.edge(i).v);
    }
    for (EdgeId i = 0; i < g2.edge_count(); ++i) {
        if (i == e2) continue;
        inc2[i] = static_cast<EdgeId>(es.size());
        es.emplace_back(g2.edge(i).u + n1, g2.edge(i).v + n1);
    }
    EdgeId bx = static_cast<EdgeId>(es.size());
    es.emplace_back(g1.edge(e1).u, g2.edge(e2).u + n1);
    EdgeId by = static_cast<EdgeId>(es.size());
    es.emplace_back(g1.edge(e1).v, g2.edge(e2).v + n1);
    inc1[e1] = bx;
    inc2[e2] = bx;
    MultiGraph j(n1 + g2.vertex_count(), std::move(es));
    return {j, EdgeMapping(g1, j, std::move(inc1)), EdgeMapping(g2, j, std::move(inc2)), bx, by};
}

struct ThreeJoin {
    MultiGraph graph;
    EdgeMapping inclusion1;
    EdgeMapping inclusion2;
    std::array<EdgeId, 3> connecting;  // the added matching edges
};

// Delete degree-3 vertices u1 of G1 and u2 of G2 and add a matching
// between their neighbor triples. The star edges of u_i, in incident
// order, are (a_i, b_i, c_i); matching[k] pairs the k-th star edge of u1
// with the matching[k]-th star edge of u2. Natural inclusions send the
// deleted star edges to the connecting edges.
inline ThreeJoin three_join(const MultiGraph& g1, Vertex u1, const MultiGraph& g2, Vertex u2,
                            const std::array<int, 3>& matching = {0, 1, 2}) {
    for (auto [g, u] : {std::pair<const MultiGraph*, Vertex>{&g1, u1}, {&g2, u2}}) {
        g->check_vertex(u);
        auto star = g->vertex_star(u);
        if (g->degree(u) != 3 || star.size() != 3)
            throw std::invalid_argument("three_join: vertex must have degree 3 without loops");
        std::vector<Vertex> nb;
        for (EdgeId e : star) nb.push_back(g->edge(e).other(u));
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("three_join: neighbors must be distinct");
    }
    {
        std::array<int, 3> sorted = matching;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2})
            throw std::invalid_argument("three_join: matching must be a permutation of {0,1,2}");
    }
    auto star1 = g1.vertex_star(u1);
    auto star2 = g2.vertex_star(u2);
    // vertex renumbering: drop u_i, shift G2 past G1
    auto vmap1 = [&](Vertex v) { return v < u1 ? v : v - 1; };
    int n1 = g1.vertex_count() - 1;
    auto vmap2 = [&](Vertex v) { return n1 + (v < u2 ? v : v - 1); };

    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<EdgeId> inc1(g1.edge_count()), inc2(g2.edge_count());
    for (EdgeId i = 0; i < g1.edge_count(); ++i) {
        const Edge& e = g1.edge(i);
        if (e.u == u1 || e.v == u1) continue;
        inc1[i] = static_cast<EdgeId>(es.size());
        es.emplace_back(vmap1(e.u), vmap1(e.v));
    }
    for (EdgeId i = 0; i < g2.edge_count(); ++i) {
        const Edge& e = g2.edge(i);
        if (e.u == u2 || e.v == u2) continue;
        inc2[i] = static_cast<EdgeId>(es.size());
        es.emplace_back(vmap2(e.u), vmap2(e.v));
    }
    std::array<EdgeId, 3> connecting;
    for (int k = 0; k < 3; ++k) {
        connecting[k] = static_cast<EdgeId>(es.size());
        Vertex a = g1.edge(star1[k]).other(u1);
        Vertex b = g2.edge(star2[matching[k]]).other(u2);
        es.emplace_back(vmap1(a), vmap2(b));
        inc1[star1[k]] = connecting[k];
        inc2[star2[matching[k]]] = connecting[k];
    }
    MultiGraph j(n1 + g2.vertex_count() - 1, std::move(es));
    return {j, EdgeMapping(g1, j, std::move(inc1)), EdgeMapping(g2, j, std::move(inc2)),
            connecting};
}

}  // namespace ccg
