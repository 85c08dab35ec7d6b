#pragma once

// Gluing cycle-continuous maps across 2-joins and 3-joins. Both
// constructions rewrite the second factor's map through a symmetry of K
// so the two factors agree on the deleted structure, then read the glued
// map off the join's natural inclusions.

#include "ccgraph/automorphism.hpp"
#include "ccgraph/join.hpp"
#include "ccgraph/mapping.hpp"
#include "ccgraph/structure.hpp"

namespace ccg {

// Requires K edge-transitive and f1, f2 cycle-continuous. Returns the
// glued map on two_join(g1, e1, g2, e2), with f(x1x2) = f(y1y2) = f1(e1).
inline EdgeMapping compose_two_join_maps(const MultiGraph& g1, EdgeId e1, const EdgeMapping& f1,
                                         const MultiGraph& g2, EdgeId e2, const EdgeMapping& f2,
                                         const MultiGraph& k, const TwoJoin& join) {
    if (!is_edge_transitive(k))
        throw std::invalid_argument("compose_two_join_maps: K must be edge-transitive");
    if (!verify_cc(g1, k, f1) || !verify_cc(g2, k, f2))
        throw std::invalid_argument("compose_two_join_maps: factor maps must be cycle-continuous");
    // automorphism of K sending f2(e2) to f1(e1)
    const Automorphism* align = nullptr;
    auto auts = automorphisms(k);
    for (const auto& a : auts)
        if (a.edge_perm[f2.map[e2]] == f1.map[e1]) {
            align = &a;
            break;
        }
    if (!align) throw std::logic_error("compose_two_join_maps: edge-transitivity violated");

    std::vector<EdgeId> out(join.graph.edge_count(), -1);
    for (EdgeId e = 0; e < g1.edge_count(); ++e) out[join.inclusion1.map[e]] = f1.map[e];
    for (EdgeId e = 0; e < g2.edge_count(); ++e)
        out[join.inclusion2.map[e]] = align->edge_perm[f2.map[e]];
    // the two inclusions both wrote the x-bridge; pin both bridges
    out[join.bridge_x] = f1.map[e1];
    out[join.bridge_y] = f1.map[e1];
    EdgeMapping glued(join.graph, k, std::move(out));
    if (!verify_cc(join.graph, k, glued))
        throw std::logic_error("compose_two_join_maps: glued map failed verification");
    return glued;
}

// Requires K cubic, cyclically 4-edge-connected (or without any cycle
// separating cut) and ordered-star-transitive; f1, f2 cycle-continuous.
// The 3-join must have been built with the given matching.
inline EdgeMapping compose_three_join_maps(const MultiGraph& g1, Vertex u1, const EdgeMapping& f1,
                                           const MultiGraph& g2, Vertex u2, const EdgeMapping& f2,
                                           const MultiGraph& k, const ThreeJoin& join,
                                           const std::array<int, 3>& matching = {0, 1, 2}) {
    if (!k.is_cubic()) throw std::invalid_argument("compose_three_join_maps: K must be cubic");
    {
        int cec = cyclic_edge_connectivity(k);
        if (cec != kInfinity && cec < 4)
            throw std::invalid_argument(
                "compose_three_join_maps: K must be cyclically 4-edge-connected");
    }
    if (!has_ordered_star_transitivity(k))
        throw std::invalid_argument("compose_three_join_maps: K must be ordered-star-transitive");
    if (!verify_cc(g1, k, f1) || !verify_cc(g2, k, f2))
        throw std::invalid_argument("compose_three_join_maps: factor maps must be cycle-continuous");

    // star edges of the deleted vertices, matched in order
    auto star1 = g1.vertex_star(u1);
    auto star2 = g2.vertex_star(u2);
    std::array<EdgeId, 3> s1, s2;
    for (int i = 0; i < 3; ++i) {
        s1[i] = star1[i];
        s2[i] = star2[matching[i]];
    }
    // find the ordered-star automorphism aligning the images
    const Automorphism* align = nullptr;
    auto auts = automorphisms(k);
    for (const auto& a : auts) {
        bool ok = true;
        for (int i = 0; i < 3; ++i) ok = ok && a.edge_perm[f2.map[s2[i]]] == f1.map[s1[i]];
        if (ok) {
            align = &a;
            break;
        }
    }
    if (!align)
        throw std::logic_error(
            "compose_three_join_maps: no automorphism aligns the star images");

    std::vector<EdgeId> out(join.graph.edge_count(), -1);
    for (EdgeId e = 0; e < g1.edge_count(); ++e) out[join.inclusion1.map[e]] = f1.map[e];
    for (EdgeId e = 0; e < g2.edge_count(); ++e) {
        EdgeId img = align->edge_perm[f2.map[e]];
        EdgeId slot = join.inclusion2.map[e];
        if (out[slot] >= 0 && out[slot] != img)
            throw std::logic_error("compose_three_join_maps: inconsistent connecting images");
        out[slot] = img;
    }
    EdgeMapping glued(join.graph, k, std::move(out));
    if (!verify_cc(join.graph, k, glued))
        throw std::logic_error("compose_three_join_maps: glued map failed verification");
    return glued;
}

}  // namespace ccg
