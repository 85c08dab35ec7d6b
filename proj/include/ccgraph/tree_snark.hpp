#pragma once

// Tree-of-snarks construction: replace each vertex of a colored tree by a
// gadget snark and 3-join along every tree edge through specified
// attachment vertices and edge orderings. Also the two concrete families
// built on it: the antichain members H_n and the directed-path graphs.

#include <array>
#include <map>
#include <string>

#include "ccgraph/automorphism.hpp"
#include "ccgraph/graph.hpp"
#include "ccgraph/mapping.hpp"
#include "ccgraph/named.hpp"
#include "ccgraph/structure.hpp"

namespace ccg {

struct TreeTemplate {
    MultiGraph tree;                  // connected and acyclic
    std::vector<int> colors;          // tree vertex -> gadget index
    std::vector<MultiGraph> gadgets;  // the family G
    // attachments[v][u] = attachment vertex r_v(u) in gadget colors[v]
    std::vector<std::map<Vertex, Vertex>> attachments;
    // orderings[v][u] = the ordering of the three edges at r_v(u)
    std::vector<std::map<Vertex, std::array<EdgeId, 3>>> orderings;

    void validate() const {
        int n = tree.vertex_count();
        if (!is_connected(tree) || tree.edge_count() != n - 1)
            throw std::invalid_argument("tree template: not a tree");
        if (static_cast<int>(colors.size()) != n ||
            static_cast<int>(attachments.size()) != n ||
            static_cast<int>(orderings.size()) != n)
            throw std::invalid_argument("tree template: per-vertex data size mismatch");
        for (Vertex v = 0; v < n; ++v) {
            if (colors[v] < 0 || colors[v] >= static_cast<int>(gadgets.size()))
                throw std::invalid_argument("tree template: color out of range");
            const MultiGraph& gad = gadgets[colors[v]];
            auto nbs = tree.neighbors(v);
            if (attachments[v].size() != nbs.size())
                throw std::invalid_argument("tree template: attachment bijection arity mismatch");
            std::vector<Vertex> att;
            for (Vertex u : nbs) {
                auto it = attachments[v].find(u);
                if (it == attachments[v].end())
                    throw std::invalid_argument("tree template: missing attachment for a neighbor");
                Vertex w = it->second;
                gad.check_vertex(w);
                if (gad.degree(w) != 3 || gad.vertex_star(w).size() != 3)
                    throw std::invalid_argument("tree template: attachment vertex must have degree 3");
                att.push_back(w);
            }
            std::sort(att.begin(), att.end());
            if (std::adjacent_find(att.begin(), att.end()) != att.end())
                throw std::invalid_argument("tree template: attachment map not injective");
            for (size_t i = 0; i < att.size(); ++i)
                for (size_t j = i + 1; j < att.size(); ++j)
                    if (gad.multiplicity(att[i], att[j]) > 0)
                        throw std::invalid_argument("tree template: A_v must be independent");
            for (Vertex u : nbs) {
                auto it = orderings[v].find(u);
                if (it == orderings[v].end())
                    throw std::invalid_argument("tree template: missing edge ordering");
                auto star = gad.vertex_star(attachments[v].at(u));
                std::sort(star.begin(), star.end());
                auto ord = it->second;
                std::sort(ord.begin(), ord.end());
                if (star != std::vector<EdgeId>(ord.begin(), ord.end()))
                    throw std::invalid_argument(
                        "tree template: edge ordering is not a permutation of the star");
            }
        }
    }
};

struct EdgeProvenance {
    enum class Kind { copy, connector } kind;
    Vertex tree_vertex = -1;  // copy: the owning copy
    EdgeId gadget_edge = -1;  // copy: the gadget edge behind it
    EdgeId tree_edge = -1;    // connector: the tree edge id
    int index = -1;           // connector: which of the three (0..2)
};

struct TreeSnarkGraph {
    TreeTemplate tmpl;
    MultiGraph graph;
    std::vector<EdgeProvenance> provenance;        // per edge of graph
    std::vector<EdgeMapping> iota;                 // per tree vertex
    std::vector<std::array<EdgeId, 3>> connecting; // per tree edge

    const MultiGraph& gadget_of(Vertex tree_v) const {
        return tmpl.gadgets[tmpl.colors[tree_v]];
    }

    // Edge set of the copy H_v: its internal edges plus the connecting
    // triples of incident tree edges (the range of iota_v).
    std::vector<bool> copy_edges(Vertex tree_v) const {
        std::vector<bool> in(graph.edge_count(), false);
        for (EdgeId e : iota[tree_v].map) in[e] = true;
        return in;
    }
};

inline TreeSnarkGraph tree_snark(const TreeTemplate& tmpl) {
    tmpl.validate();
    int tn = tmpl.tree.vertex_count();
    // global vertex numbering: copies in tree-vertex order, attachment
    // vertices dropped
    std::vector<std::vector<Vertex>> vmap(tn);
    int nv = 0;
    for (Vertex v = 0; v < tn; ++v) {
        const MultiGraph& gad = tmpl.gadgets[tmpl.colors[v]];
        std::vector<bool> is_att(gad.vertex_count(), false);
        for (auto& [u, w] : tmpl.attachments[v]) is_att[w] = true;
        vmap[v].assign(gad.vertex_count(), -1);
        for (Vertex w = 0; w < gad.vertex_count(); ++w)
            if (!is_att[w]) vmap[v][w] = nv++;
    }

    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<EdgeProvenance> prov;
    std::vector<std::vector<EdgeId>> iota_maps(tn);
    for (Vertex v = 0; v < tn; ++v)
        iota_maps[v].assign(tmpl.gadgets[tmpl.colors[v]].edge_count(), -1);

    // internal edges, per copy in gadget edge order
    for (Vertex v = 0; v < tn; ++v) {
        const MultiGraph& gad = tmpl.gadgets[tmpl.colors[v]];
        for (EdgeId e = 0; e < gad.edge_count(); ++e) {
            Vertex a = gad.edge(e).u, b = gad.edge(e).v;
            if (vmap[v][a] < 0 || vmap[v][b] < 0) continue;
            iota_maps[v][e] = static_cast<EdgeId>(es.size());
            prov.push_back({EdgeProvenance::Kind::copy, v, e, -1, -1});
            es.emplace_back(vmap[v][a], vmap[v][b]);
        }
    }
    // connecting triples, per tree edge
    std::vector<std::array<EdgeId, 3>> connecting(tmpl.tree.edge_count());
    for (EdgeId te = 0; te < tmpl.tree.edge_count(); ++te) {
        Vertex u = tmpl.tree.edge(te).u, v = tmpl.tree.edge(te).v;
        const MultiGraph& gu = tmpl.gadgets[tmpl.colors[u]];
        const MultiGraph& gv = tmpl.gadgets[tmpl.colors[v]];
        Vertex wu = tmpl.attachments[u].at(v), wv = tmpl.attachments[v].at(u);
        const auto& ord_u = tmpl.orderings[u].at(v);
        const auto& ord_v = tmpl.orderings[v].at(u);
        for (int k = 0; k < 3; ++k) {
            Vertex pu = gu.edge(ord_u[k]).other(wu);
            Vertex pv = gv.edge(ord_v[k]).other(wv);
            connecting[te][k] = static_cast<EdgeId>(es.size());
            iota_maps[u][ord_u[k]] = connecting[te][k];
            iota_maps[v][ord_v[k]] = connecting[te][k];
            prov.push_back({EdgeProvenance::Kind::connector, -1, -1, te, k});
            es.emplace_back(vmap[u][pu], vmap[v][pv]);
        }
    }

    TreeSnarkGraph out{tmpl, MultiGraph(nv, std::move(es)), std::move(prov), {}, std::move(connecting)};
    for (Vertex v = 0; v < tn; ++v)
        out.iota.push_back(
            EdgeMapping(tmpl.gadgets[tmpl.colors[v]], out.graph, std::move(iota_maps[v])));
    return out;
}

// Contract every edge outside H_v; the result is an isomorphic copy of
// the gadget behind v.
inline MultiGraph bar_copy(const TreeSnarkGraph& h, Vertex tree_v) {
    h.tmpl.tree.check_vertex(tree_v);
    std::vector<bool> keep = h.copy_edges(tree_v);
    MultiGraph cur = h.graph;
    bool done = false;
    while (!done) {
        done = true;
        for (EdgeId e = 0; e < cur.edge_count(); ++e) {
            if (keep[e]) continue;
            auto [next, tr] = contract_edge(cur, e);
            std::vector<bool> nkeep(next.edge_count(), false);
            for (EdgeId i = 0; i < cur.edge_count(); ++i)
                if (auto ni = tr.map_edge(i)) nkeep[*ni] = keep[i];
            cur = std::move(next);
            keep = std::move(nkeep);
            done = false;
            break;
        }
    }
    return cur;
}

// The distinguished vertices of the second Blanusa snark: b is the
// lowest vertex on an edge contained in no 5-cycle, a the lowest vertex
// touching no such edge and nonadjacent to b.
inline std::pair<Vertex, Vertex> select_ab(const MultiGraph& g) {
    int m = g.edge_count();
    std::vector<bool> in_5cycle(m, false);
    for (EdgeId e = 0; e < m; ++e) {
        // a 5-cycle through e = a simple 4-edge path between its endpoints
        Vertex s = g.edge(e).u, t = g.edge(e).v;
        if (s == t) continue;
        std::vector<bool> used(g.vertex_count(), false);
        used[s] = true;
        auto dfs = [&](auto&& self, Vertex v, int len) -> bool {
            if (len == 4) return v == t;
            for (EdgeId f : g.incident(v)) {
                if (f == e || g.edge(f).is_loop()) continue;
                Vertex w = g.edge(f).other(v);
                if (used[w] || (w == t && len < 3)) continue;
                used[w] = true;
                if (self(self, w, len + 1)) {
                    used[w] = false;
                    return true;
                }
                used[w] = false;
            }
            return false;
        };
        in_5cycle[e] = dfs(dfs, s, 0);
    }
    Vertex b = -1;
    for (Vertex v = 0; v < g.vertex_count() && b < 0; ++v)
        for (EdgeId e : g.incident(v))
            if (!g.edge(e).is_loop() && !in_5cycle[e]) {
                b = v;
                break;
            }
    if (b < 0) throw std::runtime_error("select_ab: every edge lies in a 5-cycle");
    Vertex a = -1;
    for (Vertex v = 0; v < g.vertex_count() && a < 0; ++v) {
        if (v == b || g.multiplicity(v, b) > 0) continue;
        bool clean = true;
        for (EdgeId e : g.incident(v))
            if (!g.edge(e).is_loop() && !in_5cycle[e]) clean = false;
        if (clean) a = v;
    }
    if (a < 0) throw std::runtime_error("select_ab: no vertex avoids all non-5-cycle edges");
    return {a, b};
}

namespace detail {

inline std::array<EdgeId, 3> star_in_id_order(const MultiGraph& g, Vertex v) {
    auto star = g.vertex_star(v);
    if (star.size() != 3) throw std::invalid_argument("expected a degree-3 vertex");
    std::sort(star.begin(), star.end());
    return {star[0], star[1], star[2]};
}

inline MultiGraph path_tree(int vertices) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i + 1 < vertices; ++i) es.emplace_back(i, i + 1);
    return MultiGraph(vertices, std::move(es));
}

}  // namespace detail

// H_n: path 0..n colored B1 (2)^(n-1) B1; interior copies attach a toward
// the lower neighbor and b toward the higher one. Endpoint attachments
// and all edge orderings are the lowest-index deterministic choices.
inline TreeSnarkGraph antichain_member(int n) {
    if (n < 1) throw std::invalid_argument("antichain_member: n must be >= 1");
    TreeTemplate t;
    t.gadgets = {blanusa1_graph(), blanusa2_graph()};
    auto [a, b] = select_ab(t.gadgets[1]);
    t.tree = detail::path_tree(n + 1);
    t.colors.assign(n + 1, 1);
    t.colors[0] = t.colors[n] = 0;
    t.attachments.resize(n + 1);
    t.orderings.resize(n + 1);
    t.attachments[0][1] = 0;  // lowest-index vertex of B1
    t.attachments[n][n - 1] = 0;
    for (int v = 1; v < n; ++v) {
        t.attachments[v][v - 1] = a;
        t.attachments[v][v + 1] = b;
    }
    for (int v = 0; v <= n; ++v)
        for (auto& [u, w] : t.attachments[v])
            t.orderings[v][u] = detail::star_in_id_order(t.gadgets[t.colors[v]], w);
    return tree_snark(t);
}

// A directed path as a word over {F, B}: edge i of the underlying path
// 0..m runs forward (F) or backward (B).
struct DirectedPath {
    std::string word;

    DirectedPath() = default;
    explicit DirectedPath(std::string w) : word(std::move(w)) {
        if (word.empty()) throw std::invalid_argument("directed path: empty word");
        for (char c : word)
            if (c != 'F' && c != 'B') throw std::invalid_argument("directed path: word over {F,B}");
    }
    int edge_count() const { return static_cast<int>(word.size()); }
    int vertex_count() const { return edge_count() + 1; }
    // directed edge i as (tail vertex, head vertex)
    std::pair<int, int> arc(int i) const {
        return word[i] == 'F' ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i);
    }
};

// m(P): one B2 copy per path edge, 3-joined between adjacent edges, with
// a on the tail side and b on the head side; edge orderings at a and b
// are fixed globally (increasing edge id).
inline TreeSnarkGraph poset_path_graph(const DirectedPath& p) {
    int m = p.edge_count();
    TreeTemplate t;
    t.gadgets = {blanusa2_graph()};
    auto [a, b] = select_ab(t.gadgets[0]);
    auto ord_a = detail::star_in_id_order(t.gadgets[0], a);
    auto ord_b = detail::star_in_id_order(t.gadgets[0], b);
    t.tree = detail::path_tree(m);
    t.colors.assign(m, 0);
    t.attachments.resize(m);
    t.orderings.resize(m);
    for (int i = 0; i < m; ++i) {
        auto [tail, head] = p.arc(i);  // tail/head vertex of edge i
        // neighbor copy i-1 sits on the side of path vertex i; copy i+1 on
        // the side of path vertex i+1
        if (i > 0) {
            Vertex att = (tail == i) ? a : b;
            t.attachments[i][i - 1] = att;
            t.orderings[i][i - 1] = att == a ? ord_a : ord_b;
        }
        if (i + 1 < m) {
            Vertex att = (tail == i + 1) ? a : b;
            t.attachments[i][i + 1] = att;
            t.orderings[i][i + 1] = att == a ? ord_a : ord_b;
        }
    }
    return tree_snark(t);
}

// All vertex maps V(P) -> V(P') preserving directed edges.
inline std::vector<std::vector<int>> path_hom_enumerate(const DirectedPath& p,
                                                        const DirectedPath& q) {
    // arcs of q indexed by unordered slot for O(1) lookup
    auto q_arc_ok = [&](int u, int v) {
        if (std::abs(u - v) != 1) return false;
        int i = std::min(u, v);
        return q.arc(i) == std::make_pair(u, v);
    };
    std::vector<std::vector<int>> out;
    std::vector<int> f(p.vertex_count());
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == p.vertex_count()) {
            out.push_back(f);
            return;
        }
        for (int w = 0; w < q.vertex_count(); ++w) {
            if (pos > 0) {
                auto [tl, hd] = p.arc(pos - 1);
                int ftl = tl == pos ? w : f[tl];
                int fhd = hd == pos ? w : f[hd];
                if (!q_arc_ok(ftl, fhd)) continue;
            }
            f[pos] = w;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// The induced edge map on path edges: edge i of P goes to the edge of Q
// spanned by the images of its endpoints.
inline std::vector<int> hom_edge_action(const DirectedPath& p, const DirectedPath& q,
                                        const std::vector<int>& hom) {
    if (static_cast<int>(hom.size()) != p.vertex_count())
        throw std::invalid_argument("hom arity mismatch");
    std::vector<int> edge_map(p.edge_count());
    for (int i = 0; i < p.edge_count(); ++i) {
        auto [tl, hd] = p.arc(i);
        int u = hom[tl], v = hom[hd];
        if (std::abs(u - v) != 1 || q.arc(std::min(u, v)) != std::make_pair(u, v))
            throw std::invalid_argument("not a homomorphism of directed paths");
        edge_map[i] = std::min(u, v);
    }
    return edge_map;
}

// m(f): glue per-copy identity isomorphisms along the homomorphism.
// Every source edge is written through some iota_i and read back through
// iota'_{f(i)}; connecting edges are defined twice and must agree.
inline EdgeMapping induced_cc_from_hom(const std::vector<int>& hom, const DirectedPath& p,
                                       const DirectedPath& q, const TreeSnarkGraph& hp,
                                       const TreeSnarkGraph& hq) {
    std::vector<int> edge_map = hom_edge_action(p, q, hom);
    int msrc = hp.graph.edge_count();
    std::vector<EdgeId> out(msrc, -1);
    for (int i = 0; i < p.edge_count(); ++i) {
        const auto& src_iota = hp.iota[i].map;
        const auto& tgt_iota = hq.iota[edge_map[i]].map;
        for (size_t ge = 0; ge < src_iota.size(); ++ge) {
            EdgeId e = src_iota[ge];
            EdgeId img = tgt_iota[ge];
            if (out[e] >= 0 && out[e] != img)
                throw std::invalid_argument(
                    "induced_cc_from_hom: inconsistent gluing (not a homomorphism?)");
            out[e] = img;
        }
    }
    return EdgeMapping(hp.graph, hq.graph, std::move(out));
}

// Recover the guiding tree homomorphism of a cc mapping between two
// tree-snark graphs: each copy of H1 must land inside a single copy of
// H2 of the same color, and tree edges must map to tree edges or
// collapse.
inline std::vector<Vertex> extract_guiding_hom(const TreeSnarkGraph& h1, const TreeSnarkGraph& h2,
                                               const EdgeMapping& g) {
    g.check_against(h1.graph, h2.graph);
    if (!verify_cc(h1.graph, h2.graph, g))
        throw std::invalid_argument("extract_guiding_hom: mapping is not cycle-continuous");
    int t1 = h1.tmpl.tree.vertex_count();
    int t2 = h2.tmpl.tree.vertex_count();
    std::vector<Vertex> f(t1, -1);
    for (Vertex v = 0; v < t1; ++v) {
        std::vector<Vertex> hits;
        for (Vertex w = 0; w < t2; ++w) {
            auto in = h2.copy_edges(w);
            bool contained = true;
            for (EdgeId e : h1.iota[v].map)
                if (!in[g.map[e]]) contained = false;
            if (contained) hits.push_back(w);
        }
        if (hits.size() != 1)
            throw std::logic_error("extract_guiding_hom: image not contained in a unique copy");
        f[v] = hits.front();
        if (h2.tmpl.colors[f[v]] != h1.tmpl.colors[v])
            throw std::logic_error("extract_guiding_hom: guiding map does not respect colors");
    }
    for (EdgeId te = 0; te < h1.tmpl.tree.edge_count(); ++te) {
        Vertex u = h1.tmpl.tree.edge(te).u, v = h1.tmpl.tree.edge(te).v;
        if (f[u] != f[v] && h2.tmpl.tree.multiplicity(f[u], f[v]) == 0)
            throw std::logic_error("extract_guiding_hom: tree edge neither collapses nor maps");
    }
    return f;
}

}  // namespace ccg
