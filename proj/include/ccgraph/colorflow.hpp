#pragma once

// 3-edge-coloring, 4-nowhere-zero-flow existence (two-cycle cover form),
// and the snark predicates. The three routes to "maps to K_2^3" are kept
// independent and cross-checked.

#include <optional>

#include "ccgraph/gf2.hpp"
#include "ccgraph/named.hpp"
#include "ccgraph/search.hpp"
#include "ccgraph/structure.hpp"

namespace ccg {

using EdgeColoring = std::vector<int>;  // edge id -> {0,1,2}

// Proper 3-edge-coloring of a cubic loopless graph, or nullopt.
// Plain backtracking over edges in an adjacency-first order.
inline std::optional<EdgeColoring> three_edge_coloring(const MultiGraph& g) {
    if (!g.is_cubic() || !g.is_loopless())
        throw std::invalid_argument("three_edge_coloring: graph must be cubic and loopless");
    int m = g.edge_count();
    // order edges so each one touches an already-colored edge when possible
    std::vector<EdgeId> order;
    std::vector<bool> ordered(m, false);
    for (EdgeId seed = 0; seed < m; ++seed) {
        if (ordered[seed]) continue;
        std::vector<EdgeId> stack{seed};
        ordered[seed] = true;
        while (!stack.empty()) {
            EdgeId e = stack.back();
            stack.pop_back();
            order.push_back(e);
            for (Vertex v : {g.edge(e).u, g.edge(e).v})
                for (EdgeId f : g.incident(v))
                    if (!ordered[f]) {
                        ordered[f] = true;
                        stack.push_back(f);
                    }
        }
    }
    EdgeColoring col(m, -1);
    auto conflict = [&](EdgeId e, int c) {
        for (Vertex v : {g.edge(e).u, g.edge(e).v})
            for (EdgeId f : g.incident(v))
                if (f != e && col[f] == c) return true;
        return false;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        EdgeId e = order[i];
        for (int c = 0; c < 3; ++c) {
            if (conflict(e, c)) continue;
            col[e] = c;
            if (self(self, i + 1)) return true;
            col[e] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return col;
}

// 4-NZF existence: two cycle-space members whose union covers E(G).
// C1 runs over the cycle space; for each, a covering C2 exists iff the
// linear system "contain E \ C1" is consistent.
inline bool four_nzf_exists(const MultiGraph& g, int dimension_guard = 22) {
    int m = g.edge_count();
    if (m == 0) return true;
    Gf2Basis cyc = cycle_space_basis(g);
    int dim = cyc.dimension();
    if (dim > dimension_guard)
        throw std::invalid_argument("four_nzf_exists: dimension guard exceeded");

    // covers(S): is there a cycle-space member containing every edge of S?
    // Gaussian elimination on the |S| x dim system over GF(2).
    auto covers = [&](const EdgeSet& s) {
        auto need = s.members();
        int rows = static_cast<int>(need.size());
        if (rows == 0) return true;
        // columns: basis vectors restricted to `need`, plus RHS of ones
        std::vector<std::uint64_t> mat(rows, 0);  // dim <= 22 bits + 1 rhs bit
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < dim; ++c)
                if (cyc.rows()[c].test(need[r])) mat[r] |= std::uint64_t{1} << c;
            mat[r] |= std::uint64_t{1} << dim;  // rhs
        }
        int rank_row = 0;
        for (int c = 0; c < dim && rank_row < rows; ++c) {
            int pivot = -1;
            for (int r = rank_row; r < rows; ++r)
                if (mat[r] >> c & 1) { pivot = r; break; }
            if (pivot < 0) continue;
            std::swap(mat[rank_row], mat[pivot]);
            for (int r = 0; r < rows; ++r)
                if (r != rank_row && (mat[r] >> c & 1)) mat[r] ^= mat[rank_row];
            ++rank_row;
        }
        for (int r = rank_row; r < rows; ++r)
            if (mat[r]) return false;  // 0 = 1 row
        return true;
    };

    EdgeSet all(g);
    for (EdgeId e = 0; e < m; ++e) all.set(e);
    // enumerate C1 by Gray code over basis coefficients
    EdgeSet c1(g);
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << dim); ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        std::uint64_t delta = gray ^ prev;
        prev = gray;
        if (delta) c1 ^= cyc.rows()[__builtin_ctzll(delta)];
        EdgeSet rest = all ^ c1;
        EdgeSet needed(g);
        for (EdgeId e : rest.members())
            if (!c1.test(e)) needed.set(e);
        if (covers(needed)) return true;
    }
    return false;
}

// Does G admit a cycle-continuous mapping to K_2^3? Computed by every
// applicable route (4-NZF, 3-edge-coloring after suppression, direct
// search); the routes must agree.
inline bool cc_to_k23_exists(const MultiGraph& g) {
    std::vector<std::pair<const char*, bool>> verdicts;

    bool nzf_applicable = true;
    try {
        verdicts.emplace_back("four_nzf", four_nzf_exists(g));
    } catch (const std::invalid_argument&) {
        nzf_applicable = false;
    }

    // coloring route: valid when suppression yields a cubic loopless graph
    // with the same cycle structure (subdivision argument)
    {
        auto [sup, tr] = suppress_degree_two(g);
        bool no_isolated = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) no_isolated = false;
        if (no_isolated && sup.vertex_count() > 0 && sup.is_cubic() && sup.is_loopless())
            verdicts.emplace_back("coloring", three_edge_coloring(sup).has_value());
    }

    {
        MultiGraph k23 = k2_3_graph();
        SearchConfig cfg;
        cfg.mode = SearchMode::first;
        SearchOutcome out = search_cc(g, k23, cfg);
        if (out.status != SearchStatus::complete)
            throw std::runtime_error("cc_to_k23_exists: search budget exhausted");
        verdicts.emplace_back("search", !out.mappings.empty());
    }

    if (verdicts.empty()) throw std::runtime_error("cc_to_k23_exists: no applicable route");
    for (auto& [name, v] : verdicts)
        if (v != verdicts.front().second)
            throw std::logic_error(std::string("cc_to_k23_exists: route disagreement at ") + name);
    return verdicts.front().second;
}

inline bool is_snark(const MultiGraph& g) {
    return g.is_cubic() && is_connected(g) && is_bridgeless(g) && !cc_to_k23_exists(g);
}

// Every edge deletion (and, cross-checked, every contraction) must yield
// a graph mapping to K_2^3.
inline bool is_critical_snark(const MultiGraph& g) {
    if (!is_snark(g)) throw std::invalid_argument("is_critical_snark: input is not a snark");
    bool critical = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool del = cc_to_k23_exists(delete_edge(g, e).first);
        bool con = cc_to_k23_exists(contract_edge(g, e).first);
        if (del != con)
            throw std::logic_error("is_critical_snark: deletion/contraction verdicts disagree");
        critical = critical && del;
    }
    return critical;
}

}  // namespace ccg
