#pragma once

// Edge mappings and the two cycle-continuity verifiers: the primal one
// pulls back a cycle basis of the target, the dual one pushes forward
// elementary vertex cuts of the source.

#include <optional>

#include "ccgraph/gf2.hpp"
#include "ccgraph/graph.hpp"

namespace ccg {

struct EdgeMapping {
    std::uint64_t source_id = 0;
    std::uint64_t target_id = 0;
    std::vector<EdgeId> map;  // source edge id -> target edge id

    EdgeMapping() = default;
    EdgeMapping(const MultiGraph& g, const MultiGraph& h, std::vector<EdgeId> m)
        : source_id(g.id()), target_id(h.id()), map(std::move(m)) {}

    static EdgeMapping identity(const MultiGraph& g) {
        std::vector<EdgeId> m(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) m[e] = e;
        return EdgeMapping(g, g, std::move(m));
    }

    void check_against(const MultiGraph& g, const MultiGraph& h) const {
        if (static_cast<int>(map.size()) != g.edge_count())
            throw std::invalid_argument("mapping domain size mismatch");
        for (EdgeId t : map)
            if (t < 0 || t >= h.edge_count())
                throw std::invalid_argument("mapping image out of range");
    }
};

inline EdgeMapping compose(const MultiGraph& g, const MultiGraph& h, const MultiGraph& k,
                           const EdgeMapping& second, const EdgeMapping& first) {
    first.check_against(g, h);
    second.check_against(h, k);
    std::vector<EdgeId> m(first.map.size());
    for (size_t e = 0; e < m.size(); ++e) m[e] = second.map[first.map[e]];
    return EdgeMapping(g, k, std::move(m));
}

enum class VerifyMode { primal, dual, both };

// Odd-image of an edge set: target edges hit an odd number of times.
inline EdgeSet odd_image(const MultiGraph& h, const EdgeMapping& f, const std::vector<EdgeId>& src) {
    EdgeSet out(h);
    for (EdgeId e : src) out.flip(f.map[e]);
    return out;
}

inline bool verify_cc(const MultiGraph& g, const MultiGraph& h, const EdgeMapping& f,
                      VerifyMode mode = VerifyMode::both) {
    f.check_against(g, h);
    auto primal = [&] {
        Gf2Basis cycles = cycle_space_basis(h);
        for (const EdgeSet& c : cycles.rows()) {
            EdgeSet pre(g);
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (c.test(f.map[e])) pre.set(e);
            if (!is_cycle(g, pre)) return false;
        }
        return true;
    };
    auto dual = [&] {
        Gf2Basis cuts = cut_space_basis(h);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!cuts.contains(odd_image(h, f, g.vertex_star(v)))) return false;
        return true;
    };
    switch (mode) {
        case VerifyMode::primal: return primal();
        case VerifyMode::dual: return dual();
        case VerifyMode::both: {
            bool p = primal(), d = dual();
            if (p != d) throw std::logic_error("primal/dual verifier disagreement");
            return p;
        }
    }
    return false;
}

// If every source star maps bijectively onto the star of a single target
// vertex, return that vertex map.
inline std::optional<std::vector<Vertex>> is_vertex_local(const MultiGraph& g,
                                                          const MultiGraph& h,
                                                          const EdgeMapping& f) {
    f.check_against(g, h);
    std::vector<Vertex> vmap(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<EdgeId> star = g.incident(v);
        std::vector<EdgeId> image;
        image.reserve(star.size());
        for (EdgeId e : star) image.push_back(f.map[e]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
            // a loop's two incidences land on the same target edge; that is
            // only star-bijective if the image edge is a loop as well
            bool ok = true;
            for (size_t i = 0; i + 1 < image.size(); ++i)
                if (image[i] == image[i + 1]) {
                    if (!h.edge(image[i]).is_loop()) ok = false;
                    ++i;
                }
            if (!ok) return std::nullopt;
        }
        bool found = false;
        for (Vertex w = 0; w < h.vertex_count() && !found; ++w) {
            std::vector<EdgeId> tstar = h.incident(w);
            std::sort(tstar.begin(), tstar.end());
            if (tstar == image) {
                vmap[v] = w;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return vmap;
}

}  // namespace ccg
