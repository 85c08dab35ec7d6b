#pragma once

// Exhaustive search for cycle-continuous mappings. Source edges are
// assigned in a vertex-driven static order; whenever a vertex star
// becomes fully assigned its odd-image is checked against the target's
// cut space (sufficient by cut-cycle duality). For cubic source stars
// and bridgeless targets the images are constrained to all-distinct
// 3-edge cuts, with pair-completion tables for early pruning.

#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "ccgraph/gf2.hpp"
#include "ccgraph/mapping.hpp"
#include "ccgraph/structure.hpp"

namespace ccg {

enum class SearchMode { first, all, count };
enum class PruneProfile { general, star_local };

struct SearchConfig {
    SearchMode mode = SearchMode::all;
    double budget_secs = 1e18;
    long long node_budget = -1;  // -1: unlimited
    int workers = 1;
    PruneProfile profile = PruneProfile::general;
};

enum class SearchStatus { complete, budget_exhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::complete;
    std::vector<EdgeMapping> mappings;  // first/all modes
    long long count = 0;               // complete mappings seen
    long long nodes = 0;
    double wall_secs = 0.0;
};

namespace detail {

struct SearchTables {
    Gf2Basis target_cuts;
    bool target_bridgeless = false;
    // admissible all-distinct weight-3 cuts, as sorted triples
    std::set<std::array<EdgeId, 3>> triples;
    std::map<std::pair<EdgeId, EdgeId>, std::vector<EdgeId>> pair_completions;
    std::vector<bool> in_some_triple;
};

struct SearchPlan {
    std::vector<EdgeId> order;            // assignment order of source edges
    std::vector<int> position_of;         // edge -> position
    // per position: stars of the edge's endpoints, with bookkeeping
    struct StarHook {
        Vertex v;
        int assigned_before;  // star edges already assigned before this position
        int star_size;
        std::vector<EdgeId> star;  // full delta(v)
    };
    std::vector<std::vector<StarHook>> hooks;  // per position
};

inline SearchPlan make_plan(const MultiGraph& g) {
    SearchPlan plan;
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<bool> edge_ordered(m, false);
    std::vector<bool> vertex_done(n, false);
    plan.position_of.assign(m, -1);
    auto append_edge = [&](EdgeId e) {
        plan.position_of[e] = static_cast<int>(plan.order.size());
        plan.order.push_back(e);
        edge_ordered[e] = true;
    };
    for (int round = 0; round < n; ++round) {
        Vertex best = -1;
        int best_score = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (vertex_done[v]) continue;
            int score = 0;
            for (EdgeId e : g.vertex_star(v))
                if (edge_ordered[e]) ++score;
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        vertex_done[best] = true;
        for (EdgeId e : g.vertex_star(best))
            if (!edge_ordered[e]) append_edge(e);
    }
    for (EdgeId e = 0; e < m; ++e)  // loops are unconstrained; they go last
        if (!edge_ordered[e]) append_edge(e);

    plan.hooks.assign(plan.order.size(), {});
    for (Vertex v = 0; v < n; ++v) {
        std::vector<EdgeId> star = g.vertex_star(v);
        if (star.empty()) continue;
        std::vector<int> pos;
        for (EdgeId e : star) pos.push_back(plan.position_of[e]);
        std::sort(pos.begin(), pos.end());
        for (size_t i = 0; i < pos.size(); ++i)
            plan.hooks[pos[i]].push_back(
                {v, static_cast<int>(i), static_cast<int>(star.size()), star});
    }
    return plan;
}

inline SearchTables make_tables(const MultiGraph& g, const MultiGraph& h, PruneProfile profile) {
    SearchTables t;
    t.target_cuts = cut_space_basis(h);
    t.target_bridgeless = is_bridgeless(h);
    if (!t.target_bridgeless) {
        if (profile == PruneProfile::star_local)
            throw std::invalid_argument("star-local profile needs a bridgeless target");
        return t;
    }
    bool has_cubic_star = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_star(v).size() == 3) has_cubic_star = true;
    if (!has_cubic_star && profile != PruneProfile::star_local) return t;

    for (const EdgeSet& s : enumerate_small_cut_vectors(h, 3)) {
        if (s.weight() != 3) continue;
        auto mem = s.members();
        t.triples.insert({mem[0], mem[1], mem[2]});
    }
    if (profile == PruneProfile::star_local) {
        // soundness of the star-local restriction: every weight-3 cut
        // must be a vertex star (holds when the target is cyclically
        // 4-edge-connected)
        for (const auto& tri : t.triples) {
            bool is_star = false;
            for (Vertex w = 0; w < h.vertex_count() && !is_star; ++w) {
                auto st = h.vertex_star(w);
                std::sort(st.begin(), st.end());
                is_star = st.size() == 3 && st[0] == tri[0] && st[1] == tri[1] && st[2] == tri[2];
            }
            if (!is_star)
                throw std::invalid_argument(
                    "star-local profile unsound: target has a non-star 3-edge cut");
        }
    }
    t.in_some_triple.assign(h.edge_count(), false);
    for (const auto& tri : t.triples)
        for (EdgeId e : tri) t.in_some_triple[e] = true;
    for (const auto& tri : t.triples) {
        t.pair_completions[{tri[0], tri[1]}].push_back(tri[2]);
        t.pair_completions[{tri[0], tri[2]}].push_back(tri[1]);
        t.pair_completions[{tri[1], tri[2]}].push_back(tri[0]);
    }
    return t;
}

struct WorkerResult {
    SearchStatus status = SearchStatus::complete;
    std::vector<std::vector<EdgeId>> maps;
    long long count = 0;
    long long nodes = 0;
};

class SearchWorker {
public:
    SearchWorker(const MultiGraph& g, const MultiGraph& h, const SearchPlan& plan,
                 const SearchTables& tables, const SearchConfig& cfg,
                 std::chrono::steady_clock::time_point deadline)
        : g_(g), h_(h), plan_(plan), tables_(tables), cfg_(cfg), deadline_(deadline),
          assign_(g.edge_count(), -1) {}

    // first_lo/first_hi/first_step select this worker's share of the top
    // level candidate domain.
    WorkerResult run(int first_lo, int first_step) {
        first_lo_ = first_lo;
        first_step_ = first_step;
        descend(0);
        return std::move(result_);
    }

private:
    bool out_of_budget() {
        if (cfg_.node_budget >= 0 && result_.nodes > cfg_.node_budget) return true;
        if ((result_.nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
            return true;
        return false;
    }

    // true: abort the whole search (found-first or budget)
    bool descend(int pos) {
        if (pos == static_cast<int>(plan_.order.size())) {
            ++result_.count;
            if (cfg_.mode != SearchMode::count) result_.maps.push_back(assign_);
            return cfg_.mode == SearchMode::first;
        }
        EdgeId e = plan_.order[pos];
        int lo = pos == 0 ? first_lo_ : 0;
        int step = pos == 0 ? first_step_ : 1;
        for (EdgeId t = lo; t < h_.edge_count(); t += step) {
            ++result_.nodes;
            if (out_of_budget()) {
                result_.status = SearchStatus::budget_exhausted;
                return true;
            }
            if (!admissible(pos, e, t)) continue;
            assign_[e] = t;
            if (descend(pos + 1)) return true;
            assign_[e] = -1;
        }
        return false;
    }

    bool admissible(int pos, EdgeId e, EdgeId t) {
        const bool tables_active = tables_.target_bridgeless && !tables_.triples.empty();
        for (const auto& hook : plan_.hooks[pos]) {
            if (hook.star_size == 3 && tables_active) {
                if (hook.assigned_before == 0) {
                    if (!tables_.in_some_triple[t]) return false;
                } else if (hook.assigned_before == 1) {
                    EdgeId other = -1;
                    for (EdgeId s : hook.star)
                        if (s != e && assign_[s] >= 0) other = assign_[s];
                    if (other == t) return false;
                    auto key = std::minmax(other, t);
                    if (!tables_.pair_completions.count({key.first, key.second})) return false;
                } else {
                    std::array<EdgeId, 3> tri;
                    int i = 0;
                    for (EdgeId s : hook.star) tri[i++] = s == e ? t : assign_[s];
                    std::sort(tri.begin(), tri.end());
                    if (tri[0] == tri[1] || tri[1] == tri[2]) return false;
                    if (!tables_.triples.count(tri)) return false;
                }
            } else if (hook.star_size == 1 && tables_.target_bridgeless) {
                return false;  // a weight-1 odd-image is never a cut here
            } else if (hook.assigned_before == hook.star_size - 1) {
                EdgeSet odd(h_);
                for (EdgeId s : hook.star) odd.flip(s == e ? t : assign_[s]);
                if (!tables_.target_cuts.contains(odd)) return false;
            }
        }
        return true;
    }

    const MultiGraph& g_;
    const MultiGraph& h_;
    const SearchPlan& plan_;
    const SearchTables& tables_;
    const SearchConfig& cfg_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<EdgeId> assign_;
    int first_lo_ = 0, first_step_ = 1;
    WorkerResult result_;
};

}  // namespace detail

inline SearchOutcome search_cc(const MultiGraph& g, const MultiGraph& h,
                               const SearchConfig& cfg = {}) {
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(std::min(cfg.budget_secs, 1e9)));
    detail::SearchPlan plan = detail::make_plan(g);
    detail::SearchTables tables = detail::make_tables(g, h, cfg.profile);

    SearchOutcome out;
    if (g.edge_count() == 0) {
        out.count = 1;
        if (cfg.mode != SearchMode::count) out.mappings.push_back(EdgeMapping(g, h, {}));
        out.wall_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }

    int workers = std::max(1, std::min(cfg.workers, h.edge_count()));
    std::vector<detail::WorkerResult> results(workers);
    if (workers == 1) {
        detail::SearchWorker w(g, h, plan, tables, cfg, deadline);
        results[0] = w.run(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < workers; ++i)
            threads.emplace_back([&, i] {
                detail::SearchWorker w(g, h, plan, tables, cfg, deadline);
                results[i] = w.run(i, workers);
            });
        for (auto& th : threads) th.join();
    }

    for (auto& r : results) {
        out.nodes += r.nodes;
        out.count += r.count;
        if (r.status == SearchStatus::budget_exhausted) out.status = SearchStatus::budget_exhausted;
    }
    if (cfg.mode == SearchMode::first) {
        // deterministic across worker counts: the branch on the lowest
        // first-edge candidate wins, matching sequential traversal order
        const std::vector<EdgeId>* best = nullptr;
        EdgeId first_edge = plan.order[0];
        for (auto& r : results)
            for (auto& m : r.maps)
                if (!best || m[first_edge] < (*best)[first_edge]) best = &m;
        if (best) out.mappings.push_back(EdgeMapping(g, h, *best));
        out.count = std::min<long long>(out.count, 1);
    } else if (cfg.mode == SearchMode::all) {
        std::vector<std::vector<EdgeId>> all;
        for (auto& r : results)
            for (auto& m : r.maps) all.push_back(std::move(m));
        std::sort(all.begin(), all.end());
        for (auto& m : all) out.mappings.push_back(EdgeMapping(g, h, std::move(m)));
    }
    out.wall_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// Ground-truth oracle: every total function E(G) -> E(H), filtered by the
// full verifier. Results come out in lexicographic order.
inline std::vector<EdgeMapping> brute_force_cc(const MultiGraph& g, const MultiGraph& h,
                                               double bound = 1e8) {
    int mg = g.edge_count(), mh = h.edge_count();
    double total = 1;
    for (int i = 0; i < mg; ++i) {
        total *= mh;
        if (total > bound) throw std::invalid_argument("brute_force_cc: bound exceeded");
    }
    std::vector<EdgeMapping> out;
    std::vector<EdgeId> map(mg, 0);
    if (mg > 0 && mh == 0) return out;
    while (true) {
        EdgeMapping f(g, h, map);
        if (verify_cc(g, h, f, VerifyMode::both)) out.push_back(f);
        int i = mg - 1;
        while (i >= 0 && map[i] == mh - 1) map[i--] = 0;
        if (i < 0) break;
        ++map[i];
    }
    return out;
}

}  // namespace ccg
