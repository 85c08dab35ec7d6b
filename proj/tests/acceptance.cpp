// Acceptance suite: one pass/fail line per criterion. Criteria 1-10 must
// pass; criterion 11 is a long-horizon search that may honestly report
// inconclusive when its budget runs out, and reports FAIL with a printed
// witness if a verified mapping is found (see README on why that happens
// for the H_1/H_2 pair).

#include <doctest.h>

#include <cstdio>

#include "test_util.hpp"

using namespace ccg;

namespace {

void report(int criterion, const char* verdict) {
    std::printf("criterion %d: %s\n", criterion, verdict);
    std::fflush(stdout);
}

bool found_first(const MultiGraph& g, const MultiGraph& h, double budget, PruneProfile profile,
                 SearchStatus* status = nullptr) {
    SearchConfig cfg;
    cfg.mode = SearchMode::first;
    cfg.budget_secs = budget;
    cfg.workers = 4;
    cfg.profile = profile;
    SearchOutcome out = search_cc(g, h, cfg);
    if (status) *status = out.status;
    if (!out.mappings.empty() && !verify_cc(g, h, out.mappings[0]))
        throw std::logic_error("search produced a mapping that fails verification");
    return !out.mappings.empty();
}

}  // namespace

TEST_CASE("criterion 1: coloring / 4-NZF / K_2^3 search equivalence") {
    std::vector<MultiGraph> corpus;
    for (const char* name : {"k4", "prism", "k2_3", "petersen", "blanusa1", "blanusa2"})
        corpus.push_back(named_graph(name));
    MultiGraph k4 = k4_graph(), pt = petersen_graph(), b1 = blanusa1_graph();
    corpus.push_back(two_join(k4, 0, k4, 0).graph);
    corpus.push_back(two_join(pt, 0, k4, 0).graph);
    corpus.push_back(two_join(pt, 3, pt, 8).graph);
    corpus.push_back(three_join(k4, 0, k4, 0).graph);
    corpus.push_back(three_join(pt, 0, k4, 0).graph);
    corpus.push_back(three_join(pt, 0, pt, 0).graph);
    corpus.push_back(three_join(b1, 0, k4, 0).graph);
    std::mt19937 rng(41);
    for (int n : {8, 10, 12, 14, 16})
        for (int i = 0; i < 4; ++i) corpus.push_back(ccgtest::random_cubic_graph(rng, n));

    bool ok = corpus.size() >= 30;
    MultiGraph k23 = k2_3_graph();
    for (const MultiGraph& g : corpus) {
        if (g.vertex_count() > 20 || !g.is_cubic() || !g.is_loopless()) {
            ok = false;
            continue;
        }
        bool colorable = three_edge_coloring(g).has_value();
        bool nzf = four_nzf_exists(g);
        SearchConfig cfg;
        cfg.mode = SearchMode::first;
        SearchOutcome out = search_cc(g, k23, cfg);
        bool mapped = out.status == SearchStatus::complete && !out.mappings.empty();
        CHECK(colorable == nzf);
        CHECK(colorable == mapped);
        ok = ok && colorable == nzf && colorable == mapped;
    }
    report(1, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 2: primal/dual verifier duality on random mappings") {
    std::mt19937 rng(43);
    bool ok = true;
    int done = 0;
    while (done < 10000) {
        MultiGraph g = ccgtest::random_multigraph(rng, 6, 12);
        MultiGraph h = ccgtest::random_multigraph(rng, 6, 12);
        if (h.edge_count() == 0) continue;
        std::uniform_int_distribution<int> td(0, h.edge_count() - 1);
        std::vector<EdgeId> m(g.edge_count());
        for (auto& t : m) t = td(rng);
        EdgeMapping f(g, h, std::move(m));
        bool p = verify_cc(g, h, f, VerifyMode::primal);
        bool d = verify_cc(g, h, f, VerifyMode::dual);
        if (p != d) ok = false;
        ++done;
    }
    CHECK(done == 10000);
    report(2, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 3: search equals the brute-force oracle") {
    std::vector<MultiGraph> corpus;
    corpus.push_back(triangle_graph());
    corpus.push_back(k2_3_graph());
    corpus.push_back(build_graph(1, {{0, 0}}));
    corpus.push_back(build_graph(2, {{0, 1}}));
    std::mt19937 rng(47);
    while (corpus.size() < 14) corpus.push_back(ccgtest::random_multigraph(rng, 5, 5));

    bool ok = true;
    int pairs = 0;
    for (const MultiGraph& g : corpus)
        for (const MultiGraph& h : corpus) {
            double combos = 1;
            for (int i = 0; i < g.edge_count() && combos <= 1e6; ++i) combos *= h.edge_count();
            if (combos > 1e6) continue;
            auto expected = brute_force_cc(g, h);
            SearchConfig cfg;
            cfg.mode = SearchMode::all;
            SearchOutcome out = search_cc(g, h, cfg);
            bool same = out.status == SearchStatus::complete &&
                        out.mappings.size() == expected.size();
            if (same)
                for (size_t i = 0; i < expected.size(); ++i)
                    same = same && out.mappings[i].map == expected[i].map;
            CHECK(same);
            ok = ok && same;
            ++pairs;
        }
    CHECK(pairs > 0);
    report(3, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 4: Blanusa snark validation") {
    MultiGraph b1 = blanusa1_graph(), b2 = blanusa2_graph();
    bool ok = true;
    for (const MultiGraph* g : {&b1, &b2}) {
        ok = ok && g->is_cubic() && g->vertex_count() == 18 && g->edge_count() == 27;
        ok = ok && girth(*g) == 5;
        ok = ok && is_snark(*g);
        ok = ok && is_critical_snark(*g);
    }
    ok = ok && !is_isomorphic(b1, b2).has_value();
    auto [a, b] = select_ab(b2);
    ok = ok && a != b && b2.multiplicity(a, b) == 0;
    for (const Automorphism& w : automorphisms(b2))
        if (w.vertex_perm[a] == b) ok = false;
    report(4, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 5: Blanusa rigidity") {
    MultiGraph b1 = blanusa1_graph(), b2 = blanusa2_graph();
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    cfg.budget_secs = 600;
    cfg.workers = 4;
    cfg.profile = PruneProfile::star_local;

    bool ok = true;
    for (auto [src, tgt] : {std::pair<const MultiGraph*, const MultiGraph*>{&b1, &b2}, {&b2, &b1}}) {
        SearchOutcome out = search_cc(*src, *tgt, cfg);
        ok = ok && out.status == SearchStatus::complete && out.mappings.empty();
    }
    SearchOutcome self = search_cc(b1, b1, cfg);
    auto auts = automorphisms(b1);
    ok = ok && self.status == SearchStatus::complete;
    ok = ok && self.mappings.size() == auts.size();
    for (const EdgeMapping& f : self.mappings) {
        ok = ok && is_vertex_local(b1, b1, f).has_value();
        bool induced = false;
        for (const Automorphism& w : auts) induced = induced || w.edge_perm == f.map;
        ok = ok && induced;
    }
    report(5, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 6: natural inclusions are cycle-continuous") {
    std::mt19937 rng(53);
    bool ok = true;
    int constructions = 0;

    // contraction: E(G/e) -> E(G) by the identity on surviving edges
    for (int i = 0; i < 40; ++i) {
        MultiGraph g = ccgtest::random_multigraph(rng, 7, 10);
        std::vector<EdgeId> non_loops;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!g.edge(e).is_loop()) non_loops.push_back(e);
        if (non_loops.empty()) {
            --i;
            continue;
        }
        EdgeId e = non_loops[rng() % non_loops.size()];
        auto [h, tr] = contract_edge(g, e);
        std::vector<EdgeId> inc(h.edge_count(), -1);
        for (EdgeId old = 0; old < g.edge_count(); ++old)
            if (auto ni = tr.map_edge(old)) inc[*ni] = old;
        EdgeMapping f(h, g, std::move(inc));
        ok = ok && verify_cc(h, g, f);
        ++constructions;
    }

    // joins on random cubic factors
    for (int i = 0; i < 25; ++i) {
        MultiGraph g1 = ccgtest::random_cubic_graph(rng, 8);
        MultiGraph g2 = ccgtest::random_cubic_graph(rng, 10);
        TwoJoin tj = two_join(g1, rng() % g1.edge_count(), g2, rng() % g2.edge_count());
        ok = ok && verify_cc(g1, tj.graph, tj.inclusion1);
        ok = ok && verify_cc(g2, tj.graph, tj.inclusion2);
        ++constructions;
        std::array<int, 3> matchings[] = {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
        ThreeJoin hj = three_join(g1, rng() % g1.vertex_count(), g2, rng() % g2.vertex_count(),
                                  matchings[rng() % 3]);
        ok = ok && verify_cc(g1, hj.graph, hj.inclusion1);
        ok = ok && verify_cc(g2, hj.graph, hj.inclusion2);
        ++constructions;
    }

    // tree-snark inclusions over random path templates on Petersen gadgets
    for (int i = 0; i < 12; ++i) {
        int len = 2 + static_cast<int>(rng() % 2);  // 2 or 3 tree vertices
        TreeTemplate t;
        t.gadgets = {petersen_graph()};
        t.tree = MultiGraph(len, [&] {
            std::vector<std::pair<Vertex, Vertex>> es;
            for (int v = 0; v + 1 < len; ++v) es.emplace_back(v, v + 1);
            return es;
        }());
        t.colors.assign(len, 0);
        t.attachments.resize(len);
        t.orderings.resize(len);
        bool valid = true;
        for (int v = 0; v < len && valid; ++v) {
            std::vector<Vertex> picked;
            for (Vertex u : t.tree.neighbors(v)) {
                for (int tries = 0;; ++tries) {
                    if (tries > 50) {
                        valid = false;
                        break;
                    }
                    Vertex w = rng() % t.gadgets[0].vertex_count();
                    bool clash = false;
                    for (Vertex p : picked)
                        clash = clash || p == w || t.gadgets[0].multiplicity(p, w) > 0;
                    if (clash) continue;
                    picked.push_back(w);
                    t.attachments[v][u] = w;
                    auto star = detail::star_in_id_order(t.gadgets[0], w);
                    std::shuffle(star.begin(), star.end(), rng);
                    t.orderings[v][u] = star;
                    break;
                }
            }
        }
        if (!valid) {
            --i;
            continue;
        }
        TreeSnarkGraph h = tree_snark(t);
        for (int v = 0; v < len; ++v) ok = ok && verify_cc(h.gadget_of(v), h.graph, h.iota[v]);
        ++constructions;
    }

    CHECK(constructions >= 100);
    report(6, ok && constructions >= 100 ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 7: join projection onto K_2^3") {
    std::vector<MultiGraph> factors;
    for (const char* name : {"k4", "prism", "petersen", "blanusa1", "blanusa2"})
        factors.push_back(named_graph(name));
    MultiGraph k23 = k2_3_graph();
    std::vector<bool> maps_to_k23;
    for (const MultiGraph& g : factors) maps_to_k23.push_back(cc_to_k23_exists(g));

    bool ok = true;
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i; j < factors.size(); ++j) {
            const MultiGraph &g1 = factors[i], &g2 = factors[j];
            bool expect = maps_to_k23[i] && maps_to_k23[j];

            TwoJoin tj = two_join(g1, 0, g2, 0);
            bool two = found_first(tj.graph, k23, 300, PruneProfile::star_local);
            ok = ok && two == expect;

            ThreeJoin hj = three_join(g1, 0, g2, 0);
            bool three = found_first(hj.graph, k23, 300, PruneProfile::star_local);
            ok = ok && three == expect;

            if (maps_to_k23[i] && maps_to_k23[j]) {
                auto c1 = three_edge_coloring(g1), c2 = three_edge_coloring(g2);
                EdgeMapping f1(g1, k23, std::vector<EdgeId>(c1->begin(), c1->end()));
                EdgeMapping f2(g2, k23, std::vector<EdgeId>(c2->begin(), c2->end()));
                EdgeMapping glued2 = compose_two_join_maps(g1, 0, f1, g2, 0, f2, k23, tj);
                EdgeMapping glued3 = compose_three_join_maps(g1, 0, f1, g2, 0, f2, k23, hj);
                ok = ok && verify_cc(tj.graph, k23, glued2);
                ok = ok && verify_cc(hj.graph, k23, glued3);
            }
        }
    report(7, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 8: mappings onto the Petersen graph") {
    MultiGraph b1 = blanusa1_graph(), b2 = blanusa2_graph(), pt = petersen_graph();
    SearchConfig cfg;
    cfg.mode = SearchMode::first;
    cfg.budget_secs = 600;
    cfg.workers = 4;
    cfg.profile = PruneProfile::star_local;

    bool ok = true;
    SearchOutcome o1 = search_cc(b1, pt, cfg);
    SearchOutcome o2 = search_cc(b2, pt, cfg);
    ok = ok && o1.status == SearchStatus::complete && o1.mappings.size() == 1 &&
         verify_cc(b1, pt, o1.mappings[0]);
    ok = ok && o2.status == SearchStatus::complete && o2.mappings.size() == 1 &&
         verify_cc(b2, pt, o2.mappings[0]);

    ThreeJoin join = three_join(b1, 0, b2, 0);
    SearchOutcome oj = search_cc(join.graph, pt, cfg);
    ok = ok && oj.status == SearchStatus::complete && oj.mappings.size() == 1 &&
         verify_cc(join.graph, pt, oj.mappings[0]);

    if (ok) {
        EdgeMapping glued = compose_three_join_maps(b1, 0, o1.mappings[0], b2, 0, o2.mappings[0],
                                                    pt, join);
        ok = ok && verify_cc(join.graph, pt, glued);
    }
    report(8, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 9: tree-snark structure of maps into H_2") {
    MultiGraph b1 = blanusa1_graph();
    TreeSnarkGraph h2 = antichain_member(2);
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    cfg.budget_secs = 1800;
    cfg.workers = 4;
    SearchOutcome out = search_cc(b1, h2.graph, cfg);

    if (out.status != SearchStatus::complete) {
        report(9, "INCONCLUSIVE (budget exhausted)");
        CHECK(out.status == SearchStatus::complete);
        return;
    }
    bool ok = !out.mappings.empty();
    auto auts = automorphisms(b1);
    // copies of the first gadget (the B1 ends of the path)
    std::vector<Vertex> b1_copies;
    for (Vertex v = 0; v < h2.tmpl.tree.vertex_count(); ++v)
        if (h2.tmpl.colors[v] == 0) b1_copies.push_back(v);
    for (const EdgeMapping& f : out.mappings) {
        ok = ok && verify_cc(b1, h2.graph, f);
        bool factors = false;
        for (Vertex v : b1_copies)
            for (const Automorphism& w : auts) {
                bool match = true;
                for (EdgeId e = 0; e < b1.edge_count() && match; ++e)
                    match = f.map[e] == h2.iota[v].map[w.edge_perm[e]];
                factors = factors || match;
            }
        ok = ok && factors;
        // in particular nothing may land inside the interior B2 copy
        auto interior = h2.copy_edges(1);
        bool inside_b2 = true;
        for (EdgeId e = 0; e < b1.edge_count(); ++e) inside_b2 = inside_b2 && interior[f.map[e]];
        ok = ok && !inside_b2;
    }
    report(9, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 10: poset representation round-trip") {
    std::vector<DirectedPath> words;
    for (int len = 1; len <= 3; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w += (mask >> i & 1) ? 'B' : 'F';
            words.emplace_back(w);
        }

    bool ok = true;
    std::map<std::string, TreeSnarkGraph> built;
    for (const auto& p : words) built.emplace(p.word, poset_path_graph(p));
    for (const auto& p : words)
        for (const auto& q : words) {
            const TreeSnarkGraph& hp = built.at(p.word);
            const TreeSnarkGraph& hq = built.at(q.word);
            for (const auto& hom : path_hom_enumerate(p, q)) {
                EdgeMapping m = induced_cc_from_hom(hom, p, q, hp, hq);
                ok = ok && verify_cc(hp.graph, hq.graph, m);
                auto edge_action = hom_edge_action(p, q, hom);
                auto guide = extract_guiding_hom(hp, hq, m);
                ok = ok && guide == std::vector<Vertex>(edge_action.begin(), edge_action.end());
            }
        }

    // backward direction: no homomorphism means no cc mapping, checked by
    // complete search on the single-edge pairs plus (FF, F)
    std::vector<std::pair<std::string, std::string>> backward = {
        {"F", "F"}, {"F", "B"}, {"B", "F"}, {"B", "B"}, {"FF", "F"}};
    for (auto& [pw, qw] : backward) {
        DirectedPath p(pw), q(qw);
        bool hom = !path_hom_enumerate(p, q).empty();
        SearchStatus status;
        bool cc = found_first(built.at(pw).graph, built.at(qw).graph, 1800,
                              PruneProfile::star_local, &status);
        if (status != SearchStatus::complete) {
            report(10, "INCONCLUSIVE (budget exhausted)");
            CHECK(status == SearchStatus::complete);
            return;
        }
        ok = ok && hom == cc;
    }
    report(10, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

TEST_CASE("criterion 11: H_1 and H_2 are cc-incomparable") {
    TreeSnarkGraph h1 = antichain_member(1);
    TreeSnarkGraph h2 = antichain_member(2);
    SearchConfig cfg;
    cfg.mode = SearchMode::first;
    cfg.budget_secs = 1800;
    cfg.workers = 4;

    SearchOutcome fwd = search_cc(h1.graph, h2.graph, cfg);
    SearchOutcome bwd = search_cc(h2.graph, h1.graph, cfg);
    bool exhausted = fwd.status != SearchStatus::complete || bwd.status != SearchStatus::complete;
    bool found = !fwd.mappings.empty() || !bwd.mappings.empty();
    if (found) {
        // Report the counterexample in full so the failure is auditable: the
        // direction, independent verification under both checkers, and the
        // per-copy structure of the witness mapping.
        const bool is_fwd = !fwd.mappings.empty();
        const TreeSnarkGraph& src = is_fwd ? h1 : h2;
        const TreeSnarkGraph& dst = is_fwd ? h2 : h1;
        const EdgeMapping& wit = (is_fwd ? fwd : bwd).mappings[0];
        std::printf("criterion 11: witness direction %s, primal-verified=%d dual-verified=%d\n",
                    is_fwd ? "H_1 -> H_2" : "H_2 -> H_1",
                    (int)verify_cc(src.graph, dst.graph, wit, VerifyMode::primal),
                    (int)verify_cc(src.graph, dst.graph, wit, VerifyMode::dual));
        for (Vertex v = 0; v < src.tmpl.tree.vertex_count(); ++v) {
            std::printf("criterion 11: source copy %u lands in target copies {", v);
            auto sep = "";
            for (Vertex w = 0; w < dst.tmpl.tree.vertex_count(); ++w) {
                auto inside = dst.copy_edges(w);
                bool contained = true;
                for (EdgeId e : src.iota[v].map) contained = contained && inside[wit.map[e]];
                if (contained) { std::printf("%s%u", sep, w); sep = ", "; }
            }
            std::printf("}\n");
        }
        report(11, "FAIL (a verified cc mapping exists; the pair is comparable)");
        CHECK(!found);
    } else if (exhausted) {
        report(11, "INCONCLUSIVE (budget exhausted)");
        // explicitly allowed: incomparability is not claimed, only unresolved
        CHECK(true);
    } else {
        report(11, "PASS");
        CHECK(true);
    }
}
