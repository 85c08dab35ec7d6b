#include <doctest.h>

#include "test_util.hpp"

using namespace ccg;

TEST_CASE("identity mappings verify") {
    for (const char* name : {"k2_3", "k4", "petersen", "blanusa1"}) {
        MultiGraph g = named_graph(name);
        CHECK(verify_cc(g, g, EdgeMapping::identity(g)));
    }
}

TEST_CASE("primal and dual verifiers agree on random mappings") {
    std::mt19937 rng(11);
    for (int i = 0; i < 400; ++i) {
        MultiGraph g = ccgtest::random_multigraph(rng, 6, 8);
        MultiGraph h = ccgtest::random_multigraph(rng, 6, 8);
        if (h.edge_count() == 0) continue;
        std::uniform_int_distribution<int> td(0, h.edge_count() - 1);
        std::vector<EdgeId> m(g.edge_count());
        for (auto& t : m) t = td(rng);
        EdgeMapping f(g, h, std::move(m));
        bool p = verify_cc(g, h, f, VerifyMode::primal);
        bool d = verify_cc(g, h, f, VerifyMode::dual);
        CHECK(p == d);
        CHECK(verify_cc(g, h, f) == p);
    }
}

TEST_CASE("hand-built mappings triangle -> K_2^3") {
    // collapsing the triangle onto one parallel edge is cc: every cycle
    // preimage is the whole triangle or empty
    MultiGraph tri = triangle_graph(), k23 = k2_3_graph();
    EdgeMapping f(tri, k23, {0, 0, 0});
    CHECK(verify_cc(tri, k23, f));
    // the injective assignment is not: a 2-star's odd image has weight 2,
    // and the only nonzero cut of K_2^3 has weight 3
    EdgeMapping bad(tri, k23, {0, 1, 2});
    CHECK(!verify_cc(tri, k23, bad));
}

TEST_CASE("composition of cc mappings is cc") {
    MultiGraph k4 = k4_graph(), k23 = k2_3_graph();
    auto maps = brute_force_cc(k4, k23);
    REQUIRE(!maps.empty());
    for (size_t i = 0; i < std::min<size_t>(maps.size(), 5); ++i) {
        EdgeMapping inner = EdgeMapping::identity(k4);
        EdgeMapping f = compose(k4, k4, k23, maps[i], inner);
        CHECK(verify_cc(k4, k23, f));
        CHECK(f.map == maps[i].map);
    }
}

TEST_CASE("search agrees with the brute-force oracle") {
    std::mt19937 rng(17);
    int checked = 0;
    while (checked < 60) {
        MultiGraph g = ccgtest::random_multigraph(rng, 5, 6);
        MultiGraph h = ccgtest::random_multigraph(rng, 5, 6);
        double combos = 1;
        for (int i = 0; i < g.edge_count(); ++i) combos *= h.edge_count();
        if (combos > 3e4) continue;
        auto expected = brute_force_cc(g, h);
        SearchConfig cfg;
        cfg.mode = SearchMode::all;
        SearchOutcome out = search_cc(g, h, cfg);
        REQUIRE(out.status == SearchStatus::complete);
        REQUIRE(out.mappings.size() == expected.size());
        CHECK(out.count == static_cast<long long>(expected.size()));
        for (size_t i = 0; i < expected.size(); ++i)
            CHECK(out.mappings[i].map == expected[i].map);
        ++checked;
    }
}

TEST_CASE("count mode matches all mode") {
    MultiGraph k4 = k4_graph(), k23 = k2_3_graph();
    SearchConfig all_cfg, count_cfg;
    all_cfg.mode = SearchMode::all;
    count_cfg.mode = SearchMode::count;
    auto a = search_cc(k4, k23, all_cfg);
    auto c = search_cc(k4, k23, count_cfg);
    CHECK(a.count == c.count);
    CHECK(c.mappings.empty());
    CHECK(a.count == static_cast<long long>(brute_force_cc(k4, k23).size()));
}

TEST_CASE("first mode is deterministic across worker counts") {
    MultiGraph pr = prism_graph(), k23 = k2_3_graph();
    SearchConfig cfg;
    cfg.mode = SearchMode::first;
    auto base = search_cc(pr, k23, cfg);
    REQUIRE(base.mappings.size() == 1);
    CHECK(verify_cc(pr, k23, base.mappings[0]));
    for (int w : {2, 3, 4}) {
        cfg.workers = w;
        auto out = search_cc(pr, k23, cfg);
        REQUIRE(out.mappings.size() == 1);
        CHECK(out.mappings[0].map == base.mappings[0].map);
    }
}

TEST_CASE("all mode results are identical across worker counts") {
    MultiGraph k4 = k4_graph(), k23 = k2_3_graph();
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    auto base = search_cc(k4, k23, cfg);
    for (int w : {2, 5}) {
        cfg.workers = w;
        auto out = search_cc(k4, k23, cfg);
        REQUIRE(out.mappings.size() == base.mappings.size());
        for (size_t i = 0; i < base.mappings.size(); ++i)
            CHECK(out.mappings[i].map == base.mappings[i].map);
    }
}

TEST_CASE("snark sources admit nothing into K_2^3") {
    MultiGraph k23 = k2_3_graph();
    for (const char* name : {"petersen", "blanusa1", "blanusa2"}) {
        MultiGraph g = named_graph(name);
        SearchConfig cfg;
        cfg.mode = SearchMode::first;
        auto out = search_cc(g, k23, cfg);
        CHECK(out.status == SearchStatus::complete);
        CHECK(out.mappings.empty());
    }
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
    MultiGraph b1 = blanusa1_graph(), pt = petersen_graph();
    SearchConfig cfg;
    cfg.mode = SearchMode::count;
    cfg.node_budget = 50;
    auto out = search_cc(b1, pt, cfg);
    CHECK(out.status == SearchStatus::budget_exhausted);
}

TEST_CASE("star-local profile agrees with the general one") {
    MultiGraph pr = prism_graph(), pt = petersen_graph();
    SearchConfig gen, loc;
    gen.mode = loc.mode = SearchMode::count;
    loc.profile = PruneProfile::star_local;
    CHECK(search_cc(pr, pt, gen).count == search_cc(pr, pt, loc).count);

    // K_2^3 as target has a non-star 3-edge cut only if some triple fails
    // the star check; here every weight-3 cut is the full edge set, which
    // is both vertex stars, so the profile stays sound
    MultiGraph k4 = k4_graph(), k23 = k2_3_graph();
    CHECK(search_cc(k4, k23, gen).count == search_cc(k4, k23, loc).count);
}

TEST_CASE("star-local profile refuses unsound targets") {
    // two triangles joined by a 3-edge matching in a "twisted" prism still
    // give stars only; use instead a hexagon plus a long chord structure:
    // K4 with one edge subdivided has a 3-edge cut that is not a star
    MultiGraph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 3}});
    REQUIRE(is_bridgeless(g));
    SearchConfig cfg;
    cfg.profile = PruneProfile::star_local;
    MultiGraph tri = triangle_graph();
    CHECK_THROWS_AS(search_cc(tri, g, cfg), std::invalid_argument);
}

TEST_CASE("empty source maps uniquely") {
    MultiGraph g(3, {});
    MultiGraph h = triangle_graph();
    auto out = search_cc(g, h);
    CHECK(out.count == 1);
    REQUIRE(out.mappings.size() == 1);
    CHECK(out.mappings[0].map.empty());
    CHECK(verify_cc(g, h, out.mappings[0]));
}

TEST_CASE("is_vertex_local recognizes inclusion-style maps") {
    MultiGraph k4 = k4_graph();
    auto id = EdgeMapping::identity(k4);
    auto vm = is_vertex_local(k4, k4, id);
    REQUIRE(vm.has_value());
    for (Vertex v = 0; v < 4; ++v) CHECK((*vm)[v] == v);

    // a proper 3-edge-coloring of K4 read as a map onto K_2^3 is
    // vertex-local: each star carries all three colors
    MultiGraph k23 = k2_3_graph();
    auto col = three_edge_coloring(k4);
    REQUIRE(col.has_value());
    std::vector<EdgeId> m(col->begin(), col->end());
    EdgeMapping f(k4, k23, std::move(m));
    REQUIRE(verify_cc(k4, k23, f));
    CHECK(is_vertex_local(k4, k23, f).has_value());

    // collapsing map: not vertex-local
    MultiGraph tri = triangle_graph();
    EdgeMapping g(tri, tri, {0, 0, 0});
    CHECK(!is_vertex_local(tri, tri, g).has_value());
}

TEST_CASE("odd_image computes parity correctly") {
    MultiGraph tri = triangle_graph(), k23 = k2_3_graph();
    EdgeMapping f(tri, k23, {0, 0, 1});
    EdgeSet img = odd_image(k23, f, {0, 1, 2});
    CHECK(img.members() == std::vector<EdgeId>{1});
}
