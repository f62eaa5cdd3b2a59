#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spg/colorers.hpp"
#include "spg/gadgets.hpp"
#include "spg/generator.hpp"
#include "spg/solver.hpp"

using namespace spg;

TEST_CASE("124-2conn: cycles get the base pattern") {
    for (int n : {3, 4, 5, 6, 7, 8, 9, 10}) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
        Graph g(n, edges);
        OuterplaneEmbedding emb;
        std::vector<int> bd(n);
        for (int i = 0; i < n; ++i) bd[i] = i;
        emb.block_boundaries = {bd};
        auto rep = good_color_124_2conn(g, emb);
        CHECK(!rep.fallback_used);
        CHECK(rep.all_checks_pass());
    }
}

TEST_CASE("124-2conn: named fixtures") {
    for (const char* name : {"pentagon_chord", "two_houses", "house_without_base"}) {
        auto gi = gadget(name);
        INFO(name);
        auto rep = good_color_124_2conn(gi.graph, gi.embedding);
        CHECK(rep.all_checks_pass());
    }
    // special house: quad with triangles on opposite edges
    Graph sh(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}, {2, 5}, {3, 5}});
    OuterplaneEmbedding emb;
    emb.block_boundaries = {{0, 1, 2, 5, 3, 4}};
    auto rep = good_color_124_2conn(sh, emb);
    CHECK(rep.all_checks_pass());
    CHECK(!rep.fallback_used);
}

TEST_CASE("124-2conn: random corpus") {
    GeneratorParams p;
    p.mode = GenMode::two_connected;
    p.face_count_min = 1;
    p.face_count_max = 8;
    p.vertex_cap = 60;
    int fallbacks = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [g, emb] = random_outerplanar(p, seed);
        INFO("seed " << seed << " n=" << g.vertex_count());
        auto rep = good_color_124_2conn(g, emb);
        CHECK(rep.all_checks_pass());
        if (rep.fallback_used) ++fallbacks;
    }
    CHECK(fallbacks == 0);
}

TEST_CASE("1243: random corpus with restriction corollary") {
    GeneratorParams p;
    p.mode = GenMode::no_two_vertices;
    p.face_count_min = 1;
    p.face_count_max = 7;
    p.vertex_cap = 45;
    SSequence s1243 = parse_sequence("1,2^4,3");
    SSequence s12222 = parse_sequence("1,2^5");
    int fallbacks = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [g, emb] = random_outerplanar(p, seed);
        INFO("seed " << seed << " n=" << g.vertex_count());
        auto rep = good_color_1243(g, emb);
        CHECK(rep.all_checks_pass());
        if (rep.fallback_used) ++fallbacks;
        EdgeDistanceMatrix dm(g);
        auto relaxed = relax(rep.coloring, s1243, s12222);
        CHECK(verify(g, s12222, relaxed, dm).valid());
    }
    MESSAGE("1243 fallbacks: " << fallbacks);
    CHECK(fallbacks == 0);
}

TEST_CASE("11223: random corpus with restriction corollary") {
    GeneratorParams p;
    p.mode = GenMode::no_two_vertices;
    p.face_count_min = 1;
    p.face_count_max = 7;
    p.vertex_cap = 45;
    SSequence s11223 = parse_sequence("1^2,2^2,3");
    SSequence s11222 = parse_sequence("1^2,2^3");
    int fallbacks = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [g, emb] = random_outerplanar(p, seed);
        INFO("seed " << seed << " n=" << g.vertex_count());
        auto rep = good_color_11223(g, emb);
        CHECK(rep.all_checks_pass());
        if (rep.fallback_used) ++fallbacks;
        EdgeDistanceMatrix dm(g);
        auto relaxed = relax(rep.coloring, s11223, s11222);
        CHECK(verify(g, s11222, relaxed, dm).valid());
    }
    MESSAGE("11223 fallbacks: " << fallbacks);
    CHECK(fallbacks == 0);
}
