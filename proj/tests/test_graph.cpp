#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spg/gadgets.hpp"
#include "spg/graph.hpp"
#include "test_util.hpp"

using namespace spg;

TEST_CASE("build_graph basics and errors") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.is_subcubic());

    // G1 of Example 2.2: five cycle plus the chord
    Graph g1 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}});
    CHECK(g1.edge_count() == 6);
    CHECK(g1.is_subcubic());

    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 1}, {0, 1}}), doctest::Contains("DuplicateEdge"), error);
    CHECK_THROWS_WITH_AS(build_graph(2, {{1, 1}}), doctest::Contains("LoopEdge"), error);
    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 2}}), doctest::Contains("VertexOutOfRange"), error);
}

TEST_CASE("edge_distance on small fixtures") {
    // path a-b-c-d
    Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(edge_distance(path, 0, 2) == 2);
    CHECK(edge_distance(path, 0, 1) == 1);
    CHECK(edge_distance(path, 0, 0) == 0);

    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(edge_distance(tri, 0, 1) == 1);

    // every pair of edges in G1 has distance at most two
    Graph g1 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}});
    int maxd = 0;
    for (EdgeId e = 0; e < g1.edge_count(); ++e)
        for (EdgeId f = e + 1; f < g1.edge_count(); ++f) maxd = std::max(maxd, edge_distance(g1, e, f));
    CHECK(maxd == 2);

    // disconnected pair
    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(edge_distance(two, 0, 1) == kInfDist);

    CHECK_THROWS_AS(edge_distance(path, 0, 9), error);
}

TEST_CASE("distance_matrix matches edge_distance and the house fixture") {
    Graph one = build_graph(2, {{0, 1}});
    EdgeDistanceMatrix m1(one);
    CHECK(m1(0, 0) == 0);

    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EdgeDistanceMatrix mt(tri);
    for (EdgeId e = 0; e < 3; ++e)
        for (EdgeId f = 0; f < 3; ++f) CHECK(mt(e, f) == (e == f ? 0 : 1));

    auto house = gadget("house");
    EdgeDistanceMatrix mh(house.graph);
    auto w3w6 = house.graph.find_edge(2, 5);
    auto w4w7 = house.graph.find_edge(3, 6);
    REQUIRE(w3w6);
    REQUIRE(w4w7);
    CHECK(mh(*w3w6, *w4w7) == 2); // w3 and w4 are adjacent
}

TEST_CASE("edge distance is a line-graph metric; agrees with an explicit line-graph BFS") {
    std::mt19937_64 rng(20240711);
    for (int it = 0; it < 80; ++it) {
        Graph g = testutil::random_subcubic(rng, 10, 12);
        EdgeDistanceMatrix m(g);
        int me = g.edge_count();
        for (EdgeId e = 0; e < me; ++e) {
            CHECK(m(e, e) == 0);
            for (EdgeId f = 0; f < me; ++f) {
                CHECK(m(e, f) == m(f, e));
                CHECK(m(e, f) == testutil::line_graph_bfs_distance(g, e, f));
                if (e != f) {
                    auto pe = g.edge(e);
                    auto pf = g.edge(f);
                    bool share = pe.u == pf.u || pe.u == pf.v || pe.v == pf.u || pe.v == pf.v;
                    CHECK((m(e, f) == 1) == share);
                }
            }
        }
        // triangle inequality within components
        for (EdgeId a = 0; a < me; ++a)
            for (EdgeId b = 0; b < me; ++b)
                for (EdgeId c = 0; c < me; ++c) {
                    if (m(a, b) >= kInfDist || m(b, c) >= kInfDist) continue;
                    CHECK(m(a, c) <= m(a, b) + m(b, c));
                }
    }
}

TEST_CASE("automorphism groups of small fixtures") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(automorphism_group(tri).order() == 6);

    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(automorphism_group(p3).order() == 2);

    auto house = gadget("house");
    auto auts = automorphism_group(house.graph);
    CHECK(auts.order() == 2); // identity + mirror w2<->w5, w3<->w4, w6<->w7

    Graph big = build_graph(17, {});
    CHECK_THROWS_WITH_AS(automorphism_group(big), doctest::Contains("BudgetExceeded"), error);
}

TEST_CASE("every returned automorphism preserves the edge set") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        Graph g = testutil::random_subcubic(rng, 8, 10);
        auto auts = automorphism_group(g);
        for (const auto& p : auts.perms) {
            auto ep = induced_edge_permutation(g, p); // throws if not edge-preserving
            std::vector<char> hit(g.edge_count(), 0);
            for (EdgeId e : ep) hit[e] = 1;
            for (char h : hit) CHECK(h == 1);
        }
        // closure on the stored list
        auto find_perm = [&](const std::vector<Vertex>& q) {
            return std::find(auts.perms.begin(), auts.perms.end(), q) != auts.perms.end();
        };
        for (const auto& p : auts.perms)
            for (const auto& q : auts.perms) {
                std::vector<Vertex> comp(p.size());
                for (size_t i = 0; i < p.size(); ++i) comp[i] = p[q[i]];
                CHECK(find_perm(comp));
            }
    }
}
