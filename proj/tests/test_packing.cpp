#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "spg/canonical.hpp"
#include "spg/coloring.hpp"
#include "spg/gadgets.hpp"
#include "spg/sequence.hpp"
#include "spg/solver.hpp"
#include "test_util.hpp"

using namespace spg;

TEST_CASE("parse_sequence handles exponent notation") {
    CHECK(parse_sequence("1^2,2^3,3").values() == std::vector<int>{1, 1, 2, 2, 2, 3});
    CHECK(parse_sequence("1").values() == std::vector<int>{1});
    CHECK(parse_sequence("1,2^4").values() == std::vector<int>{1, 2, 2, 2, 2});
    CHECK(parse_sequence(" (2^5) ").values() == std::vector<int>{2, 2, 2, 2, 2});
    CHECK_THROWS_WITH_AS(parse_sequence("2,1"), doctest::Contains("NotNonDecreasing"), error);
    CHECK_THROWS_AS(parse_sequence(""), error);
    CHECK_THROWS_AS(parse_sequence("a,b"), error);
    CHECK(parse_sequence("1^2,2^3,3").str() == "(1^2,2^3,3)");
}

TEST_CASE("verify accepts the paper's template colorings") {
    for (const char* name : {"house", "two_houses", "hc"}) {
        auto gi = gadget(name);
        EdgeDistanceMatrix dm(gi.graph);
        for (const auto& t : gi.templates) {
            INFO(gi.name << " template " << t.name);
            auto verdict = verify(gi.graph, t.sequence, t.coloring, dm);
            CHECK(verdict.valid());
        }
    }
}

TEST_CASE("verify flags a distance-2 conflict in pentagon+chord under (2^5)") {
    auto g1 = gadget("pentagon_chord");
    EdgeDistanceMatrix dm(g1.graph);
    SSequence s = parse_sequence("2^5");
    EdgeColoring c(g1.graph.edge_count());
    EdgeId e12 = *g1.graph.find_edge(0, 1);
    EdgeId e34 = *g1.graph.find_edge(2, 3);
    CHECK(dm(e12, e34) == 2);
    c.set(e12, 2);
    c.set(e34, 2);
    std::vector<int> rest{1, 3, 4, 5};
    int ri = 0;
    for (EdgeId e = 0; e < g1.graph.edge_count(); ++e)
        if (e != e12 && e != e34) c.set(e, rest[ri++]);
    auto verdict = verify(g1.graph, s, c, dm);
    REQUIRE(!verdict.valid());
    CHECK(verdict.violation->distance <= s.value(verdict.violation->color_index));

    Graph empty(3, {});
    EdgeDistanceMatrix dme(empty);
    CHECK(verify(empty, s, EdgeColoring(0), dme).valid());
}

TEST_CASE("verify reports the lexicographically first violation, errors on bad input") {
    Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EdgeDistanceMatrix dm(path);
    SSequence s = parse_sequence("1,1");
    EdgeColoring c(3);
    c.set(0, 1);
    c.set(1, 1);
    c.set(2, 1);
    auto v = verify(path, s, c, dm);
    REQUIRE(!v.valid());
    CHECK(v.violation->e == 0);
    CHECK(v.violation->f == 1);
    CHECK(v.violation->color_index == 1);
    CHECK(v.violation->distance == 1);

    EdgeColoring partial(3);
    partial.set(0, 1);
    CHECK_THROWS_WITH_AS(verify(path, s, partial, dm), doctest::Contains("PartialColoring"), error);
    EdgeColoring bad(3);
    bad.set(0, 7);
    bad.set(1, 1);
    bad.set(2, 2);
    CHECK_THROWS_WITH_AS(verify(path, s, bad, dm), doctest::Contains("IndexOutOfRange"), error);
}

TEST_CASE("relax keeps validity for the corollary sequences") {
    auto house = gadget("house");
    EdgeDistanceMatrix dm(house.graph);
    SSequence s1243 = parse_sequence("1,2^4,3");
    SSequence s12222 = parse_sequence("1,2^5");
    auto res = solve(house.graph, s1243);
    REQUIRE(res.sat());
    auto relaxed = relax(*res.coloring, s1243, s12222);
    CHECK(verify(house.graph, s12222, relaxed, dm).valid());

    SSequence s11223 = parse_sequence("1^2,2^2,3");
    SSequence s11222 = parse_sequence("1^2,2^3");
    auto res2 = solve(house.graph, s11223);
    REQUIRE(res2.sat());
    auto relaxed2 = relax(*res2.coloring, s11223, s11222);
    CHECK(verify(house.graph, s11222, relaxed2, dm).valid());

    CHECK_THROWS_WITH_AS(relax(*res.coloring, s1243, parse_sequence("1,2^4")),
                         doctest::Contains("IncompatibleTarget"), error);
    CHECK_THROWS_WITH_AS(relax(*res.coloring, s1243, parse_sequence("1,2^4,4")),
                         doctest::Contains("IncompatibleTarget"), error);
}

TEST_CASE("canonical keys: mirrors and block permutations collapse, types differ") {
    auto house = gadget("house");
    auto auts = automorphism_group(house.graph);
    REQUIRE(auts.order() == 2);
    SSequence s124 = parse_sequence("1,2^4");
    EdgeDistanceMatrix dm(house.graph);

    const GadgetTemplate* t1 = nullptr;
    const GadgetTemplate* t2 = nullptr;
    for (const auto& t : house.templates) {
        if (t.name == "type1_124") t1 = &t;
        if (t.name == "type2_124") t2 = &t;
    }
    REQUIRE(t1);
    REQUIRE(t2);

    const auto& mirror = auts.perms[1];
    auto eperm = induced_edge_permutation(house.graph, mirror);
    EdgeColoring mirrored(house.graph.edge_count());
    for (EdgeId e = 0; e < house.graph.edge_count(); ++e) mirrored.set(eperm[e], t1->coloring.color(e));
    CHECK(verify(house.graph, s124, mirrored, dm).valid());
    CHECK(canonical_key(house.graph, s124, t1->coloring, auts) ==
          canonical_key(house.graph, s124, mirrored, auts));

    EdgeColoring swapped = t1->coloring;
    for (EdgeId e = 0; e < house.graph.edge_count(); ++e) {
        if (swapped.color(e) == 2) swapped.set(e, 3);
        else if (swapped.color(e) == 3) swapped.set(e, 2);
    }
    CHECK(canonical_key(house.graph, s124, t1->coloring, auts) ==
          canonical_key(house.graph, s124, swapped, auts));

    CHECK(canonical_key(house.graph, s124, t1->coloring, auts) !=
          canonical_key(house.graph, s124, t2->coloring, auts));

    EdgeColoring partial(house.graph.edge_count());
    CHECK_THROWS_WITH_AS(canonical_key(house.graph, s124, partial, auts),
                         doctest::Contains("InvalidColoring"), error);
}

TEST_CASE("orbit counts reproduce the paper's claims") {
    SSequence s124 = parse_sequence("1,2^4");
    SSequence s1122 = parse_sequence("1^2,2^2");

    auto house = gadget("house");
    auto hauts = automorphism_group(house.graph);
    auto hcols = enumerate_collect(house.graph, s124);
    CHECK(count_orbits(house.graph, s124, hcols, hauts) == 2);
    auto hcols2 = enumerate_collect(house.graph, s1122);
    CHECK(count_orbits(house.graph, s1122, hcols2, hauts) == 2);

    auto th = gadget("two_houses");
    auto tauts = automorphism_group(th.graph);
    auto tcols = enumerate_collect(th.graph, s124);
    CHECK(count_orbits(th.graph, s124, tcols, tauts) == 1);
}

TEST_CASE("validity survives block permutations and automorphism relabelings") {
    std::mt19937_64 rng(42);
    SSequence seqs[] = {parse_sequence("1,2^2"), parse_sequence("1^2,2^2"), parse_sequence("2^3")};
    int checked = 0;
    for (int it = 0; it < 200 && checked < 25; ++it) {
        Graph g = testutil::random_subcubic(rng, 8, 9);
        if (g.edge_count() == 0) continue;
        const SSequence& s = seqs[it % 3];
        auto res = solve(g, s);
        if (!res.sat()) continue;
        ++checked;
        EdgeDistanceMatrix dm(g);
        auto c = *res.coloring;
        auto blocks = s.blocks();
        std::vector<int> perm(s.size() + 1);
        for (int i = 1; i <= s.size(); ++i) perm[i] = i;
        for (auto [a, b] : blocks)
            for (int i = a; i < b; ++i) std::swap(perm[i], perm[a + (int)(rng() % (std::uint64_t)(b - a + 1))]);
        EdgeColoring pc(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) pc.set(e, perm[c.color(e)]);
        CHECK(verify(g, s, pc, dm).valid());
        auto auts = automorphism_group(g);
        const auto& p = auts.perms[rng() % auts.perms.size()];
        auto ep = induced_edge_permutation(g, p);
        EdgeColoring ac(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) ac.set(ep[e], c.color(e));
        CHECK(verify(g, s, ac, dm).valid());
    }
    CHECK(checked >= 10);
}

TEST_CASE("orbit count is invariant under relabeling the graph") {
    auto house = gadget("house");
    SSequence s124 = parse_sequence("1,2^4");
    std::vector<Vertex> relab = {3, 0, 6, 2, 5, 1, 4};
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (EdgeId e = 0; e < house.graph.edge_count(); ++e)
        edges.push_back({relab[house.graph.edge(e).u], relab[house.graph.edge(e).v]});
    Graph h2(7, edges);
    auto a1 = automorphism_group(house.graph);
    auto a2 = automorphism_group(h2);
    auto c1 = enumerate_collect(house.graph, s124);
    auto c2 = enumerate_collect(h2, s124);
    CHECK(c1.size() == c2.size());
    CHECK(count_orbits(house.graph, s124, c1, a1) == count_orbits(h2, s124, c2, a2));
}
