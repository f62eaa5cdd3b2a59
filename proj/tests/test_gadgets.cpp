#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "spg/coloring.hpp"
#include "spg/gadgets.hpp"
#include "spg/outerplane.hpp"
#include "spg/patterns.hpp"
#include "spg/solver.hpp"

using namespace spg;

TEST_CASE("registry: every gadget is subcubic with a valid outerplane embedding") {
    for (const auto& name : gadget_names()) {
        auto gi = gadget(name);
        INFO(name);
        CHECK(gi.graph.is_subcubic());
        auto defects = validate_embedding(gi.graph, gi.embedding);
        for (const auto& d : defects) INFO(d.what);
        CHECK(defects.empty());
        auto wd = weak_dual(gi.graph, gi.embedding);
        CHECK(wd.is_forest());
        EdgeDistanceMatrix dm(gi.graph);
        for (const auto& t : gi.templates) {
            INFO(name << "/" << t.name);
            CHECK(verify(gi.graph, t.sequence, t.coloring, dm).valid());
        }
    }
    CHECK_THROWS_WITH_AS(gadget("nonesuch"), doctest::Contains("UnknownGadget"), error);
}

TEST_CASE("named sizes from the paper") {
    auto pc = gadget("pentagon_chord");
    CHECK(pc.graph.vertex_count() == 5);
    CHECK(pc.graph.edge_count() == 6);

    auto house = gadget("house");
    CHECK(house.graph.vertex_count() == 7);
    CHECK(house.graph.edge_count() == 8);
    CHECK(bounded_faces(house.graph, house.embedding).size() == 2);

    auto g3 = gadget("no_12224");
    CHECK(g3.graph.vertex_count() == 14);
    CHECK(g3.graph.edge_count() == 19);
    CHECK(g3.graph.degree(5) == 3); // identified vertex w6 = u1

    auto hc = gadget("hc");
    CHECK(hc.graph.vertex_count() == 8);
    CHECK(hc.graph.edge_count() == 9);

    auto ex1 = gadget("ex1_not_1122");
    CHECK(ex1.graph.vertex_count() == 11);
    CHECK(ex1.graph.edge_count() == 15);
}

TEST_CASE("hc_template tables act on the standalone HC graph") {
    auto hc = gadget("hc");
    EdgeDistanceMatrix dm(hc.graph);
    for (const char* name : {"sec2_I", "sec2_II", "sec2_III", "sec3_I", "sec3_II", "sec3_III",
                             "sec3_IV", "sec3_V"}) {
        auto t = hc_template(parse_hc_scheme(name));
        REQUIRE(t.colors.size() == 9);
        EdgeColoring c(hc.graph.edge_count());
        for (EdgeId e = 0; e < 9; ++e) c.set(e, t.colors[e]);
        INFO(name);
        CHECK(verify(hc.graph, t.sequence, c, dm).valid());
    }
    CHECK_THROWS_WITH_AS(parse_hc_scheme("sec9_X"), doctest::Contains("UnknownScheme"), error);
    // spot check two rows against the stated tables
    auto t1 = hc_template(HCScheme::sec2_I);
    CHECK(t1.colors == std::vector<int>{2, 1, 3, 4, 5, 1, 3, 2, 1});
    auto t5 = hc_template(HCScheme::sec3_V);
    CHECK(t5.colors == std::vector<int>{5, 3, 1, 1, 2, 4, 2, 1, 3});
}

TEST_CASE("ex1 reconstruction satisfies its stated validation properties") {
    auto ex1 = gadget("ex1_not_1122");
    CHECK(is_two_connected(ex1.graph));
    CHECK(solve(ex1.graph, parse_sequence("1^2,2^2")).unsat());
    // two houses sharing the edge u3u4
    auto occs = find_gadget_occurrences(ex1.graph, ex1.embedding, GadgetPattern::house);
    CHECK(occs.size() == 2);
    auto e34 = ex1.graph.find_edge(2, 3);
    REQUIRE(e34);
    for (const auto& o : occs) {
        // w4w7 slot (map[3], map[6]) must be the shared edge u3u4
        std::set<Vertex> pend{o.map[3], o.map[6]};
        CHECK(pend == std::set<Vertex>{2, 3});
    }
    // the pentagon u1..u5 is a bounded face
    auto faces = bounded_faces(ex1.graph, ex1.embedding);
    bool pentagon = false;
    for (const auto& f : faces) {
        std::set<Vertex> vs(f.cycle.begin(), f.cycle.end());
        if (vs == std::set<Vertex>{0, 1, 2, 3, 4}) pentagon = true;
    }
    CHECK(pentagon);
}

TEST_CASE("fig4 reconstruction: occurrence counts and hub structure") {
    auto g = gadget("fig4_no_12247");
    CHECK(g.graph.is_subcubic());
    auto houses = find_gadget_occurrences(g.graph, g.embedding, GadgetPattern::house);
    CHECK(houses.size() == 7);
    // three two_houses copies: verified by their construction offsets
    auto th = gadget("two_houses");
    for (int c = 0; c < 3; ++c) {
        for (EdgeId e = 0; e < th.graph.edge_count(); ++e) {
            auto p = th.graph.edge(e);
            CHECK(g.graph.has_edge(p.u + 8 * c, p.v + 8 * c));
        }
    }
    // hub u has the three pendant edges into the copies
    CHECK(g.graph.degree(24) == 3);
    CHECK(g.graph.has_edge(24, 0));
    CHECK(g.graph.has_edge(24, 8));
    CHECK(g.graph.has_edge(24, 16));
}

TEST_CASE("fig6_g2 reconstruction: the domination distances behind Claim only5") {
    auto g = gadget("fig6_g2");
    CHECK(g.graph.vertex_count() == 88);
    CHECK(g.graph.edge_count() == 127);
    EdgeDistanceMatrix dm(g.graph);
    auto U = [](int copy, int label) { return 11 * copy + label - 1; };
    auto E = [&](Vertex a, Vertex b) { return *g.graph.find_edge(a, b); };
    // copy ids: 1=e, 2=f, 3=g, 4=b, 5=c, 6=d, 7=a
    auto edges_of_copy = [&](int c) {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
            auto p = g.graph.edge(e);
            if (p.u >= 11 * c && p.u < 11 * (c + 1) && p.v >= 11 * c && p.v < 11 * (c + 1))
                out.push_back(e);
        }
        return out;
    };
    auto all_within = [&](EdgeId from, int copy, std::set<EdgeId> except = {}) {
        for (EdgeId e : edges_of_copy(copy))
            if (!except.count(e) && dm(from, e) > 5) return false;
        return true;
    };
    // u6u8 / u7u8 of the core dominate all of copy e
    CHECK(all_within(E(U(0, 6), U(0, 8)), 1));
    CHECK(all_within(E(U(0, 7), U(0, 8)), 1));
    // u2u6, u6u7, u3u7 dominate copy e except its two triangle-side edges
    std::set<EdgeId> spared{E(U(1, 7), U(1, 8)), E(U(1, 10), U(1, 11))};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 6}, {6, 7}, {3, 7}}) {
        EdgeId from = E(U(0, a), U(0, b));
        CHECK(all_within(from, 1, spared));
        for (EdgeId e : spared) CHECK(dm(from, e) > 5);
    }
    // the spared edges dominate the chained copies f and g entirely
    CHECK(all_within(E(U(1, 7), U(1, 8)), 2));
    CHECK(all_within(E(U(1, 10), U(1, 11)), 3));
    // mirror side: u5u9, u9u10, u4u10 via copy b and its children c, d
    CHECK(all_within(E(U(0, 9), U(0, 11)), 4));
    CHECK(all_within(E(U(0, 10), U(0, 11)), 4));
    std::set<EdgeId> spared_b{E(U(4, 7), U(4, 8)), E(U(4, 10), U(4, 11))};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{5, 9}, {9, 10}, {4, 10}}) {
        EdgeId from = E(U(0, a), U(0, b));
        CHECK(all_within(from, 4, spared_b));
    }
    CHECK(all_within(E(U(4, 7), U(4, 8)), 5));
    CHECK(all_within(E(U(4, 10), U(4, 11)), 6));
    // core u1 stays free for the fig6_g3 attachment
    CHECK(g.graph.degree(U(0, 1)) == 2);
}

TEST_CASE("fig6_g3 structural validation") {
    auto g = gadget("fig6_g3");
    CHECK(g.graph.is_subcubic());
    CHECK(g.graph.vertex_count() == 5 * 88 + 13);
    CHECK(g.graph.edge_count() > 600); // not desk-solvable; structure only
    CHECK(validate_embedding(g.graph, g.embedding).empty());
    // five embedded fig6_g2 copies
    auto g2 = gadget("fig6_g2");
    for (int c = 0; c < 5; ++c)
        for (EdgeId e = 0; e < g2.graph.edge_count(); ++e) {
            auto p = g2.graph.edge(e);
            CHECK(g.graph.has_edge(p.u + 88 * c, p.v + 88 * c));
        }
    // the two hub houses are house occurrences
    auto houses = find_gadget_occurrences(g.graph, g.embedding, GadgetPattern::house);
    int hub_houses = 0;
    for (const auto& o : houses) {
        bool in_hub = true;
        for (Vertex v : o.map)
            if (v < 5 * 88 && o.map[0] < 5 * 88) in_hub = in_hub; // apex decides below
        if (o.map[0] >= 5 * 88) ++hub_houses;
    }
    CHECK(hub_houses == 2);
}

TEST_CASE("fig7 reconstruction: distance-12 extremal pair and disjoint copies") {
    auto g2 = gadget("fig7_g2");
    CHECK(solve(g2.graph, parse_sequence("1^2,2^2")).unsat());
    auto th = gadget("two_houses");
    (void)th;

    auto g3 = gadget("fig7_g3");
    CHECK(g3.graph.is_subcubic());
    CHECK(is_two_connected(g3.graph));
    CHECK(validate_embedding(g3.graph, g3.embedding).empty());
    // two vertex-disjoint embedded copies of fig7_g2
    for (int c = 0; c < 2; ++c)
        for (EdgeId e = 0; e < g2.graph.edge_count(); ++e) {
            auto p = g2.graph.edge(e);
            CHECK(g3.graph.has_edge(p.u + 16 * c, p.v + 16 * c));
        }
    EdgeDistanceMatrix dm(g3.graph);
    int m = g3.graph.edge_count();
    int maxd = 0;
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f) maxd = std::max(maxd, dm(e, f));
    CHECK(maxd == 12);
    // the maximum is realized across the two copies
    auto in_copy = [&](EdgeId e, int c) {
        auto p = g3.graph.edge(e);
        return p.u >= 16 * c && p.u < 16 * (c + 1) && p.v >= 16 * c && p.v < 16 * (c + 1);
    };
    int cross_max = 0;
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = 0; f < m; ++f)
            if (in_copy(e, 0) && in_copy(f, 1)) cross_max = std::max(cross_max, dm(e, f));
    CHECK(cross_max == 12);
}
