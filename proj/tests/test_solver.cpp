#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "spg/gadgets.hpp"
#include "spg/solver.hpp"
#include "test_util.hpp"

using namespace spg;

namespace {

// independent enumeration oracle: odometer + verify, for tests only
std::set<std::vector<int>> oracle_enumerate(const Graph& g, const SSequence& s) {
    int m = g.edge_count();
    int k = s.size();
    EdgeDistanceMatrix dm(g);
    std::set<std::vector<int>> out;
    std::vector<int> a(m, 1);
    if (m == 0) return out;
    while (true) {
        EdgeColoring c(m);
        for (int i = 0; i < m; ++i) c.set(i, a[i]);
        if (verify(g, s, c, dm).valid()) out.insert(a);
        int pos = m - 1;
        while (pos >= 0 && a[pos] == k) a[pos--] = 1;
        if (pos < 0) break;
        ++a[pos];
    }
    return out;
}

} // namespace

TEST_CASE("paper verdicts: Unsat examples") {
    auto g1 = gadget("pentagon_chord");
    auto r1 = solve(g1.graph, parse_sequence("2^5"));
    CHECK(r1.unsat());

    auto g2 = gadget("two_houses");
    auto r2 = solve(g2.graph, parse_sequence("1,2^3,3"));
    CHECK(r2.unsat());

    auto g3 = gadget("no_12224");
    auto r3 = solve(g3.graph, parse_sequence("1,2^4"));
    CHECK(r3.unsat());
}

TEST_CASE("paper verdicts: Sat examples") {
    auto g1 = gadget("pentagon_chord");
    CHECK(solve(g1.graph, parse_sequence("1,2^4")).sat());
    auto th = gadget("two_houses");
    CHECK(solve(th.graph, parse_sequence("1,2^4")).sat());
    Graph single = build_graph(2, {{0, 1}});
    CHECK(solve(single, parse_sequence("1")).sat());
}

TEST_CASE("budget exhaustion is distinct from Unsat") {
    auto g3 = gadget("no_12224");
    SearchConfig cfg;
    cfg.node_budget = 5;
    auto r = solve(g3.graph, parse_sequence("1,2^4"), cfg);
    CHECK(r.status == SolveStatus::budget_exhausted);
}

TEST_CASE("pins: inconsistent pins rejected, pinned search exact") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    SSequence s = parse_sequence("1,2");
    EdgeColoring pins(2);
    pins.set(0, 1);
    pins.set(1, 1);
    CHECK_THROWS_WITH_AS(solve(path, s, pins, SearchConfig{}), doctest::Contains("InconsistentPins"),
                         error);

    // pinning u u1 of two_houses_pendant to a non-1 color must be Unsat
    auto g2p = gadget("two_houses_pendant");
    EdgeId pendant = *g2p.graph.find_edge(0, 8);
    for (int idx = 2; idx <= 5; ++idx) {
        EdgeColoring p(g2p.graph.edge_count());
        p.set(pendant, idx);
        auto r = solve(g2p.graph, parse_sequence("1,2^4"), p, SearchConfig{});
        CHECK(r.unsat());
    }
    EdgeColoring p1(g2p.graph.edge_count());
    p1.set(pendant, 1);
    CHECK(solve(g2p.graph, parse_sequence("1,2^4"), p1, SearchConfig{}).sat());
}

TEST_CASE("pins soundness spot-check: unsat pin vanishes from full enumeration") {
    auto house = gadget("house");
    SSequence s = parse_sequence("1,2^4");
    // find a pin that is unsat, then confirm no enumerated coloring uses it
    EdgeId e = *house.graph.find_edge(0, 1); // w1w2 cannot be 1 (Claim)
    EdgeColoring p(house.graph.edge_count());
    p.set(e, 1);
    auto r = solve(house.graph, s, p, SearchConfig{});
    CHECK(r.unsat());
    auto all = enumerate_collect(house.graph, s);
    for (const auto& c : all) CHECK(c.color(e) != 1);
}

TEST_CASE("triangle under (1,1,1) has the 3! colorings, matching the oracle") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    SSequence s = parse_sequence("1^3");
    auto cols = enumerate_collect(tri, s);
    CHECK(cols.size() == 6);
    auto oracle = oracle_enumerate(tri, s);
    CHECK(oracle.size() == 6);
    std::set<std::vector<int>> got;
    for (const auto& c : cols) got.insert(c.raw());
    CHECK(got == oracle);
}

TEST_CASE("enumeration of the house under (1,2^4) matches the brute-force set") {
    auto house = gadget("house");
    SSequence s = parse_sequence("1,2^4");
    auto r = brute_force_oracle(house.graph, s);
    CHECK(r.sat());
    auto oracle = oracle_enumerate(house.graph, s);
    auto cols = enumerate_collect(house.graph, s);
    std::set<std::vector<int>> got;
    for (const auto& c : cols) got.insert(c.raw());
    CHECK(got == oracle);
    CHECK(!oracle.empty());
}

TEST_CASE("the forced-color remark: every coloring of two_houses_pendant uses 1 on u u1") {
    auto g2p = gadget("two_houses_pendant");
    EdgeId pendant = *g2p.graph.find_edge(0, 8);
    SSequence s = parse_sequence("1,2^4");
    std::uint64_t seen = 0;
    SearchConfig cfg;
    cfg.symmetry_breaking = false;
    auto res = enumerate_all(g2p.graph, s, cfg, [&](const EdgeColoring& c) {
        ++seen;
        CHECK(c.color(pendant) == 1);
        return true;
    });
    CHECK(!res.budget_exhausted);
    CHECK(res.count == seen);
    CHECK(seen > 0);
}

TEST_CASE("brute force oracle guards against oversized search spaces") {
    Graph path2 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(brute_force_oracle(path2, parse_sequence("1,1")).sat());
    auto g1 = gadget("pentagon_chord");
    CHECK(brute_force_oracle(g1.graph, parse_sequence("2^5")).unsat());
    auto g3 = gadget("no_12224"); // 19 edges, 8^19 >> 1e8
    CHECK_THROWS_WITH_AS(brute_force_oracle(g3.graph, parse_sequence("2^8")), doctest::Contains("TooLarge"),
                         error);
}

TEST_CASE("oracle equivalence on random subcubic graphs") {
    std::mt19937_64 rng(987654321);
    const SSequence seqs[] = {parse_sequence("1"),       parse_sequence("1,1"),
                              parse_sequence("2,2"),     parse_sequence("1,2,2"),
                              parse_sequence("1,1,2,2"), parse_sequence("2,2,2")};
    for (int it = 0; it < 500; ++it) {
        Graph g = testutil::random_subcubic(rng, 8, 8);
        const SSequence& s = seqs[it % 6];
        auto fast = solve(g, s);
        auto slow = brute_force_oracle(g, s);
        REQUIRE(fast.status != SolveStatus::budget_exhausted);
        INFO("iteration " << it << " n=" << g.vertex_count() << " m=" << g.edge_count() << " S=" << s.str());
        CHECK(fast.sat() == slow.sat());
    }
}

TEST_CASE("determinism: same inputs give identical results and stats") {
    auto th = gadget("two_houses");
    SSequence s = parse_sequence("1,2^4");
    auto a = solve(th.graph, s);
    auto b = solve(th.graph, s);
    REQUIRE(a.sat());
    REQUIRE(b.sat());
    CHECK(a.coloring->raw() == b.coloring->raw());
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("parallel solve matches sequential") {
    for (const char* name : {"two_houses", "no_12224", "pentagon_chord"}) {
        auto gi = gadget(name);
        for (const char* seq : {"1,2^4", "1,2^3,3"}) {
            SSequence s = parse_sequence(seq);
            SearchConfig seqc;
            SearchConfig parc;
            parc.threads = 2;
            auto a = solve(gi.graph, s, seqc);
            auto b = solve(gi.graph, s, parc);
            CHECK(a.status == b.status);
            if (a.sat()) CHECK(a.coloring->raw() == b.coloring->raw());
        }
    }
}

TEST_CASE("variable order config changes the search, not the verdict") {
    auto g3 = gadget("no_12224");
    SearchConfig in_order;
    in_order.variable_order = VariableOrder::input_order;
    auto a = solve(g3.graph, parse_sequence("1,2^4"), in_order);
    CHECK(a.unsat());
    SearchConfig sym_off;
    sym_off.symmetry_breaking = false;
    auto b = solve(g3.graph, parse_sequence("1,2^4"), sym_off);
    CHECK(b.unsat());
}
