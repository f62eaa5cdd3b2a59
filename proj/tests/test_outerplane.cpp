#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "spg/coloring.hpp"
#include "spg/gadgets.hpp"
#include "spg/generator.hpp"
#include "spg/outerplane.hpp"
#include "spg/patterns.hpp"
#include "spg/solver.hpp"

using namespace spg;

TEST_CASE("validate_embedding: good embeddings pass, bad ones are reported") {
    auto pc = gadget("pentagon_chord");
    CHECK(validate_embedding(pc.graph, pc.embedding).empty());

    // K4 (C4 plus both diagonals) has crossing chords
    Graph k4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    OuterplaneEmbedding emb4;
    emb4.block_boundaries = {{0, 1, 2, 3}};
    auto defects = validate_embedding(k4, emb4);
    REQUIRE(!defects.empty());
    bool crossing = false;
    for (const auto& d : defects)
        if (d.what.find("crossing") != std::string::npos) crossing = true;
    CHECK(crossing);

    // boundary omitting a block vertex
    OuterplaneEmbedding part;
    part.block_boundaries = {{0, 1, 2}};
    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(!validate_embedding(c4, part).empty());

    // K2,3 has no outerplane embedding; every boundary candidate fails
    Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    OuterplaneEmbedding embk;
    embk.block_boundaries = {{0, 2, 1, 3, 4}};
    CHECK(!validate_embedding(k23, embk).empty());
}

TEST_CASE("bounded_faces splits blocks along chords") {
    auto pc = gadget("pentagon_chord");
    auto faces = bounded_faces(pc.graph, pc.embedding);
    REQUIRE(faces.size() == 2);
    std::multiset<int> sizes{faces[0].size(), faces[1].size()};
    CHECK(sizes == std::multiset<int>{3, 4});
    // faces are {u1,u2,u5} and {u2,u3,u4,u5}
    for (const auto& f : faces) {
        std::set<Vertex> vs(f.cycle.begin(), f.cycle.end());
        if (f.size() == 3) CHECK(vs == std::set<Vertex>{0, 1, 4});
        else CHECK(vs == std::set<Vertex>{1, 2, 3, 4});
    }

    Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    OuterplaneEmbedding embc;
    embc.block_boundaries = {{0, 1, 2, 3, 4, 5}};
    CHECK(bounded_faces(c6, embc).size() == 1);

    auto house = gadget("house");
    auto hfaces = bounded_faces(house.graph, house.embedding);
    REQUIRE(hfaces.size() == 2);
    std::multiset<int> hsizes{hfaces[0].size(), hfaces[1].size()};
    CHECK(hsizes == std::multiset<int>{3, 4});
    for (const auto& f : hfaces) {
        std::set<Vertex> vs(f.cycle.begin(), f.cycle.end());
        if (f.size() == 3) CHECK(vs == std::set<Vertex>{0, 1, 4});  // w1 w2 w5
        else CHECK(vs == std::set<Vertex>{1, 2, 3, 4});             // w2 w3 w4 w5
    }
}

TEST_CASE("weak dual shapes") {
    auto house = gadget("house");
    auto wd = weak_dual(house.graph, house.embedding);
    CHECK(wd.faces.size() == 2);
    CHECK(wd.adjacency.size() == 1);

    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    OuterplaneEmbedding embc;
    embc.block_boundaries = {{0, 1, 2, 3, 4}};
    auto wdc = weak_dual(c5, embc);
    CHECK(wdc.faces.size() == 1);
    CHECK(wdc.adjacency.empty());

    // two_houses: path on 4 nodes (triangle, 4-face, 4-face, triangle)
    auto th = gadget("two_houses");
    auto wdt = weak_dual(th.graph, th.embedding);
    REQUIRE(wdt.faces.size() == 4);
    CHECK(wdt.adjacency.size() == 3);
    int deg1 = 0, deg2 = 0;
    for (const auto& nb : wdt.neighbors) {
        if (nb.size() == 1) ++deg1;
        if (nb.size() == 2) ++deg2;
    }
    CHECK(deg1 == 2);
    CHECK(deg2 == 2);
    std::multiset<int> sizes;
    for (const auto& f : wdt.faces) sizes.insert(f.size());
    CHECK(sizes == std::multiset<int>{3, 3, 4, 4});
    CHECK(wdt.is_forest());
}

TEST_CASE("face-size identity: sum of face sizes = boundary + 2*chords per block") {
    GeneratorParams p;
    p.mode = GenMode::two_connected;
    p.face_count_max = 7;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto [g, emb] = random_outerplanar(p, seed);
        auto faces = bounded_faces(g, emb);
        int sum = 0;
        for (const auto& f : faces) sum += f.size();
        int boundary = (int)emb.block_boundaries[0].size();
        int chords = g.edge_count() - boundary;
        CHECK(sum == boundary + 2 * chords);
    }
}

TEST_CASE("block decomposition of the named graphs") {
    auto g3 = gadget("no_12224");
    auto bt = block_decomposition(g3.graph);
    int nontrivial = 0;
    for (const auto& b : bt.blocks)
        if (!b.trivial()) ++nontrivial;
    CHECK(nontrivial == 2);
    // the identified vertex w6 = u1 (index 5) has degree 3 and is a cut vertex
    CHECK(g3.graph.degree(5) == 3);
    bool cut5 = false;
    for (Vertex v : bt.cut_vertices)
        if (v == 5) cut5 = true;
    CHECK(cut5);

    // a tree has only trivial blocks
    Graph tree = build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    auto btt = block_decomposition(tree);
    for (const auto& b : btt.blocks) CHECK(b.trivial());
    CHECK(btt.blocks.size() == 4);

    auto pc = gadget("pentagon_chord");
    auto btp = block_decomposition(pc.graph);
    CHECK(btp.blocks.size() == 1);
    CHECK(!btp.blocks[0].trivial());
    CHECK(is_two_connected(pc.graph));

    // blocks partition the edge set
    std::set<EdgeId> all;
    for (const auto& b : bt.blocks)
        for (EdgeId e : b.edges) CHECK(all.insert(e).second);
    CHECK((int)all.size() == g3.graph.edge_count());
}

TEST_CASE("gadget occurrence counting") {
    auto th = gadget("two_houses");
    CHECK(count_gadget_occurrences(th.graph, th.embedding, GadgetPattern::house) == 2);

    auto pc = gadget("pentagon_chord");
    CHECK(count_gadget_occurrences(pc.graph, pc.embedding, GadgetPattern::house) == 0);

    auto g3 = gadget("no_12224");
    CHECK(count_gadget_occurrences(g3.graph, g3.embedding, GadgetPattern::house) == 3);

    auto house = gadget("house");
    CHECK(count_gadget_occurrences(house.graph, house.embedding, GadgetPattern::house) == 1);
    CHECK(count_gadget_occurrences(house.graph, house.embedding, GadgetPattern::house_without_base) == 1);

    auto hc = gadget("hc");
    auto occs = find_gadget_occurrences(hc.graph, hc.embedding, GadgetPattern::hc);
    REQUIRE(occs.size() == 1);
    // slots: z2 z1 v1 vk zk u1 uk z -> apex z2=4, chimney z=5
    CHECK(occs[0].map[0] == 4);
    CHECK(occs[0].map[7] == 5);
    // occurrences map edges to edges
    auto mapped_ok = [&](const PatternOccurrence& occ, const Graph& pat, const Graph& host) {
        for (EdgeId e = 0; e < pat.edge_count(); ++e) {
            auto p = pat.edge(e);
            if (!host.has_edge(occ.map[p.u], occ.map[p.v])) return false;
        }
        return true;
    };
    auto hpat = gadget("house");
    auto hocc = find_gadget_occurrences(g3.graph, g3.embedding, GadgetPattern::house);
    for (const auto& o : hocc) CHECK(mapped_ok(o, hpat.graph, g3.graph));
}

TEST_CASE("generator: closure properties over all modes") {
    int produced = 0;
    for (GenMode mode : {GenMode::any, GenMode::two_connected, GenMode::no_two_vertices}) {
        GeneratorParams p;
        p.mode = mode;
        p.face_count_max = 6;
        p.vertex_cap = 42;
        for (std::uint64_t seed = 0; seed < 333; ++seed) {
            auto [g, emb] = random_outerplanar(p, seed);
            ++produced;
            CHECK(g.is_subcubic());
            CHECK(validate_embedding(g, emb).empty());
            auto wd = weak_dual(g, emb);
            CHECK(wd.is_forest());
            if (mode == GenMode::two_connected) {
                CHECK(is_two_connected(g));
                auto bt = block_decomposition(g);
                CHECK(bt.blocks.size() == 1);
            }
            if (mode == GenMode::no_two_vertices)
                for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) != 2);
        }
    }
    CHECK(produced == 999);
}

TEST_CASE("generator: forced small shapes") {
    GeneratorParams p;
    p.mode = GenMode::two_connected;
    p.face_count_min = 1;
    p.face_count_max = 1;
    p.face_size_weights = {0, 0, 1}; // only size 5
    auto [g, emb] = random_outerplanar(p, 7);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5); // C5

    GeneratorParams q;
    q.mode = GenMode::two_connected;
    q.face_count_min = 2;
    q.face_count_max = 2;
    q.face_size_weights = {1, 1}; // sizes 3 and 4
    // over several seeds, a 3-face + 4-face gluing must appear: that is the
    // house-without-base shape
    bool seen = false;
    for (std::uint64_t seed = 0; seed < 64 && !seen; ++seed) {
        auto [h, hemb] = random_outerplanar(q, seed);
        if (h.vertex_count() != 5 || h.edge_count() != 6) continue;
        if (count_gadget_occurrences(h, hemb, GadgetPattern::house_without_base) == 1) seen = true;
    }
    CHECK(seen);

    GeneratorParams bad;
    bad.vertex_cap = 2;
    CHECK_THROWS_WITH_AS(random_outerplanar(bad, 1), doctest::Contains("InfeasibleParams"), error);
}

TEST_CASE("augment_no_2_vertices adds exactly one leaf per 2-vertex") {
    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    OuterplaneEmbedding emb;
    emb.block_boundaries = {{0, 1, 2, 3, 4}};
    auto aug = augment_no_2_vertices(c5, emb);
    CHECK(aug.graph.vertex_count() == 10);
    CHECK(aug.graph.edge_count() == 10);
    for (Vertex v = 0; v < aug.graph.vertex_count(); ++v) CHECK(aug.graph.degree(v) != 2);

    auto pc = gadget("pentagon_chord");
    auto aug2 = augment_no_2_vertices(pc.graph, pc.embedding);
    // leaves added at u1, u3, u4 only (u2 and u5 already have degree 3)
    CHECK(aug2.graph.vertex_count() == 8);
    CHECK(aug2.graph.edge_count() == 9);
    CHECK(aug2.graph.degree(0) == 3);
    CHECK(aug2.graph.degree(2) == 3);
    CHECK(aug2.graph.degree(3) == 3);

    // cubic graph unchanged: K4 is cubic (not outerplanar, but augment only
    // reads degrees)
    Graph k4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    OuterplaneEmbedding none;
    auto aug3 = augment_no_2_vertices(k4, none);
    CHECK(aug3.graph.edge_count() == k4.edge_count());
}

TEST_CASE("coloring restriction after augmentation stays valid") {
    GeneratorParams p;
    p.mode = GenMode::any;
    p.vertex_cap = 24;
    SSequence s = parse_sequence("1,2^4,3");
    int done = 0;
    for (std::uint64_t seed = 0; seed < 200 && done < 100; ++seed) {
        auto [g, emb] = random_outerplanar(p, seed);
        if (g.edge_count() < 2) continue;
        auto aug = augment_no_2_vertices(g, emb);
        auto res = solve(aug.graph, s);
        REQUIRE(res.sat());
        EdgeColoring restricted(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) restricted.set(e, res.coloring->color(aug.original_edges[e]));
        EdgeDistanceMatrix dm(g);
        CHECK(verify(g, s, restricted, dm).valid());
        ++done;
    }
    CHECK(done == 100);
}
