#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "spg/gadgets.hpp"
#include "spg/generator.hpp"
#include "spg/io.hpp"
#include "spg/solver.hpp"

using namespace spg;

TEST_CASE("spg v1 parsing: whitespace tolerant, order preserving") {
    std::string text = "# pentagon plus chord\n"
                       "p spg 5 6\n"
                       "e 1 2\n e 2 3\n"
                       "e 3 4\ne 4 5\ne 1 5\ne 2 5\n"
                       "b 0 1 2 3 4 5\n";
    auto gf = read_spg_string(text);
    CHECK(gf.graph.vertex_count() == 5);
    CHECK(gf.graph.edge_count() == 6);
    CHECK(gf.has_embedding);
    // edge ids assigned in input order
    CHECK(gf.graph.edge(0).u == 0);
    CHECK(gf.graph.edge(0).v == 1);
    CHECK(gf.graph.edge(5).u == 1);
    CHECK(gf.graph.edge(5).v == 4);
    CHECK(validate_embedding(gf.graph, gf.embedding).empty());

    CHECK_THROWS_WITH_AS(read_spg_string("e 1 2\n"), doctest::Contains("ParseError"), error);
    CHECK_THROWS_WITH_AS(read_spg_string("p spg 2 2\ne 1 2\n"), doctest::Contains("ParseError"), error);
    CHECK_THROWS_WITH_AS(read_spg_string("p spg 2 1\nq 1 2\n"), doctest::Contains("ParseError"), error);
}

TEST_CASE("graph round trip is the identity on edge lists") {
    std::mt19937_64 rng(5);
    GeneratorParams p;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto [g, emb] = random_outerplanar(p, seed);
        std::ostringstream out;
        write_spg(out, g, &emb, "round trip");
        auto gf = read_spg_string(out.str());
        REQUIRE(gf.graph.vertex_count() == g.vertex_count());
        REQUIRE(gf.graph.edge_count() == g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(gf.graph.edge(e).u == g.edge(e).u);
            CHECK(gf.graph.edge(e).v == g.edge(e).v);
        }
        REQUIRE(gf.has_embedding);
        CHECK(gf.embedding.block_boundaries.size() == emb.block_boundaries.size());
    }
}

TEST_CASE("coloring file round trip preserves assignments") {
    auto house = gadget("house");
    SSequence s = parse_sequence("1,2^4");
    auto res = solve(house.graph, s);
    REQUIRE(res.sat());
    std::ostringstream out;
    write_coloring(out, house.graph, s, *res.coloring);
    auto cf = read_coloring_string(out.str(), house.graph);
    CHECK(cf.sequence == s);
    CHECK(cf.coloring.raw() == res.coloring->raw());

    CHECK_THROWS_WITH_AS(read_coloring_string("s 1 2\nc 1 7 1\n", house.graph),
                         doctest::Contains("ParseError"), error);
    CHECK_THROWS_WITH_AS(read_coloring_string("c 1 2 1\n", house.graph), doctest::Contains("ParseError"),
                         error);
}

TEST_CASE("color aliases follow the paper's naming") {
    auto names124 = color_aliases(parse_sequence("1,2^4"));
    CHECK(names124 == std::vector<std::string>{"1", "2_a", "2_b", "2_c", "2_d"});
    auto names1122 = color_aliases(parse_sequence("1^2,2^2,3"));
    CHECK(names1122 == std::vector<std::string>{"1_a", "1_b", "2_a", "2_b", "3"});
}

TEST_CASE("dot export mentions every edge and labels colors") {
    auto house = gadget("house");
    SSequence s = parse_sequence("1,2^4");
    auto res = solve(house.graph, s);
    REQUIRE(res.sat());
    std::ostringstream out;
    write_dot(out, house.graph, &s, &*res.coloring);
    auto text = out.str();
    CHECK(text.find("graph spg {") == 0);
    CHECK(std::count(text.begin(), text.end(), '-') >= 2 * house.graph.edge_count());
    CHECK(text.find("label=") != std::string::npos);
    CHECK(text.find("2_a") != std::string::npos);
}
