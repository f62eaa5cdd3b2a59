#pragma once

#include <map>
#include <string>
#include <vector>

#include "spg/coloring.hpp"
#include "spg/graph.hpp"
#include "spg/outerplane.hpp"
#include "spg/sequence.hpp"

namespace spg {

struct GadgetTemplate {
    std::string name;
    SSequence sequence;
    EdgeColoring coloring;
};

struct GadgetInstance {
    std::string name;
    Graph graph;
    OuterplaneEmbedding embedding;
    bool exact = true; // false: reconstructed from prose, validated by properties
    std::vector<GadgetTemplate> templates;
    std::string notes;
    std::vector<std::string> vertex_names;
};

// house-with-chimney coloring schemes; edge order is fixed as
// (u1v1, v1vk, vkuk, v1z1, vkzk, z1zk, z1z2, z2zk, z2z)
enum class HCScheme { sec2_I, sec2_II, sec2_III, sec3_I, sec3_II, sec3_III, sec3_IV, sec3_V };

struct HCTemplate {
    HCScheme scheme;
    SSequence sequence;
    std::vector<int> colors; // color index per edge in canonical order
};

inline HCTemplate hc_template(HCScheme scheme) {
    // (1,2^4,3): 1->1, 2a..2d->2..5, 3->6    (1^2,2^2,3): 1a,1b->1,2, 2a,2b->3,4, 3->5
    static const SSequence s1243({1, 2, 2, 2, 2, 3});
    static const SSequence s11223({1, 1, 2, 2, 3});
    switch (scheme) {
        case HCScheme::sec2_I: return {scheme, s1243, {2, 1, 3, 4, 5, 1, 3, 2, 1}};
        case HCScheme::sec2_II: return {scheme, s1243, {2, 6, 3, 4, 1, 5, 3, 2, 1}};
        case HCScheme::sec2_III: return {scheme, s1243, {4, 1, 6, 2, 3, 1, 5, 4, 1}};
        case HCScheme::sec3_I: return {scheme, s11223, {1, 3, 2, 2, 1, 4, 1, 2, 3}};
        case HCScheme::sec3_II: return {scheme, s11223, {1, 2, 1, 3, 4, 2, 1, 5, 2}};
        case HCScheme::sec3_III: return {scheme, s11223, {3, 1, 2, 2, 4, 1, 5, 2, 1}};
        case HCScheme::sec3_IV: return {scheme, s11223, {3, 1, 2, 2, 5, 4, 1, 2, 3}};
        case HCScheme::sec3_V: return {scheme, s11223, {5, 3, 1, 1, 2, 4, 2, 1, 3}};
    }
    fail(errc::unknown_scheme, "bad HC scheme");
}

inline HCScheme parse_hc_scheme(const std::string& name) {
    static const std::map<std::string, HCScheme> table = {
        {"sec2_I", HCScheme::sec2_I},   {"sec2_II", HCScheme::sec2_II}, {"sec2_III", HCScheme::sec2_III},
        {"sec3_I", HCScheme::sec3_I},   {"sec3_II", HCScheme::sec3_II}, {"sec3_III", HCScheme::sec3_III},
        {"sec3_IV", HCScheme::sec3_IV}, {"sec3_V", HCScheme::sec3_V}};
    auto it = table.find(name);
    if (it == table.end()) fail(errc::unknown_scheme, name);
    return it->second;
}

inline const char* hc_scheme_name(HCScheme s) {
    switch (s) {
        case HCScheme::sec2_I: return "sec2_I";
        case HCScheme::sec2_II: return "sec2_II";
        case HCScheme::sec2_III: return "sec2_III";
        case HCScheme::sec3_I: return "sec3_I";
        case HCScheme::sec3_II: return "sec3_II";
        case HCScheme::sec3_III: return "sec3_III";
        case HCScheme::sec3_IV: return "sec3_IV";
        case HCScheme::sec3_V: return "sec3_V";
    }
    return "?";
}

namespace detail {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline EdgeColoring make_coloring(const Graph& g, const std::vector<std::tuple<Vertex, Vertex, int>>& list) {
    EdgeColoring c(g.edge_count());
    for (auto [u, v, idx] : list) {
        auto e = g.find_edge(u, v);
        if (!e) fail(errc::invalid_coloring, "template references a missing edge");
        c.set(*e, idx);
    }
    return c;
}

// two_houses edge list with a vertex offset (u1..u8 -> off..off+7)
inline void append_two_houses(EdgeList& edges, std::vector<Vertex>& boundary, int off) {
    const int u1 = off, u2 = off + 1, u3 = off + 2, u4 = off + 3, u5 = off + 4, u6 = off + 5,
              u7 = off + 6, u8 = off + 7;
    for (auto [a, b] : EdgeList{{u1, u2}, {u1, u3}, {u2, u3}, {u2, u4}, {u3, u5}, {u4, u5},
                                {u4, u6}, {u5, u7}, {u6, u7}, {u6, u8}, {u7, u8}})
        edges.push_back({a, b});
    boundary = {u1, u2, u4, u6, u8, u7, u5, u3};
}

// ex1 graph (11 vertices, pentagon u1..u5 + two house cores) with offset
inline void append_ex1(EdgeList& edges, std::vector<Vertex>& boundary, int off) {
    auto V = [&](int i) { return off + i - 1; }; // paper's u1..u11
    for (auto [a, b] : EdgeList{{V(1), V(2)}, {V(2), V(3)}, {V(3), V(4)}, {V(4), V(5)}, {V(1), V(5)},
                                {V(2), V(6)}, {V(3), V(7)}, {V(6), V(7)}, {V(6), V(8)}, {V(7), V(8)},
                                {V(4), V(10)}, {V(5), V(9)}, {V(9), V(10)}, {V(9), V(11)}, {V(10), V(11)}})
        edges.push_back({a, b});
    boundary = {V(1), V(2), V(6), V(8), V(7), V(3), V(4), V(10), V(11), V(9), V(5)};
}

// fig7 G2 (16 vertices) with offset; returns nothing, fills boundary
inline void append_fig7_g2(EdgeList& edges, std::vector<Vertex>& boundary, int off) {
    const int u1 = off + 0, u2 = off + 1, u3 = off + 2, u4 = off + 3, u5 = off + 4, u6 = off + 5,
              u7 = off + 6, u8 = off + 7, u9 = off + 8, u10 = off + 9, w1A = off + 10, w2A = off + 11,
              w5A = off + 12, w1B = off + 13, w2B = off + 14, w5B = off + 15;
    for (auto [a, b] : EdgeList{{u1, u2},   {u2, u3},   {u3, u4},   {u4, u5},   {u5, u6},  {u1, u6},
                                {u2, u7},   {u7, u8},   {u8, u9},   {u1, u9},   {u8, u10}, {u3, w2A},
                                {w2A, w5A}, {u4, w5A},  {w1A, w2A}, {w1A, w5A}, {u5, w2B}, {w2B, w5B},
                                {u6, w5B},  {w1B, w2B}, {w1B, w5B}})
        edges.push_back({a, b});
    boundary = {u1, u9, u8, u7, u2, u3, w2A, w1A, w5A, u4, u5, w2B, w1B, w5B, u6};
}

inline GadgetInstance make_house() {
    GadgetInstance gi;
    gi.name = "house";
    gi.vertex_names = {"w1", "w2", "w3", "w4", "w5", "w6", "w7"};
    gi.graph = Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}, {2, 5}, {3, 6}});
    gi.embedding.block_boundaries = {{0, 1, 2, 3, 4}};
    gi.notes = "G0, Fig. 1";
    SSequence s124({1, 2, 2, 2, 2});
    SSequence s1122({1, 1, 2, 2});
    // (1,2^4) Type I: w2w5=w3w4=1, w1w2=w4w7=2a, w1w5=w3w6=2b, w2w3=2c, w4w5=2d
    gi.templates.push_back({"type1_124", s124,
                            make_coloring(gi.graph, {{0, 1, 2}, {1, 2, 4}, {2, 3, 1}, {3, 4, 5},
                                                     {0, 4, 3}, {1, 4, 1}, {2, 5, 3}, {3, 6, 2}})});
    // (1,2^4) Type II: w2w3=w4w5=1, w1w2=w4w7=2a, w1w5=w3w6=2b, w2w5=2c, w3w4=2d
    gi.templates.push_back({"type2_124", s124,
                            make_coloring(gi.graph, {{0, 1, 2}, {1, 2, 1}, {2, 3, 5}, {3, 4, 1},
                                                     {0, 4, 3}, {1, 4, 4}, {2, 5, 3}, {3, 6, 2}})});
    // (1^2,2^2) Type I: base 1a,1b,1a; w3w6=2a, w4w7=2b, w2w5=1b, w1w5=2a, w1w2=2b
    gi.templates.push_back({"type1_1122", s1122,
                            make_coloring(gi.graph, {{0, 1, 4}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1},
                                                     {0, 4, 3}, {1, 4, 2}, {2, 5, 3}, {3, 6, 4}})});
    // (1^2,2^2) Type II: base 1a,2a,1b; w2w5=2b, w1w2=1b, w1w5=1a, w3w6=1b, w4w7=1a
    gi.templates.push_back({"type2_1122", s1122,
                            make_coloring(gi.graph, {{0, 1, 2}, {1, 2, 1}, {2, 3, 3}, {3, 4, 2},
                                                     {0, 4, 1}, {1, 4, 4}, {2, 5, 2}, {3, 6, 1}})});
    return gi;
}

inline GadgetInstance make_house_without_base() {
    GadgetInstance gi;
    gi.name = "house_without_base";
    gi.vertex_names = {"w1", "w2", "w3", "w4", "w5"};
    gi.graph = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}});
    gi.embedding.block_boundaries = {{0, 1, 2, 3, 4}};
    gi.notes = "G0 - {w6,w7}";
    return gi;
}

inline GadgetInstance make_pentagon_chord() {
    GadgetInstance gi;
    gi.name = "pentagon_chord";
    gi.vertex_names = {"u1", "u2", "u3", "u4", "u5"};
    gi.graph = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}});
    gi.embedding.block_boundaries = {{0, 1, 2, 3, 4}};
    gi.notes = "G1 of Example 2.2: five cycle u1..u5 plus the edge u2u5";
    return gi;
}

inline GadgetInstance make_two_houses() {
    GadgetInstance gi;
    gi.name = "two_houses";
    gi.vertex_names = {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8"};
    EdgeList edges;
    std::vector<Vertex> bd;
    append_two_houses(edges, bd, 0);
    gi.graph = Graph(8, edges);
    gi.embedding.block_boundaries = {bd};
    gi.notes = "G2 of Fig. 2";
    SSequence s124({1, 2, 2, 2, 2});
    gi.templates.push_back({"unique_124", s124,
                            make_coloring(gi.graph, {{0, 1, 2}, {0, 2, 3}, {1, 2, 1}, {1, 3, 4},
                                                     {2, 4, 5}, {3, 4, 1}, {3, 5, 3}, {4, 6, 2},
                                                     {5, 6, 1}, {5, 7, 5}, {6, 7, 4}})});
    return gi;
}

inline GadgetInstance make_two_houses_pendant() {
    GadgetInstance gi;
    gi.name = "two_houses_pendant";
    gi.vertex_names = {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u"};
    EdgeList edges;
    std::vector<Vertex> bd;
    append_two_houses(edges, bd, 0);
    edges.push_back({0, 8});
    gi.graph = Graph(9, edges);
    gi.embedding.block_boundaries = {bd};
    gi.notes = "G2' of the Remark: G2 plus vertex u and edge u u1";
    return gi;
}

inline GadgetInstance make_no_12224() {
    GadgetInstance gi;
    gi.name = "no_12224";
    gi.vertex_names = {"w1", "w2", "w3", "w4", "w5", "w6=u1", "w7",
                       "u2", "u3", "u4", "u5", "u6", "u7", "u8"};
    EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}, {2, 5}, {3, 6}};
    const int u1 = 5, u2 = 7, u3 = 8, u4 = 9, u5 = 10, u6 = 11, u7 = 12, u8 = 13;
    for (auto [a, b] : EdgeList{{u1, u2}, {u1, u3}, {u2, u3}, {u2, u4}, {u3, u5}, {u4, u5},
                                {u4, u6}, {u5, u7}, {u6, u7}, {u6, u8}, {u7, u8}})
        edges.push_back({a, b});
    gi.graph = Graph(14, edges);
    gi.embedding.block_boundaries = {{0, 1, 2, 3, 4}, {u1, u2, u4, u6, u8, u7, u5, u3}};
    gi.notes = "G3 of Fig. 3: G0 and G2 identified at w6 = u1";
    return gi;
}

inline GadgetInstance make_hc() {
    GadgetInstance gi;
    gi.name = "hc";
    gi.vertex_names = {"v1", "vk", "z1", "zk", "z2", "z", "u1", "uk"};
    gi.graph = Graph(8, {{6, 0}, {0, 1}, {1, 7}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    gi.embedding.block_boundaries = {{0, 2, 4, 3, 1}};
    gi.notes = "house-with-chimney; host edge slots u1v1 and vkuk kept as boundary stubs";
    for (HCScheme s : {HCScheme::sec2_I, HCScheme::sec2_II, HCScheme::sec2_III, HCScheme::sec3_I,
                       HCScheme::sec3_II, HCScheme::sec3_III, HCScheme::sec3_IV, HCScheme::sec3_V}) {
        auto t = hc_template(s);
        EdgeColoring c(gi.graph.edge_count());
        for (EdgeId e = 0; e < 9; ++e) c.set(e, t.colors[e]);
        gi.templates.push_back({hc_scheme_name(s), t.sequence, c});
    }
    return gi;
}

inline GadgetInstance make_ex1_not_1122() {
    GadgetInstance gi;
    gi.name = "ex1_not_1122";
    gi.vertex_names = {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u9", "u10", "u11"};
    EdgeList edges;
    std::vector<Vertex> bd;
    append_ex1(edges, bd, 0);
    gi.graph = Graph(11, edges);
    gi.embedding.block_boundaries = {bd};
    gi.exact = false;
    gi.notes = "G1 of Example ex1 (Fig. 5), reconstructed: two houses sharing the edge u3u4, "
               "pentagon u1..u5; labels follow Claim only5";
    return gi;
}

inline GadgetInstance make_fig6_g2() {
    GadgetInstance gi;
    gi.name = "fig6_g2";
    EdgeList edges;
    std::vector<std::vector<Vertex>> bds(8);
    append_ex1(edges, bds[0], 0); // core
    // copies: e, f, g, b, c, d, a (offsets 11, 22, ..., 77)
    for (int i = 1; i <= 7; ++i) append_ex1(edges, bds[i], 11 * i);
    auto U = [](int copy, int label) { return 11 * copy + label - 1; };
    // attachment pendant edges: (host vertex, copy u1)
    // copies: 1=e at core u8; 2=f at e u8; 3=g at e u11; 4=b at core u11;
    // 5=c at b u8; 6=d at b u11; 7=a at f u8
    edges.push_back({U(0, 8), U(1, 1)});
    edges.push_back({U(1, 8), U(2, 1)});
    edges.push_back({U(1, 11), U(3, 1)});
    edges.push_back({U(0, 11), U(4, 1)});
    edges.push_back({U(4, 8), U(5, 1)});
    edges.push_back({U(4, 11), U(6, 1)});
    edges.push_back({U(2, 8), U(7, 1)});
    gi.graph = Graph(88, edges);
    gi.embedding.block_boundaries = bds;
    gi.exact = false;
    gi.notes = "Fig. 6 left: core u1..u11 with seven copies of G1 (ex1) hung off the triangle "
               "apices; attachment pattern reconstructed from Claim only5's distance arguments";
    gi.vertex_names.resize(88);
    const char* copies = "0efgbcda";
    for (int c = 0; c < 8; ++c)
        for (int i = 1; i <= 11; ++i)
            gi.vertex_names[11 * c + i - 1] =
                (c == 0) ? ("u" + std::to_string(i)) : ("u" + std::to_string(i) + std::string(1, copies[c]));
    return gi;
}

inline GadgetInstance make_fig6_g3() {
    GadgetInstance gi;
    gi.name = "fig6_g3";
    EdgeList edges;
    std::vector<std::vector<Vertex>> bds;
    // five copies of fig6_g2 occupy [0, 5*88); the v-core comes after
    GadgetInstance g2 = make_fig6_g2();
    for (int c = 0; c < 5; ++c) {
        int off = 88 * c;
        for (EdgeId e = 0; e < g2.graph.edge_count(); ++e)
            edges.push_back({g2.graph.edge(e).u + off, g2.graph.edge(e).v + off});
        for (const auto& bd : g2.embedding.block_boundaries) {
            std::vector<Vertex> shifted;
            for (Vertex v : bd) shifted.push_back(v + off);
            bds.push_back(shifted);
        }
    }
    const int base = 5 * 88;
    auto V = [&](int i) { return base + i - 1; }; // v1..v13
    auto u1_of_copy = [&](int c) { return 88 * c; }; // u1 of each fig6_g2 copy
    // center: v1; arm v2 (copy a attach + leaf v3); two houses at v4 and v5
    for (auto [a, b] : EdgeList{{V(1), V(2)}, {V(2), V(3)}, {V(1), V(4)}, {V(1), V(5)},
                                // house 1: apex v4, rim v6,v7, base v8,v9
                                {V(4), V(6)}, {V(4), V(7)}, {V(6), V(7)}, {V(6), V(8)},
                                {V(7), V(9)}, {V(8), V(9)},
                                // house 2: apex v5, rim v10,v11, base v12,v13
                                {V(5), V(10)}, {V(5), V(11)}, {V(10), V(11)}, {V(10), V(12)},
                                {V(11), V(13)}, {V(12), V(13)}})
        edges.push_back({a, b});
    edges.push_back({V(2), u1_of_copy(0)});  // G2a
    edges.push_back({V(8), u1_of_copy(1)});  // G2b
    edges.push_back({V(9), u1_of_copy(2)});  // G2c
    edges.push_back({V(12), u1_of_copy(3)}); // G2d
    edges.push_back({V(13), u1_of_copy(4)}); // G2e
    bds.push_back({V(4), V(6), V(8), V(9), V(7)});
    bds.push_back({V(5), V(10), V(12), V(13), V(11)});
    gi.graph = Graph(base + 13, edges);
    gi.embedding.block_boundaries = bds;
    gi.exact = false;
    gi.notes = "Fig. 6 right: five copies of fig6_g2 attached at their u1 vertices to a hub "
               "structure with two houses; reconstruction per Claim only5's proof";
    return gi;
}

inline GadgetInstance make_fig7_g2() {
    GadgetInstance gi;
    gi.name = "fig7_g2";
    gi.vertex_names = {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8",
                       "u9", "u10", "w1A", "w2A", "w5A", "w1B", "w2B", "w5B"};
    EdgeList edges;
    std::vector<Vertex> bd;
    append_fig7_g2(edges, bd, 0);
    gi.graph = Graph(16, edges);
    gi.embedding.block_boundaries = {bd};
    gi.exact = false;
    gi.notes = "Fig. 7 left, reconstructed from the proof's edge names: hexagon u1..u6, two "
               "house copies of G0 at (u3,u4) and (u5,u6), pentagon u1u2u7u8u9, pendant u8u10";
    return gi;
}

inline GadgetInstance make_fig7_g3() {
    GadgetInstance gi;
    gi.name = "fig7_g3";
    EdgeList edges;
    std::vector<Vertex> bd1, bd2;
    append_fig7_g2(edges, bd1, 0);
    append_fig7_g2(edges, bd2, 16);
    edges.push_back({9, 25}); // u10 - u10'
    edges.push_back({6, 22}); // u7 - u7'
    gi.graph = Graph(32, edges);
    // single block: the two copies plus both connector edges form one outer cycle
    std::vector<Vertex> bd = {9, 7, 8, 0, 5, 15, 13, 14, 4, 3, 12, 10, 11, 2, 1, 6,
                              22, 17, 18, 27, 26, 28, 19, 20, 30, 29, 31, 21, 16, 24, 23, 25};
    gi.embedding.block_boundaries = {bd};
    gi.exact = false;
    gi.notes = "Fig. 7 right, reconstructed: two disjoint copies of fig7_g2 joined by the edges "
               "u10-u10' and u7-u7'; extremal edge pair at distance exactly 12";
    return gi;
}

inline GadgetInstance make_fig4() {
    GadgetInstance gi;
    gi.name = "fig4_no_12247";
    EdgeList edges;
    std::vector<std::vector<Vertex>> bds(4);
    append_two_houses(edges, bds[0], 0);  // A: u1..u8  -> 0..7
    append_two_houses(edges, bds[1], 8);  // B          -> 8..15
    append_two_houses(edges, bds[2], 16); // C          -> 16..23
    // hub u feeds the three entries; hub v ties the three mirror entries
    // together within distance 3 of each other (v1 subdivides the route to C
    // and doubles as the house's w6), which is what starves two simultaneous
    // color-7 copies
    const int hub = 24, v = 25, v1 = 26, w1 = 27, w2 = 28, w3 = 29, w4 = 30, w5 = 31, w7 = 32;
    edges.push_back({hub, 0});
    edges.push_back({hub, 8});
    edges.push_back({hub, 16});
    edges.push_back({v, 7});   // v - u8 of A
    edges.push_back({v, 15});  // v - u8 of B
    edges.push_back({v, v1});
    edges.push_back({v1, 23}); // v1 - u8 of C
    for (auto [a, b] : EdgeList{{w1, w2}, {w2, w3}, {w3, w4}, {w4, w5}, {w1, w5}, {w2, w5},
                                {w3, v1}, {w4, w7}})
        edges.push_back({a, b});
    bds[3] = {w1, w2, w3, w4, w5};
    gi.graph = Graph(33, edges);
    gi.embedding.block_boundaries = bds;
    gi.exact = false;
    gi.notes = "Fig. 4, reconstructed: hub u joined to u1 of three two_houses copies; hub v "
               "joined to u8 of copies A and B and via v1 to u8 of copy C; the house hangs at "
               "v1, which plays its w6 role";
    gi.vertex_names.resize(33);
    const char* suffix[3] = {"", "'", "''"};
    for (int c = 0; c < 3; ++c)
        for (int i = 1; i <= 8; ++i) gi.vertex_names[8 * c + i - 1] = "u" + std::to_string(i) + suffix[c];
    gi.vertex_names[hub] = "u";
    gi.vertex_names[v] = "v";
    gi.vertex_names[v1] = "v1=w6";
    gi.vertex_names[w1] = "w1";
    gi.vertex_names[w2] = "w2";
    gi.vertex_names[w3] = "w3";
    gi.vertex_names[w4] = "w4";
    gi.vertex_names[w5] = "w5";
    gi.vertex_names[w7] = "w7";
    return gi;
}

} // namespace detail

inline std::vector<std::string> gadget_names() {
    return {"house",        "house_without_base", "pentagon_chord", "two_houses",
            "two_houses_pendant", "no_12224",     "hc",             "fig4_no_12247",
            "ex1_not_1122", "fig6_g2",            "fig6_g3",        "fig7_g2",
            "fig7_g3"};
}

inline GadgetInstance gadget(const std::string& name) {
    if (name == "house") return detail::make_house();
    if (name == "house_without_base") return detail::make_house_without_base();
    if (name == "pentagon_chord") return detail::make_pentagon_chord();
    if (name == "two_houses") return detail::make_two_houses();
    if (name == "two_houses_pendant") return detail::make_two_houses_pendant();
    if (name == "no_12224") return detail::make_no_12224();
    if (name == "hc") return detail::make_hc();
    if (name == "fig4_no_12247") return detail::make_fig4();
    if (name == "ex1_not_1122") return detail::make_ex1_not_1122();
    if (name == "fig6_g2") return detail::make_fig6_g2();
    if (name == "fig6_g3") return detail::make_fig6_g3();
    if (name == "fig7_g2") return detail::make_fig7_g2();
    if (name == "fig7_g3") return detail::make_fig7_g3();
    fail(errc::unknown_gadget, name);
}

} // namespace spg
