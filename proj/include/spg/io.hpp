#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spg/coloring.hpp"
#include "spg/graph.hpp"
#include "spg/outerplane.hpp"
#include "spg/sequence.hpp"

namespace spg {

// "spg v1" graph text format.
//   # comment
//   p spg <n> <m>
//   e <u> <v>            1-based endpoints, edge ids in line order
//   b <block-id> <v1> ... <vk>   cyclic outer boundary of one block
// Parsing is whitespace tolerant; edge order is preserved.
struct GraphFile {
    Graph graph;
    OuterplaneEmbedding embedding;
    bool has_embedding = false;
};

inline GraphFile read_spg(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<int, std::vector<Vertex>> boundaries;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "spg")
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad p line");
        } else if (tok == "e") {
            long u, v;
            if (!(ls >> u >> v)) fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad e line");
            edges.push_back({(Vertex)(u - 1), (Vertex)(v - 1)});
        } else if (tok == "b") {
            int bid;
            if (!(ls >> bid)) fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad b line");
            long v;
            std::vector<Vertex> bd;
            while (ls >> v) bd.push_back((Vertex)(v - 1));
            if (bd.size() < 3) fail(errc::parse_error, "line " + std::to_string(lineno) + ": boundary too short");
            boundaries[bid] = bd;
        } else {
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": unknown record '" + tok + "'");
        }
    }
    if (n < 0) fail(errc::parse_error, "missing 'p spg' header");
    if (m >= 0 && (size_t)m != edges.size())
        fail(errc::parse_error, "edge count mismatch: header says " + std::to_string(m) + ", got " +
                                    std::to_string(edges.size()));
    GraphFile gf;
    gf.graph = Graph(n, edges);
    if (!boundaries.empty()) {
        gf.has_embedding = true;
        for (auto& [bid, bd] : boundaries) gf.embedding.block_boundaries.push_back(bd);
    }
    return gf;
}

inline GraphFile read_spg_string(const std::string& text) {
    std::istringstream in(text);
    return read_spg(in);
}

inline void write_spg(std::ostream& out, const Graph& g, const OuterplaneEmbedding* emb = nullptr,
                      const std::string& comment = "") {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "p spg " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "e " << g.edge(e).u + 1 << " " << g.edge(e).v + 1 << "\n";
    if (emb) {
        for (size_t b = 0; b < emb->block_boundaries.size(); ++b) {
            out << "b " << b;
            for (Vertex v : emb->block_boundaries[b]) out << " " << v + 1;
            out << "\n";
        }
    }
}

// Coloring text format: `s <s1> <s2> ...` (expanded), then `c <u> <v> <index>`
// per edge, indices 1-based. Unknown edges are an error.
struct ColoringFile {
    SSequence sequence;
    EdgeColoring coloring;
};

inline ColoringFile read_coloring(std::istream& in, const Graph& g) {
    std::string line;
    std::vector<int> svals;
    EdgeColoring col(g.edge_count());
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "s") {
            int x;
            while (ls >> x) svals.push_back(x);
        } else if (tok == "c") {
            long u, v;
            int idx;
            if (!(ls >> u >> v >> idx)) fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad c line");
            auto e = g.find_edge((Vertex)(u - 1), (Vertex)(v - 1));
            if (!e)
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": unknown edge (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            col.set(*e, idx);
        } else {
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": unknown record '" + tok + "'");
        }
    }
    if (svals.empty()) fail(errc::parse_error, "missing 's' line");
    return {SSequence(svals), col};
}

inline ColoringFile read_coloring_string(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return read_coloring(in, g);
}

inline void write_coloring(std::ostream& out, const Graph& g, const SSequence& s, const EdgeColoring& c) {
    out << "s";
    for (int v : s.values()) out << " " << v;
    out << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (c.colored(e))
            out << "c " << g.edge(e).u + 1 << " " << g.edge(e).v + 1 << " " << c.color(e) << "\n";
}

// Presentation-layer color aliases: 1, 1_a/1_b, 2_a..2_d, 3 when the
// sequence matches a known shape; plain indices otherwise.
inline std::vector<std::string> color_aliases(const SSequence& s) {
    std::vector<std::string> names;
    auto blocks = s.blocks();
    for (auto [first, last] : blocks) {
        int width = last - first + 1;
        for (int i = first; i <= last; ++i) {
            std::string base = std::to_string(s.value(i));
            if (width == 1) names.push_back(base);
            else if (width <= 26) names.push_back(base + "_" + std::string(1, (char)('a' + (i - first))));
            else names.push_back(base + "#" + std::to_string(i - first + 1));
        }
    }
    return names;
}

// DOT export: colors become edge labels and a fixed palette; layout is left
// to downstream tools.
inline void write_dot(std::ostream& out, const Graph& g, const SSequence* s = nullptr,
                      const EdgeColoring* c = nullptr) {
    static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
                                    "#e6ab02", "#a6761d", "#666666", "#1f78b4", "#b2df8a"};
    out << "graph spg {\n  node [shape=circle];\n";
    std::vector<std::string> names;
    if (s) names = color_aliases(*s);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u + 1 << " -- " << g.edge(e).v + 1;
        if (c && c->colored(e)) {
            int idx = c->color(e);
            out << " [label=\"" << (s ? names[idx - 1] : std::to_string(idx)) << "\", color=\""
                << palette[(idx - 1) % 10] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
}

} // namespace spg
