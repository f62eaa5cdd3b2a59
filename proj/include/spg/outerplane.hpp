#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

// Outerplane embedding: one cyclic outer-boundary order per non-trivial
// block. Chords are the block edges not consecutive on the boundary; tree
// edges are everything in no non-trivial block. Both are derived.
struct OuterplaneEmbedding {
    std::vector<std::vector<Vertex>> block_boundaries;
};

struct EmbeddingDefect {
    std::string what;
};

namespace detail {

// chord as a pair of boundary positions a < b
struct Chord {
    int a, b;
    EdgeId edge;
};

inline bool chords_cross(const Chord& x, const Chord& y) {
    auto strictly_inside = [](int p, int lo, int hi) { return lo < p && p < hi; };
    bool y_a_in = strictly_inside(y.a, x.a, x.b);
    bool y_b_in = strictly_inside(y.b, x.a, x.b);
    if (y_a_in != y_b_in) {
        // one endpoint inside, the other outside; sharing an endpoint is fine
        if (y.a == x.a || y.a == x.b || y.b == x.a || y.b == x.b) return false;
        return true;
    }
    return false;
}

} // namespace detail

inline std::vector<EmbeddingDefect> validate_embedding(const Graph& g, const OuterplaneEmbedding& emb) {
    std::vector<EmbeddingDefect> defects;
    std::vector<int> edge_owner(g.edge_count(), -1); // block index or -1
    for (size_t bi = 0; bi < emb.block_boundaries.size(); ++bi) {
        const auto& bd = emb.block_boundaries[bi];
        std::string tag = "block " + std::to_string(bi) + ": ";
        if (bd.size() < 3) {
            defects.push_back({tag + "boundary shorter than 3"});
            continue;
        }
        std::set<Vertex> seen;
        bool dup = false;
        for (Vertex v : bd) {
            if (v < 0 || v >= g.vertex_count()) {
                defects.push_back({tag + "vertex " + std::to_string(v) + " out of range"});
                return defects;
            }
            if (!seen.insert(v).second) dup = true;
        }
        if (dup) defects.push_back({tag + "boundary repeats a vertex"});
        int L = (int)bd.size();
        std::vector<int> pos(g.vertex_count(), -1);
        for (int i = 0; i < L; ++i) pos[bd[i]] = i;
        // boundary edges must exist
        bool cycle_ok = true;
        for (int i = 0; i < L; ++i) {
            auto e = g.find_edge(bd[i], bd[(i + 1) % L]);
            if (!e) {
                defects.push_back({tag + "boundary pair (" + std::to_string(bd[i]) + "," +
                                   std::to_string(bd[(i + 1) % L]) + ") is not an edge"});
                cycle_ok = false;
            } else {
                if (edge_owner[*e] != -1 && edge_owner[*e] != (int)bi)
                    defects.push_back({tag + "edge appears in two blocks"});
                edge_owner[*e] = (int)bi;
            }
        }
        if (!cycle_ok) continue;
        // chords: edges between boundary vertices that are not boundary edges
        std::vector<detail::Chord> chords;
        for (Vertex v : bd) {
            for (auto [w, e] : g.neighbors(v)) {
                if (v > w) continue;
                if (pos[w] < 0) continue;
                int pa = pos[v], pb = pos[w];
                if ((pa + 1) % L == pb || (pb + 1) % L == pa) continue; // boundary edge
                int a = std::min(pa, pb), b = std::max(pa, pb);
                chords.push_back({a, b, e});
                if (edge_owner[e] != -1 && edge_owner[e] != (int)bi)
                    defects.push_back({tag + "chord belongs to two blocks"});
                edge_owner[e] = (int)bi;
            }
        }
        for (size_t x = 0; x < chords.size(); ++x)
            for (size_t y = x + 1; y < chords.size(); ++y)
                if (detail::chords_cross(chords[x], chords[y]))
                    defects.push_back({tag + "crossing chords (" + std::to_string(chords[x].edge) + "," +
                                       std::to_string(chords[y].edge) + ")"});
        // block must not touch vertices beyond the boundary: any edge from a
        // boundary vertex into the block's interior would make it non-outerplane,
        // but interior membership is not declared; the coverage check below
        // catches those edges as leftover non-bridge edges.
    }
    // every edge not owned by a block must be a bridge (trivial block)
    // bridges found per block decomposition would be circular; use a cheap local check:
    // an unowned edge whose both endpoints lie on one declared boundary is wrong.
    for (size_t bi = 0; bi < emb.block_boundaries.size(); ++bi) {
        const auto& bd = emb.block_boundaries[bi];
        std::set<Vertex> onb(bd.begin(), bd.end());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (edge_owner[e] != -1) continue;
            if (onb.count(g.edge(e).u) && onb.count(g.edge(e).v))
                defects.push_back({"edge " + std::to_string(e) + " joins two vertices of block " +
                                   std::to_string(bi) + " but is not part of it"});
        }
    }
    return defects;
}

// A bounded face, stored as its vertex cycle (orientation follows the
// boundary walk).
struct Face {
    std::vector<Vertex> cycle;
    int block = -1;
    std::vector<EdgeId> edges;

    int size() const { return (int)cycle.size(); }
};

namespace detail {

// Splits one block boundary along its chords (laminar family) into faces.
inline void block_faces(const Graph& g, const std::vector<Vertex>& bd, int block_index,
                        std::vector<Face>& out) {
    int L = (int)bd.size();
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < L; ++i) pos[bd[i]] = i;
    std::vector<Chord> chords;
    for (Vertex v : bd)
        for (auto [w, e] : g.neighbors(v)) {
            if (v > w || pos[w] < 0) continue;
            int pa = pos[v], pb = pos[w];
            if ((pa + 1) % L == pb || (pb + 1) % L == pa) continue;
            chords.push_back({std::min(pa, pb), std::max(pa, pb), e});
        }
    // sort outermost-first: by interval start asc, end desc
    std::sort(chords.begin(), chords.end(), [](const Chord& x, const Chord& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b > y.b;
    });
    // Each region is delimited by a "ceiling" (the whole boundary, or a chord)
    // and the maximal chords directly below it. Walk with a stack.
    // children[i] = chords directly nested inside chord i; top = directly
    // inside the outer boundary.
    int nc = (int)chords.size();
    std::vector<std::vector<int>> children(nc + 1);
    std::vector<int> stack; // chord indices, innermost last
    for (int i = 0; i < nc; ++i) {
        while (!stack.empty() && chords[i].a >= chords[stack.back()].b) stack.pop_back();
        if (stack.empty()) children[nc].push_back(i);
        else children[stack.back()].push_back(i);
        stack.push_back(i);
    }
    auto close_face = [&](Face& f) {
        for (size_t i = 0; i < f.cycle.size(); ++i) {
            auto e = g.find_edge(f.cycle[i], f.cycle[(i + 1) % f.cycle.size()]);
            if (!e) fail(errc::invalid_embedding, "face walk hit a non-edge");
            f.edges.push_back(*e);
        }
        out.push_back(std::move(f));
    };
    // root region: the full boundary with top-level chords skipped over
    {
        Face f;
        f.block = block_index;
        std::map<int, int> jump;
        for (int ki : children[nc]) jump[chords[ki].a] = chords[ki].b;
        int p = 0;
        while (p < L) {
            f.cycle.push_back(bd[p]);
            auto it = jump.find(p);
            p = (it != jump.end()) ? it->second : p + 1;
        }
        close_face(f);
    }
    // one region per chord: walk its interval, skipping the inside of each
    // directly nested chord (intervals never wrap since a < b)
    for (int ci = 0; ci < nc; ++ci) {
        Face f;
        f.block = block_index;
        std::map<int, int> jump;
        for (int ki : children[ci]) jump[chords[ki].a] = chords[ki].b;
        int p = chords[ci].a;
        while (p <= chords[ci].b) {
            f.cycle.push_back(bd[p]);
            if (p == chords[ci].b) break;
            auto it = jump.find(p);
            p = (it != jump.end()) ? it->second : p + 1;
        }
        close_face(f);
    }
}

} // namespace detail

// Faces per block, split along chords; deterministic order (by smallest
// contained edge id) so downstream ids are stable.
inline std::vector<Face> bounded_faces(const Graph& g, const OuterplaneEmbedding& emb) {
    auto defects = validate_embedding(g, emb);
    if (!defects.empty()) fail(errc::invalid_embedding, defects.front().what);
    std::vector<Face> out;
    for (size_t bi = 0; bi < emb.block_boundaries.size(); ++bi)
        detail::block_faces(g, emb.block_boundaries[bi], (int)bi, out);
    std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        EdgeId ea = a.edges.empty() ? 1 << 30 : *std::min_element(a.edges.begin(), a.edges.end());
        EdgeId eb = b.edges.empty() ? 1 << 30 : *std::min_element(b.edges.begin(), b.edges.end());
        return ea < eb;
    });
    return out;
}

struct WeakDual {
    std::vector<Face> faces;
    std::vector<std::pair<int, int>> adjacency; // face indices sharing an edge
    std::vector<std::vector<int>> neighbors;

    bool is_forest() const {
        // acyclic <=> for each connected piece, |E| = |V| - 1; a simple DFS
        std::vector<int> color(faces.size(), 0);
        std::vector<int> parent(faces.size(), -1);
        for (size_t s = 0; s < faces.size(); ++s) {
            if (color[s]) continue;
            std::vector<int> st{(int)s};
            color[s] = 1;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y : neighbors[x]) {
                    if (y == parent[x]) continue;
                    if (color[y]) return false;
                    color[y] = 1;
                    parent[y] = x;
                    st.push_back(y);
                }
            }
        }
        return true;
    }
};

inline WeakDual weak_dual(const Graph& g, const OuterplaneEmbedding& emb) {
    WeakDual wd;
    wd.faces = bounded_faces(g, emb);
    std::map<EdgeId, std::vector<int>> by_edge;
    for (size_t fi = 0; fi < wd.faces.size(); ++fi)
        for (EdgeId e : wd.faces[fi].edges) by_edge[e].push_back((int)fi);
    std::set<std::pair<int, int>> adj;
    for (auto& [e, fs] : by_edge) {
        if (fs.size() > 2) fail(errc::not_outerplane, "edge on more than two bounded faces");
        if (fs.size() == 2) adj.insert({std::min(fs[0], fs[1]), std::max(fs[0], fs[1])});
    }
    wd.adjacency.assign(adj.begin(), adj.end());
    wd.neighbors.assign(wd.faces.size(), {});
    for (auto [a, b] : wd.adjacency) {
        wd.neighbors[a].push_back(b);
        wd.neighbors[b].push_back(a);
    }
    if (!wd.is_forest()) fail(errc::not_outerplane, "weak dual contains a cycle");
    return wd;
}

// Block-cut decomposition (lowpoint DFS). Blocks are 2-connected subgraphs
// or single edges; they partition the edge set.
struct BlockTree {
    struct Block {
        std::vector<EdgeId> edges;
        std::vector<Vertex> vertices;
        bool trivial() const { return edges.size() == 1; }
    };
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;
    std::vector<std::vector<int>> blocks_of_vertex; // vertex -> block indices

    int block_of_edge(EdgeId e) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            for (EdgeId x : blocks[i].edges)
                if (x == e) return (int)i;
        return -1;
    }
};

inline BlockTree block_decomposition(const Graph& g) {
    int n = g.vertex_count();
    BlockTree bt;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> stack;
    int timer = 0;

    // iterative DFS to dodge recursion limits on long paths
    struct Frame {
        Vertex v;
        Vertex parent;
        size_t idx;
        EdgeId parent_edge;
        int children;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> fs;
        fs.push_back({root, -1, 0, -1, 0});
        disc[root] = low[root] = timer++;
        while (!fs.empty()) {
            Frame& fr = fs.back();
            const auto& nb = g.neighbors(fr.v);
            if (fr.idx < nb.size()) {
                auto [w, e] = nb[fr.idx++];
                if (e == fr.parent_edge) continue;
                if (disc[w] == -1) {
                    stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    fs.push_back({w, fr.v, 0, e, 0});
                } else if (disc[w] < disc[fr.v]) {
                    stack.push_back(e);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                Vertex v = fr.v;
                EdgeId pe = fr.parent_edge;
                fs.pop_back();
                if (!fs.empty()) {
                    Frame& pf = fs.back();
                    pf.children++;
                    low[pf.v] = std::min(low[pf.v], low[v]);
                    if (low[v] >= disc[pf.v]) {
                        // pop a block ending at parent edge pe
                        BlockTree::Block blk;
                        while (!stack.empty()) {
                            EdgeId e = stack.back();
                            stack.pop_back();
                            blk.edges.push_back(e);
                            if (e == pe) break;
                        }
                        std::sort(blk.edges.begin(), blk.edges.end());
                        std::set<Vertex> vs;
                        for (EdgeId e : blk.edges) {
                            vs.insert(g.edge(e).u);
                            vs.insert(g.edge(e).v);
                        }
                        blk.vertices.assign(vs.begin(), vs.end());
                        bt.blocks.push_back(std::move(blk));
                    }
                }
            }
        }
    }
    std::sort(bt.blocks.begin(), bt.blocks.end(),
              [](const BlockTree::Block& a, const BlockTree::Block& b) { return a.edges.front() < b.edges.front(); });
    bt.blocks_of_vertex.assign(n, {});
    for (size_t bi = 0; bi < bt.blocks.size(); ++bi)
        for (Vertex v : bt.blocks[bi].vertices) bt.blocks_of_vertex[v].push_back((int)bi);
    for (Vertex v = 0; v < n; ++v)
        if (bt.blocks_of_vertex[v].size() >= 2) bt.cut_vertices.push_back(v);
    return bt;
}

inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!g.connected()) return false;
    auto bt = block_decomposition(g);
    return bt.blocks.size() == 1 && !bt.blocks[0].trivial() &&
           (int)bt.blocks[0].vertices.size() == g.vertex_count();
}

} // namespace spg
