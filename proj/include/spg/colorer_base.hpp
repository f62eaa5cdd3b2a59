#pragma once
#include <cstdio>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spg/coloring.hpp"
#include "spg/gadgets.hpp"
#include "spg/graph.hpp"
#include "spg/outerplane.hpp"
#include "spg/solver.hpp"

namespace spg {

struct ReductionStep {
    std::string lemma;
    std::string case_label;
    std::vector<int> removed_vertices;
    std::vector<int> added_vertices;
    std::vector<std::pair<int, int>> removed_edges;
    std::vector<std::pair<int, int>> added_edges;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct GoodCheck {
    std::string constraint;
    bool pass;
};

struct GoodColoringReport {
    EdgeColoring coloring;
    std::vector<GoodCheck> checks;
    bool fallback_used = false;
    ReductionTrace trace;

    bool all_checks_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace colorer {

using VP = std::pair<int, int>;
inline VP vp(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Mutable graph with stable vertex ids across reductions; an edge keeps its
// identity as the (u,v) pair, so colorings transfer between levels by key.
struct WorkGraph {
    std::map<int, std::vector<int>> adj;
    std::set<VP> edge_set;
    std::vector<std::vector<int>> boundaries; // embedding: one per non-trivial block
    int next_vertex = 0;

    static WorkGraph from(const Graph& g, const OuterplaneEmbedding& emb) {
        WorkGraph wg;
        wg.next_vertex = g.vertex_count();
        for (int v = 0; v < g.vertex_count(); ++v) wg.adj[v];
        for (EdgeId e = 0; e < g.edge_count(); ++e) wg.add_edge(g.edge(e).u, g.edge(e).v);
        wg.boundaries = emb.block_boundaries;
        return wg;
    }

    int add_vertex() {
        int v = next_vertex++;
        adj[v];
        return v;
    }
    bool has_edge(int a, int b) const { return edge_set.count(vp(a, b)) != 0; }
    void add_edge(int a, int b) {
        if (!edge_set.insert(vp(a, b)).second) fail(errc::duplicate_edge, "work graph add_edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    void remove_edge(int a, int b) {
        edge_set.erase(vp(a, b));
        auto& A = adj[a];
        A.erase(std::find(A.begin(), A.end(), b));
        auto& B = adj[b];
        B.erase(std::find(B.begin(), B.end(), a));
    }
    void remove_vertex(int v) {
        auto nb = adj[v];
        for (int w : nb) remove_edge(v, w);
        adj.erase(v);
    }
    int degree(int v) const {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : (int)it->second.size();
    }
    int vertex_count() const { return (int)adj.size(); }
    int edge_count() const { return (int)edge_set.size(); }
    std::vector<int> vertices() const {
        std::vector<int> out;
        for (auto& [v, nb] : adj) out.push_back(v);
        return out;
    }

    // compact immutable view; orig_of[i] = stable id of compact vertex i
    Graph to_graph(std::map<int, int>& compact_of, std::vector<int>& orig_of,
                   std::vector<VP>& edge_of) const {
        compact_of.clear();
        orig_of.clear();
        for (auto& [v, nb] : adj) {
            compact_of[v] = (int)orig_of.size();
            orig_of.push_back(v);
        }
        std::vector<std::pair<Vertex, Vertex>> edges;
        edge_of.clear();
        for (const auto& [a, b] : edge_set) {
            edges.push_back({compact_of.at(a), compact_of.at(b)});
            edge_of.push_back({a, b});
        }
        return Graph((int)orig_of.size(), edges);
    }

    OuterplaneEmbedding embedding(const std::map<int, int>& compact_of) const {
        OuterplaneEmbedding emb;
        for (const auto& bd : boundaries) {
            std::vector<Vertex> c;
            for (int v : bd) c.push_back(compact_of.at(v));
            emb.block_boundaries.push_back(c);
        }
        return emb;
    }
};

using CMap = std::map<VP, int>; // edge -> color index

// A face of one block in stable vertex ids.
struct WFace {
    std::vector<int> cycle;
    int block;
    int size() const { return (int)cycle.size(); }
    bool has_edge(int a, int b) const {
        int L = size();
        for (int i = 0; i < L; ++i) {
            int u = cycle[i], v = cycle[(i + 1) % L];
            if (vp(u, v) == vp(a, b)) return true;
        }
        return false;
    }
};

// Faces of one block boundary by laminar chord splitting (same construction
// as bounded_faces, on stable ids).
inline std::vector<WFace> block_faces(const WorkGraph& wg, int block) {
    const auto& bd = wg.boundaries[block];
    int L = (int)bd.size();
    std::map<int, int> pos;
    for (int i = 0; i < L; ++i) pos[bd[i]] = i;
    struct Ch {
        int a, b;
    };
    std::vector<Ch> chords;
    for (int i = 0; i < L; ++i) {
        for (int w : wg.adj.at(bd[i])) {
            auto it = pos.find(w);
            if (it == pos.end()) continue;
            int pa = i, pb = it->second;
            if (pa > pb) continue;
            if ((pa + 1) % L == pb || (pb + 1) % L == pa) continue;
            chords.push_back({pa, pb});
        }
    }
    std::sort(chords.begin(), chords.end(), [](const Ch& x, const Ch& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b > y.b;
    });
    int nc = (int)chords.size();
    std::vector<std::vector<int>> children(nc + 1);
    std::vector<int> stack;
    for (int i = 0; i < nc; ++i) {
        while (!stack.empty() && chords[i].a >= chords[stack.back()].b) stack.pop_back();
        if (stack.empty()) children[nc].push_back(i);
        else children[stack.back()].push_back(i);
        stack.push_back(i);
    }
    std::vector<WFace> out;
    {
        WFace f;
        f.block = block;
        std::map<int, int> jump;
        for (int ki : children[nc]) jump[chords[ki].a] = chords[ki].b;
        int p = 0;
        while (p < L) {
            f.cycle.push_back(bd[p]);
            auto it = jump.find(p);
            p = (it != jump.end()) ? it->second : p + 1;
        }
        out.push_back(std::move(f));
    }
    for (int ci = 0; ci < nc; ++ci) {
        WFace f;
        f.block = block;
        std::map<int, int> jump;
        for (int ki : children[ci]) jump[chords[ki].a] = chords[ki].b;
        int p = chords[ci].a;
        while (p <= chords[ci].b) {
            f.cycle.push_back(bd[p]);
            if (p == chords[ci].b) break;
            auto it = jump.find(p);
            p = (it != jump.end()) ? it->second : p + 1;
        }
        out.push_back(std::move(f));
    }
    return out;
}

// dual adjacency of the faces of one block (faces sharing an edge)
inline std::vector<std::vector<int>> face_dual(const std::vector<WFace>& faces) {
    std::map<VP, std::vector<int>> by_edge;
    for (size_t i = 0; i < faces.size(); ++i) {
        const auto& c = faces[i].cycle;
        for (size_t j = 0; j < c.size(); ++j) by_edge[vp(c[j], c[(j + 1) % c.size()])].push_back((int)i);
    }
    std::vector<std::vector<int>> adj(faces.size());
    for (auto& [e, fs] : by_edge)
        if (fs.size() == 2) {
            adj[fs[0]].push_back(fs[1]);
            adj[fs[1]].push_back(fs[0]);
        }
    return adj;
}

inline std::vector<int> bfs_far_path(const std::vector<std::vector<int>>& adj, int from) {
    std::vector<int> dist(adj.size(), -1), par(adj.size(), -1);
    std::vector<int> q{from};
    dist[from] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int x = q[qi];
        for (int y : adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                par[y] = x;
                q.push_back(y);
            }
    }
    int far = from;
    for (size_t i = 0; i < adj.size(); ++i)
        if (dist[i] > dist[far] || (dist[i] == dist[far] && (int)i < far)) far = (int)i;
    std::vector<int> path;
    for (int x = far; x != -1; x = par[x]) path.push_back(x);
    return path; // path[0] = far end, path.back() = from
}

// full verification of a (possibly partial) coloring on a work graph; on
// violation reports the stable vertex pairs through `where` when asked
struct LevelViolation {
    VP e, f;
    int color_index;
    int distance;
};

inline std::optional<Violation> check_level(const WorkGraph& wg, const SSequence& s, const CMap& cmap,
                                            bool require_total, LevelViolation* where = nullptr) {
    std::map<int, int> compact;
    std::vector<int> orig;
    std::vector<VP> edge_of;
    Graph g = wg.to_graph(compact, orig, edge_of);
    EdgeColoring c(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto it = cmap.find(edge_of[e]);
        if (it != cmap.end()) c.set(e, it->second);
        else if (require_total) {
            if (where) *where = {edge_of[e], edge_of[e], 0, 0};
            return Violation{e, e, 0, 0};
        }
    }
    EdgeDistanceMatrix dm(g);
    auto v = require_total ? verify(g, s, c, dm) : verify_partial(g, s, c, dm);
    if (v.violation && where)
        *where = {edge_of[v.violation->e], edge_of[v.violation->f], v.violation->color_index,
                  v.violation->distance};
    return v.violation;
}

// Lazily bound color names within equal-s blocks, the way the proofs say
// "say f(u0 v0) = 2a". pools = the color indices of each block.
class Symbols {
  public:
    explicit Symbols(std::vector<std::vector<int>> pools) : pools_(std::move(pools)) {}

    // returns false when the symbol is already bound to a different color or
    // the color is taken by another symbol of the same pool
    bool bind(const std::string& sym, int color) {
        auto it = sym2col_.find(sym);
        if (it != sym2col_.end()) return it->second == color;
        for (auto& [s, c] : sym2col_)
            if (c == color && pool_of(s) == pool_of(sym)) return false;
        if (pool_of(sym) < 0) return false;
        bool in_pool = false;
        for (int c : pools_[pool_of(sym)])
            if (c == color) in_pool = true;
        if (!in_pool) return false;
        sym2col_[sym] = color;
        return true;
    }

    int get(const std::string& sym) {
        auto it = sym2col_.find(sym);
        if (it != sym2col_.end()) return it->second;
        int p = pool_of(sym);
        if (p < 0) fail(errc::invalid_coloring, "unknown symbol " + sym);
        for (int c : pools_[p]) {
            bool taken = false;
            for (auto& [s, cc] : sym2col_)
                if (cc == c && pool_of(s) == p) taken = true;
            if (!taken) {
                sym2col_[sym] = c;
                return c;
            }
        }
        fail(errc::invalid_coloring, "pool exhausted for " + sym);
    }

    bool bound(const std::string& sym) const { return sym2col_.count(sym) != 0; }

  private:
    // symbols are "1", "3", "2a".."2d", "1a","1b","2a","2b" depending on the
    // sequence; pool index = 0 for the 1-block, 1 for the 2-block, 2 for 3
    int pool_of(const std::string& sym) const {
        if (sym.empty()) return -1;
        if (sym[0] == '1') return 0;
        if (sym[0] == '2') return 1;
        if (sym[0] == '3') return (int)pools_.size() - 1;
        return -1;
    }
    std::vector<std::vector<int>> pools_;
    std::map<std::string, int> sym2col_;
};

inline Symbols symbols_124() { return Symbols({{1}, {2, 3, 4, 5}}); }          // (1,2^4)
inline Symbols symbols_1243() { return Symbols({{1}, {2, 3, 4, 5}, {6}}); }    // (1,2^4,3)
inline Symbols symbols_11223() { return Symbols({{1, 2}, {3, 4}, {5}}); }      // (1^2,2^2,3)

// ---------------------------------------------------------------------------
// Fallback: exact solve of the current level honoring good-coloring filters,
// with far-away edges pinned to keep the search local.

struct FallbackContext {
    SSequence sequence;
    std::function<bool(const WorkGraph&, const CMap&)> good_filter; // may be empty
    int max_remainder = 40;
};

// remainder = edges that this level's extension was supposed to (re)color
inline std::optional<CMap> fallback_certify(const WorkGraph& wg, const FallbackContext& ctx,
                                            const CMap& parent_colors, const std::set<VP>& remainder) {
#ifdef SPG_COLORER_DEBUG
    std::fprintf(stderr, "[fallback] edges=%d remainder=%zu\n", wg.edge_count(), remainder.size());
#endif
    if ((int)remainder.size() > ctx.max_remainder)
        fail(errc::budget_exceeded,
             "fallback remainder " + std::to_string(remainder.size()) + " exceeds 40 edges");
    std::map<int, int> compact;
    std::vector<int> orig;
    std::vector<VP> edge_of;
    Graph g = wg.to_graph(compact, orig, edge_of);
    EdgeDistanceMatrix dm(g);
    // distance (in edges) from each edge to the remainder set
    std::vector<int> near(g.edge_count(), 1 << 29);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (remainder.count(edge_of[e])) near[e] = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            if (near[f] == 0) near[e] = std::min(near[e], dm(e, f));

    for (int radius : {3, 5, 1 << 28}) {
        EdgeColoring pins(g.edge_count());
        bool pinnable = true;
        int free_edges = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (near[e] >= radius) {
                auto it = parent_colors.find(edge_of[e]);
                if (it != parent_colors.end()) pins.set(e, it->second);
                else pinnable = false;
            } else {
                ++free_edges;
            }
        }
        if (!pinnable) continue;
        if (free_edges > ctx.max_remainder && radius > 5) break;
        SearchConfig cfg;
        cfg.symmetry_breaking = false;
        cfg.node_budget = 40'000'000;
        std::optional<CMap> found;
        EdgeDistanceMatrix dmv(g);
        if (verify_partial(g, ctx.sequence, pins, dmv).violation) continue;
        detail::ConflictTables ct(g, ctx.sequence, dmv);
        detail::Searcher se(g, ctx.sequence, dmv, ct, cfg);
        if (!se.apply_pins(pins)) continue;
        se.run(
            [&](const EdgeColoring& c) {
                CMap m;
                for (EdgeId e = 0; e < g.edge_count(); ++e) m[edge_of[e]] = c.color(e);
                if (!ctx.good_filter || ctx.good_filter(wg, m)) {
                    found = m;
                    return false;
                }
                return true;
            },
            0);
        if (found) return found;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Shared recursion bookkeeping.

struct LevelDelta {
    std::string lemma;
    std::string case_label;
    std::set<int> removed_vertices;
    std::set<int> added_vertices;
    std::set<VP> removed_edges;
    std::set<VP> added_edges;
};

inline void record(ReductionTrace& trace, const LevelDelta& d) {
    ReductionStep st;
    st.lemma = d.lemma;
    st.case_label = d.case_label;
    st.removed_vertices.assign(d.removed_vertices.begin(), d.removed_vertices.end());
    st.added_vertices.assign(d.added_vertices.begin(), d.added_vertices.end());
    st.removed_edges.assign(d.removed_edges.begin(), d.removed_edges.end());
    st.added_edges.assign(d.added_edges.begin(), d.added_edges.end());
    trace.steps.push_back(std::move(st));
}

// Snapshot-based delta capture: apply a mutation to a copy, diff the edge
// sets, and record removed/added vertices and edges.
inline LevelDelta diff(const WorkGraph& before, const WorkGraph& after, std::string lemma,
                       std::string case_label) {
    LevelDelta d;
    d.lemma = std::move(lemma);
    d.case_label = std::move(case_label);
    for (const auto& e : before.edge_set)
        if (!after.edge_set.count(e)) d.removed_edges.insert(e);
    for (const auto& e : after.edge_set)
        if (!before.edge_set.count(e)) d.added_edges.insert(e);
    for (const auto& [v, nb] : before.adj)
        if (!after.adj.count(v)) d.removed_vertices.insert(v);
    for (const auto& [v, nb] : after.adj)
        if (!before.adj.count(v)) d.added_vertices.insert(v);
    return d;
}

// boundary helpers ----------------------------------------------------------

// Replace the (cyclic) consecutive run [from..to] (inclusive endpoints kept)
// by [from, mids..., to] on a boundary. The old interior must match `olds`.
inline void splice_boundary(std::vector<int>& bd, int from, int to, const std::vector<int>& olds,
                            const std::vector<int>& mids) {
    int L = (int)bd.size();
    for (int i = 0; i < L; ++i) {
        if (bd[i] != from) continue;
        for (int dir : {1, -1}) {
            // probe whether olds follow `from` in this direction, ending at `to`
            bool ok = true;
            for (size_t j = 0; j < olds.size(); ++j)
                if (bd[((i + dir * (int)(j + 1)) % L + L) % L] != olds[j]) ok = false;
            if (bd[((i + dir * (int)(olds.size() + 1)) % L + L) % L] != to) ok = false;
            if (!ok) continue;
            std::vector<int> nb;
            nb.push_back(from);
            for (int m : mids) nb.push_back(m);
            // walk from `to` onward (same direction) until back at `from`
            int p = ((i + dir * (int)(olds.size() + 1)) % L + L) % L;
            while (bd[p] != from) {
                nb.push_back(bd[p]);
                p = ((p + dir) % L + L) % L;
            }
            bd = nb;
            return;
        }
    }
    fail(errc::invalid_embedding, "boundary splice: run not found");
}

} // namespace colorer
} // namespace spg
