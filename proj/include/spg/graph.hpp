#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "spg/errors.hpp"

namespace spg {

using Vertex = int;
using EdgeId = int;

// Sentinel for "no path". Strictly larger than any s_i + 1 that can occur,
// and safe to add small offsets to without overflow.
inline constexpr int kInfDist = 1 << 29;

struct VertexPair {
    Vertex u, v; // normalized u < v
};

// Immutable simple undirected graph. Edge ids are positions in the input
// edge list; keeping input order stable is part of the file-format contract.
class Graph {
  public:
    Graph() = default;

    Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_pairs)
        : n_(vertex_count) {
        if (vertex_count < 0) fail(errc::vertex_out_of_range, "negative vertex count");
        adj_.resize(n_);
        edges_.reserve(edge_pairs.size());
        std::map<std::pair<Vertex, Vertex>, int> seen;
        for (const auto& [a, b] : edge_pairs) {
            if (a < 0 || b < 0 || a >= n_ || b >= n_)
                fail(errc::vertex_out_of_range,
                     "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
            if (a == b) fail(errc::loop_edge, "loop at vertex " + std::to_string(a));
            auto key = std::minmax(a, b);
            if (!seen.emplace(key, (int)edges_.size()).second)
                fail(errc::duplicate_edge,
                     "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
            EdgeId id = (EdgeId)edges_.size();
            edges_.push_back({key.first, key.second});
            adj_[key.first].push_back({key.second, id});
            adj_[key.second].push_back({key.first, id});
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }

    const VertexPair& edge(EdgeId e) const {
        check_edge(e);
        return edges_[e];
    }
    const std::vector<VertexPair>& edges() const { return edges_; }

    // (neighbor, edge id) pairs in insertion order.
    const std::vector<std::pair<Vertex, EdgeId>>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const { return (int)neighbors(v).size(); }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, (int)adj_[v].size());
        return d;
    }

    bool is_subcubic() const { return max_degree() <= 3; }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
        for (const auto& [w, id] : adj_[a])
            if (w == b) return id;
        return std::nullopt;
    }

    bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    // BFS vertex distances from source; kInfDist for unreachable.
    std::vector<int> vertex_distances(Vertex src) const {
        check_vertex(src);
        std::vector<int> dist(n_, kInfDist);
        std::queue<Vertex> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (const auto& [y, id] : adj_[x]) {
                (void)id;
                if (dist[y] == kInfDist) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        return dist;
    }

    bool connected() const {
        if (n_ == 0) return true;
        auto d = vertex_distances(0);
        int reached = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (d[v] < kInfDist) ++reached;
        // isolated vertices count as components of their own
        return reached == n_;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
    }
    void check_edge(EdgeId e) const {
        if (e < 0 || e >= (int)edges_.size()) fail(errc::invalid_edge_id, "edge " + std::to_string(e));
    }

  private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
};

inline Graph build_graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_pairs) {
    return Graph(vertex_count, edge_pairs);
}

// Distance between edges, measured in the line graph: 0 for e == f,
// 1 + (min vertex distance between endpoints) otherwise. Adjacent edges
// are at distance 1, so an s=1 class is a matching and an s=2 class an
// induced matching.
inline int edge_distance(const Graph& g, EdgeId e, EdgeId f) {
    g.check_edge(e);
    g.check_edge(f);
    if (e == f) return 0;
    const auto& pe = g.edge(e);
    auto du = g.vertex_distances(pe.u);
    auto dv = g.vertex_distances(pe.v);
    const auto& pf = g.edge(f);
    int m = std::min(std::min(du[pf.u], du[pf.v]), std::min(dv[pf.u], dv[pf.v]));
    if (m >= kInfDist) return kInfDist;
    return 1 + m;
}

class EdgeDistanceMatrix {
  public:
    EdgeDistanceMatrix() = default;
    explicit EdgeDistanceMatrix(const Graph& g) : m_((size_t)g.edge_count()) {
        int m = g.edge_count();
        d_.assign((size_t)m * m, kInfDist);
        // one BFS per vertex, then fold onto edges
        int n = g.vertex_count();
        std::vector<std::vector<int>> vd(n);
        for (Vertex v = 0; v < n; ++v) vd[v] = g.vertex_distances(v);
        for (EdgeId e = 0; e < m; ++e) {
            at(e, e) = 0;
            const auto& pe = g.edge(e);
            for (EdgeId f = e + 1; f < m; ++f) {
                const auto& pf = g.edge(f);
                int x = std::min(std::min(vd[pe.u][pf.u], vd[pe.u][pf.v]),
                                 std::min(vd[pe.v][pf.u], vd[pe.v][pf.v]));
                int dist = (x >= kInfDist) ? kInfDist : 1 + x;
                at(e, f) = dist;
                at(f, e) = dist;
            }
        }
    }

    int size() const { return (int)m_; }
    int operator()(EdgeId e, EdgeId f) const { return d_[(size_t)e * m_ + (size_t)f]; }

  private:
    int& at(EdgeId e, EdgeId f) { return d_[(size_t)e * m_ + (size_t)f]; }
    size_t m_ = 0;
    std::vector<int> d_;
};

inline EdgeDistanceMatrix distance_matrix(const Graph& g) { return EdgeDistanceMatrix(g); }

// Vertex permutations closed under composition; identity always first.
struct AutomorphismGroup {
    std::vector<std::vector<Vertex>> perms;

    int order() const { return (int)perms.size(); }
};

namespace detail {

inline bool respects_adjacency(const Graph& g, const std::vector<Vertex>& img, Vertex v) {
    // all earlier-assigned pairs involving v must map edges to edges
    for (Vertex u = 0; u < v; ++u) {
        bool e1 = g.has_edge(u, v);
        bool e2 = g.has_edge(img[u], img[v]);
        if (e1 != e2) return false;
    }
    return true;
}

inline void aut_search(const Graph& g, std::vector<Vertex>& img, std::vector<char>& used, Vertex v,
                       const std::vector<int>& deg, AutomorphismGroup& out) {
    int n = g.vertex_count();
    if (v == n) {
        out.perms.push_back(img);
        return;
    }
    for (Vertex w = 0; w < n; ++w) {
        if (used[w] || deg[w] != deg[v]) continue;
        img[v] = w;
        if (respects_adjacency(g, img, v)) {
            used[w] = 1;
            aut_search(g, img, used, v + 1, deg, out);
            used[w] = 0;
        }
    }
    img[v] = -1;
}

} // namespace detail

// Exact automorphism group by degree-pruned backtracking. Intended for the
// small named gadgets; the budget guards against accidental blowups.
inline AutomorphismGroup automorphism_group(const Graph& g, int vertex_budget = 16) {
    if (g.vertex_count() > vertex_budget)
        fail(errc::budget_exceeded, "automorphism search over " + std::to_string(g.vertex_count()) +
                                        " vertices exceeds budget " + std::to_string(vertex_budget));
    AutomorphismGroup out;
    int n = g.vertex_count();
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> img(n, -1);
    std::vector<char> used(n, 0);
    detail::aut_search(g, img, used, 0, deg, out);
    // put identity first, keep the rest in discovery order
    std::vector<Vertex> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    auto it = std::find(out.perms.begin(), out.perms.end(), ident);
    if (it != out.perms.end() && it != out.perms.begin()) std::iter_swap(out.perms.begin(), it);
    return out;
}

// Edge permutation induced by a vertex permutation; fails if the permutation
// does not map the edge set onto itself.
inline std::vector<EdgeId> induced_edge_permutation(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<EdgeId> out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& p = g.edge(e);
        auto f = g.find_edge(perm[p.u], perm[p.v]);
        if (!f) fail(errc::invalid_coloring, "permutation does not preserve edges");
        out[e] = *f;
    }
    return out;
}

} // namespace spg
