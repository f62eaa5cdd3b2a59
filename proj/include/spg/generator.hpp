#pragma once

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "spg/graph.hpp"
#include "spg/outerplane.hpp"

namespace spg {

enum class GenMode { any, two_connected, no_two_vertices };

struct GeneratorParams {
    int face_count_min = 1;
    int face_count_max = 6;
    std::vector<int> face_size_weights = {3, 3, 2, 1, 1, 1}; // sizes 3..8
    double pendant_tree_prob = 0.3;
    GenMode mode = GenMode::any;
    int vertex_cap = 40;

    void validate() const {
        if (face_count_min < 1 || face_count_max < face_count_min)
            fail(errc::infeasible_params, "bad face count range");
        if (face_size_weights.empty() || face_size_weights.size() > 6)
            fail(errc::infeasible_params, "face size weights cover sizes 3..8");
        int pos = 0;
        for (int w : face_size_weights) {
            if (w < 0) fail(errc::infeasible_params, "negative weight");
            pos += w;
        }
        if (!pos) fail(errc::infeasible_params, "all weights zero");
        if (vertex_cap < 3) fail(errc::infeasible_params, "vertex cap below 3");
    }
};

namespace detail {

struct Builder {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> degree;
    std::vector<std::vector<Vertex>> boundaries;

    Vertex add_vertex() {
        degree.push_back(0);
        return (int)degree.size() - 1;
    }
    void add_edge(Vertex a, Vertex b) {
        edges.push_back({a, b});
        ++degree[a];
        ++degree[b];
    }
};

inline int sample_face_size(std::mt19937_64& rng, const std::vector<int>& weights) {
    std::discrete_distribution<int> d(weights.begin(), weights.end());
    return 3 + d(rng);
}

// Grows one 2-connected outerplane assembly by gluing faces onto free
// boundary edges; returns the number of faces actually placed.
inline int grow_assembly(Builder& b, std::mt19937_64& rng, const GeneratorParams& p, int face_budget) {
    int size = sample_face_size(rng, p.face_size_weights);
    if ((int)b.degree.size() + size > p.vertex_cap) return 0;
    std::vector<Vertex> boundary;
    for (int i = 0; i < size; ++i) boundary.push_back(b.add_vertex());
    for (int i = 0; i < size; ++i) b.add_edge(boundary[i], boundary[(i + 1) % size]);
    int placed = 1;
    while (placed < face_budget) {
        // free boundary edges: consecutive boundary pairs with both endpoints
        // below degree 3
        std::vector<int> free_pos;
        int L = (int)boundary.size();
        for (int i = 0; i < L; ++i)
            if (b.degree[boundary[i]] < 3 && b.degree[boundary[(i + 1) % L]] < 3) free_pos.push_back(i);
        if (free_pos.empty()) break;
        int fsize = sample_face_size(rng, p.face_size_weights);
        if ((int)b.degree.size() + fsize - 2 > p.vertex_cap) break;
        int pos = free_pos[rng() % free_pos.size()];
        Vertex va = boundary[pos], vb = boundary[(pos + 1) % L];
        std::vector<Vertex> path;
        for (int i = 0; i < fsize - 2; ++i) path.push_back(b.add_vertex());
        Vertex prev = va;
        for (Vertex x : path) {
            b.add_edge(prev, x);
            prev = x;
        }
        b.add_edge(prev, vb);
        boundary.insert(boundary.begin() + pos + 1, path.begin(), path.end());
        ++placed;
    }
    b.boundaries.push_back(boundary);
    return placed;
}

inline void grow_pendant_tree(Builder& b, std::mt19937_64& rng, Vertex root, int cap) {
    // small random tree; every added vertex may branch once more
    std::vector<Vertex> frontier{root};
    int steps = 1 + (int)(rng() % 4);
    for (int s = 0; s < steps && (int)b.degree.size() < cap; ++s) {
        Vertex at = frontier[rng() % frontier.size()];
        if (b.degree[at] >= 3) continue;
        Vertex nv = b.add_vertex();
        b.add_edge(at, nv);
        frontier.push_back(nv);
    }
}

} // namespace detail

// Seeded random subcubic outerplane instance. Postconditions: simple,
// subcubic, validate_embedding passes, weak dual a forest; two_connected
// mode yields a single non-trivial block; no_two_vertices mode leaf-augments
// every 2-vertex.
inline std::pair<Graph, OuterplaneEmbedding> random_outerplanar(const GeneratorParams& params,
                                                                std::uint64_t seed) {
    params.validate();
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull);
    for (int attempt = 0; attempt < 64; ++attempt) {
        detail::Builder b;
        int want_faces = params.face_count_min +
                         (int)(rng() % (std::uint64_t)(params.face_count_max - params.face_count_min + 1));
        int assemblies = 1;
        if (params.mode != GenMode::two_connected && want_faces >= 2 && rng() % 3 == 0) assemblies = 2;
        int placed_total = 0;
        for (int a = 0; a < assemblies; ++a) {
            int budget = (a == assemblies - 1) ? want_faces - placed_total
                                               : std::max(1, want_faces / assemblies);
            if (budget <= 0) break;
            int placed = detail::grow_assembly(b, rng, params, budget);
            if (placed == 0) break;
            placed_total += placed;
        }
        if (b.boundaries.empty()) continue;
        // chain assemblies with bridge edges between low-degree boundary vertices
        bool chained = true;
        for (size_t a = 1; a < b.boundaries.size(); ++a) {
            std::vector<Vertex> from, to;
            for (Vertex v : b.boundaries[a - 1])
                if (b.degree[v] < 3) from.push_back(v);
            for (Vertex v : b.boundaries[a])
                if (b.degree[v] < 3) to.push_back(v);
            if (from.empty() || to.empty()) {
                chained = false;
                break;
            }
            b.add_edge(from[rng() % from.size()], to[rng() % to.size()]);
        }
        if (!chained) continue;
        if (params.mode == GenMode::any) {
            std::vector<Vertex> spots;
            for (Vertex v = 0; v < (int)b.degree.size(); ++v)
                if (b.degree[v] < 3) spots.push_back(v);
            for (Vertex v : spots)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < params.pendant_tree_prob)
                    detail::grow_pendant_tree(b, rng, v, params.vertex_cap);
        } else if (params.mode == GenMode::no_two_vertices) {
            // leaf edges at every 2-vertex (degree <= 3 kept)
            int nv = (int)b.degree.size();
            for (Vertex v = 0; v < nv; ++v)
                if (b.degree[v] == 2) {
                    Vertex leaf = b.add_vertex();
                    b.add_edge(v, leaf);
                }
        }
        Graph g((int)b.degree.size(), b.edges);
        OuterplaneEmbedding emb;
        emb.block_boundaries = b.boundaries;
        if (!g.is_subcubic()) continue;
        if (!validate_embedding(g, emb).empty()) continue;
        if (params.mode == GenMode::two_connected && !is_two_connected(g)) continue;
        if (params.mode == GenMode::no_two_vertices) {
            bool ok = true;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == 2) ok = false;
            if (!ok) continue;
        }
        return {g, emb};
    }
    fail(errc::infeasible_params, "could not generate an instance within 64 attempts");
}

// Leaf-edge augmentation: every 2-vertex receives one new leaf edge.
// Original edge ids are unchanged (the mapping is the identity prefix), so
// restricting a coloring of the augmented graph to them is a plain prefix
// restriction, valid by monotonicity.
struct Augmented {
    Graph graph;
    OuterplaneEmbedding embedding;
    std::vector<EdgeId> original_edges; // augmented id of each original edge, = identity
};

inline Augmented augment_no_2_vertices(const Graph& g, const OuterplaneEmbedding& emb) {
    if (!g.is_subcubic()) fail(errc::not_subcubic, "augment_no_2_vertices needs a subcubic graph");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back({g.edge(e).u, g.edge(e).v});
    int n = g.vertex_count();
    int next = n;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 2) edges.push_back({v, next++});
    Augmented out{Graph(next, edges), emb, {}};
    out.original_edges.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.original_edges[e] = e;
    return out;
}

} // namespace spg
