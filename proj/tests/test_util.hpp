#pragma once

#include <random>
#include <set>
#include <vector>

#include "spg/graph.hpp"

// Test-only helpers: independent oracles and instance generators. These must
// not share code with the implementation paths they check.
namespace testutil {

// Build the line graph explicitly and BFS on it: the reference for
// edge_distance.
inline int line_graph_bfs_distance(const spg::Graph& g, spg::EdgeId e, spg::EdgeId f) {
    int m = g.edge_count();
    std::vector<std::vector<int>> adj(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto pa = g.edge(a);
            auto pb = g.edge(b);
            if (pa.u == pb.u || pa.u == pb.v || pa.v == pb.u || pa.v == pb.v) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    std::vector<int> dist(m, spg::kInfDist);
    std::vector<int> queue{e};
    dist[e] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int y : adj[x])
            if (dist[y] == spg::kInfDist) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist[f];
}

// Random simple subcubic graph with at most max_edges edges.
inline spg::Graph random_subcubic(std::mt19937_64& rng, int max_vertices, int max_edges) {
    int n = 2 + (int)(rng() % (std::uint64_t)(max_vertices - 1));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    std::set<std::pair<int, int>> seen;
    int want = (int)(rng() % (std::uint64_t)(max_edges + 1));
    for (int tries = 0; tries < 10 * want + 10 && (int)edges.size() < want; ++tries) {
        int a = (int)(rng() % n), b = (int)(rng() % n);
        if (a == b) continue;
        if (deg[a] >= 3 || deg[b] >= 3) continue;
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
        edges.push_back(key);
        ++deg[a];
        ++deg[b];
    }
    return spg::Graph(n, edges);
}

} // namespace testutil
