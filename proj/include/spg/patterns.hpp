#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spg/graph.hpp"
#include "spg/outerplane.hpp"

namespace spg {

enum class GadgetPattern { house, house_without_base, hc };

// Occurrence of a pattern in a host graph. Vertex slots follow the paper's
// names so reports read like the proofs:
//   house:              w1 w2 w3 w4 w5 w6 w7   (triangle w1w2w5, quad w2w3w4w5,
//                                               outgoing w3w6 and w4w7)
//   house_without_base: w1 w2 w3 w4 w5
//   hc:                 z2 z1 v1 vk zk u1 uk z (triangle z1 z2 zk, quad v1 z1 zk vk,
//                                               outgoing u1v1, ukvk, chimney z2z)
struct PatternOccurrence {
    GadgetPattern pattern;
    std::vector<Vertex> map;
};

namespace detail {

struct TriQuad {
    // triangle face (apex, a, b) glued to quad face (a, x, y, b) along edge ab
    Vertex apex, a, b, x, y;
};

// All triangle-face / quad-face pairs sharing an edge, each listed once in a
// canonical orientation (the mirror is a pattern automorphism).
inline std::vector<TriQuad> tri_quad_pairs(const Graph& g, const std::vector<Face>& faces) {
    std::vector<TriQuad> out;
    for (size_t i = 0; i < faces.size(); ++i) {
        for (size_t j = 0; j < faces.size(); ++j) {
            if (i == j) continue;
            const Face& t = faces[i];
            const Face& q = faces[j];
            if (t.size() != 3 || q.size() != 4) continue;
            // shared edge
            std::set<EdgeId> te(t.edges.begin(), t.edges.end());
            std::optional<EdgeId> shared;
            for (EdgeId e : q.edges)
                if (te.count(e)) shared = e;
            if (!shared) continue;
            Vertex a = g.edge(*shared).u, b = g.edge(*shared).v;
            Vertex apex = -1;
            for (Vertex v : t.cycle)
                if (v != a && v != b) apex = v;
            // orient the quad as a,x,y,b
            std::vector<Vertex> qc = q.cycle;
            int pa = -1;
            for (int p = 0; p < 4; ++p)
                if (qc[p] == a) pa = p;
            Vertex nxt = qc[(pa + 1) % 4], prv = qc[(pa + 3) % 4];
            Vertex x, y;
            if (nxt == b) { // quad reads a,b,y,x -> flip
                x = prv;
                y = qc[(pa + 2) % 4];
            } else {
                x = nxt;
                y = qc[(pa + 2) % 4];
            }
            // dedupe by canonical orientation: keep a < b
            if (a > b) {
                std::swap(a, b);
                std::swap(x, y);
            }
            bool dup = false;
            for (const auto& tq : out)
                if (tq.a == a && tq.b == b && tq.apex == apex) dup = true;
            if (!dup) out.push_back({apex, a, b, x, y});
        }
    }
    return out;
}

// outgoing edge at v avoiding the listed vertices; nullopt if none
inline std::optional<Vertex> outgoing(const Graph& g, Vertex v, const std::set<Vertex>& avoid) {
    for (auto [w, e] : g.neighbors(v)) {
        (void)e;
        if (!avoid.count(w)) return w;
    }
    return std::nullopt;
}

} // namespace detail

// Face-anchored matching: a house is a triangle face glued to a 4-face, with
// the two bottom vertices carrying outgoing edges. An HC additionally has a
// chimney edge at the apex. Maps are injective.
inline std::vector<PatternOccurrence> find_gadget_occurrences(const Graph& g,
                                                              const OuterplaneEmbedding& emb,
                                                              GadgetPattern pattern) {
    auto faces = bounded_faces(g, emb); // validates the embedding
    auto pairs = detail::tri_quad_pairs(g, faces);
    std::vector<PatternOccurrence> out;
    for (const auto& tq : pairs) {
        if (pattern == GadgetPattern::house_without_base) {
            out.push_back({pattern, {tq.apex, tq.a, tq.x, tq.y, tq.b}});
            continue;
        }
        std::set<Vertex> core{tq.apex, tq.a, tq.b, tq.x, tq.y};
        auto w6 = detail::outgoing(g, tq.x, core);
        auto w7 = detail::outgoing(g, tq.y, core);
        if (!w6 || !w7 || *w6 == *w7) continue;
        if (pattern == GadgetPattern::house) {
            out.push_back({pattern, {tq.apex, tq.a, tq.x, tq.y, tq.b, *w6, *w7}});
            continue;
        }
        // hc: chimney edge at the apex, leading outside the house
        std::set<Vertex> all(core);
        all.insert(*w6);
        all.insert(*w7);
        auto z = detail::outgoing(g, tq.apex, all);
        if (!z) continue;
        // slots: z2 z1 v1 vk zk u1 uk z
        out.push_back({pattern, {tq.apex, tq.a, tq.x, tq.y, tq.b, *w6, *w7, *z}});
    }
    return out;
}

inline int count_gadget_occurrences(const Graph& g, const OuterplaneEmbedding& emb, GadgetPattern p) {
    return (int)find_gadget_occurrences(g, emb, p).size();
}

} // namespace spg
