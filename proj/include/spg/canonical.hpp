#pragma once

#include <set>
#include <string>
#include <vector>

#include "spg/coloring.hpp"
#include "spg/graph.hpp"
#include "spg/sequence.hpp"

namespace spg {

// "Up to symmetry" is formalized as: colorings are equivalent when one maps
// to the other by permuting color indices within blocks of equal s_i and/or
// applying a graph automorphism. The key is the minimal edge-id -> color
// word over all automorphisms, with colors renamed within each block by
// first occurrence (which is the lexicographic minimum over block
// permutations for a fixed edge order).
inline std::vector<int> canonical_word(const Graph& g, const SSequence& s, const EdgeColoring& c,
                                       const AutomorphismGroup& auts) {
    if (!c.total() || c.edge_count() != g.edge_count())
        fail(errc::invalid_coloring, "canonical_key needs a total coloring");
    int m = g.edge_count();
    int k = s.size();
    std::vector<int> block_of(k + 1, 0), block_first(k + 1, 0);
    {
        auto bs = s.blocks();
        for (size_t b = 0; b < bs.size(); ++b)
            for (int i = bs[b].first; i <= bs[b].second; ++i) {
                block_of[i] = (int)b;
                block_first[i] = bs[b].first;
            }
    }
    std::vector<int> best;
    std::vector<int> word(m), rename(k + 1), opened; // rename[old color] = new color, 0 = unset
    for (const auto& perm : auts.perms) {
        auto eperm = induced_edge_permutation(g, perm);
        // relabeled coloring: edge eperm[e] gets color c(e); equivalently the
        // word at position x reads c(inverse(x)).
        std::vector<int> inv(m);
        for (EdgeId e = 0; e < m; ++e) inv[eperm[e]] = e;
        std::fill(rename.begin(), rename.end(), 0);
        std::vector<int> next_in_block;
        {
            auto bs = s.blocks();
            next_in_block.assign(bs.size(), 0);
            for (size_t b = 0; b < bs.size(); ++b) next_in_block[b] = bs[b].first;
        }
        for (EdgeId x = 0; x < m; ++x) {
            int old = c.color(inv[x]);
            if (!rename[old]) rename[old] = next_in_block[block_of[old]]++;
            word[x] = rename[old];
        }
        if (best.empty() || word < best) best = word;
    }
    return best;
}

inline std::string canonical_key(const Graph& g, const SSequence& s, const EdgeColoring& c,
                                 const AutomorphismGroup& auts) {
    auto w = canonical_word(g, s, c, auts);
    std::string out;
    out.reserve(w.size() * 3);
    for (int x : w) {
        out += std::to_string(x);
        out += '.';
    }
    return out;
}

inline int count_orbits(const Graph& g, const SSequence& s, const std::vector<EdgeColoring>& colorings,
                        const AutomorphismGroup& auts) {
    std::set<std::vector<int>> keys;
    for (const auto& c : colorings) keys.insert(canonical_word(g, s, c, auts));
    return (int)keys.size();
}

} // namespace spg
