#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spg/graph.hpp"
#include "spg/sequence.hpp"

namespace spg {

// Map edge id -> color index in 1..k; 0 means uncolored. May be partial
// (pins) or total (solution).
class EdgeColoring {
  public:
    EdgeColoring() = default;
    explicit EdgeColoring(int edge_count) : c_((size_t)edge_count, 0) {}

    int edge_count() const { return (int)c_.size(); }
    int color(EdgeId e) const { return c_[(size_t)e]; }
    void set(EdgeId e, int color_index) { c_[(size_t)e] = color_index; }
    void unset(EdgeId e) { c_[(size_t)e] = 0; }
    bool colored(EdgeId e) const { return c_[(size_t)e] != 0; }

    bool total() const {
        for (int c : c_)
            if (c == 0) return false;
        return !c_.empty() || true;
    }

    int assigned_count() const {
        int k = 0;
        for (int c : c_)
            if (c) ++k;
        return k;
    }

    const std::vector<int>& raw() const { return c_; }

    bool operator==(const EdgeColoring& o) const { return c_ == o.c_; }
    bool operator<(const EdgeColoring& o) const { return c_ < o.c_; }

  private:
    std::vector<int> c_;
};

struct Violation {
    EdgeId e, f;
    int color_index;
    int distance;
};

// Valid, or the lexicographically first violating pair.
struct Verdict {
    std::optional<Violation> violation;
    bool valid() const { return !violation.has_value(); }
};

// Checks the packing condition: same-colored distinct edges e,f with color i
// need distance >= s_i + 1. Reports the first violation by (e,f) edge-id order.
inline Verdict verify(const Graph& g, const SSequence& s, const EdgeColoring& c,
                      const EdgeDistanceMatrix& dm) {
    if (c.edge_count() != g.edge_count() || dm.size() != g.edge_count())
        fail(errc::invalid_coloring, "coloring/matrix size mismatch");
    int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        if (!c.colored(e)) fail(errc::partial_coloring, "edge " + std::to_string(e) + " uncolored");
        if (c.color(e) < 1 || c.color(e) > s.size())
            fail(errc::index_out_of_range, "color " + std::to_string(c.color(e)));
    }
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            if (c.color(e) != c.color(f)) continue;
            int i = c.color(e);
            int d = dm(e, f);
            if (d <= s.value(i)) return Verdict{Violation{e, f, i, d}};
        }
    }
    return Verdict{};
}

// Same check over a partial coloring: only colored pairs are constrained.
// Used by the solver for pin consistency and by the colorers mid-extension.
inline Verdict verify_partial(const Graph& g, const SSequence& s, const EdgeColoring& c,
                              const EdgeDistanceMatrix& dm) {
    int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        if (!c.colored(e)) continue;
        if (c.color(e) < 1 || c.color(e) > s.size())
            fail(errc::index_out_of_range, "color " + std::to_string(c.color(e)));
        for (EdgeId f = e + 1; f < m; ++f) {
            if (!c.colored(f) || c.color(e) != c.color(f)) continue;
            int d = dm(e, f);
            if (d <= s.value(c.color(e))) return Verdict{Violation{e, f, c.color(e), d}};
        }
    }
    return Verdict{};
}

// Monotone relaxation: the identity on the assignment, legal whenever the
// target sequence is pointwise <= the source (a distance-(s_i+1) class is a
// fortiori a distance-(t_i+1) class for t_i <= s_i). Callers re-verify.
inline EdgeColoring relax(const EdgeColoring& c, const SSequence& s, const SSequence& target) {
    if (target.size() != s.size())
        fail(errc::incompatible_target, "sequence lengths differ: " + s.str() + " vs " + target.str());
    for (int i = 1; i <= s.size(); ++i)
        if (target.value(i) > s.value(i))
            fail(errc::incompatible_target, "target " + target.str() + " not pointwise <= " + s.str());
    return c;
}

} // namespace spg
