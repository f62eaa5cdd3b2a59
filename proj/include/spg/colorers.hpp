#pragma once

#include "spg/colorer_1243.hpp"
#include "spg/colorer_11223.hpp"
#include "spg/colorer_124.hpp"
#include "spg/colorer_base.hpp"

namespace spg {

namespace colorer {

inline EdgeColoring cmap_to_coloring(const Graph& g, const CMap& c) {
    EdgeColoring out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto it = c.find(vp(g.edge(e).u, g.edge(e).v));
        if (it == c.end()) fail(errc::invalid_coloring, "constructive coloring left an edge blank");
        out.set(e, it->second);
    }
    return out;
}

} // namespace colorer

// Theorem engine for S = (1,2^4) on 2-connected subcubic outerplane graphs:
// good coloring = every house occurrence colored Type I.
inline GoodColoringReport good_color_124_2conn(const Graph& g, const OuterplaneEmbedding& emb) {
    if (!g.is_subcubic()) fail(errc::not_subcubic, "good_color_124_2conn");
    if (!is_two_connected(g)) fail(errc::not_two_connected, "good_color_124_2conn");
    auto defects = validate_embedding(g, emb);
    if (!defects.empty()) fail(errc::invalid_embedding, defects.front().what);

    GoodColoringReport rep;
    colorer::Colorer124 engine;
    auto wg = colorer::WorkGraph::from(g, emb);
    auto cmap = engine.run(wg, rep.trace, rep.fallback_used);
    rep.coloring = colorer::cmap_to_coloring(g, cmap);

    SSequence s = parse_sequence("1,2^4");
    EdgeDistanceMatrix dm(g);
    auto verdict = verify(g, s, rep.coloring, dm);
    if (!verdict.valid()) fail(errc::invalid_coloring, "internal: constructive (1,2^4) coloring invalid");
    rep.checks = colorer::Colorer124::good_checks(g, emb, rep.coloring);
    rep.checks.push_back({"coloring passes verify under (1,2^4)", true});
    return rep;
}

// Theorem engine for S = (1,2^4,3) on subcubic outerplane graphs with no
// 2-vertices: every HC occurrence uses a sec2 template (unless the
// house-without-base is itself a block) and no leaf neighbor sees color 3.
inline GoodColoringReport good_color_1243(const Graph& g, const OuterplaneEmbedding& emb) {
    if (!g.is_subcubic()) fail(errc::not_subcubic, "good_color_1243");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) fail(errc::not_subcubic, "good_color_1243 requires no 2-vertices");
    auto defects = validate_embedding(g, emb);
    if (!defects.empty()) fail(errc::invalid_embedding, defects.front().what);

    GoodColoringReport rep;
    colorer::Colorer1243 engine;
    auto wg = colorer::WorkGraph::from(g, emb);
    auto cmap = engine.run(wg, rep.trace, rep.fallback_used);
    rep.coloring = colorer::cmap_to_coloring(g, cmap);

    SSequence s = parse_sequence("1,2^4,3");
    EdgeDistanceMatrix dm(g);
    auto verdict = verify(g, s, rep.coloring, dm);
    if (!verdict.valid()) fail(errc::invalid_coloring, "internal: constructive (1,2^4,3) coloring invalid");
    rep.checks = colorer::Colorer1243::good_checks(g, emb, rep.coloring);
    rep.checks.push_back({"coloring passes verify under (1,2^4,3)", true});
    return rep;
}

// Theorem engine for S = (1^2,2^2,3) on subcubic outerplane graphs with no
// 2-vertices: every HC occurrence uses a sec3 template, with the two-block
// exemption at degree-three chimney tips.
inline GoodColoringReport good_color_11223(const Graph& g, const OuterplaneEmbedding& emb) {
    if (!g.is_subcubic()) fail(errc::not_subcubic, "good_color_11223");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) fail(errc::not_subcubic, "good_color_11223 requires no 2-vertices");
    auto defects = validate_embedding(g, emb);
    if (!defects.empty()) fail(errc::invalid_embedding, defects.front().what);

    GoodColoringReport rep;
    colorer::Colorer11223 engine;
    auto wg = colorer::WorkGraph::from(g, emb);
    auto cmap = engine.run(wg, rep.trace, rep.fallback_used);
    rep.coloring = colorer::cmap_to_coloring(g, cmap);

    SSequence s = parse_sequence("1^2,2^2,3");
    EdgeDistanceMatrix dm(g);
    auto verdict = verify(g, s, rep.coloring, dm);
    if (!verdict.valid()) fail(errc::invalid_coloring, "internal: constructive (1^2,2^2,3) coloring invalid");
    rep.checks = colorer::Colorer11223::good_checks(g, emb, rep.coloring);
    rep.checks.push_back({"coloring passes verify under (1^2,2^2,3)", true});
    return rep;
}

} // namespace spg
