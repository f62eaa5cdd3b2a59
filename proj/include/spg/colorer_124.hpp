#pragma once
#include <cstdio>

#include "spg/colorer_base.hpp"
#include "spg/patterns.hpp"

namespace spg {
namespace colorer {

// Constructive (1,2^4)-coloring of 2-connected subcubic outerplane graphs
// with every house colored Type I. Recursion inverts the paper's minimal
// counterexample: reduce a configuration, color the smaller graph, extend by
// the matching case.
class Colorer124 {
  public:
    Colorer124() : seq_(parse_sequence("1,2^4")) {}

    CMap run(const WorkGraph& input, ReductionTrace& trace, bool& fallback_used) {
        trace_ = &trace;
        fallback_used_ = false;
        CMap out = level(input, 0);
        fallback_used = fallback_used_;
        return out;
    }

    // Type I test for one house occurrence (w1..w7 slot order)
    static bool house_is_type1(const CMap& c, const std::vector<int>& w) {
        auto col = [&](int a, int b) {
            auto it = c.find(vp(a, b));
            return it == c.end() ? 0 : it->second;
        };
        int w25 = col(w[1], w[4]), w34 = col(w[2], w[3]);
        int w12 = col(w[0], w[1]), w47 = col(w[3], w[6]);
        int w15 = col(w[0], w[4]), w36 = col(w[2], w[5]);
        int w23 = col(w[1], w[2]), w45 = col(w[3], w[4]);
        if (w25 != 1 || w34 != 1) return false;
        if (w12 != w47 || w15 != w36) return false;
        std::set<int> twos{w12, w15, w23, w45};
        return twos.size() == 4 && !twos.count(1);
    }

    static std::vector<GoodCheck> good_checks(const Graph& g, const OuterplaneEmbedding& emb,
                                              const EdgeColoring& c) {
        CMap cm;
        for (EdgeId e = 0; e < g.edge_count(); ++e) cm[vp(g.edge(e).u, g.edge(e).v)] = c.color(e);
        std::vector<GoodCheck> out;
        auto occs = find_gadget_occurrences(g, emb, GadgetPattern::house);
        bool all = true;
        for (const auto& o : occs)
            if (!house_is_type1(cm, o.map)) all = false;
        out.push_back({"every house occurrence colored Type I", all});
        return out;
    }

  private:
    SSequence seq_;
    ReductionTrace* trace_ = nullptr;
    bool fallback_used_ = false;

    static int third_neighbor(const WorkGraph& wg, int v, int not1, int not2) {
        for (int w : wg.adj.at(v))
            if (w != not1 && w != not2) return w;
        return -1;
    }

    static VP shared_edge(const WFace& a, const WFace& b) {
        std::set<VP> ea;
        int L = a.size();
        for (int i = 0; i < L; ++i) ea.insert(vp(a.cycle[i], a.cycle[(i + 1) % L]));
        int M = b.size();
        for (int i = 0; i < M; ++i) {
            VP e = vp(b.cycle[i], b.cycle[(i + 1) % M]);
            if (ea.count(e)) return e;
        }
        fail(errc::invalid_embedding, "faces share no edge");
    }

    // rotate a face cycle so it reads v1, v2, ..., vk with (v1,vk) = anchor
    static std::vector<int> orient_on(const WFace& f, VP anchor) {
        int L = f.size();
        for (int i = 0; i < L; ++i) {
            int u = f.cycle[i], v = f.cycle[(i + 1) % L];
            if (vp(u, v) != anchor) continue;
            std::vector<int> out;
            for (int j = 0; j < L; ++j) out.push_back(f.cycle[(i + 1 + j) % L]);
            return out; // out.front() = v, out.back() = u
        }
        fail(errc::invalid_embedding, "anchor not on face");
    }

    void assign(CMap& c, int a, int b, int color) { c[vp(a, b)] = color; }

    // replace the boundary arc between v1 and vk whose interior equals
    // `expect` (as a set) by mids
    static void replace_arc(std::vector<int>& bd, int v1, int vk, const std::set<int>& expect,
                            const std::vector<int>& mids) {
        int L = (int)bd.size();
        int p1 = -1;
        for (int i = 0; i < L; ++i)
            if (bd[i] == v1) p1 = i;
        if (p1 < 0) fail(errc::invalid_embedding, "arc endpoint missing");
        for (int dir : {1, -1}) {
            std::set<int> run;
            int p = (p1 + dir + L) % L;
            while (bd[p] != vk && (int)run.size() <= L) {
                run.insert(bd[p]);
                p = (p + dir + L) % L;
            }
            if (bd[p] != vk || run != expect) continue;
            std::vector<int> nb{v1};
            for (int m : mids) nb.push_back(m);
            // continue from vk around the untouched side back to v1
            while (bd[p] != v1) {
                nb.push_back(bd[p]);
                p = (p + dir + L) % L;
            }
            bd = nb;
            return;
        }
        fail(errc::invalid_embedding, "boundary arc not found");
    }

    CMap finish_level(const WorkGraph& wg, const WorkGraph& reduced, CMap&& attempt, const CMap& f,
                      const char* lemma) {
        if (!check_level(wg, seq_, attempt, true)) return std::move(attempt);
        // CaseDispatchMiss: certified fallback on the local remainder
        fallback_used_ = true;
#ifdef SPG_COLORER_DEBUG
        std::fprintf(stderr, "[miss124] %s %s\n", lemma,
                     trace_->steps.empty() ? "" : trace_->steps.back().case_label.c_str());
#endif
        std::set<VP> remainder;
        for (const auto& e : wg.edge_set)
            if (!reduced.edge_set.count(e)) remainder.insert(e);
        for (const auto& [e, col] : attempt) {
            auto it = f.find(e);
            if (it != f.end() && it->second != col) remainder.insert(e);
        }
        FallbackContext ctx{seq_, good_filter(), 40};
        auto fb = fallback_certify(wg, ctx, f, remainder);
        if (!fb)
            fail(errc::fallback_unsat, std::string("fallback unsat after ") + lemma +
                                           " (reduction bookkeeping or case table bug)");
        return *fb;
    }

    std::function<bool(const WorkGraph&, const CMap&)> good_filter() const {
        return [](const WorkGraph& w, const CMap& c) {
            std::map<int, int> compact;
            std::vector<int> orig;
            std::vector<VP> edge_of;
            Graph g = w.to_graph(compact, orig, edge_of);
            auto emb = w.embedding(compact);
            auto occs = find_gadget_occurrences(g, emb, GadgetPattern::house);
            for (const auto& o : occs) {
                std::vector<int> stable;
                for (int v : o.map) stable.push_back(orig[v]);
                if (!house_is_type1(c, stable)) return false;
            }
            return true;
        };
    }

    // ------------------------------------------------------------------ level
    CMap level(const WorkGraph& wg, int depth) {
        if (depth > 4 * (wg.edge_count() + wg.vertex_count()) + 64)
            fail(errc::budget_exceeded, "reduction recursion does not terminate");
        auto faces = block_faces(wg, 0);
        if (faces.size() == 1) return base_cycle(wg);
        auto dual = face_dual(faces);

        // Lemma: every pendant face is a triangle — reduce any bigger one
        for (size_t fi = 0; fi < faces.size(); ++fi)
            if (dual[fi].size() == 1 && faces[fi].size() >= 4)
                return reduce_pendant(wg, faces, dual, (int)fi, depth);

        if (faces.size() == 2) return base_two_triangles(wg, faces);

        auto p1 = bfs_far_path(dual, 0);
        auto path = bfs_far_path(dual, p1[0]); // longest path, path.back() = p1[0]
        if (path.front() > path.back()) std::reverse(path.begin(), path.end());
        // path[0] = F1 (leaf), path[1] = F2, ...
        if (faces[path[1]].size() >= 5) return reduce_f2(wg, faces, dual, path, depth);
        if (path.size() == 3) return base_special_house(wg, faces, path);
        // an oversized face hanging on F3 is the F2 of an equally long path;
        // reduce it first
        for (int q : dual[path[2]]) {
            if (q == path[3] || q == path[1]) continue;
            if (faces[q].size() >= 5) {
                std::vector<int> alt = {path[0], q, path[2], path[3]};
                return reduce_f2(wg, faces, dual, alt, depth);
            }
        }
        return extend_f3(wg, faces, dual, path, depth);
    }

    // ------------------------------------------------------------- base cases
    CMap base_cycle(const WorkGraph& wg) {
        const auto& bd = wg.boundaries[0];
        int n = (int)bd.size();
        Symbols sy = symbols_124();
        CMap c;
        auto edge_color = [&](int i, const char* sym) { assign(c, bd[i % n], bd[(i + 1) % n], sy.get(sym)); };
        static const char* pat[3] = {"1", "2a", "2b"};
        int full = (n % 3 == 0) ? n : (n % 3 == 1 ? n - 1 : n - 2);
        for (int i = 0; i < full; ++i) edge_color(i, pat[i % 3]);
        if (n % 3 == 1) edge_color(n - 1, "2c");
        if (n % 3 == 2) {
            edge_color(n - 2, "1");
            edge_color(n - 1, "2c");
        }
        if (check_level(wg, seq_, c, true)) fail(errc::invalid_coloring, "cycle base failed");
        return c;
    }

    CMap base_two_triangles(const WorkGraph& wg, const std::vector<WFace>& faces) {
        // five edges pairwise within distance two: all colors distinct
        CMap c;
        VP s = shared_edge(faces[0], faces[1]);
        assign(c, s.first, s.second, 1);
        int next = 2;
        for (const auto& e : wg.edge_set)
            if (e != s) c[e] = next++;
        if (check_level(wg, seq_, c, true)) fail(errc::invalid_coloring, "two-triangle base failed");
        return c;
    }

    CMap base_special_house(const WorkGraph& wg, const std::vector<WFace>& faces,
                            const std::vector<int>& path) {
        // quad with a triangle on each of two opposite edges: Type I coloring
        const WFace& t1 = faces[path[0]];
        const WFace& q = faces[path[1]];
        const WFace& t2 = faces[path[2]];
        if (q.size() != 4 || t1.size() != 3 || t2.size() != 3)
            fail(errc::invalid_coloring, "special house shape mismatch");
        VP s1 = shared_edge(q, t1);
        auto cyc = orient_on(q, s1); // w5, w4, w3, w2 with (w2,w5) = s1
        int w5 = cyc[0], w4 = cyc[1], w3 = cyc[2], w2 = cyc[3];
        int apex1 = -1, apex2 = -1;
        for (int v : t1.cycle)
            if (v != w2 && v != w5) apex1 = v;
        for (int v : t2.cycle)
            if (v != w3 && v != w4) apex2 = v;
        Symbols sy = symbols_124();
        CMap c;
        assign(c, w2, w5, sy.get("1"));
        assign(c, w3, w4, sy.get("1"));
        assign(c, apex1, w2, sy.get("2a"));
        assign(c, apex1, w5, sy.get("2b"));
        assign(c, apex2, w4, sy.get("2a"));
        assign(c, apex2, w3, sy.get("2b"));
        assign(c, w2, w3, sy.get("2c"));
        assign(c, w4, w5, sy.get("2d"));
        if (check_level(wg, seq_, c, true)) fail(errc::invalid_coloring, "special house base failed");
        return c;
    }

    // ------------------------------------------------- pendant face reduction
    CMap reduce_pendant(const WorkGraph& wg, const std::vector<WFace>& faces,
                        const std::vector<std::vector<int>>& dual, int fi, int depth) {
        const WFace& f1 = faces[fi];
        const WFace& f2 = faces[dual[fi][0]];
        VP anchor = shared_edge(f1, f2);
        auto vs = orient_on(f1, anchor); // v1 .. vk, (v1,vk) = anchor chord
        int k = (int)vs.size();
        int v1 = vs[0], vk = vs[k - 1];

        WorkGraph red = wg;
        std::set<int> interior(vs.begin() + 1, vs.end() - 1);
        for (int v : interior) red.remove_vertex(v);
        int v = red.add_vertex();
        red.add_edge(v, v1);
        red.add_edge(v, vk);
        replace_arc(red.boundaries[0], v1, vk, interior, {v});
        record(*trace_, diff(wg, red, "pendant-triangle", "k=" + std::to_string(k)));

        CMap f = level(red, depth + 1);
        int u1 = third_neighbor(wg, v1, vs[1], vk);
        int uk = third_neighbor(wg, vk, vs[k - 2], v1);
        CMap out = f;
        out.erase(vp(v, v1));
        out.erase(vp(v, vk));

        auto col = [&](int a, int b) { return f.at(vp(a, b)); };
        int ones = (col(u1, v1) == 1) + (col(v1, vk) == 1) + (col(vk, uk) == 1);
        Symbols sy = symbols_124();
        bool ok = true;
        bool flip = false;
        std::string label;
        if (ones == 2) {
            label = "case1";
            ok = col(u1, v1) == 1 && col(vk, uk) == 1;
            ok = ok && sy.bind("2a", col(v1, vk)) && sy.bind("2b", col(v, v1)) && sy.bind("2c", col(v, vk));
            if (ok) {
                assign(out, vs[0], vs[1], sy.get("2b"));
                assign(out, vs[k - 2], vs[k - 1], sy.get("2c"));
                static const char* pat[4] = {"1", "2d", "1", "2b"};
                for (int i = 1; i + 2 <= k - 1; ++i) assign(out, vs[i], vs[i + 1], sy.get(pat[(i - 1) % 4]));
            }
        } else if (ones == 1 && col(v1, vk) == 1) {
            label = "case2.1";
            ok = sy.bind("2a", col(u1, v1)) && sy.bind("2b", col(uk, vk)) && sy.bind("2c", col(v, v1)) &&
                 sy.bind("2d", col(v, vk));
            if (ok) {
                assign(out, vs[0], vs[1], sy.get("2c"));
                assign(out, vs[k - 2], vs[k - 1], sy.get("2d"));
                static const char* pat[4] = {"1", "2a", "1", "2c"};
                for (int i = 1; i + 2 <= k - 1; ++i) assign(out, vs[i], vs[i + 1], sy.get(pat[(i - 1) % 4]));
            }
        } else if (ones == 1) {
            label = "case2.2";
            if (col(vk, uk) == 1) { // mirror so the 1 sits on u1 v1
                std::reverse(vs.begin(), vs.end());
                std::swap(v1, vk);
                std::swap(u1, uk);
                flip = true;
            }
            ok = col(u1, v1) == 1 && sy.bind("2a", col(v1, vk)) && sy.bind("2b", col(vk, uk)) &&
                 sy.bind("2c", col(v, v1));
            if (ok) {
                assign(out, vs[0], vs[1], sy.get("2c"));
                assign(out, vs[k - 2], vs[k - 1], sy.get("1"));
                // pattern [2d,1,2b,1] from v_{k-2}v_{k-1} down to v2v3
                static const char* pat[4] = {"2d", "1", "2b", "1"};
                int step = 0;
                for (int i = k - 3; i >= 1; --i) assign(out, vs[i], vs[i + 1], sy.get(pat[step++ % 4]));
            }
        } else {
            label = "case3";
            if (col(v, vk) == 1 && col(v, v1) != 1) {
                std::reverse(vs.begin(), vs.end());
                std::swap(v1, vk);
                std::swap(u1, uk);
                flip = true;
            }
            ok = col(v, v1) == 1;
            // switch colors of v v1 and v1 vk, then case 2.1
            ok = ok && sy.bind("2a", col(u1, v1)) && sy.bind("2b", col(uk, vk)) &&
                 sy.bind("2c", col(v1, vk)) && sy.bind("2d", col(v, vk));
            if (ok) {
                assign(out, v1, vk, 1);
                assign(out, vs[0], vs[1], sy.get("2c"));
                assign(out, vs[k - 2], vs[k - 1], sy.get("2d"));
                static const char* pat[4] = {"1", "2a", "1", "2c"};
                for (int i = 1; i + 2 <= k - 1; ++i) assign(out, vs[i], vs[i + 1], sy.get(pat[(i - 1) % 4]));
            }
        }
        (void)flip;
        trace_->steps.back().case_label += " " + label;
        if (!ok) out = f; // force the fallback path with untouched parent colors
        return finish_level(wg, red, std::move(out), f, "pendant-triangle");
    }

    // --------------------------------------------------- F2 >= 5 (two layers)
    CMap reduce_f2(const WorkGraph& wg, const std::vector<WFace>& faces,
                   const std::vector<std::vector<int>>& dual, const std::vector<int>& path, int depth) {
        const WFace& f2 = faces[path[1]];
        const WFace& f3 = faces[path[2]];
        VP anchor = shared_edge(f2, f3);
        auto vs = orient_on(f2, anchor);
        int k = (int)vs.size();
        int v1 = vs[0], vk = vs[k - 1];

        // pendant triangles riding on F2 (F1 among them)
        std::map<int, int> tri_apex; // boundary position i -> apex of triangle on (v_i, v_{i+1})
        for (int nf : dual[path[1]]) {
            if (nf == path[2]) continue;
            const WFace& t = faces[nf];
            if (t.size() != 3) return level_fail(wg, "F2 carries a non-triangle pendant");
            VP se = shared_edge(f2, t);
            int apex = -1;
            for (int x : t.cycle)
                if (x != se.first && x != se.second) apex = x;
            for (int i = 0; i + 1 < k; ++i)
                if (vp(vs[i], vs[i + 1]) == se) tri_apex[i + 1] = apex; // 1-based position i
        }

        WorkGraph red = wg;
        std::set<int> gone(vs.begin() + 1, vs.end() - 1);
        for (auto [i, a] : tri_apex) gone.insert(a);
        for (int v : gone) red.remove_vertex(v);
        int w2 = red.add_vertex();
        int w3 = red.add_vertex();
        int w = red.add_vertex();
        red.add_edge(v1, w2);
        red.add_edge(w2, w3);
        red.add_edge(w3, vk);
        red.add_edge(w, w2);
        red.add_edge(w, w3);
        replace_arc(red.boundaries[0], v1, vk, gone, {w2, w, w3});
        record(*trace_, diff(wg, red, "F2-is-4-face", "k=" + std::to_string(k)));

        CMap f = level(red, depth + 1);
        int u1 = third_neighbor(wg, v1, vs[1], vk);
        int uk = third_neighbor(wg, vk, vs[k - 2], v1);
        auto col = [&](int a, int b) { return f.at(vp(a, b)); };

        // good coloring makes the replacement house Type I; orient by pairing
        bool mirrored = false;
        if (col(u1, v1) != col(w, w3)) {
            // mirror: v1 <-> vk
            std::reverse(vs.begin(), vs.end());
            std::swap(v1, vk);
            std::swap(u1, uk);
            std::swap(w2, w3);
            std::map<int, int> flipped;
            for (auto [i, a] : tri_apex) flipped[k - i] = a;
            tri_apex = flipped;
            mirrored = true;
        }
        (void)mirrored;
        Symbols sy = symbols_124();
        bool ok = col(v1, vk) == 1 && col(w2, w3) == 1 && col(u1, v1) == col(w, w3) &&
                  col(uk, vk) == col(w, w2);
        ok = ok && sy.bind("2a", col(u1, v1)) && sy.bind("2b", col(uk, vk)) &&
             sy.bind("2c", col(w3, vk)) && sy.bind("2d", col(v1, w2));

        CMap out = f;
        for (int x : {w2, w3, w})
            for (int y : {v1, vk, w2, w3, w})
                out.erase(vp(x, y));
        if (ok) {
            assign(out, vs[0], vs[1], sy.get("2d"));
            assign(out, vs[k - 2], vs[k - 1], sy.get("2c"));
            static const char* pat[4] = {"1", "2a", "1", "2d"};
            for (int i = 1; i + 2 <= k - 1; ++i) assign(out, vs[i], vs[i + 1], sy.get(pat[(i - 1) % 4]));
            int j = 0;
            for (auto [i, a] : tri_apex) j = std::max(j, i);
            if (j == 0) {
                // no triangles (cannot happen: F1 rides on F2) — let verify decide
            } else if (j <= k - 3) {
                for (auto [i, a] : tri_apex) {
                    assign(out, vs[i - 1], a, sy.get("2c"));
                    assign(out, a, vs[i], sy.get("2b"));
                }
            } else { // j == k-2
                int a = tri_apex[k - 2];
                int cur = out.at(vp(vs[k - 3], vs[k - 2]));
                if (cur == 1) {
                    assign(out, vs[k - 3], a, sy.get("2b"));
                    int prev = out.at(vp(vs[k - 4], vs[k - 3]));
                    int x = sy.get("2a") == prev ? sy.get("2d") : sy.get("2a");
                    assign(out, a, vs[k - 2], x);
                } else {
                    assign(out, vs[k - 3], a, sy.get("2b"));
                    assign(out, a, vs[k - 2], 1);
                }
                for (auto [i, ap] : tri_apex) {
                    if (i == k - 2) continue;
                    assign(out, vs[i - 1], ap, sy.get("2b"));
                    assign(out, ap, vs[i], sy.get("2c"));
                }
            }
        }
        trace_->steps.back().case_label += ok ? " typeI" : " mismatch";
        if (!ok) out = f;
        return finish_level(wg, red, std::move(out), f, "F2-is-4-face");
    }

    CMap level_fail(const WorkGraph& wg, const char* why) {
        fallback_used_ = true;
#ifdef SPG_COLORER_DEBUG
        std::fprintf(stderr, "[levelfail124] %s\n", why);
#endif
        FallbackContext ctx{seq_, good_filter(), 40};
        std::set<VP> remainder(wg.edge_set.begin(), wg.edge_set.end());
        auto fb = fallback_certify(wg, ctx, {}, remainder);
        if (!fb) fail(errc::fallback_unsat, why);
        return *fb;
    }

    // ----------------------------------------------------------- final stage
    struct Attachment {
        enum Kind { house, triangle, virtual_house } kind;
        int i;                 // rides on (v_i, v_{i+1}), 1-based
        int vi_p = -1, vip1_p = -1, vi_pp = -1; // house vertices v_i', v_{i+1}', v_i''
        int apex = -1;         // lone triangle apex
    };

    CMap extend_f3(const WorkGraph& wg, const std::vector<WFace>& faces,
                   const std::vector<std::vector<int>>& dual, const std::vector<int>& path, int depth) {
        const WFace& f3 = faces[path[2]];
        const WFace& f4 = faces[path[3]];
        VP anchor = shared_edge(f3, f4);
        auto vs = orient_on(f3, anchor);
        int k = (int)vs.size();
        int v1 = vs[0], vk = vs[k - 1];
        std::map<int, int> pos;
        for (int i = 0; i < k; ++i) pos[vs[i]] = i + 1; // 1-based

        // classify attachments on F3
        std::vector<Attachment> atts;
        std::set<int> doomed; // vertices deleted besides the interior
        for (int nf : dual[path[2]]) {
            if (nf == path[3]) continue;
            const WFace& q = faces[nf];
            VP se = shared_edge(f3, q);
            int i = std::min(pos.at(se.first), pos.at(se.second));
            if (q.size() == 3) {
                Attachment a;
                a.kind = Attachment::triangle;
                a.i = i;
                for (int x : q.cycle)
                    if (x != se.first && x != se.second) a.apex = x;
                doomed.insert(a.apex);
                atts.push_back(a);
            } else if (q.size() == 4) {
                // house: quad + triangle on its top edge
                Attachment a;
                a.kind = Attachment::house;
                a.i = i;
                std::vector<int> tops;
                for (int x : q.cycle)
                    if (x != se.first && x != se.second) tops.push_back(x);
                // orient: v_i' adjacent to v_i
                int lo = vs[i - 1];
                a.vi_p = wg.has_edge(lo, tops[0]) ? tops[0] : tops[1];
                a.vip1_p = (a.vi_p == tops[0]) ? tops[1] : tops[0];
                int apex = -1;
                for (int fj : dual[nf]) {
                    if (fj == path[2]) continue;
                    const WFace& t = faces[fj];
                    if (t.size() != 3) return level_fail(wg, "house stack is not a triangle");
                    for (int x : t.cycle)
                        if (x != a.vi_p && x != a.vip1_p) apex = x;
                }
                if (apex < 0) return level_fail(wg, "4-face on F3 without a triangle on top");
                a.vi_pp = apex;
                doomed.insert(a.vi_p);
                doomed.insert(a.vip1_p);
                doomed.insert(a.vi_pp);
                atts.push_back(a);
            } else {
                return level_fail(wg, "oversized attachment on F3");
            }
        }

        WorkGraph red = wg;
        std::set<int> gone(vs.begin() + 1, vs.end() - 1);
        for (int d : doomed) gone.insert(d);
        for (int v : gone) red.remove_vertex(v);
        int w1 = red.add_vertex();
        int w2 = red.add_vertex();
        int w = red.add_vertex();
        red.add_edge(v1, w1);
        red.add_edge(w1, w2);
        red.add_edge(w2, vk);
        red.add_edge(w, w1);
        red.add_edge(w, w2);
        replace_arc(red.boundaries[0], v1, vk, gone, {w1, w, w2});
        record(*trace_, diff(wg, red, "F3-extension", "k=" + std::to_string(k)));

        CMap f = level(red, depth + 1);
        int u1 = third_neighbor(wg, v1, vs[1], vk);
        int uk = third_neighbor(wg, vk, vs[k - 2], v1);
        auto col = [&](int a, int b) { return f.at(vp(a, b)); };
        if (col(u1, v1) != col(w, w2)) { // mirror
            std::reverse(vs.begin(), vs.end());
            std::swap(v1, vk);
            std::swap(u1, uk);
            std::swap(w1, w2);
            for (auto& a : atts) a.i = k - a.i;
            for (auto& a : atts)
                if (a.kind == Attachment::house) std::swap(a.vi_p, a.vip1_p);
        }
        Symbols sy = symbols_124();
        bool ok = col(v1, vk) == 1 && col(w1, w2) == 1 && col(u1, v1) == col(w, w2) &&
                  col(uk, vk) == col(w, w1);
        ok = ok && sy.bind("2a", col(u1, v1)) && sy.bind("2b", col(uk, vk)) &&
             sy.bind("2c", col(w2, vk)) && sy.bind("2d", col(v1, w1));
#ifdef SPG_COLORER_DEBUG
        if (!ok) std::fprintf(stderr, "[f3] binding mismatch k=%d\n", k);
#endif
        CMap out = f;
        for (int x : {w1, w2, w})
            for (int y : {v1, vk, w1, w2, w})
                out.erase(vp(x, y));

        if (ok) {
            ok = f3_cases(wg, out, sy, vs, k, atts);
#ifdef SPG_COLORER_DEBUG
            if (!ok) {
                std::fprintf(stderr, "[f3] cases miss k=%d atts:", k);
                for (auto& a : atts) std::fprintf(stderr, " (i=%d kind=%d)", a.i, (int)a.kind);
                std::fprintf(stderr, " deg2:");
                for (int i = 2; i <= k - 1; ++i)
                    if (wg.degree(vs[i - 1]) == 2) std::fprintf(stderr, " %d", i);
                std::fprintf(stderr, "\n");
            }
#endif
        }
        trace_->steps.back().case_label += ok ? "" : " mismatch";
        if (!ok) out = f;
        return finish_level(wg, red, std::move(out), f, "F3-extension");
    }

    static bool edge_ok(const WorkGraph& wg, const CMap& out, int a, int b, int color,
                        const SSequence& s) {
        int need = s.value(color);
        std::map<int, int> dist;
        std::vector<int> q{a, b};
        dist[a] = dist[b] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int x = q[qi];
            if (dist[x] >= need) continue;
            for (int y : wg.adj.at(x))
                if (!dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
        }
        for (const auto& [e, c] : out) {
            if (c != color || e == vp(a, b)) continue;
            int d1 = dist.count(e.first) ? dist.at(e.first) : 1 << 29;
            int d2 = dist.count(e.second) ? dist.at(e.second) : 1 << 29;
            if (1 + std::min(d1, d2) <= need) return false;
        }
        return true;
    }

    // Deterministic local completion of one attachment: try the base edge as
    // kept or recolored to 1, then search the slot edges. Used for the end
    // position the paper's Case 3 shift leaves unstated.
    bool complete_attachment_locally(const WorkGraph& wgv, CMap& out, const Attachment& a,
                                     const std::vector<int>& vs) {
        int lo = vs[a.i - 1], hi = vs[a.i];
        std::vector<VP> slots;
        if (a.kind == Attachment::triangle) {
            slots = {vp(lo, a.apex), vp(a.apex, hi)};
        } else {
            slots = {vp(lo, a.vi_p), vp(hi, a.vip1_p), vp(a.vi_p, a.vip1_p), vp(a.vi_p, a.vi_pp),
                     vp(a.vi_pp, a.vip1_p)};
        }
        std::function<bool(size_t)> rec = [&](size_t idx) {
            if (idx == slots.size()) return true;
            for (int c : {2, 3, 4, 5, 1}) {
                if (!edge_ok(wgv, out, slots[idx].first, slots[idx].second, c, seq_)) continue;
                out[slots[idx]] = c;
                if (rec(idx + 1)) return true;
                out.erase(slots[idx]);
            }
            return false;
        };
        VP base = vp(lo, hi);
        int base_old = out.at(base);
        for (int bc : {base_old, 1}) {
            out[base] = bc;
            if (edge_ok(wgv, out, lo, hi, bc, seq_) && rec(0)) return true;
        }
        out[base] = base_old;
        return false;
    }

    // the per-k-mod-3 machinery of the final case analysis
    bool f3_cases(const WorkGraph& wg, CMap& out, Symbols& sy, std::vector<int>& vs, int k,
                  std::vector<Attachment>& atts) {
        // virtual houses over adjacent 2-vertices; recognize 2-vertices in wg
        auto is2 = [&](int idx) { // 1-based boundary index
            return wg.degree(vs[idx - 1]) == 2;
        };
        std::map<int, Attachment*> att_at;
        for (auto& a : atts) att_at[a.i] = &a;
        std::vector<Attachment> virtuals;
        {
            int i = 2;
            while (i <= k - 2) {
                if (!att_at.count(i) && is2(i) && is2(i + 1) && i + 1 <= k - 1) {
                    Attachment a;
                    a.kind = Attachment::virtual_house;
                    a.i = i;
                    virtuals.push_back(a);
                    i += 2;
                } else {
                    ++i;
                }
            }
        }
        // virtual vertices live outside the work graph; color them in a side
        // map merged for the final virtual check
        WorkGraph wgv = wg;
        for (auto& a : virtuals) {
            a.vi_p = wgv.add_vertex();
            a.vip1_p = wgv.add_vertex();
            a.vi_pp = wgv.add_vertex();
            wgv.add_edge(vs[a.i - 1], a.vi_p);
            wgv.add_edge(a.vi_p, a.vip1_p);
            wgv.add_edge(a.vip1_p, vs[a.i]);
            wgv.add_edge(a.vi_p, a.vi_pp);
            wgv.add_edge(a.vi_pp, a.vip1_p);
            att_at[a.i] = &a;
        }

        auto cur = [&](int a, int b) { return out.at(vp(a, b)); };
        auto house_recipe = [&](const Attachment& a) {
            int vi = vs[a.i - 1], vj = vs[a.i];
            assign(out, vj, a.vip1_p, cur(vi, vj));
            assign(out, vi, vj, sy.get("1"));
            assign(out, vi, a.vi_p, sy.get("2c"));
            assign(out, a.vi_p, a.vip1_p, sy.get("1"));
            assign(out, a.vi_p, a.vi_pp, cur(vs[a.i], vs[a.i + 1]));
            assign(out, a.vi_pp, a.vip1_p, cur(vs[a.i - 2], vs[a.i - 1]));
        };
        auto triangle_recipe = [&](const Attachment& a) {
            int vi = vs[a.i - 1], vj = vs[a.i];
            assign(out, a.apex, vj, cur(vi, vj));
            assign(out, vi, vj, sy.get("1"));
            assign(out, vi, a.apex, sy.get("2c"));
        };
        auto apply_generic = [&](const Attachment& a) {
            if (a.kind == Attachment::triangle) triangle_recipe(a);
            else house_recipe(a);
        };
        // explicit five-edge assignment for an end-position house/triangle:
        // slots are (lo lo'), (hi hi'), (lo' hi'), (lo' lo''), (lo'' hi')
        auto place = [&](const Attachment& a, const char* c_lo, const char* c_hi, const char* c_top,
                         const char* c_lo2, const char* c_hi2) {
            int lo = vs[a.i - 1], hi = vs[a.i];
            if (a.kind == Attachment::triangle) {
                assign(out, lo, a.apex, sy.get(c_lo));
                assign(out, a.apex, hi, sy.get(c_hi));
            } else {
                assign(out, lo, a.vi_p, sy.get(c_lo));
                assign(out, hi, a.vip1_p, sy.get(c_hi));
                assign(out, a.vi_p, a.vip1_p, sy.get(c_top));
                assign(out, a.vi_p, a.vi_pp, sy.get(c_lo2));
                assign(out, a.vi_pp, a.vip1_p, sy.get(c_hi2));
            }
        };

        // boundary pattern [2d,2b,2a] + 2c at the end
        static const char* pat[3] = {"2d", "2b", "2a"};
        for (int i = 1; i + 2 <= k; ++i) assign(out, vs[i - 1], vs[i], sy.get(pat[(i - 1) % 3]));
        assign(out, vs[k - 2], vs[k - 1], sy.get("2c"));

        bool vkm1_is3 = att_at.count(k - 2) != 0; // attachment on (v_{k-2}, v_{k-1})
        int mod = k % 3;
        if (mod == 2) {
            for (auto& [i, a] : att_at)
                if (i <= k - 3) apply_generic(*a);
            if (vkm1_is3) {
                Attachment& a = *att_at[k - 2];
                assign(out, vs[k - 3], vs[k - 2], sy.get("1"));
                if (a.kind == Attachment::triangle) {
                    assign(out, vs[k - 3], a.apex, sy.get("2a"));
                    assign(out, a.apex, vs[k - 2], sy.get("2d"));
                } else {
                    assign(out, vs[k - 2], a.vip1_p, sy.get("2d"));
                    assign(out, vs[k - 3], a.vi_p, sy.get("2a"));
                    assign(out, a.vi_p, a.vip1_p, sy.get("1"));
                    assign(out, a.vi_p, a.vi_pp, sy.get("2c"));
                    assign(out, a.vi_pp, a.vip1_p, sy.get("2b"));
                }
            }
        } else if (mod == 1) {
            if (vkm1_is3) {
                Attachment& a = *att_at[k - 2];
                assign(out, vs[k - 3], vs[k - 2], sy.get("1"));
                place(a, "2b", "2a", "1", "2c", "2d");
            } else if (is2(k - 1)) {
                if (!att_at.count(k - 3)) return false;
                Attachment& a = *att_at[k - 3];
                assign(out, vs[k - 4], vs[k - 3], sy.get("1"));
                assign(out, vs[k - 3], vs[k - 2], sy.get("2d"));
                place(a, "2c", "2b", "1", "2d", "2a");
            }
            for (auto& [i, a] : att_at)
                if (i <= k - 4 && i != k - 3) apply_generic(*a);
        } else { // mod == 0
            if (!vkm1_is3 && is2(k - 1)) {
                for (auto& [i, a] : att_at)
                    if (i <= k - 3) apply_generic(*a);
            } else {
                int j = 1;
                for (int i = 2; i <= k - 3; ++i)
                    if (is2(i) && !covered_by_virtual(att_at, i)) j = i;
                if (j == k - 3) {
                    if (k < 9 || !att_at.count(k - 5) || !att_at.count(k - 2)) return false;
                    assign(out, vs[k - 3], vs[k - 2], sy.get("1"));
                    assign(out, vs[k - 6], vs[k - 5], sy.get("1"));
                    assign(out, vs[k - 5], vs[k - 4], sy.get("2d"));
                    place(*att_at[k - 5], "2c", "2b", "1", "2d", "2a");
                    place(*att_at[k - 2], "2b", "2d", "1", "2c", "2a");
                    for (auto& [i, a] : att_at)
                        if (i != k - 5 && i != k - 2) apply_generic(*a);
                } else if (j <= k - 5) {
                    if (!att_at.count(j + 1)) return false;
                    Attachment& a = *att_at[j + 1];
                    // colors read before the shift
                    int c_j2j3 = cur(vs[j + 1], vs[j + 2]);
                    int c_j1j2 = cur(vs[j], vs[j + 1]);
                    int c_jj1 = cur(vs[j - 1], vs[j]);
                    // shift the tail by one pattern position: edges
                    // v_{j+2} v_{j+3} .. v_{k-2} v_{k-1} take their left
                    // neighbors' colors
                    std::vector<int> shifted;
                    for (int i = j + 2; i <= k - 2; ++i) shifted.push_back(cur(vs[i - 2], vs[i - 1]));
                    int si = 0;
                    for (int i = j + 2; i <= k - 2; ++i) assign(out, vs[i - 1], vs[i], shifted[si++]);
                    assign(out, vs[j], vs[j + 1], sy.get("1"));
                    if (a.kind == Attachment::triangle) {
                        assign(out, vs[j], a.apex, sy.get("2c"));
                        assign(out, a.apex, vs[j + 1], c_j2j3);
                    } else {
                        assign(out, vs[j], a.vi_p, sy.get("2c"));
                        assign(out, vs[j + 1], a.vip1_p, c_j2j3);
                        assign(out, a.vi_p, a.vip1_p, sy.get("1"));
                        assign(out, a.vi_p, a.vi_pp, c_j1j2);
                        assign(out, a.vi_pp, a.vip1_p, c_jj1);
                    }
                    for (auto& [i, at] : att_at)
                        if (i != j + 1 && i != k - 2) apply_generic(*at);
                    // the attachment at (k-2, k-1) sits outside the proof's
                    // stated range after the shift; complete it locally
                    if (att_at.count(k - 2) && !complete_attachment_locally(wgv, out, *att_at[k - 2], vs)) {
#ifdef SPG_COLORER_DEBUG
                        std::fprintf(stderr, "[f3] local completion failed at k-2\n");
#endif
                        return false;
                    }
                } else {
                    return false; // j == k-4: not covered by the proof text
                }
            }
        }

        // validate on the virtualized graph, then drop virtual edges
        CMap merged = out;
        LevelViolation lv;
        if (auto viol = check_level(wgv, seq_, merged, true, &lv)) {
#ifdef SPG_COLORER_DEBUG
            std::fprintf(stderr, "[f3] final check failed (%d,%d)-(%d,%d) color=%d dist=%d k=%d j?\n",
                         lv.e.first, lv.e.second, lv.f.first, lv.f.second, lv.color_index, lv.distance,
                         k);
            std::fprintf(stderr, "  vs:");
            for (int x : vs) std::fprintf(stderr, " %d", x);
            std::fprintf(stderr, "\n");
#endif
            return false;
        }
        for (const auto& a : virtuals) {
            out.erase(vp(vs[a.i - 1], a.vi_p));
            out.erase(vp(a.vi_p, a.vip1_p));
            out.erase(vp(a.vip1_p, vs[a.i]));
            out.erase(vp(a.vi_p, a.vi_pp));
            out.erase(vp(a.vi_pp, a.vip1_p));
        }
        return true;
    }

    static bool covered_by_virtual(const std::map<int, Attachment*>& att_at, int i) {
        auto it = att_at.find(i);
        if (it != att_at.end() && it->second->kind == Attachment::virtual_house) return true;
        auto it2 = att_at.find(i - 1);
        if (it2 != att_at.end() && it2->second->kind == Attachment::virtual_house) return true;
        return false;
    }
};

} // namespace colorer
} // namespace spg
