#pragma once

#include "spg/colorer_hc_common.hpp"

namespace spg {
namespace colorer {

// Constructive (1,2^4,3)-coloring of subcubic outerplane graphs with no
// 2-vertices. Good coloring: every HC occurrence carries one of the three
// sec2 templates (unless the house-without-base is itself a block) and no
// leaf's neighbor sees color 3. Palette indices: 1 -> 1, 2a..2d -> 2..5,
// 3 -> 6.
class Colorer1243 : public HCColorerBase {
  public:
    Colorer1243() : HCColorerBase(parse_sequence("1,2^4,3")) {}

    static bool hc_matches_sec2(const CMap& c, const std::vector<int>& slots);

    static std::vector<GoodCheck> good_checks(const Graph& g, const OuterplaneEmbedding& emb,
                                              const EdgeColoring& c) {
        CMap cm;
        for (EdgeId e = 0; e < g.edge_count(); ++e) cm[vp(g.edge(e).u, g.edge(e).v)] = c.color(e);
        std::vector<GoodCheck> out;
        out.push_back({"every HC occurrence uses a sec2 template", hc_all_good(g, emb, cm)});
        bool leaf_ok = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 1) continue;
            Vertex nb = g.neighbors(v)[0].first;
            for (auto [w, e] : g.neighbors(nb))
                if (c.color(e) == 6) leaf_ok = false;
        }
        out.push_back({"no leaf neighbor sees color 3", leaf_ok});
        return out;
    }

    static bool hc_all_good(const Graph& g, const OuterplaneEmbedding& emb, const CMap& cm,
                            bool strict_degenerate = false) {
        auto occs = find_gadget_occurrences(g, emb, GadgetPattern::hc);
        auto bt = block_decomposition(g);
        for (const auto& o : occs) {
            // slots: z2 z1 v1 vk zk u1 uk z  ->  template edge order
            const auto& m = o.map;
            // exemption: the house-without-base {z2,z1,zk,v1,vk} is itself a block
            bool own_block = false;
            for (const auto& b : bt.blocks) {
                std::set<Vertex> vs(b.vertices.begin(), b.vertices.end());
                if (vs == std::set<Vertex>{m[0], m[1], m[2], m[3], m[4]}) own_block = true;
            }
            if (own_block) continue;
            std::vector<int> colors = {
                cm.at(vp(m[5], m[2])), cm.at(vp(m[2], m[3])), cm.at(vp(m[3], m[6])),
                cm.at(vp(m[2], m[1])), cm.at(vp(m[3], m[4])), cm.at(vp(m[1], m[4])),
                cm.at(vp(m[1], m[0])), cm.at(vp(m[0], m[4])), cm.at(vp(m[0], m[7]))};
            if (!match_sec2(colors)) return false;
        }
        // the recursion also needs the degenerate shape (shared outgoing
        // vertex, so not an occurrence) to stay template-readable; a quad can
        // carry two such readings (one per glued triangle) and one readable
        // orientation suffices for the parent's extension
        if (strict_degenerate) {
            auto faces = bounded_faces(g, emb);
            std::map<std::set<Vertex>, std::pair<int, int>> by_quad; // quad -> (readings, matches)
            for (const auto& tq : detail::tri_quad_pairs(g, faces)) {
                std::set<Vertex> core{tq.apex, tq.a, tq.b, tq.x, tq.y};
                auto w6 = detail::outgoing(g, tq.x, core);
                auto w7 = detail::outgoing(g, tq.y, core);
                if (!w6 || !w7 || *w6 != *w7) continue;
                std::set<Vertex> all(core);
                all.insert(*w6);
                auto z = detail::outgoing(g, tq.apex, all);
                if (!z) continue;
                std::vector<int> colors = {
                    cm.at(vp(*w6, tq.x)),    cm.at(vp(tq.x, tq.y)),    cm.at(vp(tq.y, *w7)),
                    cm.at(vp(tq.x, tq.a)),   cm.at(vp(tq.y, tq.b)),    cm.at(vp(tq.a, tq.b)),
                    cm.at(vp(tq.a, tq.apex)), cm.at(vp(tq.apex, tq.b)), cm.at(vp(tq.apex, *z))};
                std::set<Vertex> quad{tq.a, tq.x, tq.y, tq.b};
                auto& entry = by_quad[quad];
                entry.first += 1;
                if (match_sec2(colors)) entry.second += 1;
            }
            for (auto& [quad, counts] : by_quad)
                if (counts.first > 0 && counts.second == 0) return false;
        }
        return true;
    }

    // does a 9-color word match a sec2 template up to 2-block renaming and
    // the v1<->vk mirror?
    static bool match_sec2(std::vector<int> colors) {
        for (int orient = 0; orient < 2; ++orient) {
            for (HCScheme s : {HCScheme::sec2_I, HCScheme::sec2_II, HCScheme::sec2_III}) {
                auto t = hc_template(s);
                std::map<int, int> ren;
                std::set<int> used;
                bool ok = true;
                for (int i = 0; i < 9 && ok; ++i) {
                    int tc = t.colors[i], ac = colors[i];
                    if (tc == 1 || tc == 6) {
                        if (ac != tc) ok = false;
                    } else {
                        if (ac < 2 || ac > 5) ok = false;
                        else if (ren.count(tc)) ok = ren[tc] == ac;
                        else if (used.count(ac)) ok = false;
                        else {
                            ren[tc] = ac;
                            used.insert(ac);
                        }
                    }
                }
                if (ok) return true;
            }
            // mirror: swap role pairs (1,3), (4,5), (7,8)
            std::swap(colors[0], colors[2]);
            std::swap(colors[3], colors[4]);
            std::swap(colors[6], colors[7]);
        }
        return false;
    }

  protected:
    Symbols make_symbols() const override { return symbols_1243(); }
    int pendant_face_min_reduce() const override { return 5; }
    bool has_remark_reduction() const override { return true; }

    std::function<bool(const WorkGraph&, const CMap&)> good_filter() const override {
        return [](const WorkGraph& w, const CMap& c) {
            std::map<int, int> compact;
            std::vector<int> orig;
            std::vector<VP> edge_of;
            Graph g = w.to_graph(compact, orig, edge_of);
            auto emb = w.embedding(compact);
            CMap local;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                auto it = c.find(edge_of[e]);
                if (it == c.end()) return false;
                local[vp(g.edge(e).u, g.edge(e).v)] = it->second;
            }
            if (!hc_all_good(g, emb, local, true)) return false;
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) != 1) continue;
                Vertex nb = g.neighbors(v)[0].first;
                for (auto [w2, e] : g.neighbors(nb))
                    if (local.at(vp(nb, w2)) == 6) return false;
            }
            return true;
        };
    }

    // distance-aware candidate check for a single new edge
    static bool edge_ok(const WorkGraph& wg, const CMap& out, int a, int b, int color,
                        const SSequence& s) {
        int need = s.value(color);
        // BFS from {a,b} out to depth `need`
        std::map<int, int> dist;
        std::vector<int> q;
        dist[a] = 0;
        dist[b] = 0;
        q.push_back(a);
        q.push_back(b);
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
            if (c != color) continue;
            if (e == vp(a, b)) continue;
            int d1 = dist.count(e.first) ? dist.at(e.first) : 1 << 29;
            int d2 = dist.count(e.second) ? dist.at(e.second) : 1 << 29;
            int d = 1 + std::min(d1, d2);
            if (d <= need) return false;
        }
        return true;
    }

    bool extend_leaf_pair(const WorkGraph& wg, CMap& out, int u2, int u1, int u1p) override {
        // five unrestricted colors (3 stays away from leaf neighbors); at most
        // three colored edges are within distance two
        for (int c1 = 1; c1 <= 5; ++c1) {
            if (!edge_ok(wg, out, u2, u1, c1, seq_)) continue;
            out[vp(u2, u1)] = c1;
            for (int c2 = 1; c2 <= 5; ++c2) {
                if (c2 == c1) continue;
                if (!edge_ok(wg, out, u2, u1p, c2, seq_)) continue;
                out[vp(u2, u1p)] = c2;
                return true;
            }
            out.erase(vp(u2, u1));
        }
        return false;
    }

    // ---- single-face block (cycle + leaves) --------------------------------
    bool extend_single_face(const WorkGraph& wg, CMap& out, const std::vector<int>& cyc, int u0,
                            int v0) override {
        int k = (int)cyc.size() - 1; // boundary u0..uk
        auto leaf_of = [&](int v) {
            for (int w : wg.adj.at(v))
                if (wg.degree(w) == 1) return w;
            return -1;
        };
        auto U = [&](int i) { return cyc[((i % (k + 1)) + k + 1) % (k + 1)]; };
        int c0 = out.at(vp(u0, v0));
        std::set<int> v0cols;
        for (int w : wg.adj.at(v0))
            if (w != u0) v0cols.insert(out.at(vp(v0, w)));
        if (c0 == 6) return false; // goodness of the reduced graph forbids this

        Symbols sy = make_symbols();
        bool case1 = c0 == 1;
        if (!case1) {
            int twos = 0;
            for (int c : v0cols)
                if (c >= 2 && c <= 5) ++twos;
            if (twos == 2) {
                out[vp(u0, v0)] = 1; // recolor, then proceed as case 1
                case1 = true;
            }
        }
        auto free2 = [&](std::set<int> avoid) {
            std::vector<int> out2;
            for (int c = 2; c <= 5; ++c)
                if (!avoid.count(c)) out2.push_back(c);
            return out2;
        };

        if (case1) {
            std::set<int> avoid;
            for (int c : v0cols)
                if (c >= 2 && c <= 5) avoid.insert(c);
            auto fr = free2(avoid);
            if (fr.size() < 2) return false;
            sy.bind("2a", fr[0]);
            sy.bind("2b", fr[1]);
            out[vp(U(0), U(1))] = sy.get("2a");
            out[vp(U(k), U(0))] = sy.get("2b");
            for (int i = 1; i <= k; ++i) out[vp(U(i), leaf_of(U(i)))] = 1;
            if (k == 4) {
                out[vp(U(1), U(2))] = sy.get("2c");
                out[vp(U(2), U(3))] = 1;
                out[vp(U(3), U(4))] = sy.get("2d");
                out[vp(U(1), leaf_of(U(1)))] = 1;
                out[vp(U(2), leaf_of(U(2)))] = sy.get("2b");
                out[vp(U(3), leaf_of(U(3)))] = sy.get("2a");
                out[vp(U(4), leaf_of(U(4)))] = 1;
            } else if (k % 3 == 0 || k % 3 == 2) {
                const char* pat[3] = {"2c", "2d", "2a"};
                for (int i = 1; i < k; ++i) out[vp(U(i), U(i + 1))] = sy.get(pat[(i - 1) % 3]);
            } else {
                out[vp(U(1), U(2))] = sy.get("2c");
                out[vp(U(2), U(3))] = sy.get("2b");
                const char* pat[3] = {"2a", "2c", "2d"};
                for (int i = 3; i < k; ++i) out[vp(U(i), U(i + 1))] = sy.get(pat[(i - 3) % 3]);
            }
            return true;
        }

        // case 2: f(u0 v0) is a 2-color
        sy.bind("2c", c0);
        std::set<int> avoid{c0};
        for (int c : v0cols)
            if (c >= 2 && c <= 5) avoid.insert(c);
        auto fr = free2(avoid);
        if (fr.empty()) return false;
        for (int b : fr) {
            CMap snapshot = out;
            Symbols s2 = make_symbols();
            s2.bind("2c", c0);
            s2.bind("2b", b);
            out[vp(U(k), U(0))] = b;
            out[vp(U(0), U(1))] = 1;
            for (int i = 2; i <= k; ++i) out[vp(U(i), leaf_of(U(i)))] = 1;
            out[vp(U(1), leaf_of(U(1)))] = s2.get("2d");
            if (k == 3) {
                out[vp(U(1), U(2))] = s2.get("2a");
                out[vp(U(2), U(3))] = 1;
                out[vp(U(2), leaf_of(U(2)))] = s2.get("2c");
                out[vp(U(3), leaf_of(U(3)))] = s2.get("2d");
            } else if (k % 3 == 1 || k % 3 == 2) {
                const char* pat[3] = {"2a", "2c", "2d"};
                for (int i = 1; i < k; ++i) out[vp(U(i), U(i + 1))] = s2.get(pat[(i - 1) % 3]);
            } else {
                out[vp(U(1), U(2))] = s2.get("2a");
                out[vp(U(2), U(3))] = s2.get("2b");
                const char* pat[3] = {"2c", "2d", "2a"};
                for (int i = 3; i < k; ++i) out[vp(U(i), U(i + 1))] = s2.get(pat[(i - 3) % 3]);
            }
            if (!check_level(wg, seq_, out, true)) return true;
            out = snapshot;
        }
        return false;
    }

    // ---- pendant face (k >= 5 shrunk to triangle+leaf) ----------------------
    bool extend_pendant_face(const WorkGraph& wg, CMap& out, const std::vector<int>& vs_in, int u1_in,
                             int uk_in, int v, int vleaf) override {
        std::vector<int> vs = vs_in;
        int k = (int)vs.size();
        int u1 = u1_in, uk = uk_in;
        auto col = [&](int a, int b) { return out.at(vp(a, b)); };
        int a1 = col(u1, vs[0]), am = col(vs[0], vs[k - 1]), a3 = col(vs[k - 1], uk);
        int cv1 = col(v, vs[0]), cvk = col(v, vs[k - 1]), cvl = col(v, vleaf);
        out.erase(vp(v, vs[0]));
        out.erase(vp(v, vs[k - 1]));
        out.erase(vp(v, vleaf));

        auto mirror = [&]() {
            std::reverse(vs.begin(), vs.end());
            std::swap(u1, uk);
            std::swap(a1, a3);
            std::swap(cv1, cvk);
        };
        auto leaf_of = [&](int x) {
            for (int w : wg.adj.at(x))
                if (wg.degree(w) == 1) return w;
            return -1;
        };
        auto E = [&](int i) { return vp(vs[i - 1], vs[i]); }; // boundary edge v_i v_{i+1}
        Symbols sy = make_symbols();
        auto is2 = [](int c) { return c >= 2 && c <= 5; };

        bool has3 = (a1 == 6) || (am == 6) || (a3 == 6);
        int ones = (a1 == 1) + (am == 1) + (a3 == 1);

        auto fill_leaves_1 = [&](int from, int to) {
            for (int i = from; i <= to; ++i) {
                int lf = leaf_of(vs[i - 1]);
                if (lf >= 0) out[vp(vs[i - 1], lf)] = 1;
            }
        };
        auto run_pattern = [&](int from_edge, int to_edge, const char* p0, const char* p1,
                               const char* p2, bool ascending) {
            const char* pat[3] = {p0, p1, p2};
            int idx = 0;
            if (ascending)
                for (int i = from_edge; i <= to_edge; ++i) out[E(i)] = sy.get(pat[idx++ % 3]);
            else
                for (int i = from_edge; i >= to_edge; --i) out[E(i)] = sy.get(pat[idx++ % 3]);
        };

        if (!has3) {
            if (ones == 2) { // case 1.1
                if (a1 != 1 || a3 != 1) return false;
                if (!sy.bind("2a", am) || !sy.bind("2b", cv1) || !sy.bind("2c", cvk)) return false;
                out[E(1)] = sy.get("2b");
                out[E(k - 1)] = sy.get("2c");
                if (k % 3 == 2) {
                    out[E(k - 2)] = 1;
                    run_pattern(2, k - 3, "2d", "2a", "2b", true);
                    out[vp(vs[k - 2], leaf_of(vs[k - 2]))] = sy.get("2b");
                    out[vp(vs[k - 3], leaf_of(vs[k - 3]))] = sy.get("2a");
                    fill_leaves_1(2, k - 3);
                } else {
                    run_pattern(2, k - 2, "2d", "2a", "2b", true);
                    fill_leaves_1(2, k - 1);
                }
                return true;
            }
            if (ones == 1 && am == 1) { // case 1.2.2
                if (!sy.bind("2a", a1) || !sy.bind("2b", a3) || !sy.bind("2c", cv1) ||
                    !sy.bind("2d", cvk))
                    return false;
                out[E(1)] = sy.get("2c");
                out[E(k - 1)] = sy.get("2d");
                if (k % 3 == 1) {
                    out[E(k - 2)] = 1;
                    run_pattern(2, k - 3, "2b", "2a", "2c", true);
                    out[vp(vs[k - 2], leaf_of(vs[k - 2]))] = sy.get("2a");
                    out[vp(vs[k - 3], leaf_of(vs[k - 3]))] = sy.get("2b");
                    fill_leaves_1(2, k - 3);
                } else {
                    run_pattern(2, k - 2, "2b", "2a", "2c", true);
                    fill_leaves_1(2, k - 1);
                }
                return true;
            }
            if (ones == 1) { // case 1.2.1, the 1 on u1 v1 (or mirrored)
                if (a3 == 1) mirror();
                if (a1 != 1) return false;
                if (!sy.bind("2a", am) || !sy.bind("2b", a3) || !sy.bind("2c", cv1)) return false;
                out[E(1)] = sy.get("2c");
                out[E(k - 1)] = 1;
                out[vp(vs[k - 2], leaf_of(vs[k - 2]))] = sy.get("2c");
                fill_leaves_1(2, k - 2);
                if (k % 3 == 0) run_pattern(k - 2, 2, "2d", "2a", "2b", false);
                else run_pattern(k - 2, 2, "2d", "2b", "2a", false);
                return true;
            }
            return false; // case 1.3 cannot arise from a valid good coloring
        }

        // color 3 present on the context edges
        if (ones == 2) { // case 2.1
            if (am != 6 || a1 != 1 || a3 != 1) return false;
            if (!sy.bind("2a", cv1) || !sy.bind("2b", cvk)) return false;
            out[E(1)] = sy.get("2a");
            out[E(k - 1)] = sy.get("2b");
            run_pattern(2, k - 2, "2c", "2d", "2a", true);
            fill_leaves_1(2, k - 1);
            return true;
        }
        if (ones == 1) {
            if (a1 == 1 && am == 6) { // case 2.2.1
                if (!sy.bind("2a", a3) || !sy.bind("2b", cv1)) return false;
                out[E(1)] = sy.get("2b");
                out[E(k - 1)] = 1;
                run_pattern(k - 2, 2, "2d", "2a", "2c", false);
                out[vp(vs[k - 2], leaf_of(vs[k - 2]))] = sy.get("2b");
                fill_leaves_1(2, k - 2);
                return true;
            }
            if (a3 == 1 && am == 6) { // mirror of 2.2.1
                mirror();
                return extend_221_after_mirror(wg, out, vs, k, a1, a3, cv1, cvk);
            }
            if (am == 1 && (a1 == 6 || a3 == 6)) { // case 2.2.2
                if (a3 == 6) mirror();
                if (!sy.bind("2a", a3) || !sy.bind("2b", cv1) || !sy.bind("2c", cvk)) return false;
                out[E(1)] = sy.get("2b");
                out[E(k - 1)] = sy.get("2c");
                run_pattern(k - 2, 2, "2d", "2a", "2c", false);
                fill_leaves_1(2, k - 1);
                return true;
            }
            if ((a1 == 6 && a3 == 1) || (a3 == 6 && a1 == 1)) { // case 2.2.3
                if (a3 == 6) mirror();
                // now a1 = 3, a3 = 1, am = 2-color
                if (!sy.bind("2a", am) || !sy.bind("2b", cvk)) return false;
                out[E(1)] = 1;
                out[E(k - 1)] = sy.get("2b");
                // pattern continues onto the leaf edge of v2
                {
                    const char* pat[3] = {"2d", "2c", "2b"};
                    int idx = 0;
                    for (int i = k - 2; i >= 2; --i) out[E(i)] = sy.get(pat[idx++ % 3]);
                    out[vp(vs[1], leaf_of(vs[1]))] = sy.get(pat[idx % 3]);
                }
                fill_leaves_1(3, k - 1);
                return true;
            }
            return false;
        }
        // ones == 0 with a 3: cases 2.3.1 / 2.3.2
        if (am == 6) { // case 2.3.2
            if (!is2(a1) || !is2(a3)) return false;
            if (!sy.bind("2a", a1) || !sy.bind("2b", a3)) return false;
            out[E(1)] = 1;
            out[E(k - 1)] = 1;
            {
                const char* pat[3] = {"2c", "2b", "2d"};
                int idx = 0;
                for (int i = k - 2; i >= 2; --i) out[E(i)] = sy.get(pat[idx++ % 3]);
                out[vp(vs[1], leaf_of(vs[1]))] = sy.get(pat[idx % 3]);
            }
            out[vp(vs[k - 2], leaf_of(vs[k - 2]))] = sy.get("2a");
            fill_leaves_1(3, k - 2);
            return true;
        }
        // case 2.3.1: the 3 on an outer edge; recolor the middle to 1 using
        // the freed 1 from the v-edges, then rerun as case 2.2
        if (a1 == 6) mirror();
        if (a3 != 6) return false;
        // one of the deleted v-edges carried 1
        if (cv1 != 1 && cvk != 1 && cvl != 1) return false;
        int old_am = am;
        out[vp(vs[0], vs[k - 1])] = 1;
        // re-enter the dispatch with the updated context (now case 2.2.x)
        CMap saved = out;
        out[vp(v, vs[0])] = (cv1 == 1) ? old_am : cv1;
        out[vp(v, vs[k - 1])] = (cv1 != 1 && cvk == 1) ? old_am : cvk;
        out[vp(v, vleaf)] = (cv1 != 1 && cvk != 1) ? old_am : cvl;
        // rebuild vs to the original orientation for the recursive call
        return extend_pendant_face(wg, out, vs, u1, uk, v, vleaf);
    }

    bool extend_221_after_mirror(const WorkGraph& wg, CMap& out, std::vector<int>& vs, int k, int a1,
                                 int a3, int cv1, int cvk) {
        Symbols sy = make_symbols();
        auto leaf_of = [&](int x) {
            for (int w : wg.adj.at(x))
                if (wg.degree(w) == 1) return w;
            return -1;
        };
        auto E = [&](int i) { return vp(vs[i - 1], vs[i]); };
        if (a1 != 1) return false;
        if (!sy.bind("2a", a3) || !sy.bind("2b", cv1)) return false;
        out[E(1)] = sy.get("2b");
        out[E(k - 1)] = 1;
        {
            const char* pat[3] = {"2d", "2a", "2c"};
            int idx = 0;
            for (int i = k - 2; i >= 2; --i) out[E(i)] = sy.get(pat[idx++ % 3]);
        }
        out[vp(vs[k - 2], leaf_of(vs[k - 2]))] = sy.get("2b");
        for (int i = 2; i <= k - 2; ++i) {
            int lf = leaf_of(vs[i - 1]);
            if (lf >= 0) out[vp(vs[i - 1], lf)] = 1;
        }
        return true;
    }

    // ---- two-layer (F0 with attachments) ------------------------------------
    bool extend_two_layer(const WorkGraph& wg, CMap& out, const std::vector<int>& cyc, int u0, int v0,
                          const std::vector<HCSlot>& atts_in, const std::map<int, int>& leaves) override {
        int k = (int)cyc.size() - 1;
        auto U = [&](int i) { return cyc[((i % (k + 1)) + k + 1) % (k + 1)]; };
        auto EU = [&](int i) { return vp(U(i), U(i + 1)); };
        int c0 = out.at(vp(u0, v0));
        if (c0 == 6) return false;
        std::set<int> v0cols;
        for (int w : wg.adj.at(v0))
            if (w != u0) v0cols.insert(out.at(vp(v0, w)));

        std::vector<HCSlot> atts = atts_in;
        for (auto& a : atts) a.i -= 1; // paper indexing: attachment on (u_i, u_{i+1})

        bool case_a = c0 == 1;
        if (!case_a) {
            int twos = 0;
            for (int c : v0cols)
                if (c >= 2 && c <= 5) ++twos;
            if (twos == 2) {
                out[vp(u0, v0)] = 1;
                case_a = true;
            }
        }
        std::set<int> avoid;
        for (int c : v0cols)
            if (c >= 2 && c <= 5) avoid.insert(c);
        if (!case_a) avoid.insert(c0);
        std::vector<int> fr;
        for (int c = 2; c <= 5; ++c)
            if (!avoid.count(c)) fr.push_back(c);
        if (fr.size() < 2) return false;

        int j = 0;
        for (const auto& a : atts) j = std::max(j, a.i);

        // candidate loop over the free-color choices the paper leaves open
        std::vector<std::pair<int, int>> ab_choices;
        for (size_t x = 0; x < fr.size(); ++x)
            for (size_t y = 0; y < fr.size(); ++y)
                if (x != y) ab_choices.push_back({fr[x], fr[y]});
        CMap snapshot = out;
        for (auto [ca, cb] : ab_choices) {
            out = snapshot;
            Symbols sy = make_symbols();
            sy.bind("2a", ca);
            sy.bind("2b", cb);
            if (!case_a) sy.bind("2c", c0);
            bool ok = case_a ? layer_case_a(wg, out, sy, U, EU, k, j, atts, leaves)
                             : layer_case_b(wg, out, sy, U, EU, k, j, atts, leaves);
            LevelViolation lv{{-1, -1}, {-1, -1}, 0, 0};
            if (ok && !check_level(wg, seq_, out, true, &lv) && good_filter()(wg, out)) return true;
#ifdef SPG_COLORER_DEBUG
            std::fprintf(stderr,
                         "[2layer] case=%c k=%d j=%d ca=%d cb=%d ran=%d viol=(%d,%d)-(%d,%d) c=%d "
                         "d=%d atts:",
                         case_a ? 'A' : 'B', k, j, ca, cb, (int)ok, lv.e.first, lv.e.second,
                         lv.f.first, lv.f.second, lv.color_index, lv.distance);
            for (auto& a : atts) std::fprintf(stderr, " (i=%d kind=%d)", a.i, (int)a.kind);
            std::fprintf(stderr, "\n");
#endif
        }
        out = snapshot;
        return false;
    }

    template <class UF, class EF>
    bool generic_attachment(const WorkGraph& wg, CMap& out, Symbols& sy, UF U, EF EU, const HCSlot& a) {
        if (a.kind == HCSlot::real_hc) {
            // a real house-with-chimney keeps one of the three template
            // colorings (the good constraint); recolor its base edge to 1
            // first, the way the paper's recipe does
            out[vp(a.lo, a.hi)] = 1;
            return apply_template_checked(wg, out, a, EU(a.i - 1), EU(a.i + 1),
                                  {HCScheme::sec2_I, HCScheme::sec2_III, HCScheme::sec2_II});
        }
        // u_i u_i' <- f(u_i u_{i+1}); u_i u_{i+1} <- 1; then
        // (u_{i+1} u_{i+1}', u_i' u_{i+1}', u_i' u_i'', u_{i+1}' u_i'', u_i'' w) <-
        // (2b, 1, f(u_{i+1} u_{i+2}), f(u_{i-1} u_i), 1)
        int fi = out.at(EU(a.i));
        int fnext = out.count(EU(a.i + 1)) ? out.at(EU(a.i + 1)) : 0;
        int fprev = out.count(EU(a.i - 1)) ? out.at(EU(a.i - 1)) : 0;
        write_slots(out, a, {1, fi, sy.get("2b"), 1, fnext, fprev, 1});
        return true;
    }

    template <class UF, class EF>
    bool layer_case_a(const WorkGraph& wg, CMap& out, Symbols& sy, UF U, EF EU, int k, int j,
                      const std::vector<HCSlot>& atts, const std::map<int, int>& leaves) {
        (void)wg;
        out[EU(0)] = sy.get("2a");
        out[vp(U(k), U(0))] = sy.get("2b");
        for (auto& [bv, lf] : leaves) out[vp(bv, lf)] = 1;
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        if (k % 3 == 0 || k % 3 == 2) {
            const char* pat[3] = {"2c", "2d", "2a"};
            for (int i = 1; i < k; ++i) out[EU(i)] = sy.get(pat[(i - 1) % 3]);
            if (j > 0) {
                const HCSlot* a = att_of(j);
                if (!a) return false;
                int fj = out.at(EU(j));
                int fprev = out.at(EU(j - 1));
                if (a->kind == HCSlot::real_hc) {
                    out[vp(a->lo, a->hi)] = 6;
                    if (!apply_template_checked(wg, out, *a, EU(j - 1), EU(j + 1),
                                                {HCScheme::sec2_II, HCScheme::sec2_III,
                                                 HCScheme::sec2_I}))
                        return false;
                } else if (j == k - 1) {
                    // top slot gets 2a or 2d, whichever verifies
                    write_slots(out, *a, {6, fj, 1, sy.get("2a"), 1, fprev, sy.get("2b")});
                    CMap probe = out;
                    if (check_level(wg, seq_, probe, true)) {
                        write_slots(out, *a, {6, fj, 1, sy.get("2d"), 1, fprev, sy.get("2b")});
                    }
                } else {
                    int fnext2 = out.at(EU(j + 1));
                    write_slots(out, *a, {6, fj, 1, sy.get("2b"), 1, fprev, fnext2});
                }
            }
            for (const auto& a : atts)
                if (a.i != j && a.i <= k - 3 && !generic_attachment(wg, out, sy, U, EU, a)) return false;
            return true;
        }
        // k = 1 mod 3
        const char* pat[3] = {"2c", "2d", "2a"};
        for (int i = 1; i < k; ++i)
            if (i != j) out[EU(i)] = sy.get(pat[(i - 1) % 3]);
        if (j == 0) return false;
        const HCSlot* a = att_of(j);
        if (!a) return false;
        if (j == k - 1) {
            write_slots(out, *a, {6, sy.get("2a"), 1, sy.get("2c"), 1, sy.get("2d"), sy.get("2b")});
        } else {
            int fnext = out.at(EU(j + 1));
            int fnext2 = out.at(EU(j + 2));
            int fprev = out.at(EU(j - 1));
            int x = 0, y = 0;
            for (int c = 2; c <= 5; ++c)
                if (c != fprev && c != fnext && c != fnext2 && !x) x = c;
            if (!x) return false;
            for (int c = 2; c <= 5; ++c)
                if (c != fnext2 && c != fnext && c != x && !y) y = c;
            if (!y) return false;
            write_slots(out, *a, {6, 1, x, fnext2, fnext, 1, y});
        }
        for (const auto& at : atts)
            if (at.i != j && at.i <= k - 3 && !generic_attachment(wg, out, sy, U, EU, at)) return false;
        return true;
    }

    template <class UF, class EF>
    bool layer_case_b(const WorkGraph& wg, CMap& out, Symbols& sy, UF U, EF EU, int k, int j,
                      const std::vector<HCSlot>& atts, const std::map<int, int>& leaves) {
        (void)wg;
        out[EU(0)] = sy.get("2a");
        out[vp(U(k), U(0))] = sy.get("2b");
        for (auto& [bv, lf] : leaves) out[vp(bv, lf)] = 1;
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        if (k % 3 == 2) {
            // same scheme as case A, with 2d taking the first pattern slot
            const char* pat[3] = {"2d", "2c", "2a"};
            for (int i = 1; i < k; ++i) out[EU(i)] = sy.get(pat[(i - 1) % 3]);
            if (j > 0) {
                const HCSlot* a = att_of(j);
                if (!a) return false;
                int fj = out.at(EU(j));
                int fprev = out.at(EU(j - 1));
                if (j == k - 1) {
                    write_slots(out, *a, {6, fj, 1, sy.get("2a"), 1, fprev, sy.get("2b")});
                } else {
                    int fnext2 = out.at(EU(j + 1));
                    write_slots(out, *a, {6, fj, 1, sy.get("2b"), 1, fprev, fnext2});
                }
            }
            for (const auto& a : atts)
                if (a.i != j && a.i <= k - 3 && !generic_attachment(wg, out, sy, U, EU, a)) return false;
            return true;
        }
        if (k % 3 == 0) {
            const char* pat[3] = {"2d", "2c", "2a"};
            for (int i = 1; i < k; ++i)
                if (i != j) out[EU(i)] = sy.get(pat[(i - 1) % 3]);
            if (j == 0) return false;
            const HCSlot* a = att_of(j);
            if (!a) return false;
            if (a->kind == HCSlot::real_hc) {
                out[vp(a->lo, a->hi)] = 6;
                if (!apply_template_checked(wg, out, *a, EU(j - 1), EU(j + 1),
                                            {HCScheme::sec2_II, HCScheme::sec2_III, HCScheme::sec2_I}))
                    return false;
            } else if (j == k - 1) {
                write_slots(out, *a, {6, sy.get("2c"), 1, sy.get("2a"), 1, sy.get("2d"), sy.get("2b")});
            } else if (j == k - 2) {
                write_slots(out, *a, {6, 1, sy.get("2c"), sy.get("2b"), sy.get("2d"), 1, sy.get("2a")});
            } else {
                int fnext2 = out.at(EU(j + 2));
                int fprev = out.at(EU(j - 1));
                int fnext = out.at(EU(j + 1));
                write_slots(out, *a, {6, sy.get("2b"), 1, fnext2, 1, fprev, fnext});
            }
            for (const auto& at : atts)
                if (at.i != j && at.i <= k - 3 && !generic_attachment(wg, out, sy, U, EU, at)) return false;
            return true;
        }
        // k = 1 mod 3
        const char* pat[3] = {"2d", "2c", "2a"};
        for (int i = 1; i < k - 1; ++i)
            if (i != j) out[EU(i)] = sy.get(pat[(i - 1) % 3]);
        if (j == 0) return false;
        const HCSlot* a = att_of(j);
        if (!a) return false;
        if (a->kind == HCSlot::real_hc) {
            out[vp(a->lo, a->hi)] = 6;
            if (!apply_template_checked(wg, out, *a, EU(j - 1), EU(j + 1),
                                        {HCScheme::sec2_II, HCScheme::sec2_III, HCScheme::sec2_I}))
                return false;
        } else if (j == k - 1) {
            out[EU(k - 1)] = 0;
            out.erase(EU(k - 1));
            write_slots(out, *a, {6, sy.get("2a"), 1, sy.get("2d"), 1, sy.get("2c"), sy.get("2b")});
        } else {
            int fj = out.at(EU(j));
            int fprev = out.at(EU(j - 1));
            int fnext = out.count(EU(j + 1)) ? out.at(EU(j + 1)) : 0;
            // recolor u_{k-1} u_k, u0 u_k, u_k's leaf with 2b, 1, 2d
            out[EU(k - 1)] = sy.get("2b");
            out[vp(U(k), U(0))] = 1;
            auto lfk = leaves.find(U(k));
            if (lfk != leaves.end()) out[vp(U(k), lfk->second)] = sy.get("2d");
            int x = 0, y = 0;
            for (int c = 2; c <= 5; ++c)
                if (c != fprev && c != fj && c != fnext && !x) x = c;
            if (!x) return false;
            // y avoids the freshly assigned neighbour slots
            write_slots(out, *a, {6, fj, 1, x, 1, fprev, 0});
            for (int c = 2; c <= 5; ++c)
                if (c != fj && c != fprev && c != x && !y) y = c;
            if (!y) return false;
            if (a->kind == HCSlot::real_hc) out[vp(a->tip, a->tip_leaf)] = y;
        }
        for (const auto& at : atts)
            if (at.i != j && at.i <= k - 3 && !generic_attachment(wg, out, sy, U, EU, at)) return false;
        return true;
    }

    // ---- HC replacement engine ----------------------------------------------
    bool extend_hc_face(const WorkGraph& wg, CMap& out, const std::vector<int>& vs_in, int u1_in,
                        int uk_in, const std::array<int, 4>& zvs,
                        const std::vector<HCSlot>& atts_in, const std::map<int, int>& leaves) override {
        int k = (int)vs_in.size();
        auto [z1, zk, z2, z] = zvs;
        auto colf = [&](int a, int b) {
            auto it = out.find(vp(a, b));
            if (it == out.end()) fail(errc::invalid_coloring, "context edge missing");
            return it->second;
        };
        std::vector<int> word = {colf(u1_in, vs_in[0]),     colf(vs_in[0], vs_in[k - 1]),
                                 colf(vs_in[k - 1], uk_in), colf(vs_in[0], z1),
                                 colf(vs_in[k - 1], zk),    colf(z1, zk),
                                 colf(z1, z2),              colf(z2, zk),
                                 colf(z2, z)};
        CMap base = out;
        for (int x : {z1, zk, z2, z})
            for (int y : {vs_in[0], vs_in[k - 1], z1, zk, z2, z})
                base.erase(vp(x, y));

        static const char* names[7] = {"", "1", "2a", "2b", "2c", "2d", "3"};
        struct Cand {
            HCScheme scheme;
            bool flip;
            Symbols sy;
        };
        std::vector<Cand> cands;
        // primary: full template reads of the deleted HC; secondary: host-trio
        // bindings for the degenerate configurations the matcher cannot see
        for (int pass = 0; pass < 2; ++pass) {
            for (int orient = 0; orient < 2; ++orient) {
                std::vector<int> w = word;
                if (orient) {
                    std::swap(w[0], w[2]);
                    std::swap(w[3], w[4]);
                    std::swap(w[6], w[7]);
                }
                for (HCScheme s : {HCScheme::sec2_I, HCScheme::sec2_II, HCScheme::sec2_III}) {
                    auto tpl = hc_template(s);
                    Symbols trial = make_symbols();
                    bool ok = true;
                    int upto = pass == 0 ? 9 : 3;
                    for (int i = 0; i < upto && ok; ++i) ok = trial.bind(names[tpl.colors[i]], w[i]);
                    if (!ok) continue;
                    bool dup = false;
                    for (const auto& c : cands)
                        if (c.scheme == s && c.flip == (orient == 1)) dup = true;
                    if (!dup) cands.push_back({s, orient == 1, trial});
                }
            }
        }
#ifdef SPG_COLORER_DEBUG
        if (cands.empty()) {
            std::fprintf(stderr, "[hcx] NO CANDIDATES word=");
            for (int x : word) std::fprintf(stderr, "%d,", x);
            std::fprintf(stderr, "\n");
        }
#endif
        for (auto& cand : cands) {
            out = base;
            std::vector<int> vs = vs_in;
            std::vector<HCSlot> atts = atts_in;
            if (cand.flip) {
                std::reverse(vs.begin(), vs.end());
                for (auto& a : atts) {
                    a.i = k - a.i;
                    std::swap(a.lo, a.hi);
                    std::swap(a.lo_p, a.hi_p);
                    std::swap(a.lo_pp, a.hi_pp);
                }
            }
            bool ran = run_hc_case(wg, out, cand.scheme, cand.sy, vs, k, atts, leaves);
            LevelViolation lv{{-1, -1}, {-1, -1}, 0, 0};
            if (ran && !check_level(wg, seq_, out, true, &lv) && good_filter()(wg, out)) return true;
#ifdef SPG_COLORER_DEBUG
            std::fprintf(stderr, "[hcx] k=%d scheme=%d flip=%d ran=%d viol=(%d,%d)-(%d,%d) c=%d d=%d vs:",
                         k, (int)cand.scheme, (int)cand.flip, (int)ran, lv.e.first, lv.e.second,
                         lv.f.first, lv.f.second, lv.color_index, lv.distance);
            for (int x : vs) std::fprintf(stderr, " %d", x);
            std::fprintf(stderr, " atts:");
            for (auto& a : atts) std::fprintf(stderr, " (i=%d kind=%d)", a.i, (int)a.kind);
            std::fprintf(stderr, " out:");
            for (auto& [e, c] : out) std::fprintf(stderr, " (%d,%d)=%d", e.first, e.second, c);
            std::fprintf(stderr, "\n");
#endif
        }
        out = base;
        return false;
    }

    bool run_hc_case(const WorkGraph& wg, CMap& out, HCScheme scheme_e, Symbols sy,
                     const std::vector<int>& vs, int k, const std::vector<HCSlot>& atts,
                     const std::map<int, int>& leaves) {
        int scheme = (int)scheme_e;
        auto E = [&](int i) { return vp(vs[i - 1], vs[i]); };
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        if (k == 4) return hc_small_face(wg, out, vs, atts, leaves);
        for (auto& [bv, lf] : leaves) out[vp(bv, lf)] = 1;
        int j = 0;
        for (const auto& a : atts) j = std::max(j, a.i);

        // attachment writer: pads take the literal slot recipe, real HCs keep
        // a sec2 template over the already-colored surroundings
        auto place = [&](const HCSlot& a, std::array<int, 7> slots,
                         std::initializer_list<HCScheme> prefer) {
            if (a.kind == HCSlot::real_hc) {
                if (slots[0] > 0) out[vp(a.lo, a.hi)] = slots[0];
                if (apply_template_checked(wg, out, a, E(a.i - 1), E(a.i + 1), prefer)) return true;
                return apply_template_checked(wg, out, a, E(a.i - 1), E(a.i + 1),
                                      {HCScheme::sec2_I, HCScheme::sec2_II, HCScheme::sec2_III});
            }
            write_slots(out, a, slots);
            return true;
        };
        auto generic_hc = [&](const HCSlot& a, const char* lo_color) {
            int fi = out.at(E(a.i));
            int fnext = out.count(E(a.i + 1)) ? out.at(E(a.i + 1)) : 0;
            int fprev = out.count(E(a.i - 1)) ? out.at(E(a.i - 1)) : 0;
            return place(a, {1, sy.get(lo_color), fi, 1, fnext, fprev, 1}, {HCScheme::sec2_I});
        };

        if (scheme == (int)HCScheme::sec2_I) {
            out[E(1)] = sy.get("2c");
            out[E(k - 1)] = sy.get("2d");
            if (k % 3 == 2) {
                const char* pat[3] = {"2b", "2a", "2c"};
                for (int i = 2; i <= k - 2; ++i) out[E(i)] = sy.get(pat[(i - 2) % 3]);
                if (const HCSlot* a = att_of(k - 2)) {
                    if (!place(*a, {1, sy.get("2a"), sy.get("2c"), 1, sy.get("2d"), sy.get("2b"), 1},
                               {HCScheme::sec2_I}))
                        return false;
                }
                for (const auto& a : atts)
                    if (a.i <= k - 3 && !generic_hc(a, "2d")) return false;
            } else if (k % 3 == 1) {
                if (j < 2) return false;
                if (j == 2) {
                    const char* pat[3] = {"2a", "2b", "2d"};
                    int idx = 0;
                    for (int i = k - 2; i >= 3; --i) out[E(i)] = sy.get(pat[idx++ % 3]);
                    const HCSlot* a = att_of(2);
                    if (!a) return false;
                    if (!place(*a, {1, sy.get("2b"), sy.get("2a"), 1, sy.get("2d"), sy.get("2c"), 1},
                               {HCScheme::sec2_I}))
                        return false;
                    for (const auto& at : atts)
                        if (at.i != 2 && at.i <= k - 3 && !generic_hc(at, "2d")) return false;
                } else {
                    const char* pat[3] = {"2b", "2a", "2c"};
                    for (int i = 2; i <= k - 2; ++i)
                        if (i != j) out[E(i)] = sy.get(pat[(i - 2) % 3]);
                    const HCSlot* a = att_of(j);
                    if (!a) return false;
                    if (j == k - 2) {
                        if (!place(*a, {1, sy.get("2b"), sy.get("2a"), 1, sy.get("2d"), sy.get("2c"), 1},
                                   {HCScheme::sec2_I}))
                            return false;
                    } else {
                        int fm2 = out.at(E(j - 2));
                        int fm1 = out.at(E(j - 1));
                        int fp1 = out.at(E(j + 1));
                        if (!place(*a, {6, sy.get("2d"), 1, fm2, 1, fm1, fp1}, {HCScheme::sec2_II}))
                            return false;
                    }
                    for (const auto& at : atts)
                        if (at.i != j && at.i <= k - 3 && !generic_hc(at, "2d")) return false;
                }
            } else {
                const char* pat[3] = {"2d", "2a", "2c"};
                for (int i = 2; i <= k - 2; ++i) out[E(i)] = sy.get(pat[(i - 2) % 3]);
                for (const auto& a : atts)
                    if (a.i <= k - 2 && !generic_hc(a, "2b")) return false;
            }
            return true;
        }
        if (scheme == (int)HCScheme::sec2_II) {
            out[E(1)] = sy.get("2c");
            out[E(k - 1)] = 1;
            const char* pat[3] = {"2d", "2a", "2c"};
            bool leafy_km1 = leaves.count(vs[k - 2]) != 0;
            for (int i = 2; i <= k - 2; ++i) out[E(i)] = sy.get(pat[(i - 2) % 3]);
            if (leafy_km1) out[vp(vs[k - 2], leaves.at(vs[k - 2]))] = sy.get(pat[(k - 1 - 2) % 3]);
            if (const HCSlot* a = att_of(k - 2)) {
                int fkm2 = out.at(E(k - 2));
                out[vp(vs[0], vs[k - 1])] = 1; // recolor v1 vk
                out[E(k - 1)] = 6;             // v_{k-1} v_k <- 3
                if (!place(*a, {1, sy.get("2b"), fkm2, 1, out.at(E(k - 4)), out.at(E(k - 3)), 1},
                           {HCScheme::sec2_I}))
                    return false;
            }
            for (const auto& a : atts)
                if (a.i <= k - 3 && !generic_hc(a, "2b")) return false;
            return true;
        }
        // sec2_III
        out[E(1)] = sy.get("2a");
        out[E(k - 1)] = sy.get("2b");
        const char* pat[3] = {"2d", "2c", "2a"};
        for (int i = 2; i <= k - 2; ++i) out[E(i)] = sy.get(pat[(i - 2) % 3]);
        if (const HCSlot* a = att_of(k - 2)) {
            int fkm2 = out.at(E(k - 2));
            if (!place(*a, {1, fkm2, out.at(E(k - 4)), 1, sy.get("2b"), out.at(E(k - 3)), 1},
                       {HCScheme::sec2_I}))
                return false;
        }
        for (const auto& a : atts)
            if (a.i <= k - 3 && !generic_hc(a, "2b")) return false;
        return true;
    }

    // F3 of size 4 under Case ii: a single attachment at (v2, v3); color the
    // real attachment as an HC by direct template search
    bool hc_small_face(const WorkGraph& wg, CMap& out, const std::vector<int>& vs,
                       const std::vector<HCSlot>& atts, const std::map<int, int>& leaves) {
        if (atts.size() != 1 || atts[0].i != 2) return false;
        const HCSlot& a = atts[0];
        for (auto& [bv, lf] : leaves) out[vp(bv, lf)] = 1;
        CMap snapshot = out;
        static const int perms[24][4] = {
            {2, 3, 4, 5}, {2, 3, 5, 4}, {2, 4, 3, 5}, {2, 4, 5, 3}, {2, 5, 3, 4}, {2, 5, 4, 3},
            {3, 2, 4, 5}, {3, 2, 5, 4}, {3, 4, 2, 5}, {3, 4, 5, 2}, {3, 5, 2, 4}, {3, 5, 4, 2},
            {4, 2, 3, 5}, {4, 2, 5, 3}, {4, 3, 2, 5}, {4, 3, 5, 2}, {4, 5, 2, 3}, {4, 5, 3, 2},
            {5, 2, 3, 4}, {5, 2, 4, 3}, {5, 3, 2, 4}, {5, 3, 4, 2}, {5, 4, 2, 3}, {5, 4, 3, 2}};
        for (HCScheme s : {HCScheme::sec2_I, HCScheme::sec2_II, HCScheme::sec2_III}) {
            auto t = hc_template(s);
            for (const auto& perm : perms) {
                out = snapshot;
                auto recolor = [&](int tc) {
                    if (tc == 1 || tc == 6) return tc;
                    return perm[tc - 2];
                };
                // host edges (v1 v2) and (v3 v4) take the u1 v1 / vk uk roles
                out[vp(vs[0], vs[1])] = recolor(t.colors[0]);
                out[vp(vs[2], vs[3])] = recolor(t.colors[2]);
                write_slots(out, a,
                            {recolor(t.colors[1]), recolor(t.colors[3]), recolor(t.colors[4]),
                             recolor(t.colors[5]), recolor(t.colors[6]), recolor(t.colors[7]),
                             recolor(t.colors[8])});
                if (!check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
            }
        }
        out = snapshot;
        return false;
    }

    // ---- Remark: F1 4-face under a 4-face F2 --------------------------------
    CMap remark_reduction(const WorkGraph& wg, int b1, const std::vector<WFace>& faces,
                          const std::vector<std::vector<int>>& dual, const std::vector<int>& path,
                          int depth) override {
        const WFace& f1 = faces[path[0]];
        const WFace& f2 = faces[path[1]];
        VP anchor = shared_edge(f1, f2);
        auto vs = orient_on(f1, anchor); // v1 v2 v3 v4 with (v1,v4) shared
        if ((int)vs.size() != 4) return level_fail(wg, "remark: F1 is not a 4-face");
        int v1 = vs[0], v2 = vs[1], v3 = vs[2], v4 = vs[3];
        auto leaf_of = [&](int x) {
            for (int w : wg.adj.at(x))
                if (wg.degree(w) == 1) return w;
            return -1;
        };
        int l2 = leaf_of(v2), l3 = leaf_of(v3);
        if (l2 < 0 || l3 < 0) return level_fail(wg, "remark: missing leaf edges");
        WorkGraph red = wg;
        for (int x : {v2, l2, v3, l3}) red.remove_vertex(x);
        int v = red.add_vertex();
        int vl = red.add_vertex();
        red.add_edge(v, v1);
        red.add_edge(v, v4);
        red.add_edge(v, vl);
        replace_arc(red.boundaries[b1], v1, v4, {v2, v3}, {v});
        record(*trace_, diff(wg, red, "remark-F1-triangle", ""));
        CMap f = level(red, depth + 1);

        // the reduced graph holds an HC on F2: roles v1'=z1-side etc.
        auto f2vs = orient_on(f2, vp(v1, v4));
        // f2 cycle reads v4, v4', v1', v1 or v1, v1', v4', v4
        int v1p, v4p;
        if (f2vs[0] == v4) {
            v4p = f2vs[1];
            v1p = f2vs[2];
        } else {
            v1p = f2vs[1];
            v4p = f2vs[2];
        }
        auto col = [&](int a, int b) { return f.at(vp(a, b)); };
        int v1pp = third_neighbor(wg, v1p, v1, v4p);
        int v4pp = third_neighbor(wg, v4p, v4, v1p);
        std::vector<int> word = {col(v1p, v1pp), col(v1p, v4p), col(v4p, v4pp),
                                 col(v1p, v1),   col(v4p, v4), col(v1, v4),
                                 col(v1, v),     col(v4, v),  col(v, vl)};
        CMap out = f;
        out.erase(vp(v, v1));
        out.erase(vp(v, v4));
        out.erase(vp(v, vl));

        int scheme = -1;
        Symbols sy = make_symbols();
        bool mirrored = false;
        for (int orient = 0; orient < 2 && scheme < 0; ++orient) {
            for (HCScheme s : {HCScheme::sec2_I, HCScheme::sec2_II, HCScheme::sec2_III}) {
                auto t = hc_template(s);
                Symbols trial = make_symbols();
                bool ok = true;
                static const char* names[7] = {"", "1", "2a", "2b", "2c", "2d", "3"};
                for (int i = 0; i < 9 && ok; ++i) ok = trial.bind(names[t.colors[i]], word[i]);
                if (ok) {
                    scheme = (int)s;
                    sy = trial;
                }
                if (scheme >= 0) break;
            }
            if (scheme < 0) {
                std::swap(word[0], word[2]);
                std::swap(word[3], word[4]);
                std::swap(word[6], word[7]);
                std::swap(v1p, v4p);
                std::swap(v1pp, v4pp);
                std::reverse(vs.begin(), vs.end());
                v1 = vs[0];
                v2 = vs[1];
                v3 = vs[2];
                v4 = vs[3];
                std::swap(l2, l3);
                mirrored = true;
            }
        }
        (void)mirrored;
        bool ok = scheme >= 0;
        if (ok) {
            if (scheme == (int)HCScheme::sec2_II) {
                out[vp(v1p, v4p)] = 1;
                out[vp(v1, v1p)] = 6;
                out[vp(v1, v4)] = 1;
                out[vp(v1, v2)] = sy.get("2b");
                out[vp(v3, v4)] = sy.get("2a");
                out[vp(v2, v3)] = 1;
                out[vp(v2, l2)] = sy.get("2c");
                out[vp(v3, l3)] = sy.get("2d");
            } else {
                out[vp(v1, v2)] = sy.get("2b");
                out[vp(v3, v4)] = sy.get("2a");
                out[vp(v2, v3)] = 1;
                out[vp(v2, l2)] = sy.get("2d");
                out[vp(v3, l3)] = sy.get("2c");
            }
        }
        if (!ok) out = f;
        return finish_level(wg, red, std::move(out), f, "remark-F1-triangle");
    }
};

} // namespace colorer
} // namespace spg
