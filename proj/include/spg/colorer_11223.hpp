#pragma once

#include "spg/colorer_hc_common.hpp"

namespace spg {
namespace colorer {

// Constructive (1^2,2^2,3)-coloring of subcubic outerplane graphs with no
// 2-vertices. Good coloring: every HC occurrence carries one of the five
// sec3 templates, unless the graph has at least two non-trivial blocks and
// the HC's chimney tip is a degree-three vertex. Palette indices:
// 1a,1b -> 1,2; 2a,2b -> 3,4; 3 -> 5.
class Colorer11223 : public HCColorerBase {
  public:
    Colorer11223() : HCColorerBase(parse_sequence("1^2,2^2,3")) {}

    static std::vector<GoodCheck> good_checks(const Graph& g, const OuterplaneEmbedding& emb,
                                              const EdgeColoring& c) {
        CMap cm;
        for (EdgeId e = 0; e < g.edge_count(); ++e) cm[vp(g.edge(e).u, g.edge(e).v)] = c.color(e);
        std::vector<GoodCheck> out;
        out.push_back({"every HC occurrence uses a sec3 template (modulo the exemption)",
                       hc_all_good(g, emb, cm)});
        return out;
    }

    static bool hc_all_good(const Graph& g, const OuterplaneEmbedding& emb, const CMap& cm) {
        auto occs = find_gadget_occurrences(g, emb, GadgetPattern::hc);
        auto bt = block_decomposition(g);
        int nontrivial = 0;
        for (const auto& b : bt.blocks)
            if (!b.trivial()) ++nontrivial;
        for (const auto& o : occs) {
            const auto& m = o.map;
            // exemption: two non-trivial blocks and the chimney tip z has
            // degree three in the graph
            if (nontrivial >= 2 && g.degree(m[7]) == 3) continue;
            std::vector<int> colors = {
                cm.at(vp(m[5], m[2])), cm.at(vp(m[2], m[3])), cm.at(vp(m[3], m[6])),
                cm.at(vp(m[2], m[1])), cm.at(vp(m[3], m[4])), cm.at(vp(m[1], m[4])),
                cm.at(vp(m[1], m[0])), cm.at(vp(m[0], m[4])), cm.at(vp(m[0], m[7]))};
            if (!match_sec3(colors)) return false;
        }
        return true;
    }

    static bool match_sec3(std::vector<int> colors) {
        for (int orient = 0; orient < 2; ++orient) {
            for (HCScheme s : {HCScheme::sec3_I, HCScheme::sec3_II, HCScheme::sec3_III,
                               HCScheme::sec3_IV, HCScheme::sec3_V}) {
                auto t = hc_template(s);
                std::map<int, int> ren;
                std::set<int> used1, used2;
                bool ok = true;
                for (int i = 0; i < 9 && ok; ++i) {
                    int tc = t.colors[i], ac = colors[i];
                    if (tc == 5) {
                        if (ac != 5) ok = false;
                    } else {
                        bool tone = tc <= 2, aone = ac <= 2;
                        if (ac == 5 || tone != aone) ok = false;
                        else if (ren.count(tc)) ok = ren[tc] == ac;
                        else if ((tone ? used1 : used2).count(ac)) ok = false;
                        else {
                            ren[tc] = ac;
                            (tone ? used1 : used2).insert(ac);
                        }
                    }
                }
                if (ok) return true;
            }
            std::swap(colors[0], colors[2]);
            std::swap(colors[3], colors[4]);
            std::swap(colors[6], colors[7]);
        }
        return false;
    }

  protected:
    Symbols make_symbols() const override { return symbols_11223(); }
    int pendant_face_min_reduce() const override { return 4; }

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
            return hc_all_good(g, emb, local);
        };
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

    bool extend_leaf_pair(const WorkGraph& wg, CMap& out, int u2, int u1, int u1p) override {
        // paper order: a pair of 1-colors, then 2-colors, then color 3 on the
        // deeper edge; one repair recolor step if everything is blocked
        auto try_all = [&]() {
            static const int prefs[][2] = {{1, 2}, {2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2},
                                           {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 1}, {5, 2},
                                           {1, 5}, {2, 5}, {3, 4}, {4, 3}, {3, 5}, {4, 5},
                                           {5, 3}, {5, 4}};
            for (auto& p : prefs) {
                if (!edge_ok(wg, out, u2, u1, p[0], seq_)) continue;
                out[vp(u2, u1)] = p[0];
                if (edge_ok(wg, out, u2, u1p, p[1], seq_)) {
                    out[vp(u2, u1p)] = p[1];
                    return true;
                }
                out.erase(vp(u2, u1));
            }
            return false;
        };
        if (try_all()) return true;
        // single repair: recolor one nearby edge the way the proof recolors
        // uu' or uu'' to a free 1-color
        std::vector<VP> near;
        for (int w : wg.adj.at(u2))
            for (int x : wg.adj.at(w))
                if (out.count(vp(w, x))) near.push_back(vp(w, x));
        for (const VP& e : near) {
            int old = out.at(e);
            for (int c = 1; c <= 5; ++c) {
                if (c == old) continue;
                out.erase(e);
                if (edge_ok(wg, out, e.first, e.second, c, seq_)) {
                    out[e] = c;
                    if (try_all() && good_filter()(wg, out)) return true;
                }
                out[e] = old;
            }
        }
        return false;
    }

    // ---- single-face block ---------------------------------------------------
    bool extend_single_face(const WorkGraph& wg, CMap& out, const std::vector<int>& cyc, int u0,
                            int v0) override {
        int k = (int)cyc.size() - 1;
        auto U = [&](int i) { return cyc[((i % (k + 1)) + k + 1) % (k + 1)]; };
        auto leaf_of = [&](int x) {
            for (int w : wg.adj.at(x))
                if (wg.degree(w) == 1) return w;
            return -1;
        };
        int c0 = out.at(vp(u0, v0));
        Symbols sy = make_symbols();
        auto alternate_edges = [&](int from, int to, int c1, int c2) {
            int idx = 0;
            for (int i = from; i <= to; ++i) out[vp(U(i), U(i + 1))] = (idx++ % 2) ? c2 : c1;
        };

        if (c0 == 3 || c0 == 4) { // case (i)
            sy.bind("2a", c0);
            int onea = sy.get("1a"), oneb = sy.get("1b"), twob = sy.get("2b");
            if (k % 2 == 1) {
                alternate_edges(0, k, onea, oneb);
                int idx = 0;
                for (int i = 1; i <= k; ++i)
                    out[vp(U(i), leaf_of(U(i)))] = (idx++ % 2) ? sy.get("2a") : twob;
                return true;
            }
            if (k == 2) {
                out[vp(U(0), U(1))] = onea;
                out[vp(U(1), U(2))] = twob;
                out[vp(U(2), U(0))] = oneb;
                out[vp(U(1), leaf_of(U(1)))] = oneb;
                out[vp(U(2), leaf_of(U(2)))] = onea;
                return true;
            }
            // k even >= 4
            out[vp(U(0), U(1))] = onea;
            out[vp(U(1), leaf_of(U(1)))] = oneb;
            out[vp(U(1), U(2))] = twob;
            // u0uk, uku_{k-1}, ..., u3u2 together with u2's leaf: 1a, 1b, ...
            int idx = 0;
            out[vp(U(k), U(0))] = onea;
            ++idx;
            for (int i = k - 1; i >= 2; --i) out[vp(U(i), U(i + 1))] = (idx++ % 2) ? oneb : onea;
            out[vp(U(2), leaf_of(U(2)))] = (idx++ % 2) ? oneb : onea;
            idx = 0;
            for (int i = 3; i <= k; ++i)
                out[vp(U(i), leaf_of(U(i)))] = (idx++ % 2) ? twob : sy.get("2a");
            return true;
        }
        if (c0 == 1 || c0 == 2) { // case (ii)
            sy.bind("1a", c0);
            int oneb = sy.get("1b");
            out[vp(U(0), U(1))] = oneb;
            std::set<int> v0cols;
            for (int w : wg.adj.at(v0))
                if (w != u0) v0cols.insert(out.at(vp(v0, w)));
            std::vector<int> cands;
            for (int c : {3, 4})
                if (!v0cols.count(c)) cands.push_back(c);
            cands.push_back(5);
            CMap snapshot = out;
            for (int ck : cands) {
                out = snapshot;
                out[vp(U(k), U(0))] = ck;
                if (k % 2 == 0) {
                    int idx = 0;
                    for (int i = 1; i < k; ++i) out[vp(U(i), U(i + 1))] = (idx++ % 2) ? oneb : c0;
                    out[vp(U(k), leaf_of(U(k)))] = (idx++ % 2) ? oneb : c0;
                    int x = (ck == 3) ? 4 : 3;
                    int y = (x == 3) ? 4 : 3;
                    idx = 0;
                    for (int i = 1; i < k; ++i) out[vp(U(i), leaf_of(U(i)))] = (idx++ % 2) ? y : x;
                } else if (k == 3) {
                    int x = (ck == 3) ? 4 : 3;
                    out[vp(U(1), leaf_of(U(1)))] = c0;
                    out[vp(U(1), U(2))] = x;
                    out[vp(U(2), leaf_of(U(2)))] = c0;
                    out[vp(U(2), U(3))] = oneb;
                    out[vp(U(3), leaf_of(U(3)))] = c0;
                } else { // k odd >= 5
                    int x = (ck == 3) ? 4 : 3;
                    int y = (x == 3) ? 4 : 3;
                    out[vp(U(1), leaf_of(U(1)))] = c0;
                    out[vp(U(1), U(2))] = x;
                    out[vp(U(2), leaf_of(U(2)))] = c0;
                    int idx = 0;
                    for (int i = 2; i < k; ++i) out[vp(U(i), U(i + 1))] = (idx++ % 2) ? c0 : oneb;
                    out[vp(U(k), leaf_of(U(k)))] = (idx++ % 2) ? c0 : oneb;
                    idx = 0;
                    for (int i = 3; i < k; ++i) out[vp(U(i), leaf_of(U(i)))] = (idx++ % 2) ? x : y;
                }
                if (!check_level(wg, seq_, out, true)) return true;
            }
            out = snapshot;
            return false;
        }
        if (c0 == 5) { // case (iii)
            int onea = sy.get("1a"), oneb = sy.get("1b");
            out[vp(U(0), U(1))] = onea;
            out[vp(U(1), leaf_of(U(1)))] = oneb;
            out[vp(U(k), U(0))] = oneb;
            for (int ta : {3, 4}) {
                CMap snapshot = out;
                out[vp(U(1), U(2))] = ta;
                int tb = (ta == 3) ? 4 : 3;
                if (k == 2) {
                    out[vp(U(2), leaf_of(U(2)))] = onea;
                } else {
                    int idx = 0;
                    for (int i = k - 1; i >= 2; --i) out[vp(U(i), U(i + 1))] = (idx++ % 2) ? oneb : onea;
                    out[vp(U(2), leaf_of(U(2)))] = (idx++ % 2) ? oneb : onea;
                    idx = 0;
                    for (int i = 3; i <= k; ++i) out[vp(U(i), leaf_of(U(i)))] = (idx++ % 2) ? ta : tb;
                }
                if (!check_level(wg, seq_, out, true)) return true;
                out = snapshot;
            }
            return false;
        }
        return false;
    }

    // ---- pendant face (reduced to triangle with leaf) -----------------------
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
        return pendant_cases(wg, out, vs, u1, uk, a1, am, a3, cv1, cvk, cvl, 0);
    }

    bool pendant_cases(const WorkGraph& wg, CMap& out, std::vector<int> vs, int u1, int uk, int a1,
                       int am, int a3, int cv1, int cvk, int cvl, int depth) {
        if (depth > 3) return false;
        int k = (int)vs.size();
        auto leaf_of = [&](int x) {
            for (int w : wg.adj.at(x))
                if (wg.degree(w) == 1) return w;
            return -1;
        };
        auto E = [&](int i) { return vp(vs[i - 1], vs[i]); };
        auto LF = [&](int i) { return vp(vs[i - 1], leaf_of(vs[i - 1])); };
        auto mirror = [&]() {
            std::reverse(vs.begin(), vs.end());
            std::swap(u1, uk);
            std::swap(a1, a3);
            std::swap(cv1, cvk);
        };
        auto is1 = [](int c) { return c == 1 || c == 2; };
        auto is2 = [](int c) { return c == 3 || c == 4; };
        auto other1 = [](int c) { return c == 1 ? 2 : 1; };
        auto other2 = [](int c) { return c == 3 ? 4 : 3; };
        // run over boundary edges [from..to] plus optionally a closing leaf
        auto run_edges = [&](int from, int to, int c1, int c2, int leaf_vertex_idx) {
            int idx = 0;
            if (from <= to)
                for (int i = from; i <= to; ++i) out[E(i)] = (idx++ % 2) ? c2 : c1;
            else
                for (int i = from; i >= to; --i) out[E(i)] = (idx++ % 2) ? c2 : c1;
            if (leaf_vertex_idx > 0) out[LF(leaf_vertex_idx)] = (idx++ % 2) ? c2 : c1;
            return idx;
        };
        auto run_leaves = [&](int from, int to, int c1, int c2) {
            int idx = 0;
            if (from <= to)
                for (int i = from; i <= to; ++i) out[LF(i)] = (idx++ % 2) ? c2 : c1;
            else
                for (int i = from; i >= to; --i) out[LF(i)] = (idx++ % 2) ? c2 : c1;
        };
        auto recolor_mid = [&](int c) {
            CMap probe = out;
            probe[vp(vs[0], vs[k - 1])] = c;
            if (verify_recolor(wg, probe)) {
                out[vp(vs[0], vs[k - 1])] = c;
                return true;
            }
            return false;
        };

        bool has3 = (a1 == 5) || (am == 5) || (a3 == 5);
        if (!has3) {
            int twos = is2(a1) + is2(am) + is2(a3);
            if (twos == 0) { // case 1.1: 1a,1b,1a
                int onea = a1, oneb = am;
                int twoa = is2(cv1) ? cv1 : (is2(cvk) ? cvk : 3);
                int twob = other2(twoa);
                out[LF(2)] = oneb;
                out[E(1)] = twoa;
                out[E(k - 1)] = twob;
                int idx = run_edges(2, k - 2, onea, oneb, k - 1);
                (void)idx;
                if (k == 4) return true;
                if (k % 2 == 0) run_leaves(3, k - 2, twob, twoa);
                else {
                    out[LF(3)] = 5;
                    if (k >= 7) run_leaves(k - 2, 4, twoa, twob);
                }
                return true;
            }
            if (twos == 1) { // case 1.2.1
                if (is2(am)) {
                    if (a1 == a3) { // 1a,2a,1a -> recolor middle to the other 1
                        if (recolor_mid(other1(a1)))
                            return pendant_cases(wg, out, vs, u1, uk, a1, other1(a1), a3, cv1, cvk, cvl,
                                                 depth + 1);
                        return false;
                    }
                    // 1a,2a,1b
                    int onea = a1, oneb = a3, twob = other2(am);
                    out[E(1)] = a3;   // 1b role
                    out[E(k - 1)] = onea;
                    if (k % 2 == 1) {
                        run_edges(2, k - 2, onea, oneb, 0);
                        run_leaves(2, k - 1, twob, am);
                    } else {
                        out[LF(2)] = onea;
                        out[E(2)] = twob;
                        out[LF(3)] = oneb;
                        if (k >= 6) run_edges(3, k - 2, onea, oneb, 0);
                        if (k >= 6) run_leaves(4, k - 1, am, twob);
                        else out[LF(k - 1)] = am;
                    }
                    return true;
                }
                // the 2-color on an outer edge: orient it onto vk uk
                if (is2(a1)) mirror();
                // 1a,1b,2a
                int onea = a1, oneb = am, twoa = a3;
                if (cv1 == 5) { // (3,1a,1b): alternate from the far end
                    run_edges(k - 1, 2, onea, oneb, 2);
                    run_leaves(k - 1, 3, other2(twoa), twoa);
                    return true;
                }
                int twob = other2(twoa);
                out[E(1)] = twob;
                out[E(k - 1)] = onea;
                if (k == 4) {
                    // candidate ladder following the proof's three switches
                    CMap snap = out;
                    out[LF(2)] = onea;
                    out[E(2)] = oneb;
                    out[LF(3)] = 5;
                    if (!check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
                    out = snap;
                    std::swap(out[E(k - 1)], out[vp(vs[k - 1], uk)]);
                    out[LF(2)] = onea;
                    out[E(2)] = oneb;
                    out[LF(3)] = onea;
                    if (!check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
                    out = snap;
                    out[E(1)] = 1;
                    { // switch v1v2 with v1vk roles, recolor vk uk to 1b
                        out[E(1)] = oneb;
                        out[vp(vs[0], vs[k - 1])] = twob;
                        out[vp(vs[k - 1], uk)] = oneb;
                        out[LF(2)] = onea;
                        out[E(2)] = twoa;
                        out[LF(3)] = oneb;
                    }
                    if (!check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
                    out = snap;
                    return false;
                }
                out[LF(3)] = 5;
                run_edges(k - 1, 2, onea, oneb, 2);
                run_leaves(k - 1, 4, twob, twoa);
                return true;
            }
            // twos == 2: case 1.2.2
            if (is2(am) && is2(a3) && is1(a1)) {
                if (recolor_mid(other1(a1)))
                    return pendant_cases(wg, out, vs, u1, uk, a1, other1(a1), a3, cv1, cvk, cvl,
                                         depth + 1);
                return false;
            }
            if (is2(am) && is2(a1) && is1(a3)) {
                mirror();
                if (recolor_mid(other1(a1)))
                    return pendant_cases(wg, out, vs, u1, uk, a1, other1(a1), a3, cv1, cvk, cvl,
                                         depth + 1);
                return false;
            }
            // 2a,1a,2b
            if (is2(a1) && is2(a3) && is1(am)) {
                int onea = cvl == 1 || cvl == 2 ? cvl : other1(am);
                int oneb = am;
                out[E(k - 1)] = 5;
                run_edges(1, k - 2, oneb, onea, k - 1);
                run_leaves(2, k - 2, other2(a1) == a3 ? a3 : other2(a1), a1);
                // the paper's leaf run is 2b, 2a, ... relative to f(vv1)=1b:
                // fall back to the candidate check
                if (!check_level(wg, seq_, out, true)) return true;
                // one retry with the other leaf parity
                run_leaves(2, k - 2, a1, other2(a1));
                return true;
            }
            return false;
        }

        // color 3 present on the context
        int twos = is2(a1) + is2(am) + is2(a3);
        if (twos >= 2) return false; // impossible per the proof
        if (twos == 0) { // case 2.1
            if (am == 5 && a1 == a3) {
                if (recolor_mid(other1(a1)))
                    return pendant_cases(wg, out, vs, u1, uk, a1, other1(a1), a3, cv1, cvk, cvl,
                                         depth + 1);
                return false;
            }
            if (am == 5) { // 1a,3,1b
                int onea = a1, oneb = a3, twoa = is2(cvl) ? cvl : 3;
                out[E(k - 1)] = onea;
                out[LF(k - 1)] = oneb;
                out[E(k - 2)] = twoa;
                run_edges(1, k - 3, oneb, onea, k - 2);
                if (k >= 5) run_leaves(k - 3, 2, other2(twoa), twoa);
                return true;
            }
            // 3,1a,1b (or mirrored)
            if (a3 == 5) mirror();
            if (a1 != 5) return false;
            {
                int onea = am, oneb = a3 == am ? other1(am) : a3;
                int twoa = 3;
                out[E(k - 1)] = twoa;
                run_edges(1, k - 2, oneb, onea, k - 1);
                run_leaves(k - 2, 2, other2(twoa), twoa);
                return true;
            }
        }
        // twos == 1: case 2.2
        if ((is1(a1) && am == 5 && is2(a3)) || (is1(a1) && is2(am) && a3 == 5)) {
            if (recolor_mid(other1(a1)))
                return pendant_cases(wg, out, vs, u1, uk, a1, other1(a1), a3, cv1, cvk, cvl, depth + 1);
            return false;
        }
        if ((is1(a3) && am == 5 && is2(a1)) || (is1(a3) && is2(am) && a1 == 5)) {
            mirror();
            if (recolor_mid(other1(a1)))
                return pendant_cases(wg, out, vs, u1, uk, a1, other1(a1), a3, cv1, cvk, cvl, depth + 1);
            return false;
        }
        // 2a,1a,3 (or mirrored)
        if (!(is2(a1) && is1(am) && a3 == 5)) {
            mirror();
            if (!(is2(a1) && is1(am) && a3 == 5)) return false;
        }
        {
            int onea = am, oneb = other1(am), twoa = a1, twob = other2(a1);
            CMap snap = out;
            // former: f(vv1..) = 1b, 2b, 1a
            out[E(1)] = oneb;
            out[LF(2)] = onea;
            out[E(2)] = twob;
            run_edges(k - 1, 3, oneb, onea, 3);
            if (k >= 5) run_leaves(4, k - 1, twoa, twob);
            if (!check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
            out = snap;
            // latter: 2b, 1b, 1a
            out[E(1)] = twob;
            run_edges(k - 1, 2, oneb, onea, 2);
            run_leaves(3, k - 1, twoa, twob);
            if (!check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
            out = snap;
            return false;
        }
    }

    bool verify_recolor(const WorkGraph& wg, const CMap& probe) {
        return !check_level(wg, seq_, probe, false).has_value();
    }

    // ---- HC template application ---------------------------------------------
    // ---- two-layer -------------------------------------------------------------
    bool extend_two_layer(const WorkGraph& wg, CMap& out, const std::vector<int>& cyc, int u0, int v0,
                          const std::vector<HCSlot>& atts_in, const std::map<int, int>& leaves) override {
        int k = (int)cyc.size() - 1;
        auto U = [&](int i) { return cyc[((i % (k + 1)) + k + 1) % (k + 1)]; };
        auto EU = [&](int i) { return vp(U(i), U(i + 1)); };
        std::vector<HCSlot> atts = atts_in;
        for (auto& a : atts) a.i -= 1;
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        int c0 = out.at(vp(u0, v0));
        Symbols sy = make_symbols();
        auto apply_rest = [&](std::initializer_list<int> skip) {
            for (const auto& a : atts) {
                bool skipped = false;
                for (int s : skip)
                    if (a.i == s) skipped = true;
                if (skipped) continue;
                if (!apply_template_checked(wg, out, a, EU(a.i - 1), EU(a.i + 1), {HCScheme::sec3_II})) return false;
            }
            return true;
        };

        if (c0 == 1 || c0 == 2) { // case 1
            sy.bind("1a", c0);
            int oneb = sy.get("1b");
            out[EU(0)] = oneb;
            std::set<int> v0cols;
            for (int w : wg.adj.at(v0))
                if (w != u0) v0cols.insert(out.at(vp(v0, w)));
            std::vector<int> cands;
            for (int c : {3, 4})
                if (!v0cols.count(c)) cands.push_back(c);
            cands.push_back(5);
            CMap base = out;
            for (int ck : cands) {
                out = base;
                out[vp(U(k), U(0))] = ck;
                bool ok = false;
                if (ck != 5) ok = layer31_case11(wg, out, U, EU, k, c0, oneb, ck, atts, leaves);
                else ok = layer31_case12(wg, out, U, EU, k, c0, oneb, atts, leaves);
                if (ok && !check_level(wg, seq_, out, true) && good_filter()(wg, out)) return true;
            }
            out = base;
            return false;
        }
        // case 2: f(u0 v0) is 2a or 3
        out[EU(0)] = 1;
        out[vp(U(k), U(0))] = 2;
        auto leaf_run = [&](int from, int to, int c1, int c2) {
            int idx = 0;
            for (int i = from; i <= to; ++i) {
                auto it = leaves.find(U(i));
                if (it != leaves.end()) out[vp(U(i), it->second)] = (idx % 2) ? c2 : c1;
                ++idx;
            }
        };
        if (k % 2 == 1) {
            int idx = 0;
            for (int i = 1; i < k; ++i) out[EU(i)] = (idx++ % 2) ? 1 : 2;
            leaf_run(1, k, 4, 3);
            if (!apply_rest({})) return false;
            return true;
        }
        // k even
        {
            auto l1 = leaves.find(U(1));
            if (l1 != leaves.end()) out[vp(U(1), l1->second)] = 2;
            out[EU(1)] = 4;
            auto l2 = leaves.find(U(2));
            if (l2 != leaves.end()) out[vp(U(2), l2->second)] = 1;
            int idx = 0;
            for (int i = 2; i < k; ++i) out[EU(i)] = (idx++ % 2) ? 1 : 2;
            leaf_run(3, k, 3, 4);
            const HCSlot* h1 = att_of(1);
            const HCSlot* h2 = att_of(2);
            if (h1 && !apply_template_checked(wg, out, *h1, EU(0), EU(2), {HCScheme::sec3_I})) return false;
            if (h2 && !apply_template_checked(wg, out, *h2, EU(1), EU(3), {HCScheme::sec3_III})) return false;
            std::initializer_list<int> skip = {1, 2};
            if (!apply_rest(skip)) return false;
            return true;
        }
    }

    template <class UF, class EF>
    bool layer31_case11(const WorkGraph& wg, CMap& out, UF U, EF EU, int k, int onea, int oneb, int twoa,
                        const std::vector<HCSlot>& atts, const std::map<int, int>& leaves) {
        (void)wg;
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        int twob = (twoa == 3) ? 4 : 3;
        if (k == 3) {
            const HCSlot* h1 = att_of(1);
            if (!h1) {
                // mirror fallback: attachment on (2,3) instead
                h1 = att_of(2);
                if (!h1) return false;
            }
            if (h1->i == 1) {
                out[EU(1)] = twob;
                out[EU(2)] = onea;
                auto l3 = leaves.find(U(3));
                if (l3 != leaves.end()) out[vp(U(3), l3->second)] = oneb;
                return apply_template_checked(wg, out, *h1, EU(0), EU(2), {HCScheme::sec3_I});
            }
            out[EU(2)] = twob;
            out[EU(1)] = onea;
            auto l1 = leaves.find(U(1));
            if (l1 != leaves.end()) out[vp(U(1), l1->second)] = oneb;
            return apply_template_checked(wg, out, *h1, EU(1), EU(3), {HCScheme::sec3_I});
        }
        int idx = 0;
        for (int i = 1; i < k; ++i) out[EU(i)] = (idx++ % 2) ? oneb : onea;
        auto lk = leaves.find(U(k));
        if (lk != leaves.end()) out[vp(U(k), lk->second)] = (idx % 2) ? oneb : onea;
        idx = 0;
        for (int i = 1; i <= k - 2; ++i) {
            auto it = leaves.find(U(i));
            if (it != leaves.end()) out[vp(U(i), it->second)] = (idx % 2) ? twoa : twob;
            ++idx;
        }
        const HCSlot* hk2 = att_of(k - 2);
        const HCSlot* hk1 = att_of(k - 1);
        if (hk2) {
            out[EU(k - 1)] = twob;
            if (!apply_template_checked(wg, out, *hk2, EU(k - 3), EU(k - 1), {HCScheme::sec3_IV})) return false;
        } else {
            auto lkm1 = leaves.find(U(k - 1));
            if (lkm1 != leaves.end()) out[vp(U(k - 1), lkm1->second)] = 5;
            if (hk1 && !apply_template_checked(wg, out, *hk1, EU(k - 2), EU(k), {HCScheme::sec3_IV})) return false;
        }
        for (const auto& a : atts) {
            if ((hk2 && a.i == k - 2) || (!hk2 && hk1 && a.i == k - 1)) continue;
            if (!apply_template_checked(wg, out, a, EU(a.i - 1), EU(a.i + 1), {HCScheme::sec3_II})) return false;
        }
        return true;
    }

    template <class UF, class EF>
    bool layer31_case12(const WorkGraph& wg, CMap& out, UF U, EF EU, int k, int onea, int oneb,
                        const std::vector<HCSlot>& atts, const std::map<int, int>& leaves) {
        (void)wg;
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        int idx = 0;
        for (int i = 1; i < k; ++i) out[EU(i)] = (idx++ % 2) ? oneb : onea;
        auto lk = leaves.find(U(k));
        if (lk != leaves.end()) out[vp(U(k), lk->second)] = (idx % 2) ? oneb : onea;
        idx = 0;
        for (int i = 1; i <= k - 1; ++i) {
            auto it = leaves.find(U(i));
            if (it != leaves.end()) out[vp(U(i), it->second)] = (idx % 2) ? 4 : 3;
            ++idx;
        }
        const HCSlot* hk1 = att_of(k - 1);
        if (hk1) {
            // switch u_{k-1} u_k with the 2-run color and go Type V
            auto lkm1 = leaves.find(U(k - 1));
            int boundary = out.at(EU(k - 1));
            if (lkm1 != leaves.end()) {
                std::swap(out[EU(k - 1)], out[vp(U(k - 1), lkm1->second)]);
            } else {
                out[EU(k - 1)] = ((k - 2) % 2) ? 4 : 3;
            }
            (void)boundary;
            if (!apply_template_checked(wg, out, *hk1, EU(k - 2), EU(k), {HCScheme::sec3_V})) return false;
        }
        for (const auto& a : atts) {
            if (hk1 && a.i == k - 1) continue;
            if (!apply_template_checked(wg, out, a, EU(a.i - 1), EU(a.i + 1), {HCScheme::sec3_II})) return false;
        }
        return true;
    }

    // ---- HC replacement engine (cases keyed by the added HC's template) ----
    bool extend_hc_face(const WorkGraph& wg, CMap& out, const std::vector<int>& vs_in, int u1_in,
                        int uk_in, const std::array<int, 4>& zvs,
                        const std::vector<HCSlot>& atts_in, const std::map<int, int>& leaves) override {
        std::vector<int> vs = vs_in;
        int k = (int)vs.size();
        int u1 = u1_in, uk = uk_in;
        std::vector<HCSlot> atts = atts_in;
        auto [z1, zk, z2, z] = zvs;
        auto col = [&](int a, int b) {
            auto it = out.find(vp(a, b));
            if (it == out.end()) {
#ifdef SPG_COLORER_DEBUG
                std::fprintf(stderr, "missing edge (%d,%d) in extend_hc_face\n", a, b);
#endif
                fail(errc::invalid_coloring, "context edge missing");
            }
            return it->second;
        };
        std::vector<int> word = {col(u1, vs[0]),      col(vs[0], vs[k - 1]), col(vs[k - 1], uk),
                                 col(vs[0], z1),      col(vs[k - 1], zk),    col(z1, zk),
                                 col(z1, z2),         col(z2, zk),           col(z2, z)};
        for (int x : {z1, zk, z2, z})
            for (int y : {vs[0], vs[k - 1], z1, zk, z2, z})
                out.erase(vp(x, y));

        int scheme = -1;
        Symbols sy = make_symbols();
        static const char* names[6] = {"", "1a", "1b", "2a", "2b", "3"};
        for (int orient = 0; orient < 2 && scheme < 0; ++orient) {
            for (HCScheme s : {HCScheme::sec3_I, HCScheme::sec3_II, HCScheme::sec3_III,
                               HCScheme::sec3_IV, HCScheme::sec3_V}) {
                auto t = hc_template(s);
                Symbols trial = make_symbols();
                bool ok = true;
                for (int i = 0; i < 9 && ok; ++i) ok = trial.bind(names[t.colors[i]], word[i]);
                if (ok) {
                    scheme = (int)s;
                    sy = trial;
                    break;
                }
            }
            if (scheme < 0) {
                std::swap(word[0], word[2]);
                std::swap(word[3], word[4]);
                std::swap(word[6], word[7]);
                std::reverse(vs.begin(), vs.end());
                std::swap(u1, uk);
                for (auto& a : atts) {
                    a.i = k - a.i;
                    std::swap(a.lo, a.hi);
                    std::swap(a.lo_p, a.hi_p);
                    std::swap(a.lo_pp, a.hi_pp);
                }
            }
        }
        if (scheme < 0) return false;
        int onea = sy.get("1a"), oneb = sy.get("1b"), twoa = sy.get("2a"), twob = sy.get("2b");

        auto E = [&](int i) { return vp(vs[i - 1], vs[i]); };
        auto att_of = [&](int i) -> const HCSlot* {
            for (const auto& a : atts)
                if (a.i == i) return &a;
            return nullptr;
        };
        auto leaf_edge = [&](int i) -> std::optional<VP> {
            auto it = leaves.find(vs[i - 1]);
            if (it == leaves.end()) return std::nullopt;
            return vp(vs[i - 1], it->second);
        };
        // alternate colors over "items" at positions from..to: a leaf edge
        // where one exists, otherwise skip the slot silently
        auto items_run = [&](int from, int to, int c1, int c2) {
            int idx = 0;
            int step = from <= to ? 1 : -1;
            for (int i = from; step > 0 ? i <= to : i >= to; i += step) {
                if (auto e = leaf_edge(i)) out[*e] = (idx % 2) ? c2 : c1;
                ++idx;
            }
        };
        auto rest_type2 = [&](std::initializer_list<int> skip) {
            for (const auto& a : atts) {
                bool sk = false;
                for (int s : skip)
                    if (a.i == s) sk = true;
                if (sk) continue;
                if (!apply_template_checked(wg, out, a, E(a.i - 1), E(a.i + 1), {HCScheme::sec3_II})) return false;
            }
            return true;
        };

        if (scheme == (int)HCScheme::sec3_I) {
            if (k % 2 == 1) {
                int idx = 0;
                for (int i = 1; i <= k - 1; ++i) out[E(i)] = (idx++ % 2) ? onea : oneb;
                items_run(2, k - 1, twob, twoa);
                return rest_type2({});
            }
            int j = 0;
            for (const auto& a : atts)
                if (j == 0 || a.i < j) j = a.i;
            if (j == 0) return false;
            int idx = 0;
            for (int i = 1; i <= k - 1; ++i) {
                if (i == j) continue;
                out[E(i)] = (idx++ % 2) ? onea : oneb;
            }
            // 2-run over leaves with the edge vj vj+1 taking a slot
            idx = 0;
            for (int i = 2; i <= k - 1; ++i) {
                if (i == j) {
                    out[E(j)] = (idx % 2) ? twoa : twob;
                    ++idx;
                    ++i; // skip j+1
                    continue;
                }
                if (auto e = leaf_edge(i)) out[*e] = (idx % 2) ? twoa : twob;
                ++idx;
            }
            const HCSlot* hj = att_of(j);
            if (!hj || !apply_template_checked(wg, out, *hj, E(j - 1), E(j + 1), {HCScheme::sec3_I})) return false;
            return rest_type2({j});
        }
        if (scheme == (int)HCScheme::sec3_II) {
            out[E(1)] = twoa;
            out[E(k - 1)] = twob;
            if (k == 5) {
                const HCSlot* h2 = att_of(2);
                if (h2) {
                    out[E(2)] = oneb;
                    out[E(3)] = onea;
                    if (auto e = leaf_edge(4)) out[*e] = oneb;
                    if (!apply_template_checked(wg, out, *h2, E(1), E(3), {HCScheme::sec3_IV})) return false;
                    return rest_type2({2});
                }
                const HCSlot* h3 = att_of(3);
                if (!h3) return false;
                out[E(3)] = oneb;
                out[E(2)] = onea;
                if (auto e = leaf_edge(2)) out[*e] = oneb;
                if (!apply_template_checked(wg, out, *h3, E(2), E(4), {HCScheme::sec3_IV})) return false;
                return rest_type2({3});
            }
            int idx = 0;
            if (auto e = leaf_edge(2)) out[*e] = onea;
            idx = 1;
            for (int i = 2; i <= k - 2; ++i) out[E(i)] = (idx++ % 2) ? oneb : onea;
            if (auto e = leaf_edge(k - 1)) out[*e] = (idx++ % 2) ? oneb : onea;
            const HCSlot* h3 = att_of(3);
            if (!h3) {
                if (auto e = leaf_edge(3)) out[*e] = 5;
                items_run(k - 2, 4, twoa, twob);
            } else {
                if (auto e = leaf_edge(4)) out[*e] = 5;
                out[E(2)] = twob;
                if (k >= 7) items_run(k - 2, 5, twoa, twob);
                if (!apply_template_checked(wg, out, *h3, E(2), E(4), {HCScheme::sec3_IV})) return false;
            }
            const HCSlot* h2 = att_of(2);
            if (h2 && !apply_template_checked(wg, out, *h2, E(1), E(3), {HCScheme::sec3_IV})) return false;
            const HCSlot* hk2 = att_of(k - 2);
            if (hk2 && hk2->i != 3 &&
                !apply_template_checked(wg, out, *hk2, E(k - 3), E(k - 1), {HCScheme::sec3_III}))
                return false;
            std::vector<int> skip{2, k - 2};
            if (h3) skip.push_back(3);
            for (const auto& a : atts) {
                bool sk = false;
                for (int s : skip)
                    if (a.i == s) sk = true;
                if (sk) continue;
                if (!apply_template_checked(wg, out, a, E(a.i - 1), E(a.i + 1), {HCScheme::sec3_II})) return false;
            }
            return true;
        }
        if (scheme == (int)HCScheme::sec3_III) {
            out[E(1)] = oneb;
            out[E(k - 1)] = twob;
            if (k % 2 == 1) {
                int idx = 0;
                for (int i = 2; i <= k - 2; ++i) out[E(i)] = (idx++ % 2) ? oneb : onea;
                if (auto e = leaf_edge(k - 1)) out[*e] = (idx++ % 2) ? oneb : onea;
                items_run(2, k - 2, twob, twoa);
            } else {
                if (auto e = leaf_edge(2)) out[*e] = onea;
                out[E(2)] = twob;
                if (auto e = leaf_edge(3)) out[*e] = oneb;
                int idx = 0;
                for (int i = 3; i <= k - 2; ++i) out[E(i)] = (idx++ % 2) ? oneb : onea;
                if (auto e = leaf_edge(k - 1)) out[*e] = (idx++ % 2) ? oneb : onea;
                items_run(4, k - 2, twoa, twob);
                const HCSlot* h2 = att_of(2);
                if (h2 && !apply_template_checked(wg, out, *h2, E(1), E(3), {HCScheme::sec3_I})) return false;
            }
            const HCSlot* hk2 = att_of(k - 2);
            if (hk2 && !apply_template_checked(wg, out, *hk2, E(k - 3), E(k - 1), {HCScheme::sec3_III}))
                return false;
            std::vector<int> skip{k - 2};
            if (k % 2 == 0) skip.push_back(2);
            for (const auto& a : atts) {
                bool sk = false;
                for (int s : skip)
                    if (a.i == s) sk = true;
                if (sk) continue;
                if (!apply_template_checked(wg, out, a, E(a.i - 1), E(a.i + 1), {HCScheme::sec3_II})) return false;
            }
            return true;
        }
        if (scheme == (int)HCScheme::sec3_IV) {
            out[E(1)] = oneb;
            out[E(k - 1)] = 5;
            int idx = 0;
            for (int i = 2; i <= k - 2; ++i) out[E(i)] = (idx++ % 2) ? oneb : onea;
            if (auto e = leaf_edge(k - 1)) out[*e] = (idx++ % 2) ? oneb : onea;
            items_run(2, k - 2, twob, twoa);
            const HCSlot* hk2 = att_of(k - 2);
            if (hk2) {
                // switch v_{k-2} v_{k-1} with the slot color, then Type V
                auto ekm2 = E(k - 2);
                auto slot = vp(hk2->lo, hk2->kind == HCSlot::tri_leaf ? hk2->a : hk2->lo_p);
                if (out.count(slot)) std::swap(out[ekm2], out[slot]);
                if (!apply_template_checked(wg, out, *hk2, E(k - 3), E(k - 1), {HCScheme::sec3_V})) return false;
            }
            return rest_type2({k - 2});
        }
        // sec3_V
        out[E(k - 1)] = oneb;
        if (k % 2 == 1) {
            int idx = 0;
            for (int i = k - 2; i >= 1; --i) out[E(i)] = (idx++ % 2) ? oneb : onea;
            items_run(2, k - 1, twob, twoa);
            return rest_type2({});
        }
        if (auto e = leaf_edge(k - 1)) out[*e] = onea;
        out[E(k - 2)] = twob;
        if (auto e = leaf_edge(k - 2)) out[*e] = oneb;
        int idx = 0;
        for (int i = k - 3; i >= 1; --i) out[E(i)] = (idx++ % 2) ? oneb : onea;
        items_run(2, k - 3, twob, twoa);
        const HCSlot* hk2 = att_of(k - 2);
        const HCSlot* hk3 = att_of(k - 3);
        if (hk2 && !apply_template_checked(wg, out, *hk2, E(k - 3), E(k - 1), {HCScheme::sec3_I})) return false;
        if (hk3 && !apply_template_checked(wg, out, *hk3, E(k - 4), E(k - 2), {HCScheme::sec3_III})) return false;
        return rest_type2({k - 2, k - 3});
    }
};

} // namespace colorer
} // namespace spg
