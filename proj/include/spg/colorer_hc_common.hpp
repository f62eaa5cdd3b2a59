#pragma once
#include <cstdio>

#include "spg/colorer_base.hpp"
#include "spg/patterns.hpp"

namespace spg {
namespace colorer {

// Shared multi-block skeleton for the two HC-template theorems on subcubic
// outerplane graphs with no 2-vertices. Subclasses provide the per-theorem
// case tables; the skeleton owns component splitting, the leaf-pair tree
// reduction, leaf-block selection, face bookkeeping, HC virtualization, and
// the fallback plumbing.
class HCColorerBase {
  public:
    CMap run(const WorkGraph& input, ReductionTrace& trace, bool& fallback_used) {
        trace_ = &trace;
        fallback_used_ = false;
        CMap out = level(input, 0);
        fallback_used = fallback_used_;
        return out;
    }

  protected:
    explicit HCColorerBase(SSequence s) : seq_(std::move(s)) {}
    virtual ~HCColorerBase() = default;

    SSequence seq_;
    ReductionTrace* trace_ = nullptr;
    bool fallback_used_ = false;

    // ---- per-theorem hooks --------------------------------------------------
    virtual Symbols make_symbols() const = 0;
    virtual int pendant_face_min_reduce() const = 0; // faces of this size or more get reduced
    virtual bool has_remark_reduction() const { return false; }
    virtual std::function<bool(const WorkGraph&, const CMap&)> good_filter() const = 0;

    // color the two fresh leaf edges (u2,u1) and (u2,u1p) given the colored rest
    virtual bool extend_leaf_pair(const WorkGraph& wg, CMap& out, int u2, int u1, int u1p) = 0;

    // the single-face block extension (boundary cycle u0..uk + leaf edges)
    virtual bool extend_single_face(const WorkGraph& wg, CMap& out, const std::vector<int>& cyc,
                                    int u0, int v0) = 0;

    // the pendant-face extension after replacing its interior by (v, v')
    virtual bool extend_pendant_face(const WorkGraph& wg, CMap& out, const std::vector<int>& vs,
                                     int u1, int uk, int v, int vleaf) = 0;

    struct HCSlot {
        // attachment riding on boundary edge (lo, hi); kind selects the real
        // shape, the slot ids name the virtual HC template edges
        enum Kind { real_hc, tri_leaf, quad_leaves, virtual_pad } kind = virtual_pad;
        int i = 0; // 1-based position on the face boundary
        int lo = -1, hi = -1;
        // real vertices
        int a = -1, a2 = -1;          // 3-face apex + its leaf
        int lo_p = -1, hi_p = -1;     // quad tops / HC mids
        int lo_pp = -1, hi_pp = -1;   // quad leaf tips
        int tip = -1, tip_leaf = -1;  // HC chimney z2-role vertex and z leaf
    };

    // write one virtual-HC slot assignment onto the real edges of `at`
    // slot order: (lo hi), (lo lo'), (hi hi'), (lo' hi'), (lo' lo''), (lo'' hi'), (lo'' w)
    void write_slots(CMap& out, const HCSlot& at, const std::array<int, 7>& col) {
        auto put = [&](int a, int b, int c) {
            if (c > 0) out[vp(a, b)] = c;
        };
        put(at.lo, at.hi, col[0]);
        switch (at.kind) {
            case HCSlot::real_hc:
                put(at.lo, at.lo_p, col[1]);
                put(at.hi, at.hi_p, col[2]);
                put(at.lo_p, at.hi_p, col[3]);
                put(at.lo_p, at.tip, col[4]);
                put(at.tip, at.hi_p, col[5]);
                put(at.tip, at.tip_leaf, col[6]);
                break;
            case HCSlot::tri_leaf:
                put(at.lo, at.a, col[1]);
                put(at.hi, at.a, col[2]);
                put(at.a, at.a2, col[3]);
                break;
            case HCSlot::quad_leaves:
                put(at.lo, at.lo_p, col[1]);
                put(at.hi, at.hi_p, col[2]);
                put(at.lo_p, at.hi_p, col[3]);
                put(at.lo_p, at.lo_pp, col[4]);
                put(at.hi_p, at.hi_pp, col[5]);
                break;
            case HCSlot::virtual_pad:
                break;
        }
    }

    // Checked template application: binds the scheme against the already
    // colored role edges, then enumerates the unbound within-block renamings,
    // accepting only assignments whose new edges clear their distance
    // constraints in wg. Tries both orientations.
    bool apply_template_checked(const WorkGraph& wg, CMap& out, const HCSlot& a, VP host_prev,
                                VP host_next, std::initializer_list<HCScheme> schemes) {
        struct RoleEdge {
            VP e;
            bool present;
        };
        std::vector<int> block_of(seq_.size() + 1), block_lo(seq_.size() + 1), block_hi(seq_.size() + 1);
        for (auto [lo, hi] : seq_.blocks())
            for (int i = lo; i <= hi; ++i) {
                block_of[i] = lo;
                block_lo[i] = lo;
                block_hi[i] = hi;
            }
        for (int orient = 0; orient < 2; ++orient) {
            bool flip = orient == 1;
            VP hp = flip ? host_next : host_prev;
            VP hn = flip ? host_prev : host_next;
            int lo = flip ? a.hi : a.lo;
            int hi = flip ? a.lo : a.hi;
            int lo_p = flip ? a.hi_p : a.lo_p;
            int hi_p = flip ? a.lo_p : a.hi_p;
            int lo_pp = flip ? a.hi_pp : a.lo_pp;
            int hi_pp = flip ? a.lo_pp : a.hi_pp;
            std::vector<RoleEdge> roles;
            auto add = [&](int x, int y) {
                roles.push_back({(x >= 0 && y >= 0) ? vp(x, y) : VP{-1, -1}, x >= 0 && y >= 0});
            };
            roles.push_back({hp, true});
            add(lo, hi);
            roles.push_back({hn, true});
            switch (a.kind) {
                case HCSlot::real_hc:
                    add(lo, lo_p);
                    add(hi, hi_p);
                    add(lo_p, hi_p);
                    add(lo_p, a.tip);
                    add(a.tip, hi_p);
                    add(a.tip, a.tip_leaf);
                    break;
                case HCSlot::tri_leaf:
                    add(lo, a.a);
                    add(hi, a.a);
                    add(a.a, a.a2);
                    for (int i = 0; i < 3; ++i) add(-1, -1);
                    break;
                case HCSlot::quad_leaves:
                    add(lo, lo_p);
                    add(hi, hi_p);
                    add(lo_p, hi_p);
                    add(lo_p, lo_pp);
                    add(hi_p, hi_pp);
                    add(-1, -1);
                    break;
                case HCSlot::virtual_pad:
                    for (int i = 0; i < 6; ++i) add(-1, -1);
                    break;
            }
            for (HCScheme s : schemes) {
                auto tpl = hc_template(s);
                std::map<int, int> ren;   // template color -> actual
                std::set<int> used;
                bool ok = true;
                for (int i = 0; i < 9 && ok; ++i) {
                    if (!roles[i].present) continue;
                    auto it = out.find(roles[i].e);
                    if (it == out.end()) continue;
                    int tc = tpl.colors[i], ac = it->second;
                    if (block_of[tc] != block_of[ac]) ok = false;
                    else if (ren.count(tc)) ok = ren[tc] == ac;
                    else if (used.count(ac)) ok = false;
                    else {
                        ren[tc] = ac;
                        used.insert(ac);
                    }
                }
                if (!ok) continue;
                // depth-first completion over the unwritten role edges
                std::vector<int> todo;
                for (int i = 0; i < 9; ++i)
                    if (roles[i].present && !out.count(roles[i].e)) todo.push_back(i);
                std::vector<VP> written;
                std::function<bool(size_t)> go = [&](size_t idx) {
                    if (idx == todo.size()) return true;
                    int i = todo[idx];
                    int tc = tpl.colors[i];
                    auto attempt = [&](int ac) {
                        if (!dist_ok(wg, out, roles[i].e.first, roles[i].e.second, ac)) return false;
                        out[roles[i].e] = ac;
                        written.push_back(roles[i].e);
                        if (go(idx + 1)) return true;
                        out.erase(roles[i].e);
                        written.pop_back();
                        return false;
                    };
                    if (ren.count(tc)) return attempt(ren[tc]);
                    for (int ac = block_lo[tc]; ac <= block_hi[tc]; ++ac) {
                        if (used.count(ac)) continue;
                        ren[tc] = ac;
                        used.insert(ac);
                        if (attempt(ac)) return true;
                        ren.erase(tc);
                        used.erase(ac);
                    }
                    return false;
                };
                if (go(0)) return true;
                for (const VP& e : written) out.erase(e);
            }
        }
        return false;
    }

    bool dist_ok(const WorkGraph& wg, const CMap& out, int a, int b, int color) const {
        int need = seq_.value(color);
        std::map<int, int> dist;
        std::vector<int> q{a, b};
        dist[a] = dist[b] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int x = q[qi];
            if (dist[x] >= need) continue;
            auto it = wg.adj.find(x);
            if (it == wg.adj.end()) continue;
            for (int y : it->second)
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

    // ---- helpers shared with Colorer124 ------------------------------------
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

    static std::vector<int> orient_on(const WFace& f, VP anchor) {
        int L = f.size();
        for (int i = 0; i < L; ++i) {
            int u = f.cycle[i], v = f.cycle[(i + 1) % L];
            if (vp(u, v) != anchor) continue;
            std::vector<int> out;
            for (int j = 0; j < L; ++j) out.push_back(f.cycle[(i + 1 + j) % L]);
            return out;
        }
        fail(errc::invalid_embedding, "anchor not on face");
    }

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
        LevelViolation lv{{-1, -1}, {-1, -1}, 0, 0};
        if (!check_level(wg, seq_, attempt, true, &lv)) {
            // also demand the good constraints hold at this level; otherwise a
            // later template read would dispatch the wrong case
            if (good_filter()(wg, attempt)) return std::move(attempt);
#ifdef SPG_COLORER_DEBUG
            std::fprintf(stderr, "[missHC] %s: good filter rejected\n", lemma);
#endif
        } else {
#ifdef SPG_COLORER_DEBUG
            std::fprintf(stderr, "[missHC] %s: (%d,%d)-(%d,%d) color=%d dist=%d\n", lemma, lv.e.first,
                         lv.e.second, lv.f.first, lv.f.second, lv.color_index, lv.distance);
#endif
        }
        fallback_used_ = true;
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
            fail(errc::fallback_unsat,
                 std::string("fallback unsat after ") + lemma + " (case table or bookkeeping bug)");
        return *fb;
    }

    CMap level_fail(const WorkGraph& wg, const char* why) {
        fallback_used_ = true;
        FallbackContext ctx{seq_, good_filter(), 40};
        std::set<VP> remainder(wg.edge_set.begin(), wg.edge_set.end());
        auto fb = fallback_certify(wg, ctx, {}, remainder);
        if (!fb) fail(errc::fallback_unsat, why);
        return *fb;
    }

    // ---- skeleton -----------------------------------------------------------
    CMap level(const WorkGraph& wg, int depth) {
        if (depth > 4 * (wg.edge_count() + wg.vertex_count()) + 64)
            fail(errc::budget_exceeded, "reduction recursion does not terminate");
        if (wg.edge_count() == 0) return {};

        // handle components independently (distances across them are infinite)
        {
            auto comp = split_component(wg);
            if (comp) {
                auto [first, rest] = *comp;
                record(*trace_, diff(wg, first, "component-split", ""));
                CMap a = level(first, depth + 1);
                if (rest.edge_count() > 0 || rest.vertex_count() > 0) {
                    CMap b = level(rest, depth + 1);
                    a.insert(b.begin(), b.end());
                }
                return a;
            }
        }

        if (wg.edge_count() == 1) {
            CMap c;
            c[*wg.edge_set.begin()] = 1;
            return c;
        }

        // leaf-pair: a vertex with two leaf neighbors sheds them
        for (int v : wg.vertices()) {
            std::vector<int> leaves;
            for (int w : wg.adj.at(v))
                if (wg.degree(w) == 1) leaves.push_back(w);
            if (leaves.size() < 2) continue;
            if (wg.degree(v) == (int)leaves.size() && wg.edge_count() == (int)leaves.size())
                break; // bare star: colored as a base below
            WorkGraph red = wg;
            red.remove_vertex(leaves[0]);
            red.remove_vertex(leaves[1]);
            record(*trace_, diff(wg, red, "leaf-pair", ""));
            CMap f = level(red, depth + 1);
            CMap out = f;
            bool ok = extend_leaf_pair(wg, out, v, leaves[0], leaves[1]);
            if (!ok) out = f;
            return finish_level(wg, red, std::move(out), f, "leaf-pair");
        }

        if (wg.boundaries.empty() || !has_cycle(wg)) return base_star_or_path(wg);

        // pick a leaf block B1, its cut vertex u0 and outside neighbor v0
        int b1 = pick_leaf_block(wg);
        auto [u0, v0] = pick_anchor(wg, b1);
        auto faces = block_faces(wg, b1);

        if (faces.size() == 1) return single_face_block(wg, b1, u0, v0, depth);

        auto dual = face_dual(faces);
        int f0 = face_containing(faces, u0);

        // pendant faces other than F0 must be small
        for (size_t fi = 0; fi < faces.size(); ++fi)
            if ((int)fi != f0 && dual[fi].size() == 1 && faces[fi].size() >= pendant_face_min_reduce())
                return pendant_face(wg, b1, faces, dual, (int)fi, depth);

        auto path = bfs_far_path(dual, f0); // path[0] = farthest face F1, path.back() = F0
        int ell = (int)path.size() - 1;
        if (ell >= 2 && has_remark_reduction() && faces[path[0]].size() == 4 &&
            faces[path[1]].size() == 4)
            return remark_reduction(wg, b1, faces, dual, path, depth);
        if (ell >= 2 && faces[path[1]].size() >= 5)
            return hc_engine(wg, b1, faces, dual, path, 1, depth); // Lemma: F2 is a 4-face
        if (ell <= 2) return two_layer(wg, b1, u0, v0, faces, dual, f0, depth);
        // an oversized face hanging on F3 is the F2 of an equally long path
        for (int q : dual[path[2]]) {
            if (q == path[3] || q == path[1]) continue;
            if (faces[q].size() >= 5) {
                std::vector<int> alt = {path[0], q, path[2], path[3]};
                return hc_engine(wg, b1, faces, dual, alt, 1, depth);
            }
        }
        return hc_engine(wg, b1, faces, dual, path, 2, depth); // Case ii at F3
    }

    virtual CMap remark_reduction(const WorkGraph&, int, const std::vector<WFace>&,
                                  const std::vector<std::vector<int>>&, const std::vector<int>&, int) {
        fail(errc::invalid_coloring, "remark reduction not available");
    }

    // components ------------------------------------------------------------
    static std::optional<std::pair<WorkGraph, WorkGraph>> split_component(const WorkGraph& wg) {
        if (wg.adj.empty()) return std::nullopt;
        std::set<int> seen;
        std::vector<int> q{wg.adj.begin()->first};
        seen.insert(q[0]);
        for (size_t qi = 0; qi < q.size(); ++qi)
            for (int w : wg.adj.at(q[qi]))
                if (seen.insert(w).second) q.push_back(w);
        if ((int)seen.size() == wg.vertex_count()) return std::nullopt;
        WorkGraph a, b;
        a.next_vertex = b.next_vertex = wg.next_vertex;
        for (const auto& [v, nb] : wg.adj) (seen.count(v) ? a : b).adj[v];
        for (const auto& e : wg.edge_set) {
            if (seen.count(e.first)) {
                a.edge_set.insert(e);
                a.adj[e.first].push_back(e.second);
                a.adj[e.second].push_back(e.first);
            } else {
                b.edge_set.insert(e);
                b.adj[e.first].push_back(e.second);
                b.adj[e.second].push_back(e.first);
            }
        }
        for (const auto& bd : wg.boundaries) (seen.count(bd[0]) ? a : b).boundaries.push_back(bd);
        return std::make_pair(a, b);
    }

    static bool has_cycle(const WorkGraph& wg) { return !wg.boundaries.empty(); }

    CMap base_star_or_path(const WorkGraph& wg) {
        // trees surviving the leaf-pair reduction: stars K1,2? (has 2-vertex,
        // excluded), K1,3, or a single edge handled above
        Symbols sy = make_symbols();
        CMap c;
        int center = -1;
        for (int v : wg.vertices())
            if (wg.degree(v) == 3) center = v;
        if (center < 0 || wg.edge_count() != 3)
            return level_fail(wg, "unexpected tree base (not a star)");
        const char* names[3] = {"1a", "2a", "2b"};
        if (seq_.values()[1] == 2) names[0] = "1"; // (1,2^4,3) palette
        int i = 0;
        for (int w : wg.adj.at(center)) c[vp(center, w)] = sy.get(names[i++]);
        if (check_level(wg, seq_, c, true)) return level_fail(wg, "star base failed");
        return c;
    }

    // block machinery ---------------------------------------------------------
    int pick_leaf_block(const WorkGraph& wg) const {
        // leaf = at most one boundary vertex from which another block's
        // boundary is reachable without crossing this block
        int nb = (int)wg.boundaries.size();
        if (nb == 1) return 0;
        // count, per block, the number of its vertices that lead (through
        // edges not in this block) to another block
        std::vector<int> exits(nb, 0);
        for (int b = 0; b < nb; ++b) {
            std::set<int> mine(wg.boundaries[b].begin(), wg.boundaries[b].end());
            std::set<VP> mine_edges;
            {
                const auto& bd = wg.boundaries[b];
                int L = (int)bd.size();
                std::set<int> onb(bd.begin(), bd.end());
                for (const auto& e : wg.edge_set)
                    if (onb.count(e.first) && onb.count(e.second)) mine_edges.insert(e);
            }
            for (int v : wg.boundaries[b]) {
                // BFS out of v avoiding this block's edges; does it hit
                // another block's vertex?
                std::set<int> seen{v};
                std::vector<int> q{v};
                bool hit = false;
                for (size_t qi = 0; qi < q.size() && !hit; ++qi) {
                    for (int w : wg.adj.at(q[qi])) {
                        if (mine_edges.count(vp(q[qi], w))) continue;
                        if (!seen.insert(w).second) continue;
                        for (int x = 0; x < nb; ++x)
                            if (x != b)
                                for (int y : wg.boundaries[x])
                                    if (y == w) hit = true;
                        q.push_back(w);
                    }
                }
                if (hit) ++exits[b];
            }
        }
        for (int b = 0; b < nb; ++b)
            if (exits[b] <= 1) return b;
        fail(errc::invalid_embedding, "no leaf block found");
    }

    std::pair<int, int> pick_anchor(const WorkGraph& wg, int b1) const {
        const auto& bd = wg.boundaries[b1];
        std::set<int> mine(bd.begin(), bd.end());
        std::set<VP> mine_edges;
        for (const auto& e : wg.edge_set)
            if (mine.count(e.first) && mine.count(e.second)) mine_edges.insert(e);
        // exit vertex: leads to another block
        for (int v : bd) {
            std::set<int> seen{v};
            std::vector<int> q{v};
            for (size_t qi = 0; qi < q.size(); ++qi)
                for (int w : wg.adj.at(q[qi])) {
                    if (mine_edges.count(vp(q[qi], w))) continue;
                    if (!seen.insert(w).second) continue;
                    for (size_t x = 0; x < wg.boundaries.size(); ++x)
                        if ((int)x != b1)
                            for (int y : wg.boundaries[x])
                                if (y == w) {
                                    // v exits toward another non-trivial block
                                    int v0 = -1;
                                    for (int z : wg.adj.at(v))
                                        if (!mine_edges.count(vp(v, z))) v0 = z;
                                    return {v, v0};
                                }
                    q.push_back(w);
                }
        }
        // single non-trivial block: any boundary vertex with a hanging leaf
        for (int v : bd)
            for (int w : wg.adj.at(v))
                if (!mine.count(w)) return {v, w};
        fail(errc::invalid_embedding, "leaf block without anchor");
    }

    static int face_containing(const std::vector<WFace>& faces, int v) {
        for (size_t i = 0; i < faces.size(); ++i)
            for (int x : faces[i].cycle)
                if (x == v) return (int)i;
        fail(errc::invalid_embedding, "anchor vertex on no face");
    }

    // deletes B1 (except u0) together with everything hanging on it
    WorkGraph delete_block(const WorkGraph& wg, int b1, int u0) const {
        WorkGraph red = wg;
        std::set<int> mine(wg.boundaries[b1].begin(), wg.boundaries[b1].end());
        std::set<VP> mine_edges;
        for (const auto& e : wg.edge_set)
            if (mine.count(e.first) && mine.count(e.second)) mine_edges.insert(e);
        // everything reachable from B1's vertices without using u0 as a
        // through-vertex and without crossing into the remainder: collect the
        // hanging forests + attachment faces by BFS from boundary vertices
        std::set<int> doomed;
        for (int v : wg.boundaries[b1])
            if (v != u0) doomed.insert(v);
        std::vector<int> q(doomed.begin(), doomed.end());
        for (size_t qi = 0; qi < q.size(); ++qi)
            for (int w : wg.adj.at(q[qi])) {
                if (w == u0 || mine.count(w)) continue;
                if (doomed.insert(w).second) q.push_back(w);
            }
        for (int v : doomed) red.remove_vertex(v);
        red.boundaries.erase(red.boundaries.begin() + b1);
        return red;
    }

    // attachments on a face of B1 (excluding the side toward `skip_face`)
    std::vector<HCSlot> face_attachments(const WorkGraph& wg, const std::vector<WFace>& faces,
                                         const std::vector<std::vector<int>>& dual, int fidx,
                                         int skip_face, const std::vector<int>& vs) {
        std::map<int, int> pos;
        for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = (int)i + 1;
        std::vector<HCSlot> out;
        for (int nf : dual[fidx]) {
            if (nf == skip_face) continue;
            const WFace& q = faces[nf];
            VP se = shared_edge(faces[fidx], q);
            HCSlot at;
            at.i = std::min(pos.at(se.first), pos.at(se.second));
            at.lo = vs[at.i - 1];
            at.hi = vs[at.i];
            if (q.size() == 3) {
                at.kind = HCSlot::tri_leaf;
                for (int x : q.cycle)
                    if (x != at.lo && x != at.hi) at.a = x;
                at.a2 = third_neighbor(wg, at.a, at.lo, at.hi);
                if (at.a2 < 0) return {}; // malformed; caller falls back
            } else if (q.size() == 4) {
                std::vector<int> tops;
                for (int x : q.cycle)
                    if (x != at.lo && x != at.hi) tops.push_back(x);
                at.lo_p = wg.has_edge(at.lo, tops[0]) ? tops[0] : tops[1];
                at.hi_p = (at.lo_p == tops[0]) ? tops[1] : tops[0];
                // triangle on top makes it an HC; two leaves make a quad pad
                int apex = -1;
                for (int fj : dual[nf])
                    if (fj != fidx) {
                        const WFace& t = faces[fj];
                        if (t.size() == 3)
                            for (int x : t.cycle)
                                if (x != at.lo_p && x != at.hi_p) apex = x;
                    }
                if (apex >= 0) {
                    at.kind = HCSlot::real_hc;
                    at.tip = apex;
                    at.tip_leaf = third_neighbor(wg, apex, at.lo_p, at.hi_p);
                    if (at.tip_leaf < 0) return {};
                } else {
                    at.kind = HCSlot::quad_leaves;
                    at.lo_pp = third_neighbor(wg, at.lo_p, at.lo, at.hi_p);
                    at.hi_pp = third_neighbor(wg, at.hi_p, at.hi, at.lo_p);
                    if (at.lo_pp < 0 || at.hi_pp < 0) return {};
                }
            } else {
                return {}; // oversized attachment: dispatch error
            }
            out.push_back(at);
        }
        return out;
    }

    // leaves hanging on the face's interior vertices that are not part of an
    // attachment
    std::map<int, int> face_leaves(const WorkGraph& wg, const std::vector<int>& vs,
                                   const std::vector<HCSlot>& atts) {
        std::set<int> used;
        for (const auto& a : atts) {
            used.insert(a.lo);
            used.insert(a.hi);
        }
        std::map<int, int> out; // boundary vertex -> leaf
        for (size_t i = 1; i + 1 < vs.size(); ++i) {
            int v = vs[i];
            if (used.count(v)) continue;
            for (int w : wg.adj.at(v))
                if (wg.degree(w) == 1) out[v] = w;
        }
        return out;
    }

    // ---- stage drivers ------------------------------------------------------
    CMap single_face_block(const WorkGraph& wg, int b1, int u0, int v0, int depth) {
        auto bd = wg.boundaries[b1];
        // rotate so it reads u0, u1, ..., uk
        std::vector<int> cyc;
        {
            int p = -1;
            for (size_t i = 0; i < bd.size(); ++i)
                if (bd[i] == u0) p = (int)i;
            for (size_t j = 0; j < bd.size(); ++j) cyc.push_back(bd[(p + j) % bd.size()]);
        }
        WorkGraph red = delete_block(wg, b1, u0);
        record(*trace_, diff(wg, red, "single-face-block", "k=" + std::to_string(bd.size() - 1)));
        CMap f = level(red, depth + 1);
        CMap out = f;
        bool ok = extend_single_face(wg, out, cyc, u0, v0);
        if (!ok) out = f;
        return finish_level(wg, red, std::move(out), f, "single-face-block");
    }

    CMap pendant_face(const WorkGraph& wg, int b1, const std::vector<WFace>& faces,
                      const std::vector<std::vector<int>>& dual, int fi, int depth) {
        const WFace& f1 = faces[fi];
        const WFace& f2 = faces[dual[fi][0]];
        VP anchor = shared_edge(f1, f2);
        auto vs = orient_on(f1, anchor);
        int k = (int)vs.size();
        int v1 = vs[0], vk = vs[k - 1];
        WorkGraph red = wg;
        std::set<int> gone;
        for (int i = 1; i + 1 < k; ++i) {
            gone.insert(vs[i]);
            for (int w : wg.adj.at(vs[i]))
                if (wg.degree(w) == 1) gone.insert(w);
        }
        for (int v : gone) red.remove_vertex(v);
        int v = red.add_vertex();
        int vl = red.add_vertex();
        red.add_edge(v, v1);
        red.add_edge(v, vk);
        red.add_edge(v, vl);
        std::set<int> interior;
        for (int i = 1; i + 1 < k; ++i) interior.insert(vs[i]);
        replace_arc(red.boundaries[b1], v1, vk, interior, {v});
        record(*trace_, diff(wg, red, "pendant-face", "k=" + std::to_string(k)));
        CMap f = level(red, depth + 1);
        int u1 = third_neighbor(wg, v1, vs[1], vk);
        int uk = third_neighbor(wg, vk, vs[k - 2], v1);
        CMap out = f; // the hook reads the v-edge colors, then drops them
        bool ok = extend_pendant_face(wg, out, vs, u1, uk, v, vl);
        if (!ok) out = f;
        return finish_level(wg, red, std::move(out), f, "pendant-face");
    }

    // F0-level extension: ell <= 2, delete the whole block with attachments
    virtual bool extend_two_layer(const WorkGraph& wg, CMap& out, const std::vector<int>& cyc, int u0,
                                  int v0, const std::vector<HCSlot>& atts,
                                  const std::map<int, int>& leaves) = 0;

    CMap two_layer(const WorkGraph& wg, int b1, int u0, int v0, const std::vector<WFace>& faces,
                   const std::vector<std::vector<int>>& dual, int f0, int depth) {
        // boundary of F0 read as u0..uk
        const WFace& f = faces[f0];
        std::vector<int> cyc;
        {
            int p = -1;
            for (int i = 0; i < f.size(); ++i)
                if (f.cycle[i] == u0) p = i;
            if (p < 0) return level_fail(wg, "u0 not on F0");
            for (int j = 0; j < f.size(); ++j) cyc.push_back(f.cycle[(p + j) % f.size()]);
        }
        auto atts = face_attachments(wg, faces, dual, f0, -1, cyc);
        if (atts.empty() && dual[f0].size() > 0) return level_fail(wg, "two-layer attachment scan failed");
        auto leaves = face_leaves(wg, cyc, atts);
        WorkGraph red = delete_block(wg, b1, u0);
        record(*trace_, diff(wg, red, "two-layer", "k=" + std::to_string(cyc.size() - 1)));
        CMap fmap = level(red, depth + 1);
        CMap out = fmap;
        bool ok = extend_two_layer(wg, out, cyc, u0, v0, atts, leaves);
        if (!ok) out = fmap;
        return finish_level(wg, red, std::move(out), fmap, "two-layer");
    }

    // HC replacement at F2 (tail=1) or F3 (tail=2): path[tail] is replaced
    virtual bool extend_hc_face(const WorkGraph& wg, CMap& out, const std::vector<int>& vs, int u1,
                                int uk, const std::array<int, 4>& zvs,
                                const std::vector<HCSlot>& atts, const std::map<int, int>& leaves) = 0;

    CMap hc_engine(const WorkGraph& wg, int b1, const std::vector<WFace>& faces,
                   const std::vector<std::vector<int>>& dual, const std::vector<int>& path, int tail,
                   int depth) {
        int fidx = path[tail];
        int next = path[tail + 1];
        VP anchor = shared_edge(faces[fidx], faces[next]);
        auto vs = orient_on(faces[fidx], anchor);
        int k = (int)vs.size();
        int v1 = vs[0], vk = vs[k - 1];
        auto atts = face_attachments(wg, faces, dual, fidx, next, vs);
        if (atts.empty()) return level_fail(wg, "hc-engine: no attachments under the tail face");
        auto leaves = face_leaves(wg, vs, atts);

        WorkGraph red = wg;
        std::set<int> gone;
        for (int i = 1; i + 1 < k; ++i) gone.insert(vs[i]);
        for (const auto& a : atts) {
            for (int x : {a.a, a.a2, a.lo_p, a.hi_p, a.lo_pp, a.hi_pp, a.tip, a.tip_leaf})
                if (x >= 0) gone.insert(x);
        }
        for (auto& [bv, lf] : leaves) gone.insert(lf);
        for (int v : gone) red.remove_vertex(v);
        int z1 = red.add_vertex();
        int zk = red.add_vertex();
        int z2 = red.add_vertex();
        int z = red.add_vertex();
        red.add_edge(z1, v1);
        red.add_edge(zk, vk);
        red.add_edge(z1, zk);
        red.add_edge(z1, z2);
        red.add_edge(z2, zk);
        red.add_edge(z2, z);
        std::set<int> interior;
        for (int i = 1; i + 1 < k; ++i) interior.insert(vs[i]);
        std::set<int> arc = interior;
        for (const auto& a : atts)
            for (int x : {a.a, a.lo_p, a.hi_p, a.tip})
                if (x >= 0) arc.insert(x);
        // the boundary run between v1 and vk holds the interior plus the
        // attachment hulls (their leaves are tree vertices, not on it)
        replace_arc(red.boundaries[b1], v1, vk, arc, {z1, z2, zk});
        record(*trace_, diff(wg, red, tail == 1 ? "F2-hc-replacement" : "F3-hc-replacement",
                             "k=" + std::to_string(k)));
        CMap f = level(red, depth + 1);
#ifdef SPG_COLORER_DEBUG
        std::fprintf(stderr, "hc_engine tail=%d depth=%d red_edges=%d f_size=%zu k=%d vs:", tail,
                     depth, red.edge_count(), f.size(), k);
        for (int x : vs) std::fprintf(stderr, " %d", x);
        std::fprintf(stderr, " z:%d %d %d %d red_edges:", z1, zk, z2, z);
        for (auto& e : red.edge_set) std::fprintf(stderr, " (%d,%d)", e.first, e.second);
        std::fprintf(stderr, " f_keys:");
        for (auto& [e, c] : f) std::fprintf(stderr, " (%d,%d)=%d", e.first, e.second, c);
        std::fprintf(stderr, "\n");
#endif
        int u1 = third_neighbor(wg, v1, vs[1], vk);
        int uk = third_neighbor(wg, vk, vs[k - 2], v1);
        CMap out = f; // the hook reads the replacement HC's colors, then drops them
        bool ok = extend_hc_face(wg, out, vs, u1, uk, {z1, zk, z2, z}, atts, leaves);
        if (!ok) out = f;
        return finish_level(wg, red, std::move(out), f, "hc-replacement");
    }
};

} // namespace colorer
} // namespace spg
