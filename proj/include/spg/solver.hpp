#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "spg/coloring.hpp"
#include "spg/graph.hpp"
#include "spg/sequence.hpp"

namespace spg {

enum class SolveStatus { sat, unsat, budget_exhausted };

struct SolveStats {
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::unsat;
    std::optional<EdgeColoring> coloring;
    SolveStats stats;

    bool sat() const { return status == SolveStatus::sat; }
    bool unsat() const { return status == SolveStatus::unsat; }
};

enum class VariableOrder { max_conflict_degree_first, input_order };

struct SearchConfig {
    std::uint64_t node_budget = 0;   // 0 = unlimited
    std::uint64_t time_budget_ms = 0; // 0 = unlimited
    std::uint64_t enumeration_limit = 0; // 0 = unlimited
    bool symmetry_breaking = true;
    VariableOrder variable_order = VariableOrder::max_conflict_degree_first;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct EnumerateResult {
    std::uint64_t count = 0;
    bool budget_exhausted = false;
    bool limit_hit = false;
    SolveStats stats;
};

namespace detail {

// Conflict tables per distance threshold: two edges conflict for color i
// iff d(e,f) <= s_i. Sequences with repeated values share threshold tables.
struct ConflictTables {
    std::vector<int> thresholds;          // distinct s values, ascending
    std::vector<int> threshold_of_color;  // 1-based color -> index into thresholds
    std::vector<std::vector<std::vector<EdgeId>>> lists; // [t][e] -> conflicting edges

    ConflictTables(const Graph& g, const SSequence& s, const EdgeDistanceMatrix& dm) {
        for (int v : s.values())
            if (thresholds.empty() || thresholds.back() != v) thresholds.push_back(v);
        threshold_of_color.assign(s.size() + 1, 0);
        for (int i = 1; i <= s.size(); ++i) {
            int v = s.value(i);
            for (size_t t = 0; t < thresholds.size(); ++t)
                if (thresholds[t] == v) threshold_of_color[i] = (int)t;
        }
        int m = g.edge_count();
        lists.resize(thresholds.size());
        for (size_t t = 0; t < thresholds.size(); ++t) {
            lists[t].resize(m);
            for (EdgeId e = 0; e < m; ++e)
                for (EdgeId f = 0; f < m; ++f)
                    if (e != f && dm(e, f) <= thresholds[t]) lists[t][e].push_back(f);
        }
    }
};

class Searcher {
  public:
    using Emit = std::function<bool(const EdgeColoring&)>; // return false to stop

    Searcher(const Graph& g, const SSequence& s, const EdgeDistanceMatrix& dm, const ConflictTables& ct,
             const SearchConfig& cfg)
        : g_(g), s_(s), dm_(dm), ct_(ct), cfg_(cfg), k_(s.size()), m_(g.edge_count()) {
        full_mask_ = (k_ >= 64) ? ~0ull : ((1ull << k_) - 1);
        domain_.assign(m_, full_mask_);
        color_.assign(m_, 0);
        auto bs = s_.blocks();
        for (auto [a, b] : bs) blocks_.push_back({a, b});
        block_of_color_.assign(k_ + 1, -1);
        for (size_t b = 0; b < blocks_.size(); ++b)
            for (int i = blocks_[b].first; i <= blocks_[b].second; ++i) block_of_color_[i] = (int)b;
        block_use_count_.assign(blocks_.size(), std::vector<int>(k_ + 1, 0));
        block_pinned_.assign(blocks_.size(), 0);
        static_order_.resize(m_);
        for (int e = 0; e < m_; ++e) static_order_[e] = e;
        if (cfg_.variable_order == VariableOrder::max_conflict_degree_first && !ct.lists.empty()) {
            const auto& widest = ct.lists.back(); // largest threshold = densest conflicts
            std::stable_sort(static_order_.begin(), static_order_.end(), [&](EdgeId a, EdgeId b) {
                return widest[a].size() > widest[b].size();
            });
        }
        rank_.assign(m_, 0);
        for (int i = 0; i < m_; ++i) rank_[static_order_[i]] = i;
    }

    // Applies pins. Returns false when propagation wipes out some domain,
    // which is an Unsat outcome (direct pin-vs-pin violations are rejected
    // by the caller via verify_partial before we get here).
    bool apply_pins(const EdgeColoring& pins) {
        for (EdgeId e = 0; e < m_; ++e) {
            if (!pins.colored(e)) continue;
            int i = pins.color(e);
            if (i < 1 || i > k_) fail(errc::index_out_of_range, "pin color " + std::to_string(i));
            block_pinned_[block_of_color_[i]] = 1;
        }
        for (EdgeId e = 0; e < m_; ++e) {
            if (!pins.colored(e)) continue;
            int i = pins.color(e);
            if (!(domain_[e] >> (i - 1) & 1ull)) return false;
            if (!assign(e, i)) return false;
        }
        pinned_count_ = 0;
        for (EdgeId e = 0; e < m_; ++e)
            if (pins.colored(e)) ++pinned_count_;
        return true;
    }

    void set_abort_flag(const std::atomic<bool>* flag) { abort_flag_ = flag; }
    void set_shared_nodes(std::atomic<std::uint64_t>* nodes) { shared_nodes_ = nodes; }

    // Exhaustive search; emits every total valid coloring (modulo symmetry
    // breaking if enabled). Returns false if the search was cut short
    // (budget, limit, callback stop, abort).
    bool run(const Emit& emit, std::uint64_t limit) {
        start_ = std::chrono::steady_clock::now();
        emitted_ = 0;
        budget_hit_ = false;
        stopped_ = false;
        search(emit, limit);
        return !budget_hit_ && !aborted_;
    }

    bool budget_hit() const { return budget_hit_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t emitted() const { return emitted_; }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

    // Root branching candidates (for parallel split): (edge, color) pairs in
    // the exact order the sequential search would try them.
    std::vector<std::pair<EdgeId, int>> root_branches() {
        EdgeId e = pick_edge();
        if (e < 0) return {};
        std::vector<std::pair<EdgeId, int>> out;
        for (int i = 1; i <= k_; ++i)
            if (value_allowed(e, i)) out.push_back({e, i});
        return out;
    }

    bool assign_public(EdgeId e, int i) { return assign(e, i); }

  private:
    struct Change {
        EdgeId edge;
        std::uint64_t removed_bit;
    };

    bool over_budget() {
        if (cfg_.node_budget) {
            std::uint64_t n = shared_nodes_ ? shared_nodes_->load(std::memory_order_relaxed) : nodes_;
            if (n > cfg_.node_budget) return true;
        }
        if (cfg_.time_budget_ms && (nodes_ & 0x3ff) == 0) {
            if (elapsed_ms() > (double)cfg_.time_budget_ms) return true;
        }
        return false;
    }

    bool value_allowed(EdgeId e, int i) {
        if (!(domain_[e] >> (i - 1) & 1ull)) return false;
        if (!cfg_.symmetry_breaking) return true;
        int b = block_of_color_[i];
        if (block_pinned_[b]) return true;
        // precedence: color i usable only if it is already used in its block
        // or is the lowest unused index of the block
        if (block_use_count_[b][i] > 0) return true;
        for (int j = blocks_[b].first; j < i; ++j)
            if (block_use_count_[b][j] == 0) return false;
        return true;
    }

    EdgeId pick_edge() {
        EdgeId best = -1;
        int best_count = 1 << 30;
        int best_rank = 1 << 30;
        for (EdgeId e = 0; e < m_; ++e) {
            if (color_[e]) continue;
            int cnt = __builtin_popcountll(domain_[e]);
            if (cnt < best_count || (cnt == best_count && rank_[e] < best_rank)) {
                best = e;
                best_count = cnt;
                best_rank = rank_[e];
            }
        }
        return best;
    }

    bool assign(EdgeId e, int i) {
        color_[e] = i;
        ++block_use_count_[block_of_color_[i]][i];
        trail_.push_back({-1, 0}); // frame marker
        const auto& confl = ct_.lists[ct_.threshold_of_color[i]][e];
        for (EdgeId f : confl) {
            if (color_[f]) {
                if (color_[f] == i) return false; // pin inconsistency path
                continue;
            }
            std::uint64_t bit = 1ull << (i - 1);
            if (domain_[f] & bit) {
                domain_[f] &= ~bit;
                trail_.push_back({f, bit});
                if (domain_[f] == 0) return false;
            }
        }
        return true;
    }

    void undo(EdgeId e, int i) {
        while (!trail_.empty()) {
            Change ch = trail_.back();
            trail_.pop_back();
            if (ch.edge < 0) break;
            domain_[ch.edge] |= ch.removed_bit;
        }
        --block_use_count_[block_of_color_[i]][i];
        color_[e] = 0;
    }

    void search(const Emit& emit, std::uint64_t limit) {
        ++nodes_;
        if (shared_nodes_) shared_nodes_->fetch_add(1, std::memory_order_relaxed);
        if (stopped_) return;
        if (abort_flag_ && abort_flag_->load(std::memory_order_relaxed)) {
            aborted_ = true;
            stopped_ = true;
            return;
        }
        if (over_budget()) {
            budget_hit_ = true;
            stopped_ = true;
            return;
        }
        EdgeId e = pick_edge();
        if (e < 0) {
            EdgeColoring out(m_);
            for (EdgeId x = 0; x < m_; ++x) out.set(x, color_[x]);
            ++emitted_;
            if (!emit(out)) stopped_ = true;
            if (limit && emitted_ >= limit) stopped_ = true;
            return;
        }
        for (int i = 1; i <= k_ && !stopped_; ++i) {
            if (!value_allowed(e, i)) continue;
            bool ok = assign(e, i);
            if (ok) search(emit, limit);
            undo(e, i);
        }
    }

    const Graph& g_;
    const SSequence& s_;
    const EdgeDistanceMatrix& dm_;
    const ConflictTables& ct_;
    SearchConfig cfg_;
    int k_, m_;
    std::uint64_t full_mask_;
    std::vector<std::uint64_t> domain_;
    std::vector<int> color_;
    std::vector<Change> trail_;
    std::vector<std::pair<int, int>> blocks_;
    std::vector<int> block_of_color_;
    std::vector<std::vector<int>> block_use_count_;
    std::vector<char> block_pinned_;
    std::vector<EdgeId> static_order_;
    std::vector<int> rank_;
    std::uint64_t nodes_ = 0, emitted_ = 0;
    bool budget_hit_ = false, stopped_ = false, aborted_ = false;
    int pinned_count_ = 0;
    const std::atomic<bool>* abort_flag_ = nullptr;
    std::atomic<std::uint64_t>* shared_nodes_ = nullptr;
    std::chrono::steady_clock::time_point start_;
};

inline SolveResult solve_sequential(const Graph& g, const SSequence& s, const EdgeDistanceMatrix& dm,
                                    const ConflictTables& ct, const EdgeColoring& pins,
                                    const SearchConfig& cfg) {
    Searcher se(g, s, dm, ct, cfg);
    SolveResult res;
    if (!se.apply_pins(pins)) {
        res.status = SolveStatus::unsat;
        return res;
    }
    std::optional<EdgeColoring> found;
    bool complete = se.run([&](const EdgeColoring& c) { found = c; return false; }, 1);
    res.stats.nodes = se.nodes();
    res.stats.millis = se.elapsed_ms();
    if (found) {
        res.status = SolveStatus::sat;
        res.coloring = *found;
    } else if (!complete) {
        res.status = SolveStatus::budget_exhausted;
    } else {
        res.status = SolveStatus::unsat;
    }
    return res;
}

inline SolveResult solve_parallel(const Graph& g, const SSequence& s, const EdgeDistanceMatrix& dm,
                                  const ConflictTables& ct, const EdgeColoring& pins,
                                  const SearchConfig& cfg) {
    // Split on the root branching edge; each branch runs the sequential
    // search. First-Sat races resolve by lowest branch index, so the result
    // matches the sequential run.
    std::vector<std::pair<EdgeId, int>> branches;
    {
        Searcher probe(g, s, dm, ct, cfg);
        if (!probe.apply_pins(pins)) {
            SolveResult r;
            r.status = SolveStatus::unsat;
            return r;
        }
        branches = probe.root_branches();
    }
    if (branches.empty()) {
        // no uncolored edge: pins are total (verified consistent) or graph empty
        SolveResult r;
        r.status = SolveStatus::sat;
        EdgeColoring c = pins;
        r.coloring = c;
        return r;
    }
    int nb = (int)branches.size();
    std::vector<SolveResult> results(nb);
    std::vector<char> done(nb, 0);
    std::atomic<int> next{0};
    std::atomic<int> best_sat{nb};
    std::atomic<std::uint64_t> shared_nodes{0};
    auto t0 = std::chrono::steady_clock::now();
    auto worker = [&]() {
        while (true) {
            int b = next.fetch_add(1);
            if (b >= nb) return;
            if (best_sat.load() < b) {
                results[b].status = SolveStatus::unsat; // pruned: lower Sat already decides
                done[b] = 1;
                continue;
            }
            Searcher se(g, s, dm, ct, cfg);
            se.set_shared_nodes(&shared_nodes);
            if (!se.apply_pins(pins)) {
                results[b].status = SolveStatus::unsat;
                done[b] = 1;
                continue;
            }
            if (!se.assign_public(branches[b].first, branches[b].second)) {
                results[b].status = SolveStatus::unsat;
                done[b] = 1;
                continue;
            }
            std::optional<EdgeColoring> found;
            bool complete = se.run([&](const EdgeColoring& c) { found = c; return false; }, 1);
            if (found) {
                results[b].status = SolveStatus::sat;
                results[b].coloring = *found;
                int cur = best_sat.load();
                while (b < cur && !best_sat.compare_exchange_weak(cur, b)) {}
            } else {
                results[b].status = complete ? SolveStatus::unsat : SolveStatus::budget_exhausted;
            }
            results[b].stats.nodes = se.nodes();
            done[b] = 1;
        }
    };
    int nthreads = std::min(cfg.threads, nb);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SolveResult out;
    out.stats.nodes = shared_nodes.load();
    out.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (int b = 0; b < nb; ++b) {
        if (results[b].status == SolveStatus::sat) {
            out.status = SolveStatus::sat;
            out.coloring = results[b].coloring;
            return out;
        }
        if (results[b].status == SolveStatus::budget_exhausted) {
            out.status = SolveStatus::budget_exhausted;
            return out;
        }
    }
    out.status = SolveStatus::unsat;
    return out;
}

} // namespace detail

// Complete decision search. Unsat means exhaustive (no total extension of the
// pins exists); running out of budget is reported as budget_exhausted, never
// as Unsat.
inline SolveResult solve(const Graph& g, const SSequence& s, const EdgeColoring& pins,
                         const SearchConfig& cfg = {}) {
    EdgeDistanceMatrix dm(g);
    if (verify_partial(g, s, pins, dm).violation)
        fail(errc::inconsistent_pins, "pins violate distance constraints");
    detail::ConflictTables ct(g, s, dm);
    SolveResult res = (cfg.threads > 1) ? detail::solve_parallel(g, s, dm, ct, pins, cfg)
                                        : detail::solve_sequential(g, s, dm, ct, pins, cfg);
    if (res.sat()) {
        auto v = verify(g, s, *res.coloring, dm);
        if (!v.valid()) fail(errc::invalid_coloring, "internal: solver produced an invalid coloring");
    }
    return res;
}

inline SolveResult solve(const Graph& g, const SSequence& s, const SearchConfig& cfg = {}) {
    return solve(g, s, EdgeColoring(g.edge_count()), cfg);
}

// Streams every valid total coloring exactly once (keep symmetry breaking
// off in cfg for orbit-exact counting; with it on, the stream is the
// precedence-normalized quotient). Callback returns false to stop early.
inline EnumerateResult enumerate_all(const Graph& g, const SSequence& s, const SearchConfig& cfg,
                                     const std::function<bool(const EdgeColoring&)>& emit) {
    EdgeDistanceMatrix dm(g);
    detail::ConflictTables ct(g, s, dm);
    detail::Searcher se(g, s, dm, ct, cfg);
    EnumerateResult res;
    se.run(emit, cfg.enumeration_limit);
    res.count = se.emitted();
    res.budget_exhausted = se.budget_hit();
    res.limit_hit = cfg.enumeration_limit && se.emitted() >= cfg.enumeration_limit;
    res.stats.nodes = se.nodes();
    res.stats.millis = se.elapsed_ms();
    return res;
}

inline std::vector<EdgeColoring> enumerate_collect(const Graph& g, const SSequence& s,
                                                   SearchConfig cfg = {}) {
    cfg.symmetry_breaking = false;
    std::vector<EdgeColoring> out;
    auto res = enumerate_all(g, s, cfg, [&](const EdgeColoring& c) {
        out.push_back(c);
        return true;
    });
    if (res.budget_exhausted) fail(errc::budget_exceeded, "enumeration budget exhausted");
    return out;
}

// Independent correctness oracle: plain k^m odometer filtered by verify.
// No propagation, no symmetry breaking, no shared code with solve's search.
inline SolveResult brute_force_oracle(const Graph& g, const SSequence& s) {
    int m = g.edge_count();
    int k = s.size();
    double space = 1.0;
    for (int i = 0; i < m; ++i) {
        space *= k;
        if (space > 1e8) fail(errc::too_large, "k^m exceeds 1e8");
    }
    EdgeDistanceMatrix dm(g);
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    if (m == 0) {
        res.status = SolveStatus::sat;
        res.coloring = EdgeColoring(0);
        return res;
    }
    std::vector<int> a(m, 1);
    std::uint64_t tried = 0;
    while (true) {
        ++tried;
        EdgeColoring c(m);
        for (int i = 0; i < m; ++i) c.set(i, a[i]);
        if (verify(g, s, c, dm).valid()) {
            res.status = SolveStatus::sat;
            res.coloring = c;
            break;
        }
        int pos = m - 1;
        while (pos >= 0 && a[pos] == k) {
            a[pos] = 1;
            --pos;
        }
        if (pos < 0) {
            res.status = SolveStatus::unsat;
            break;
        }
        ++a[pos];
    }
    res.stats.nodes = tried;
    res.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace spg
