// Complete backtracking search for oriented-graph homomorphisms: per-vertex
// candidate bitsets, arc-consistency filtering after each assignment, and
// minimum-remaining-candidates variable order with index tie-breaks, so
// searches are deterministic and an exhausted verdict is a proof.
#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ocol/bitset.hpp"
#include "ocol/digraph.hpp"

namespace ocol {

struct PartialMap {
    std::vector<int> image; // source vertex -> target vertex, -1 unassigned

    static PartialMap empty(int order) { return PartialMap{std::vector<int>(order, -1)}; }
};

enum class HomVerdict { found, exhausted, budget_exceeded };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
};

struct SolverOutcome {
    HomVerdict verdict = HomVerdict::exhausted;
    std::vector<int> witness; // complete map when verdict == found
    SearchStats stats;
};

struct HomOptions {
    std::uint64_t node_budget = 0; // 0 = unlimited
    // Pins the first branched variable to target vertex 0. Sound only for
    // vertex-transitive targets; the caller asserts that.
    bool fix_first_vertex = false;
    int threads = 1; // root-level branch split
};

namespace detail {

class HomSearch {
public:
    HomSearch(const OrientedGraph& g, const OrientedGraph& h) : g_(g), h_(h), n_(g.order()), words_(h.words()) {
        domains_.assign(static_cast<std::size_t>(n_ + 1) * n_ * words_, 0);
        assigned_.assign(n_, -1);
        queued_.assign(g_.arc_count(), false);
    }

    // Initial domain setup from a seed; returns false if the seed already
    // wipes a domain.
    bool init(const PartialMap* seed) {
        std::uint64_t* dom = level(0);
        std::uint64_t full_last = (h_.order() % 64 == 0 && h_.order() > 0)
                                      ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << (h_.order() % 64)) - 1);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t* row = dom + static_cast<std::size_t>(v) * words_;
            for (int k = 0; k < words_; ++k) row[k] = ~std::uint64_t{0};
            row[words_ - 1] = full_last;
            if (h_.order() == 0) row[0] = 0;
        }
        if (seed) {
            for (int v = 0; v < n_; ++v) {
                int img = seed->image[v];
                if (img < 0) continue;
                std::uint64_t* row = dom + static_cast<std::size_t>(v) * words_;
                bits::clear(row, words_);
                bits::set(row, img);
            }
        }
        // Full arc-consistency pass before branching.
        return propagate_all(dom);
    }

    SolverOutcome run(const HomOptions& opts, int forced_root = -1) {
        opts_ = opts;
        SolverOutcome out;
        out.verdict = search(0, forced_root);
        out.stats = stats_;
        if (out.verdict == HomVerdict::found) {
            out.witness = assigned_;
            verify_witness(out.witness);
        }
        return out;
    }

    // Chooses the branch variable at the root (after init), for thread splits.
    int pick_root() const { return pick(level(0)); }

    const std::uint64_t* root_domain(int v) const { return level(0) + static_cast<std::size_t>(v) * words_; }

private:
    std::uint64_t* level(int d) { return domains_.data() + static_cast<std::size_t>(d) * n_ * words_; }
    const std::uint64_t* level(int d) const { return domains_.data() + static_cast<std::size_t>(d) * n_ * words_; }

    int pick(const std::uint64_t* dom) const {
        int best = -1, best_size = 0;
        for (int v = 0; v < n_; ++v) {
            if (assigned_[v] >= 0) continue;
            int size = bits::count(dom + static_cast<std::size_t>(v) * words_, words_);
            if (best < 0 || size < best_size) {
                best = v;
                best_size = size;
            }
        }
        return best;
    }

    // AC-3 over the arc constraints, seeded with every arc.
    bool propagate_all(std::uint64_t* dom) {
        std::vector<int> queue;
        for (int a = 0; a < g_.arc_count(); ++a) {
            queue.push_back(a);
            queued_[a] = true;
        }
        return ac3(dom, queue);
    }

    bool propagate_from(std::uint64_t* dom, int vertex) {
        std::vector<int> queue;
        for (int a = 0; a < g_.arc_count(); ++a) {
            const Arc& arc = g_.arcs()[a];
            if (arc.tail == vertex || arc.head == vertex) {
                queue.push_back(a);
                queued_[a] = true;
            }
        }
        return ac3(dom, queue);
    }

    bool ac3(std::uint64_t* dom, std::vector<int>& queue) {
        auto enqueue_incident = [&](int vertex) {
            for (int a = 0; a < g_.arc_count(); ++a) {
                if (queued_[a]) continue;
                const Arc& arc = g_.arcs()[a];
                if (arc.tail == vertex || arc.head == vertex) {
                    queue.push_back(a);
                    queued_[a] = true;
                }
            }
        };
        while (!queue.empty()) {
            int a = queue.back();
            queue.pop_back();
            queued_[a] = false;
            const Arc& arc = g_.arcs()[a];
            std::uint64_t* dt = dom + static_cast<std::size_t>(arc.tail) * words_;
            std::uint64_t* dh = dom + static_cast<std::size_t>(arc.head) * words_;
            bool changed_tail = false, changed_head = false;
            // head value y needs some x in dom(tail) with x -> y in h.
            for (int y = bits::next(dh, words_, 0); y >= 0; y = bits::next(dh, words_, y + 1)) {
                if (!bits::intersects(dt, h_.in_row(y), words_)) {
                    bits::reset(dh, y);
                    changed_head = true;
                }
            }
            // tail value x needs some y in dom(head) with x -> y in h.
            for (int x = bits::next(dt, words_, 0); x >= 0; x = bits::next(dt, words_, x + 1)) {
                if (!bits::intersects(dh, h_.out_row(x), words_)) {
                    bits::reset(dt, x);
                    changed_tail = true;
                }
            }
            if (changed_head) {
                if (bits::none(dh, words_)) return false;
                enqueue_incident(arc.head);
            }
            if (changed_tail) {
                if (bits::none(dt, words_)) return false;
                enqueue_incident(arc.tail);
            }
        }
        return true;
    }

    HomVerdict search(int depth, int forced_var) {
        if (depth == n_) return HomVerdict::found;
        std::uint64_t* dom = level(depth);
        int v = forced_var >= 0 ? forced_var : pick(dom);
        const std::uint64_t* row = dom + static_cast<std::size_t>(v) * words_;
        bool budget_hit = false;
        bool first_branch = opts_.fix_first_vertex && depth == 0;
        for (int c = bits::next(row, words_, 0); c >= 0; c = bits::next(row, words_, c + 1)) {
            if (first_branch && c != 0) break; // target vertex-transitive: rotate any solution
            ++stats_.nodes;
            if (opts_.node_budget && stats_.nodes > opts_.node_budget) {
                budget_hit = true;
                break;
            }
            std::uint64_t* next = level(depth + 1);
            bits::assign(next, dom, n_ * words_);
            std::uint64_t* vrow = next + static_cast<std::size_t>(v) * words_;
            bits::clear(vrow, words_);
            bits::set(vrow, c);
            assigned_[v] = c;
            if (propagate_from(next, v)) {
                HomVerdict verdict = search(depth + 1, -1);
                if (verdict != HomVerdict::exhausted) return verdict; // found or budget
            } else {
                ++stats_.prunes;
            }
            assigned_[v] = -1;
        }
        return budget_hit ? HomVerdict::budget_exceeded : HomVerdict::exhausted;
    }

    void verify_witness(const std::vector<int>& w) const {
        for (Arc a : g_.arcs())
            if (!h_.has_arc(w[a.tail], w[a.head]))
                throw std::logic_error("homomorphism witness failed re-verification");
    }

    const OrientedGraph& g_;
    const OrientedGraph& h_;
    int n_, words_;
    HomOptions opts_;
    SearchStats stats_;
    std::vector<std::uint64_t> domains_;
    std::vector<int> assigned_;
    std::vector<char> queued_;
};

} // namespace detail

inline void check_seed_consistent(const OrientedGraph& g, const OrientedGraph& h, const PartialMap& seed) {
    if (static_cast<int>(seed.image.size()) != g.order())
        throw std::invalid_argument("seed map size mismatch");
    for (int v = 0; v < g.order(); ++v) {
        int img = seed.image[v];
        if (img < -1 || img >= h.order()) throw std::invalid_argument("seed image out of range");
    }
    for (Arc a : g.arcs()) {
        int u = seed.image[a.tail], v = seed.image[a.head];
        if (u >= 0 && v >= 0 && !h.has_arc(u, v))
            throw std::invalid_argument("seed map violates an arc constraint");
    }
}

inline SolverOutcome find_homomorphism(const OrientedGraph& g, const OrientedGraph& h,
                                       const PartialMap* seed = nullptr, const HomOptions& opts = {}) {
    if (seed) check_seed_consistent(g, h, *seed);
    if (g.order() == 0) return SolverOutcome{HomVerdict::found, {}, {}};
    if (h.order() == 0) return SolverOutcome{HomVerdict::exhausted, {}, {}};

    HomOptions local = opts;
    if (seed) local.fix_first_vertex = false; // a pinned seed already breaks symmetry

    if (local.threads <= 1 || local.fix_first_vertex) {
        detail::HomSearch s(g, h);
        if (!s.init(seed)) {
            SolverOutcome out;
            out.verdict = HomVerdict::exhausted;
            out.stats.prunes = 1;
            return out;
        }
        return s.run(local);
    }

    // Root split: branch values of the root variable partitioned across
    // workers; the witness of the least successful branch wins, so the result
    // is independent of scheduling.
    detail::HomSearch probe(g, h);
    if (!probe.init(seed)) {
        SolverOutcome out;
        out.verdict = HomVerdict::exhausted;
        out.stats.prunes = 1;
        return out;
    }
    int root = probe.pick_root();
    std::vector<int> values;
    bits::for_each(probe.root_domain(root), h.words(), [&](int c) { values.push_back(c); });

    struct BranchResult {
        SolverOutcome outcome;
        bool done = false;
    };
    std::vector<BranchResult> results(values.size());
    std::vector<std::thread> pool;
    std::size_t cursor = 0;
    std::mutex mtx;
    int nthreads = std::min<int>(local.threads, static_cast<int>(values.size()));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                std::size_t mine;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (cursor >= values.size()) return;
                    mine = cursor++;
                }
                PartialMap branch_seed = seed ? *seed : PartialMap::empty(g.order());
                branch_seed.image[root] = values[mine];
                detail::HomSearch s(g, h);
                HomOptions branch_opts = local;
                branch_opts.threads = 1;
                if (!s.init(&branch_seed)) {
                    results[mine].outcome.verdict = HomVerdict::exhausted;
                    results[mine].outcome.stats.prunes = 1;
                } else {
                    results[mine].outcome = s.run(branch_opts);
                }
                results[mine].done = true;
            }
        });
    }
    for (auto& th : pool) th.join();

    SolverOutcome merged;
    merged.verdict = HomVerdict::exhausted;
    for (auto& r : results) {
        merged.stats.nodes += r.outcome.stats.nodes;
        merged.stats.prunes += r.outcome.stats.prunes;
    }
    for (auto& r : results) {
        if (r.outcome.verdict == HomVerdict::found) {
            merged.verdict = HomVerdict::found;
            merged.witness = r.outcome.witness;
            return merged;
        }
        if (r.outcome.verdict == HomVerdict::budget_exceeded) merged.verdict = HomVerdict::budget_exceeded;
    }
    return merged;
}

} // namespace ocol
