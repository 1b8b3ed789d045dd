// Oriented cliques: recognition by weak diameter, the 2-dipath counting
// bound, exhaustive and seeded-random searches, and orienting a given
// undirected graph into an oclique.
#pragma once

#include <optional>
#include <stdexcept>

#include "ocol/canonical.hpp"
#include "ocol/digraph.hpp"
#include "ocol/enumerate.hpp"
#include "ocol/random_graphs.hpp"
#include "ocol/rng.hpp"

namespace ocol {

struct OcliqueVerdict {
    bool is_oclique = false;
    std::optional<std::pair<int, int>> witness; // a pair at weak distance >= 3 (or unreachable)
};

inline OcliqueVerdict is_oclique(const OrientedGraph& g) {
    OcliqueVerdict v;
    if (g.order() <= 1) {
        v.is_oclique = true;
        return v;
    }
    const int n = g.order();
    const int w = g.words();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            if (bits::intersects(g.out_row(a), g.in_row(b), w)) continue;
            if (bits::intersects(g.out_row(b), g.in_row(a), w)) continue;
            v.witness = {a, b};
            return v;
        }
    v.is_oclique = true;
    return v;
}

// Proposition-2 bound: n <= 1/2 + (Delta+1)^2 / 2, floored.
inline int oclique_order_bound(int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    return ((delta + 1) * (delta + 1) + 1) / 2;
}

// The 2-dipath counting inequality from the bound's proof; every oclique must
// satisfy it.
inline bool dipath_count_consistent(const OrientedGraph& g) {
    long long need2 = 0, have2 = 0; // doubled to stay integral
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        int d = g.degree(x);
        need2 += n - d - 1;
        have2 += 2LL * ((d + 1) / 2) * (d / 2);
    }
    return need2 <= have2;
}

struct OcliqueSearchTask {
    int max_degree = 3;
    int order = 7;
    enum class Mode { exhaustive, random_sampling } mode = Mode::exhaustive;
    std::uint64_t budget = 0;  // random mode: orientation samples
    std::uint64_t seed = 0;    // random mode: required
    int orientations_per_graph = 512; // random mode: samples per underlying draw
};

struct OcliqueSearchResult {
    std::vector<OrientedGraph> found;  // up to isomorphism, canonical forms
    bool exhaustive = false;
    std::uint64_t underlying_candidates = 0;
    std::uint64_t orientations_tested = 0;
};

inline OcliqueSearchResult search_ocliques(const OcliqueSearchTask& task) {
    OcliqueSearchResult res;
    std::vector<std::pair<CanonCode, SmallDigraph>> found;
    auto record = [&](const OrientedGraph& g) {
        if (!is_oclique(g).is_oclique) throw std::logic_error("recording a non-oclique");
        if (g.max_degree() >= 1 && g.order() > oclique_order_bound(g.max_degree()))
            throw std::logic_error("found oclique violates the order bound");
        if (!dipath_count_consistent(g)) throw std::logic_error("found oclique violates 2-dipath counting");
        auto& slot = found.emplace_back();
        slot.second = detail::canonical_small(SmallDigraph::of(g), &slot.first);
    };

    if (task.mode == OcliqueSearchTask::Mode::exhaustive) {
        if (task.order > 10) throw std::invalid_argument("exhaustive search is bounded to order <= 10");
        for (const UndirectedGraph& u : enumerate_underlying_graphs(task.order, task.max_degree)) {
            if (task.order >= 2) {
                int diam = undirected_diameter(u);
                if (diam < 0 || diam > 2) continue;
            }
            ++res.underlying_candidates;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.edges.size()); ++mask) {
                ++res.orientations_tested;
                OrientedGraph g = orient_by_mask(u, mask);
                if (weak_diameter_at_most_2(g)) record(g);
            }
        }
        res.exhaustive = true;
    } else {
        if (task.max_degree < 2) throw std::invalid_argument("random mode needs max degree >= 2");
        RngStream rng(task.seed);
        std::uint64_t tested = 0;
        while (tested < task.budget) {
            // Sample a degree-max regular underlying graph; fall back to the
            // bound-degree sampler when regularity is impossible.
            UndirectedGraph u;
            if ((task.order * task.max_degree) % 2 == 0)
                u = random_regular_graph(task.order, task.max_degree, rng);
            else
                u = random_connected_max_degree(task.order, task.max_degree,
                                                task.order * task.max_degree / 2, rng);
            int diam = undirected_diameter(u);
            if (diam < 0 || diam > 2) continue;
            ++res.underlying_candidates;
            for (int k = 0; k < task.orientations_per_graph && tested < task.budget; ++k) {
                ++tested;
                OrientedGraph g = random_orientation(u, rng);
                if (weak_diameter_at_most_2(g)) record(g);
            }
        }
        res.orientations_tested = tested;
    }

    for (const auto& g : detail::dedup_sorted(found)) res.found.push_back(g.to_oriented());
    return res;
}

// Complete search over the 2^m orientations of an undirected graph, in
// lexicographic orientation order; first oclique wins.
inline std::optional<OrientedGraph> orient_as_oclique(const UndirectedGraph& h) {
    if (h.edges.size() > 24) throw std::invalid_argument("orientation search capped at 24 edges");
    if (h.order >= 2) {
        int diam = undirected_diameter(h);
        if (diam < 0 || diam > 2) return std::nullopt; // weak diameter can only be larger
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.edges.size()); ++mask) {
        OrientedGraph g = orient_by_mask(h, mask);
        if (weak_diameter_at_most_2(g)) return g;
    }
    return std::nullopt;
}

} // namespace ocol
