// Isomorph-free exhaustive generation by vertex extension with canonical-code
// deduplication: tournaments to order 7, oriented graphs to order 6,
// degree-bounded undirected graphs to order 10, the subcubic oclique catalog,
// and the universal-target tournament filter.
#pragma once

#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ocol/canonical.hpp"
#include "ocol/dgf.hpp"
#include "ocol/digraph.hpp"
#include "ocol/hom.hpp"

namespace ocol {

struct TournamentSet {
    int order = 0;
    std::vector<OrientedGraph> members; // canonical representatives, code-sorted
    std::uint64_t candidates_generated = 0;
};

namespace detail {

inline std::vector<SmallDigraph> dedup_sorted(std::vector<std::pair<CanonCode, SmallDigraph>>& level) {
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SmallDigraph> out;
    for (std::size_t i = 0; i < level.size(); ++i)
        if (i == 0 || !(level[i].first == level[i - 1].first)) out.push_back(level[i].second);
    return out;
}

inline SmallDigraph canonical_small(const SmallDigraph& g, CanonCode* code_out) {
    std::vector<int> perm;
    CanonCode code = canonical_code(g, &perm);
    SmallDigraph rep;
    rep.n = g.n;
    std::vector<int> newidx(g.n);
    for (int d = 0; d < g.n; ++d) newidx[perm[d]] = d;
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.arc(u, v)) rep.out[newidx[u]] |= static_cast<std::uint16_t>(1u << newidx[v]);
    if (code_out) *code_out = code;
    return rep;
}

} // namespace detail

inline const std::vector<long long>& tournament_counts() {
    static const std::vector<long long> counts = {1, 1, 2, 4, 12, 56, 456};
    return counts;
}

inline TournamentSet enumerate_tournaments(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("tournament enumeration supports 1 <= n <= 7");
    std::vector<SmallDigraph> level(1);
    level[0].n = 1;
    TournamentSet set;
    for (int k = 2; k <= n; ++k) {
        std::vector<std::pair<CanonCode, SmallDigraph>> next;
        for (const SmallDigraph& g : level) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                SmallDigraph ext = g;
                ext.n = k;
                for (int v = 0; v < k - 1; ++v) {
                    if ((mask >> v) & 1)
                        ext.out[k - 1] |= static_cast<std::uint16_t>(1u << v);
                    else
                        ext.out[v] |= static_cast<std::uint16_t>(1u << (k - 1));
                }
                auto& slot = next.emplace_back();
                slot.second = detail::canonical_small(ext, &slot.first);
            }
        }
        level = detail::dedup_sorted(next);
        set.candidates_generated += next.size();
    }
    set.order = n;
    for (const SmallDigraph& g : level) set.members.push_back(g.to_oriented());
    long long expected = tournament_counts()[n - 1];
    if (static_cast<long long>(set.members.size()) != expected)
        throw std::logic_error("tournament count mismatch at n=" + std::to_string(n) + ": got " +
                               std::to_string(set.members.size()) + ", expected " + std::to_string(expected));
    return set;
}

inline const std::vector<long long>& oriented_graph_counts() {
    static const std::vector<long long> counts = {1, 2, 7, 42, 582, 21480};
    return counts;
}

// All oriented graphs (up to isomorphism) on exactly n vertices, n <= 6.
inline std::vector<OrientedGraph> enumerate_oriented_graphs(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("oriented-graph enumeration supports 1 <= n <= 6");
    std::vector<SmallDigraph> level(1);
    level[0].n = 1;
    for (int k = 2; k <= n; ++k) {
        std::vector<std::pair<CanonCode, SmallDigraph>> next;
        std::uint64_t combos = 1;
        for (int i = 0; i < k - 1; ++i) combos *= 3;
        for (const SmallDigraph& g : level) {
            for (std::uint64_t code = 0; code < combos; ++code) {
                SmallDigraph ext = g;
                ext.n = k;
                std::uint64_t c = code;
                for (int v = 0; v < k - 1; ++v) {
                    int state = static_cast<int>(c % 3);
                    c /= 3;
                    if (state == 1)
                        ext.out[k - 1] |= static_cast<std::uint16_t>(1u << v);
                    else if (state == 2)
                        ext.out[v] |= static_cast<std::uint16_t>(1u << (k - 1));
                }
                auto& slot = next.emplace_back();
                slot.second = detail::canonical_small(ext, &slot.first);
            }
        }
        level = detail::dedup_sorted(next);
    }
    long long expected = oriented_graph_counts()[n - 1];
    if (static_cast<long long>(level.size()) != expected)
        throw std::logic_error("oriented graph count mismatch at n=" + std::to_string(n));
    std::vector<OrientedGraph> out;
    for (const SmallDigraph& g : level) out.push_back(g.to_oriented());
    return out;
}

// Degree-bounded undirected graphs on exactly n vertices up to isomorphism
// (disconnected included; callers filter).
inline std::vector<UndirectedGraph> enumerate_underlying_graphs(int n, int max_degree) {
    if (n < 1 || n > 10) throw std::invalid_argument("underlying enumeration supports 1 <= n <= 10");
    std::vector<SmallDigraph> level(1);
    level[0].n = 1;
    for (int k = 2; k <= n; ++k) {
        std::vector<std::pair<CanonCode, SmallDigraph>> next;
        for (const SmallDigraph& g : level) {
            // New vertex joined to any subset of old vertices with spare degree.
            std::uint32_t eligible = 0;
            for (int v = 0; v < k - 1; ++v)
                if (std::popcount(static_cast<unsigned>(g.out[v])) < max_degree) eligible |= 1u << v;
            for (std::uint32_t sub = eligible;; sub = (sub - 1) & eligible) {
                if (std::popcount(sub) <= max_degree) {
                    SmallDigraph ext = g;
                    ext.n = k;
                    for (int v = 0; v < k - 1; ++v)
                        if ((sub >> v) & 1) {
                            ext.out[k - 1] |= static_cast<std::uint16_t>(1u << v);
                            ext.out[v] |= static_cast<std::uint16_t>(1u << (k - 1));
                        }
                    auto& slot = next.emplace_back();
                    slot.second = detail::canonical_small(ext, &slot.first);
                }
                if (sub == 0) break;
            }
        }
        level = detail::dedup_sorted(next);
    }
    std::vector<UndirectedGraph> out;
    for (const SmallDigraph& g : level) {
        UndirectedGraph u;
        u.order = g.n;
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b)
                if (g.arc(a, b)) u.edges.push_back({a, b});
        out.push_back(std::move(u));
    }
    return out;
}

inline int undirected_diameter(const UndirectedGraph& g) {
    // BFS from every vertex; -1 when disconnected.
    std::vector<std::vector<int>> adj(g.order);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int diam = 0;
    for (int s = 0; s < g.order; ++s) {
        std::vector<int> dist(g.order, -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int w : adj[q[i]])
                if (dist[w] < 0) {
                    dist[w] = dist[q[i]] + 1;
                    q.push_back(w);
                }
        for (int d : dist) {
            if (d < 0) return -1;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

// All orientations of an undirected graph, as bitmask over its edge list;
// bit e set means the edge is oriented high->low.
inline OrientedGraph orient_by_mask(const UndirectedGraph& g, std::uint64_t mask) {
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if ((mask >> e) & 1)
            arcs.push_back({b, a});
        else
            arcs.push_back({a, b});
    }
    return OrientedGraph(g.order, std::move(arcs));
}

// Subcubic oclique catalog: every orientation of a degree-bounded underlying
// graph with weak diameter at most 2, deduplicated by canonical form. The
// default excludes 3-regular underlying graphs: the targets of interest are
// universal for *properly* subcubic graphs, and e.g. the transitive
// 4-tournament is a cubic oclique that QR_7 does not contain.
inline std::vector<OrientedGraph> enumerate_subcubic_ocliques(int max_order, bool include_cubic = false) {
    if (max_order < 1 || max_order > 7)
        throw std::invalid_argument("subcubic oclique enumeration supports 1 <= max_order <= 7");
    std::vector<std::pair<CanonCode, SmallDigraph>> found;
    for (int n = 1; n <= max_order; ++n) {
        for (const UndirectedGraph& u : enumerate_underlying_graphs(n, 3)) {
            if (n >= 2) {
                int diam = undirected_diameter(u);
                if (diam < 0 || diam > 2) continue; // weak diameter >= underlying diameter
            }
            if (!include_cubic) {
                bool proper = false;
                for (int v = 0; v < u.order; ++v)
                    if (u.degree(v) < 3) proper = true;
                if (!proper) continue;
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.edges.size()); ++mask) {
                OrientedGraph g = orient_by_mask(u, mask);
                if (!weak_diameter_at_most_2(g)) continue;
                auto& slot = found.emplace_back();
                slot.second = detail::canonical_small(SmallDigraph::of(g), &slot.first);
            }
        }
    }
    std::vector<OrientedGraph> out;
    for (const SmallDigraph& g : detail::dedup_sorted(found)) out.push_back(g.to_oriented());
    return out;
}

// A tournament survives iff every oclique maps into it; such maps are forced
// to be injective (weak diameter 2), so this is exactly subgraph containment.
struct UniversalFilterResult {
    std::vector<int> survivors;                       // indices into the tournament set
    int eliminated = 0;
    std::vector<int> first_failing_oclique;           // per tournament, -1 for survivors
};

inline UniversalFilterResult filter_universal_candidates(const TournamentSet& targets,
                                                         const std::vector<OrientedGraph>& ocliques,
                                                         int threads = 1) {
    const int nt = static_cast<int>(targets.members.size());
    UniversalFilterResult r;
    r.first_failing_oclique.assign(nt, -1);
    std::vector<char> survives(nt, 0);

    auto work = [&](int t) {
        const OrientedGraph& target = targets.members[t];
        for (std::size_t i = 0; i < ocliques.size(); ++i) {
            if (ocliques[i].order() > target.order()) {
                r.first_failing_oclique[t] = static_cast<int>(i);
                return;
            }
            SolverOutcome out = find_homomorphism(ocliques[i], target);
            if (out.verdict != HomVerdict::found) {
                r.first_failing_oclique[t] = static_cast<int>(i);
                return;
            }
        }
        survives[t] = 1;
    };

    if (threads <= 1) {
        for (int t = 0; t < nt; ++t) work(t);
    } else {
        std::vector<std::thread> pool;
        std::mutex mtx;
        int cursor = 0;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back([&]() {
                while (true) {
                    int mine;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (cursor >= nt) return;
                        mine = cursor++;
                    }
                    work(mine);
                }
            });
        for (auto& th : pool) th.join();
    }

    for (int t = 0; t < nt; ++t)
        if (survives[t])
            r.survivors.push_back(t);
        else
            ++r.eliminated;
    return r;
}

} // namespace ocol
