// Self-contained canonical labeling for graphs of order <= 16: the canonical
// code is the minimum adjacency bit-string over all vertex permutations, with
// bits compared in the order matrix cells complete as vertices are appended
// (column above the diagonal, then row left of it, per depth). That ordering
// lets a prefix of (d+1)^2 cells prune the permutation search at depth d.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ocol/digraph.hpp"

namespace ocol {

constexpr int kMaxCanonOrder = 16;

struct CanonCode {
    std::array<std::uint32_t, kMaxCanonOrder> blocks{}; // block d = 2d bits added at depth d
    int n = 0;
    friend auto operator<=>(const CanonCode&, const CanonCode&) = default;
};

struct CanonCodeHash {
    std::size_t operator()(const CanonCode& c) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(c.n);
        for (std::uint32_t b : c.blocks) {
            h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Adjacency rows packed into 16-bit masks; symmetric rows encode an
// undirected graph and the same canonicalization applies.
struct SmallDigraph {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonOrder> out{};

    bool arc(int u, int v) const { return (out[u] >> v) & 1; }

    static SmallDigraph of(const OrientedGraph& g) {
        if (g.order() > kMaxCanonOrder) throw std::invalid_argument("graph too large for canonical code");
        SmallDigraph s;
        s.n = g.order();
        for (Arc a : g.arcs()) s.out[a.tail] |= static_cast<std::uint16_t>(1u << a.head);
        return s;
    }

    static SmallDigraph of_undirected(int order, const std::vector<std::pair<int, int>>& edges) {
        if (order > kMaxCanonOrder) throw std::invalid_argument("graph too large for canonical code");
        SmallDigraph s;
        s.n = order;
        for (auto [a, b] : edges) {
            s.out[a] |= static_cast<std::uint16_t>(1u << b);
            s.out[b] |= static_cast<std::uint16_t>(1u << a);
        }
        return s;
    }

    OrientedGraph to_oriented() const {
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (arc(u, v)) arcs.push_back({u, v});
        return OrientedGraph(n, std::move(arcs));
    }
};

namespace detail {

struct CanonSearch {
    const SmallDigraph* g;
    int n;
    std::array<int, kMaxCanonOrder> perm{}, best_perm{};
    std::array<std::uint32_t, kMaxCanonOrder> blocks{}, best_blocks{};
    std::uint16_t used = 0;
    bool have_best = false;

    std::uint32_t block_at(int d) const {
        // Bits: (perm[0],perm[d]) .. (perm[d-1],perm[d]) then (perm[d],perm[0]) ..
        std::uint32_t b = 0;
        int pd = perm[d];
        for (int i = 0; i < d; ++i) b = (b << 1) | (g->arc(perm[i], pd) ? 1u : 0u);
        for (int j = 0; j < d; ++j) b = (b << 1) | (g->arc(pd, perm[j]) ? 1u : 0u);
        return b;
    }

    // eq_prefix: blocks[0..d-1] equals best_blocks[0..d-1] as of branching
    // time. best only ever shrinks, so pruning on "equal prefix and larger
    // block" stays sound; leaves re-compare in full before installing.
    void dfs(int d, bool eq_prefix) {
        if (d == n) {
            if (!have_best) {
                best_blocks = blocks;
                best_perm = perm;
                have_best = true;
                return;
            }
            for (int k = 0; k < n; ++k) {
                if (blocks[k] < best_blocks[k]) {
                    best_blocks = blocks;
                    best_perm = perm;
                    return;
                }
                if (blocks[k] > best_blocks[k]) return;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            perm[d] = v;
            std::uint32_t b = block_at(d);
            bool next_eq = eq_prefix;
            if (eq_prefix && have_best) {
                if (b > best_blocks[d]) continue;
                next_eq = b == best_blocks[d];
            }
            blocks[d] = b;
            used |= static_cast<std::uint16_t>(1u << v);
            dfs(d + 1, next_eq);
            used &= static_cast<std::uint16_t>(~(1u << v));
        }
    }
};

} // namespace detail

// Canonical code plus (optionally) the lexicographically least permutation
// achieving it; perm_out[d] is the original vertex placed at position d.
inline CanonCode canonical_code(const SmallDigraph& g, std::vector<int>* perm_out = nullptr) {
    detail::CanonSearch s;
    s.g = &g;
    s.n = g.n;
    s.dfs(0, true);
    CanonCode code;
    code.n = g.n;
    code.blocks = s.best_blocks;
    if (perm_out) perm_out->assign(s.best_perm.begin(), s.best_perm.begin() + g.n);
    return code;
}

inline CanonCode canonical_code(const OrientedGraph& g, std::vector<int>* perm_out = nullptr) {
    return canonical_code(SmallDigraph::of(g), perm_out);
}

// The canonical representative: g relabelled so position d holds perm[d].
inline OrientedGraph canonical_form(const OrientedGraph& g) {
    std::vector<int> perm;
    canonical_code(g, &perm);
    std::vector<int> newidx(g.order());
    for (int d = 0; d < g.order(); ++d) newidx[perm[d]] = d;
    std::vector<Arc> arcs;
    for (Arc a : g.arcs()) arcs.push_back({newidx[a.tail], newidx[a.head]});
    return OrientedGraph(g.order(), std::move(arcs));
}

inline bool isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

// Backtracking isomorphism search with an explicit witness; map[a-vertex] =
// b-vertex. Small orders only (used on patterns and tournaments).
inline std::optional<std::vector<int>> find_isomorphism(const OrientedGraph& a, const OrientedGraph& b) {
    const int n = a.order();
    if (n != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
    std::vector<int> map(n, -1), rmap(n, -1);
    auto compatible = [&](int va, int vb) {
        if (a.out_degree(va) != b.out_degree(vb) || a.in_degree(va) != b.in_degree(vb)) return false;
        for (int w = 0; w < n; ++w) {
            if (map[w] < 0) continue;
            if (a.has_arc(va, w) != b.has_arc(vb, map[w])) return false;
            if (a.has_arc(w, va) != b.has_arc(map[w], vb)) return false;
        }
        return true;
    };
    int depth = 0;
    std::vector<int> cand_at(n + 1, 0);
    while (true) {
        if (depth == n) return map;
        bool advanced = false;
        for (int vb = cand_at[depth]; vb < n; ++vb) {
            if (rmap[vb] >= 0) continue;
            if (!compatible(depth, vb)) continue;
            map[depth] = vb;
            rmap[vb] = depth;
            cand_at[depth] = vb + 1;
            ++depth;
            cand_at[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return std::nullopt;
        --depth;
        rmap[map[depth]] = -1;
        map[depth] = -1;
    }
}

// All automorphisms, by backtracking; intended for order <= 9.
inline std::vector<std::vector<int>> collect_automorphisms(const OrientedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> autos;
    std::vector<int> map(n, -1), rmap(n, -1);
    auto compatible = [&](int va, int vb) {
        if (g.out_degree(va) != g.out_degree(vb) || g.in_degree(va) != g.in_degree(vb)) return false;
        for (int w = 0; w < n; ++w) {
            if (map[w] < 0) continue;
            if (g.has_arc(va, w) != g.has_arc(vb, map[w])) return false;
            if (g.has_arc(w, va) != g.has_arc(map[w], vb)) return false;
        }
        return true;
    };
    std::vector<int> cand_at(n + 1, 0);
    int depth = 0;
    while (true) {
        if (depth == n) {
            autos.push_back(map);
            --depth;
            rmap[map[depth]] = -1;
            map[depth] = -1;
            continue;
        }
        bool advanced = false;
        for (int vb = cand_at[depth]; vb < n; ++vb) {
            if (rmap[vb] >= 0) continue;
            if (!compatible(depth, vb)) continue;
            map[depth] = vb;
            rmap[vb] = depth;
            cand_at[depth] = vb + 1;
            ++depth;
            cand_at[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return autos;
        --depth;
        rmap[map[depth]] = -1;
        map[depth] = -1;
    }
}

} // namespace ocol
