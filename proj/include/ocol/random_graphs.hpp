// Seeded random graph samplers used by the oclique searches and the
// randomized property corpora.
#pragma once

#include <stdexcept>

#include "ocol/dgf.hpp"
#include "ocol/digraph.hpp"
#include "ocol/rng.hpp"

namespace ocol {

inline OrientedGraph random_orientation(const UndirectedGraph& g, RngStream& rng) {
    std::vector<Arc> arcs;
    for (auto [a, b] : g.edges) {
        if (rng.chance(1, 2))
            arcs.push_back({a, b});
        else
            arcs.push_back({b, a});
    }
    return OrientedGraph(g.order, std::move(arcs));
}

// Pairing-model d-regular graph; rejects loops and parallel edges, retries.
inline UndirectedGraph random_regular_graph(int n, int d, RngStream& rng, int max_tries = 4000) {
    if (n * d % 2 != 0) throw std::invalid_argument("n*d must be even for a regular graph");
    if (d >= n) throw std::invalid_argument("degree too large");
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || seen[a][b]) {
                ok = false;
                break;
            }
            seen[a][b] = seen[b][a] = 1;
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
        if (!ok) continue;
        UndirectedGraph g;
        g.order = n;
        g.edges = std::move(edges);
        std::sort(g.edges.begin(), g.edges.end());
        return g;
    }
    throw std::runtime_error("regular-graph sampling did not converge");
}

inline bool undirected_connected(const UndirectedGraph& g) {
    if (g.order <= 1) return true;
    std::vector<std::vector<int>> adj(g.order);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(g.order, 0);
    std::vector<int> q{0};
    seen[0] = 1;
    int reached = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int w : adj[q[i]])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push_back(w);
            }
    return reached == g.order;
}

inline UndirectedGraph random_connected_regular_graph(int n, int d, RngStream& rng, int max_tries = 4000) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        UndirectedGraph g = random_regular_graph(n, d, rng, max_tries);
        if (undirected_connected(g)) return g;
    }
    throw std::runtime_error("connected regular sampling did not converge");
}

// Connected graph with max degree bound: random spanning tree plus extra
// random edges while degrees allow.
inline UndirectedGraph random_connected_max_degree(int n, int max_degree, int extra_edges, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n > 1 && max_degree < 2) throw std::invalid_argument("max degree too small for connectivity");
    UndirectedGraph g;
    g.order = n;
    std::vector<int> deg(n, 0);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    // Random attachment tree with degree caps; the newest vertex always has a
    // spare slot, so rejection terminates.
    for (int v = 1; v < n; ++v) {
        while (true) {
            int u = rng.range(0, v - 1);
            if (deg[u] >= max_degree) continue;
            g.edges.push_back({u, v});
            seen[u][v] = seen[v][u] = 1;
            ++deg[u];
            ++deg[v];
            break;
        }
    }
    for (int e = 0; e < extra_edges; ++e) {
        for (int tries = 0; tries < 60; ++tries) {
            int a = rng.range(0, n - 1), b = rng.range(0, n - 1);
            if (a == b || seen[a][b]) continue;
            if (deg[a] >= max_degree || deg[b] >= max_degree) continue;
            g.edges.push_back({std::min(a, b), std::max(a, b)});
            seen[a][b] = seen[b][a] = 1;
            ++deg[a];
            ++deg[b];
            break;
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace ocol
