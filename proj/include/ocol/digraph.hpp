// Oriented graphs: loop-free digraphs with at most one arc per vertex pair.
// Values are immutable after construction and safe to share across threads.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ocol/bitset.hpp"

namespace ocol {

struct Arc {
    int tail = 0;
    int head = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class OrientedGraph {
public:
    OrientedGraph() = default;

    OrientedGraph(int order, std::vector<Arc> arcs) : order_(order), arcs_(std::move(arcs)) {
        if (order_ < 0) throw GraphError("negative order");
        words_ = bit_words(std::max(order_, 1));
        out_bits_.assign(static_cast<std::size_t>(order_) * words_, 0);
        in_bits_.assign(static_cast<std::size_t>(order_) * words_, 0);
        std::sort(arcs_.begin(), arcs_.end());
        out_.resize(order_);
        in_.resize(order_);
        for (std::size_t k = 0; k < arcs_.size(); ++k) {
            const Arc a = arcs_[k];
            if (a.tail < 0 || a.tail >= order_ || a.head < 0 || a.head >= order_)
                throw GraphError("arc endpoint out of range: " + describe(a));
            if (a.tail == a.head) throw GraphError("loop at vertex " + std::to_string(a.tail));
            if (k > 0 && arcs_[k - 1] == a) throw GraphError("duplicate arc: " + describe(a));
            if (bits::test(out_row(a.head), a.tail))
                throw GraphError("2-cycle between " + std::to_string(a.tail) + " and " +
                                 std::to_string(a.head));
            bits::set(out_row(a.tail), a.head);
            bits::set(in_row(a.head), a.tail);
            out_[a.tail].push_back(a.head);
            in_[a.head].push_back(a.tail);
        }
    }

    static OrientedGraph from_pairs(int order, std::initializer_list<std::pair<int, int>> ps) {
        std::vector<Arc> as;
        for (auto [t, h] : ps) as.push_back({t, h});
        return OrientedGraph(order, std::move(as));
    }

    int order() const { return order_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int words() const { return words_; }

    bool has_arc(int u, int v) const { return bits::test(out_row(u), v); }
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
        return d;
    }

    const std::uint64_t* out_row(int v) const { return out_bits_.data() + static_cast<std::size_t>(v) * words_; }
    const std::uint64_t* in_row(int v) const { return in_bits_.data() + static_cast<std::size_t>(v) * words_; }

    std::vector<int> sources() const {
        std::vector<int> s;
        for (int v = 0; v < order_; ++v)
            if (in_degree(v) == 0) s.push_back(v);
        return s;
    }

    std::vector<int> sinks() const {
        std::vector<int> s;
        for (int v = 0; v < order_; ++v)
            if (out_degree(v) == 0) s.push_back(v);
        return s;
    }

    bool is_tournament() const {
        return static_cast<long long>(arcs_.size()) * 2 ==
               static_cast<long long>(order_) * (order_ - 1);
    }

    // Directed BFS distances from s; -1 marks unreachable vertices.
    std::vector<int> distances_from(int s) const {
        std::vector<int> dist(order_, -1);
        std::vector<int> queue;
        dist[s] = 0;
        queue.push_back(s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : out_[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

private:
    std::uint64_t* out_row(int v) { return out_bits_.data() + static_cast<std::size_t>(v) * words_; }
    std::uint64_t* in_row(int v) { return in_bits_.data() + static_cast<std::size_t>(v) * words_; }

    static std::string describe(Arc a) {
        return "(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")";
    }

    int order_ = 0;
    int words_ = 1;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::uint64_t> out_bits_, in_bits_;
};

inline bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.order() == b.order() && a.arcs() == b.arcs();
}

inline OrientedGraph converse(const OrientedGraph& g) {
    std::vector<Arc> rev;
    rev.reserve(g.arcs().size());
    for (Arc a : g.arcs()) rev.push_back({a.head, a.tail});
    return OrientedGraph(g.order(), std::move(rev));
}

// --- weak distances -------------------------------------------------------

struct VertexPairDistance {
    std::optional<int> forward;   // tail -> head
    std::optional<int> backward;  // head -> tail
    std::optional<int> weak;      // min of the two
};

inline VertexPairDistance pair_distance(const OrientedGraph& g, int u, int v) {
    auto lift = [](int d) -> std::optional<int> {
        if (d < 0) return std::nullopt;
        return d;
    };
    VertexPairDistance r;
    r.forward = lift(g.distances_from(u)[v]);
    r.backward = lift(g.distances_from(v)[u]);
    if (r.forward && r.backward)
        r.weak = std::min(*r.forward, *r.backward);
    else if (r.forward)
        r.weak = r.forward;
    else
        r.weak = r.backward;
    return r;
}

// Max over distinct pairs of weak distance; nullopt = infinite.
inline std::optional<int> weak_diameter(const OrientedGraph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = g.distances_from(v);
    int diam = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int f = dist[u][v], b = dist[v][u];
            int w;
            if (f < 0 && b < 0) return std::nullopt;
            if (f < 0)
                w = b;
            else if (b < 0)
                w = f;
            else
                w = std::min(f, b);
            diam = std::max(diam, w);
        }
    return diam;
}

// Pairwise bitset test: every distinct pair adjacent or joined by a 2-dipath
// in one direction. Cheap enough for orientation-search inner loops.
inline bool weak_diameter_at_most_2(const OrientedGraph& g) {
    const int n = g.order();
    const int w = g.words();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            if (bits::intersects(g.out_row(u), g.in_row(v), w)) continue;
            if (bits::intersects(g.out_row(v), g.in_row(u), w)) continue;
            return false;
        }
    return true;
}

// --- underlying-graph queries ---------------------------------------------

inline std::vector<int> underlying_components(const OrientedGraph& g) {
    std::vector<int> comp(g.order(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            };
            for (int w : g.out(v)) visit(w);
            for (int w : g.in(v)) visit(w);
        }
        ++c;
    }
    return comp;
}

inline bool underlying_connected(const OrientedGraph& g) {
    if (g.order() <= 1) return true;
    auto comp = underlying_components(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

// Bridges of U(g), reported with the orientation present in g.
inline std::vector<Arc> cut_arcs(const OrientedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> nbr(n);
    for (Arc a : g.arcs()) {
        nbr[a.tail].push_back(a.head);
        nbr[a.head].push_back(a.tail);
    }
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<Arc> bridges;
    int timer = 0;
    // Iterative DFS; (v, next-neighbour-index) frames.
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        stack.push_back({s, 0});
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < nbr[v].size()) {
                int w = nbr[v][i++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p])
                        bridges.push_back(g.has_arc(p, v) ? Arc{p, v} : Arc{v, p});
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

struct StructuralReport {
    std::vector<int> out_degree, in_degree, degree;
    std::vector<int> sources, sinks;
    int max_degree = 0;
    bool connected = true;
    int component_count = 0;
    std::vector<Arc> cut_arcs;
};

inline StructuralReport structural_queries(const OrientedGraph& g) {
    StructuralReport r;
    for (int v = 0; v < g.order(); ++v) {
        r.out_degree.push_back(g.out_degree(v));
        r.in_degree.push_back(g.in_degree(v));
        r.degree.push_back(g.degree(v));
    }
    r.sources = g.sources();
    r.sinks = g.sinks();
    r.max_degree = g.max_degree();
    auto comp = underlying_components(g);
    r.component_count = g.order() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    r.connected = r.component_count <= 1;
    r.cut_arcs = ocol::cut_arcs(g);
    return r;
}

// --- structural surgery -----------------------------------------------------

inline OrientedGraph remove_arc(const OrientedGraph& g, Arc a) {
    if (!g.has_arc(a.tail, a.head)) throw GraphError("arc to remove is absent");
    std::vector<Arc> arcs;
    for (Arc b : g.arcs())
        if (!(b == a)) arcs.push_back(b);
    return OrientedGraph(g.order(), std::move(arcs));
}

// Keeps the listed vertices (ascending) and renumbers densely; old_of maps
// new index -> old index.
inline OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<int>& keep,
                                      std::vector<int>* old_of = nullptr) {
    std::vector<int> newidx(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newidx[keep[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (Arc a : g.arcs())
        if (newidx[a.tail] >= 0 && newidx[a.head] >= 0)
            arcs.push_back({newidx[a.tail], newidx[a.head]});
    if (old_of) *old_of = keep;
    return OrientedGraph(static_cast<int>(keep.size()), std::move(arcs));
}

inline OrientedGraph disjoint_union(const OrientedGraph& a, const OrientedGraph& b) {
    std::vector<Arc> arcs = a.arcs();
    for (Arc x : b.arcs()) arcs.push_back({x.tail + a.order(), x.head + a.order()});
    return OrientedGraph(a.order() + b.order(), std::move(arcs));
}

// Replaces arc a by the 2-dipath tail -> new vertex -> head.
inline OrientedGraph subdivide_arc(const OrientedGraph& g, Arc a) {
    if (!g.has_arc(a.tail, a.head)) throw GraphError("arc to subdivide is absent");
    std::vector<Arc> arcs;
    for (Arc b : g.arcs())
        if (!(b == a)) arcs.push_back(b);
    int mid = g.order();
    arcs.push_back({a.tail, mid});
    arcs.push_back({mid, a.head});
    return OrientedGraph(g.order() + 1, std::move(arcs));
}

inline OrientedGraph add_arcs(const OrientedGraph& g, const std::vector<Arc>& extra, int new_order = -1) {
    std::vector<Arc> arcs = g.arcs();
    arcs.insert(arcs.end(), extra.begin(), extra.end());
    return OrientedGraph(new_order < 0 ? g.order() : new_order, std::move(arcs));
}

inline bool properly_subcubic(const OrientedGraph& g) {
    if (g.order() == 0) return false;
    bool low = false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 3) return false;
        if (g.degree(v) < 3) low = true;
    }
    return low;
}

inline bool properly_subquartic(const OrientedGraph& g) {
    if (g.order() == 0) return false;
    bool low = false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 4) return false;
        if (g.degree(v) < 4) low = true;
    }
    return low;
}

} // namespace ocol
