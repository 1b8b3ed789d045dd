// Paley (quadratic residue) tournaments QR_q and the structural property
// checks the colouring results lean on: Property P_{i,j}, transitivity and
// self-converseness certificates, arc neighbourhood profiles, and dominated
// arc pairs.
#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ocol/canonical.hpp"
#include "ocol/digraph.hpp"

namespace ocol {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

struct PaleyTournament {
    int q = 0;
    std::vector<int> residues; // non-zero quadratic residues mod q, sorted
    OrientedGraph graph;

    bool is_residue(int x) const {
        x %= q;
        if (x < 0) x += q;
        return std::binary_search(residues.begin(), residues.end(), x);
    }
};

inline PaleyTournament paley_tournament(int q) {
    if (!is_prime(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not prime");
    if (q % 4 != 3)
        throw std::invalid_argument("q = " + std::to_string(q) +
                                    " is not 3 (mod 4); the arc relation would be symmetric");
    PaleyTournament t;
    t.q = q;
    std::vector<char> mark(q, 0);
    for (int x = 1; x < q; ++x) mark[static_cast<int>((static_cast<long long>(x) * x) % q)] = 1;
    for (int r = 1; r < q; ++r)
        if (mark[r]) t.residues.push_back(r);
    std::vector<Arc> arcs;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (i != j && mark[(j - i + q) % q]) arcs.push_back({i, j});
    t.graph = OrientedGraph(q, std::move(arcs));
    return t;
}

// --- Property P_{i,j} -------------------------------------------------------

struct PijCounterexample {
    std::vector<int> subset;  // x_1 < ... < x_i
    std::uint32_t signs = 0;  // bit r set = '-', clear = '+'
    int solutions = 0;        // how many y satisfied it (< j)
};

struct PijReport {
    int i = 0, j = 0;
    bool holds = false;
    std::uint64_t combinations = 0; // (subset, sign vector) pairs checked
    std::optional<PijCounterexample> counterexample;

    std::string sign_string() const {
        std::string s;
        if (!counterexample) return s;
        for (int r = 0; r < i; ++r) s += ((counterexample->signs >> r) & 1) ? '-' : '+';
        return s;
    }
};

namespace detail {

// Scans all i-subsets with leading vertex `first`; returns the first failing
// (subset, signs) in lexicographic order, if any.
inline std::optional<PijCounterexample> pij_scan_leading(const OrientedGraph& t, int i, int j, int first,
                                                         std::uint64_t* combinations) {
    const int n = t.order();
    const int w = t.words();
    std::vector<int> subset(i);
    subset[0] = first;
    std::vector<std::uint64_t> cand(w);
    std::uint64_t combos = 0;

    // Iterative lexicographic combinations with fixed first element.
    int depth = 1;
    if (i == 1) depth = 0; // degenerate: the subset is just {first}
    std::vector<int> cursor(i, 0);
    if (i > 1) cursor[1] = first + 1;

    std::optional<PijCounterexample> failure;
    auto check_subset = [&]() -> bool {
        for (std::uint32_t signs = 0; signs < (1u << i); ++signs) {
            ++combos;
            for (int k = 0; k < w; ++k) cand[k] = ~std::uint64_t{0};
            for (int r = 0; r < i; ++r) {
                const std::uint64_t* row = ((signs >> r) & 1) ? t.out_row(subset[r]) : t.in_row(subset[r]);
                bits::and_assign(cand.data(), row, w);
            }
            int found = bits::count(cand.data(), w);
            if (found < j) {
                failure = PijCounterexample{subset, signs, found};
                return true;
            }
        }
        return false;
    };

    if (i == 1) {
        check_subset();
        *combinations += combos;
        return failure;
    }

    while (depth >= 1) {
        if (depth == i) {
            if (check_subset()) break;
            --depth;
            continue;
        }
        if (cursor[depth] >= n) {
            --depth;
            continue;
        }
        subset[depth] = cursor[depth]++;
        ++depth;
        if (depth < i) cursor[depth] = subset[depth - 1] + 1;
    }
    *combinations += combos;
    return failure;
}

} // namespace detail

// Exhaustive verification that every i-subset with every sign vector is
// dominated by at least j vertices; the tail of candidates is a bitset
// intersection of i neighbourhood rows.
inline PijReport check_property_pij(const OrientedGraph& t, int i, int j, int threads = 1) {
    if (i < 1 || i >= t.order()) throw std::invalid_argument("need 1 <= i < order");
    if (j < 1) throw std::invalid_argument("need j >= 1");
    if (i > 30) throw std::invalid_argument("i too large");
    PijReport r;
    r.i = i;
    r.j = j;
    const int n = t.order();
    std::vector<std::optional<PijCounterexample>> per_leading(n);
    std::vector<std::uint64_t> combos(n, 0);

    auto work = [&](int first) {
        per_leading[first] = detail::pij_scan_leading(t, i, j, first, &combos[first]);
    };
    if (threads <= 1) {
        for (int first = 0; first + i <= n; ++first) work(first);
    } else {
        std::vector<std::thread> pool;
        std::mutex mtx;
        int cursor = 0;
        const int limit = n - i + 1;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back([&]() {
                while (true) {
                    int mine;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (cursor >= limit) return;
                        mine = cursor++;
                    }
                    work(mine);
                }
            });
        for (auto& th : pool) th.join();
    }

    r.holds = true;
    for (int first = 0; first < n; ++first) {
        r.combinations += combos[first];
        if (r.holds && per_leading[first]) {
            r.holds = false;
            r.counterexample = per_leading[first];
        }
    }
    return r;
}

// --- symmetry ---------------------------------------------------------------

struct SymmetryReport {
    enum class Method { exhaustive, paley_certificate, undecided };
    Method method = Method::undecided;
    bool vertex_transitive = false;
    bool arc_transitive = false;
    bool self_converse = false;
    int vertex_orbits = 0;
    int arc_orbits = 0;
    std::uint64_t automorphisms = 0;       // exhaustive branch only
    std::vector<int> converse_witness;     // permutation reversing every arc
    std::string note;
};

namespace detail {

inline int orbit_count(int n, const std::vector<std::vector<int>>& images) {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& img : images)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(img[v]);
            if (a != b) parent[a] = b;
        }
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++c;
    return c;
}

} // namespace detail

inline SymmetryReport symmetry_report(const OrientedGraph& t) {
    if (!t.is_tournament()) throw std::invalid_argument("symmetry report requires a tournament");
    const int n = t.order();
    SymmetryReport r;

    if (n <= 9) {
        r.method = SymmetryReport::Method::exhaustive;
        auto autos = collect_automorphisms(t);
        r.automorphisms = autos.size();
        r.vertex_orbits = detail::orbit_count(n, autos);
        r.vertex_transitive = r.vertex_orbits == 1;
        // Arc orbits under the full automorphism group.
        std::vector<Arc> arcs = t.arcs();
        auto arc_id = [&](Arc a) {
            return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
        };
        std::vector<std::vector<int>> arc_images;
        for (const auto& p : autos) {
            std::vector<int> img(arcs.size());
            for (std::size_t e = 0; e < arcs.size(); ++e)
                img[e] = arc_id({p[arcs[e].tail], p[arcs[e].head]});
            arc_images.push_back(std::move(img));
        }
        r.arc_orbits = detail::orbit_count(static_cast<int>(arcs.size()), arc_images);
        r.arc_transitive = r.arc_orbits == 1;
        auto iso = find_isomorphism(t, converse(t));
        r.self_converse = iso.has_value();
        if (iso) r.converse_witness = *iso;
        return r;
    }

    // Beyond order 9: only the Paley certificate path is offered.
    bool paley_like = is_prime(n) && n % 4 == 3;
    if (paley_like) {
        PaleyTournament p = paley_tournament(n);
        paley_like = p.graph == t;
        if (paley_like) {
            r.method = SymmetryReport::Method::paley_certificate;
            // Generators x -> x + a and x -> s x; verify each is an automorphism.
            std::vector<std::vector<int>> gens;
            for (int a = 1; a < n; ++a) {
                std::vector<int> img(n);
                for (int x = 0; x < n; ++x) img[x] = (x + a) % n;
                gens.push_back(std::move(img));
            }
            for (int s : p.residues) {
                std::vector<int> img(n);
                for (int x = 0; x < n; ++x) img[x] = static_cast<int>((static_cast<long long>(s) * x) % n);
                gens.push_back(std::move(img));
            }
            for (const auto& img : gens)
                for (Arc a : t.arcs())
                    if (!t.has_arc(img[a.tail], img[a.head]))
                        throw std::logic_error("algebraic map failed automorphism check");
            r.vertex_orbits = detail::orbit_count(n, gens);
            r.vertex_transitive = r.vertex_orbits == 1;
            std::vector<Arc> arcs = t.arcs();
            auto arc_id = [&](Arc a) {
                return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
            };
            std::vector<std::vector<int>> arc_images;
            for (const auto& pmap : gens) {
                std::vector<int> img(arcs.size());
                for (std::size_t e = 0; e < arcs.size(); ++e)
                    img[e] = arc_id({pmap[arcs[e].tail], pmap[arcs[e].head]});
                arc_images.push_back(std::move(img));
            }
            r.arc_orbits = detail::orbit_count(static_cast<int>(arcs.size()), arc_images);
            r.arc_transitive = r.arc_orbits == 1;
            // x -> -x reverses every arc because -1 is a non-residue mod q = 3 (mod 4).
            std::vector<int> neg(n);
            for (int x = 0; x < n; ++x) neg[x] = (n - x) % n;
            bool reverses = true;
            for (Arc a : t.arcs())
                if (!t.has_arc(neg[a.head], neg[a.tail])) reverses = false;
            r.self_converse = reverses;
            if (reverses) r.converse_witness = neg;
            if (!reverses) throw std::logic_error("negation map failed converse check");
            return r;
        }
    }
    r.method = SymmetryReport::Method::undecided;
    r.note = "order > 9 and not a Paley tournament: undecided by this tool";
    return r;
}

// --- per-arc neighbourhood counts (Property 5 shape) ------------------------

struct ArcProfile {
    int common_out = 0;    // out-neighbours of both ends
    int common_in = 0;     // in-neighbours of both ends
    int forward_mid = 0;   // out of tail, in of head (midpoints tail->.->head)
    int backward_mid = 0;  // in of tail, out of head (midpoints head->.->tail)
    friend bool operator==(const ArcProfile&, const ArcProfile&) = default;
};

inline ArcProfile arc_neighbourhood_profile(const OrientedGraph& t, Arc a) {
    if (!t.has_arc(a.tail, a.head)) throw std::invalid_argument("arc absent from tournament");
    const int w = t.words();
    std::vector<std::uint64_t> tmp(w);
    auto meet = [&](const std::uint64_t* x, const std::uint64_t* y) {
        bits::assign(tmp.data(), x, w);
        bits::and_assign(tmp.data(), y, w);
        return bits::count(tmp.data(), w);
    };
    ArcProfile p;
    p.common_out = meet(t.out_row(a.tail), t.out_row(a.head));
    p.common_in = meet(t.in_row(a.tail), t.in_row(a.head));
    p.forward_mid = meet(t.out_row(a.tail), t.in_row(a.head));
    p.backward_mid = meet(t.in_row(a.tail), t.out_row(a.head));
    return p;
}

// --- Property 4: arcs dominated by a vertex ---------------------------------

struct DominatedArcReport {
    // Parts (1)-(3): a pair of distinct arcs inside N+(x), inside N-(x),
    // and one arc in each.
    bool out_pair = false, in_pair = false, mixed_pair = false;
    std::vector<Arc> out_witness, in_witness, mixed_witness;
    bool all() const { return out_pair && in_pair && mixed_pair; }
};

inline DominatedArcReport dominated_arc_pairs(const OrientedGraph& t, int x) {
    if (x < 0 || x >= t.order()) throw std::invalid_argument("vertex out of range");
    std::vector<Arc> inside_out, inside_in;
    for (Arc a : t.arcs()) {
        if (t.has_arc(x, a.tail) && t.has_arc(x, a.head)) inside_out.push_back(a);
        if (t.has_arc(a.tail, x) && t.has_arc(a.head, x)) inside_in.push_back(a);
    }
    DominatedArcReport r;
    if (inside_out.size() >= 2) {
        r.out_pair = true;
        r.out_witness = {inside_out[0], inside_out[1]};
    }
    if (inside_in.size() >= 2) {
        r.in_pair = true;
        r.in_witness = {inside_in[0], inside_in[1]};
    }
    if (!inside_out.empty() && !inside_in.empty()) {
        r.mixed_pair = true;
        r.mixed_witness = {inside_out[0], inside_in[0]};
    }
    return r;
}

} // namespace ocol
