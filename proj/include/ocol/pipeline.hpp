// Constructive colouring algorithms built on the QR_7 / QR_67 universality
// results: oriented <= 9-colourings of connected subcubic orientations
// (<= 8 with a source or sink), <= 69-colourings of subquartic orientations,
// and the closed-form degree bounds.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ocol/colouring.hpp"
#include "ocol/digraph.hpp"
#include "ocol/hom.hpp"
#include "ocol/paley.hpp"

namespace ocol {

struct ColouringCertificate {
    Colouring colouring;
    std::string method;              // direct-QR7 | source-peel | sink-peel | arc-removal-QR7 |
                                     // direct-QR67 | component-QR67-arc-removal
    int guaranteed_palette = 0;      // the bound the method promises
    std::optional<Arc> removed_arc;
    std::vector<int> peeled;         // sources (or sinks) given the extra colour
    std::vector<int> hom_witness;    // map of the solved remainder, original indexing, -1 elsewhere
};

struct PipelineOptions {
    std::uint64_t direct_budget = 20000; // node cap for the opportunistic direct attempt
    int threads = 1;
};

namespace detail {

inline const OrientedGraph& qr7() {
    static const OrientedGraph g = paley_tournament(7).graph;
    return g;
}
inline const OrientedGraph& qr67() {
    static const OrientedGraph g = paley_tournament(67).graph;
    return g;
}

inline void require_no_out3_adjacent_in3(const OrientedGraph& g, const char* where) {
    for (Arc a : g.arcs())
        if ((g.out_degree(a.tail) == 3 && g.in_degree(a.head) == 3) ||
            (g.out_degree(a.head) == 3 && g.in_degree(a.tail) == 3))
            throw std::logic_error(std::string(where) +
                                   ": an out-degree-3 vertex is adjacent to an in-degree-3 vertex");
}

inline std::vector<int> solve_or_die(const OrientedGraph& g, const OrientedGraph& target, int threads,
                                     const char* what) {
    HomOptions opts;
    opts.fix_first_vertex = true; // Paley targets are vertex transitive
    opts.threads = threads;
    SolverOutcome out = find_homomorphism(g, target, nullptr, opts);
    if (out.verdict != HomVerdict::found)
        throw std::logic_error(std::string(what) + ": guaranteed homomorphism not found");
    return out.witness;
}

// Peel every source, map the rest to QR_7, give the sources colour 7.
inline ColouringCertificate source_peel(const OrientedGraph& g, const PipelineOptions& opts) {
    std::vector<int> srcs = g.sources();
    std::vector<char> is_src(g.order(), 0);
    for (int s : srcs) is_src[s] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (!is_src[v]) keep.push_back(v);
    OrientedGraph rest = induced_subgraph(g, keep);
    // Degree argument: peeling all sources leaves no out-degree-3 vertex.
    require_no_out3_adjacent_in3(rest, "source-peel");
    std::vector<int> witness = solve_or_die(rest, qr7(), opts.threads, "source-peel");
    std::vector<int> colours(g.order(), 7);
    std::vector<int> full_witness(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        colours[keep[i]] = witness[i];
        full_witness[keep[i]] = witness[i];
    }
    ColouringCertificate cert;
    cert.colouring = make_colouring(std::move(colours), 8);
    cert.method = "source-peel";
    cert.guaranteed_palette = 8;
    cert.peeled = srcs;
    cert.hom_witness = full_witness;
    return cert;
}

} // namespace detail

// Strategy ladder for a connected subcubic orientation; first success wins:
// direct QR_7 map (7 colours), source peel / sink peel (8), else remove one
// arc and spend colours 7 and 8 on its ends (9).
inline ColouringCertificate colour_subcubic(const OrientedGraph& g, const PipelineOptions& opts = {}) {
    if (g.max_degree() > 3) throw std::invalid_argument("maximum degree exceeds 3");
    if (!underlying_connected(g)) throw std::invalid_argument("subcubic colouring expects a connected input");

    ColouringCertificate cert;

    HomOptions direct;
    direct.fix_first_vertex = true;
    direct.node_budget = opts.direct_budget;
    direct.threads = opts.threads;
    SolverOutcome attempt = find_homomorphism(g, detail::qr7(), nullptr, direct);
    if (attempt.verdict == HomVerdict::found) {
        cert.colouring = make_colouring(attempt.witness, 7);
        cert.method = "direct-QR7";
        cert.guaranteed_palette = 7;
        cert.hom_witness = attempt.witness;
    } else if (!g.sources().empty()) {
        cert = detail::source_peel(g, opts);
    } else if (!g.sinks().empty()) {
        // One code path: peel the sources of the converse, transport back.
        ColouringCertificate conv_cert = detail::source_peel(converse(g), opts);
        cert = conv_cert;
        cert.method = "sink-peel";
    } else {
        // No source and no sink: dropping any arc kills every potential
        // out-degree-3 or in-degree-3 vertex, so the universality theorem
        // applies to the remainder.
        Arc uv = g.arcs().front();
        OrientedGraph rest = remove_arc(g, uv);
        detail::require_no_out3_adjacent_in3(rest, "arc-removal");
        std::vector<int> witness = detail::solve_or_die(rest, detail::qr7(), opts.threads, "arc-removal");
        witness[uv.tail] = 7;
        witness[uv.head] = 8;
        cert.colouring = make_colouring(witness, 9);
        cert.method = "arc-removal-QR7";
        cert.guaranteed_palette = 9;
        cert.removed_arc = uv;
        cert.hom_witness = witness;
    }

    ValidityReport check = validate_oriented_colouring(g, cert.colouring);
    if (!check.valid()) throw std::logic_error("subcubic certificate failed validation: " + check.describe());
    return cert;
}

// Subquartic colouring: properly subquartic components map straight to QR_67;
// a single 4-regular component gives up one arc and colours its ends 67, 68.
inline ColouringCertificate colour_subquartic(const OrientedGraph& g, const PipelineOptions& opts = {}) {
    if (g.max_degree() > 4) throw std::invalid_argument("maximum degree exceeds 4");

    std::vector<int> comp = underlying_components(g);
    int ncomp = g.order() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    // A component is "bad" when 4-regular: the QR_67 universality lemma needs
    // some vertex of degree < 4.
    std::vector<int> bad;
    for (int c = 0; c < ncomp; ++c) {
        bool regular4 = true;
        bool nonempty = false;
        for (int v = 0; v < g.order(); ++v)
            if (comp[v] == c) {
                nonempty = true;
                if (g.degree(v) != 4) regular4 = false;
            }
        if (nonempty && regular4) bad.push_back(c);
    }
    if (bad.size() > 1)
        throw std::invalid_argument(
            "more than one 4-regular component: colours 67/68 cannot be shared soundly");

    OrientedGraph work = g;
    std::optional<Arc> removed;
    if (bad.size() == 1) {
        // Least arc at a degree-4 vertex; both ends drop to degree 3.
        for (Arc a : g.arcs())
            if (comp[a.tail] == bad[0] && (g.degree(a.tail) == 4 || g.degree(a.head) == 4)) {
                removed = a;
                break;
            }
        work = remove_arc(g, *removed);
    }

    std::vector<int> colours(g.order(), -1);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (comp[v] == c) keep.push_back(v);
        OrientedGraph sub = induced_subgraph(work, keep);
        if (!properly_subquartic(sub))
            throw std::logic_error("component still not properly subquartic after arc removal");
        std::vector<int> witness = detail::solve_or_die(sub, detail::qr67(), opts.threads, "subquartic");
        for (std::size_t i = 0; i < keep.size(); ++i) colours[keep[i]] = witness[i];
    }
    ColouringCertificate cert;
    cert.hom_witness = colours;
    if (removed) {
        colours[removed->tail] = 67;
        colours[removed->head] = 68;
        cert.method = "component-QR67-arc-removal";
        cert.guaranteed_palette = 69;
        cert.removed_arc = removed;
        cert.colouring = make_colouring(std::move(colours), 69);
    } else {
        cert.method = "direct-QR67";
        cert.guaranteed_palette = 67;
        cert.colouring = make_colouring(std::move(colours), 67);
    }

    ValidityReport check = validate_oriented_colouring(g, cert.colouring);
    if (!check.valid()) throw std::logic_error("subquartic certificate failed validation: " + check.describe());
    return cert;
}

// --- closed-form degree bounds ----------------------------------------------

struct BoundReport {
    int delta = 0;
    long long general = 0;                 // Delta^2 * 2^(Delta+1)
    std::optional<long long> acyclic_route; // k 2^(k-1) with k = 5 at Delta = 4
    std::optional<int> improved;            // 9 at Delta = 3, 69 at Delta = 4
    std::optional<int> lower_bound;         // 11 at Delta = 4
    std::optional<int> conjectured;         // 7 at Delta = 3
};

inline BoundReport theoretical_bounds(int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    BoundReport r;
    r.delta = delta;
    r.general = static_cast<long long>(delta) * delta * (1LL << (delta + 1));
    if (delta == 4) {
        r.acyclic_route = 5LL * (1LL << 4); // acyclic chromatic number 5, k 2^(k-1)
        r.improved = 69;
        r.lower_bound = 11;
    }
    if (delta == 3) {
        r.improved = 9;
        r.conjectured = 7;
    }
    return r;
}

} // namespace ocol
