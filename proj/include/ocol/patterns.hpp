// The forbidden-pattern machinery: the labelled Z family (none of whose
// members maps to QR_7), the derived R family, subgraph-embedding detection,
// and the order-reducing splice that preserves QR_7-mappability exactly.
//
// The catalog ships as embedded data; load re-verifies every structural
// invariant (non-mappability, closure under the relabelling operations,
// the identification rule, degree-3 source/sink presence), so a transcription
// slip cannot silently poison downstream results.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocol/canonical.hpp"
#include "ocol/dgf.hpp"
#include "ocol/digraph.hpp"
#include "ocol/hom.hpp"
#include "ocol/paley.hpp"

namespace ocol {

class CatalogError : public std::runtime_error {
public:
    explicit CatalogError(const std::string& what) : std::runtime_error("pattern catalog: " + what) {}
};

struct LabelledPattern {
    std::string name;
    OrientedGraph graph;
    std::map<std::string, int> roles; // z1..z6, r1, r2 -> vertex

    int role(const std::string& r) const {
        auto it = roles.find(r);
        if (it == roles.end()) throw std::invalid_argument("pattern " + name + " has no role " + r);
        return it->second;
    }
    bool has_role(const std::string& r) const { return roles.count(r) > 0; }
};

// Embedded catalog in the external block format: a name line, a roles line,
// then a DGF body. Vertex roles follow the z-labelling: z1 z2 carry the
// forced-distinct pair, z3 z4 the pair every QR_7 image must identify, and
// z4 -> z5 -> z3 is the 2-dipath that makes that identification impossible.
inline const char* kZCatalogText = R"(name: Z1
roles: z1=0 z2=1 z3=2 z4=3 z5=4
5 7
0 1
0 2
0 3
1 2
1 3
3 4
4 2

name: Z2
roles: z1=0 z2=1 z3=2 z4=3 z5=4
5 7
0 1
0 2
2 1
0 3
3 1
3 4
4 2

name: Z3
roles: z1=0 z2=1 z3=2 z4=3 z5=4 z6=5
6 8
0 5
5 1
2 0
2 1
3 0
3 1
3 4
4 2

name: Z1-converse
roles: z1=0 z2=1 z3=2 z4=3 z5=4
5 7
0 1
2 0
2 1
3 0
3 1
3 4
4 2
)";

struct PatternCatalog {
    std::vector<LabelledPattern> z_classes;   // Z1, Z2, Z3, Z1-converse
    std::vector<LabelledPattern> z_labelled;  // the 20 labelled members
    std::vector<LabelledPattern> r_family;    // derived: split z5 into r1, r2
};

enum class PatternFamily { Z, R };

struct PatternEmbedding {
    PatternFamily family = PatternFamily::Z;
    int pattern_index = -1;     // into z_classes or r_family
    std::string pattern_name;
    std::vector<int> map;       // pattern vertex -> host vertex, injective
};

namespace detail {

inline std::vector<LabelledPattern> parse_catalog_blocks(const std::string& text) {
    std::vector<LabelledPattern> out;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> block;
    auto flush = [&]() {
        if (block.empty()) return;
        if (block.size() < 3) throw CatalogError("block too short");
        if (block[0].rfind("name: ", 0) != 0) throw CatalogError("block missing name line");
        if (block[1].rfind("roles: ", 0) != 0) throw CatalogError("block missing roles line");
        LabelledPattern p;
        p.name = block[0].substr(6);
        std::istringstream roles(block[1].substr(7));
        std::string item;
        while (roles >> item) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw CatalogError("bad role item " + item);
            p.roles[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
        }
        std::string dgf;
        for (std::size_t i = 2; i < block.size(); ++i) dgf += block[i] + "\n";
        p.graph = parse_dgf(dgf);
        out.push_back(std::move(p));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.empty())
            flush();
        else
            block.push_back(line);
    }
    flush();
    return out;
}

inline LabelledPattern relabelled(const LabelledPattern& p, const std::string& suffix,
                                  const std::vector<Arc>& remove, const std::vector<Arc>& add) {
    std::vector<Arc> arcs;
    for (Arc a : p.graph.arcs()) {
        bool drop = false;
        for (Arc r : remove)
            if (a == r) drop = true;
        if (!drop) arcs.push_back(a);
    }
    for (Arc a : add) arcs.push_back(a);
    LabelledPattern q;
    q.name = p.name + suffix;
    q.roles = p.roles;
    q.graph = OrientedGraph(p.graph.order(), std::move(arcs));
    return q;
}

inline LabelledPattern converse_pattern(const LabelledPattern& p, const std::string& suffix) {
    LabelledPattern q;
    q.name = p.name + suffix;
    q.roles = p.roles;
    q.graph = converse(p.graph);
    return q;
}

// R construction: delete z5, add r1 -> z3 and z4 -> r2.
inline LabelledPattern build_r(const LabelledPattern& z) {
    int z5 = z.role("z5");
    std::vector<int> keep;
    for (int v = 0; v < z.graph.order(); ++v)
        if (v != z5) keep.push_back(v);
    OrientedGraph core = induced_subgraph(z.graph, keep);
    std::vector<int> newidx(z.graph.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newidx[keep[i]] = static_cast<int>(i);
    int r1 = core.order(), r2 = core.order() + 1;
    std::vector<Arc> arcs = core.arcs();
    arcs.push_back({r1, newidx[z.role("z3")]});
    arcs.push_back({newidx[z.role("z4")], r2});
    LabelledPattern p;
    p.name = "R(" + z.name + ")";
    p.graph = OrientedGraph(core.order() + 2, std::move(arcs));
    for (const auto& [role, v] : z.roles)
        if (role != "z5") p.roles[role] = newidx[v];
    p.roles["r1"] = r1;
    p.roles["r2"] = r2;
    return p;
}

// Identify r1 and r2 back into a single vertex; must reproduce the source Z.
inline OrientedGraph identify_r1_r2(const LabelledPattern& r) {
    int r1 = r.role("r1"), r2 = r.role("r2");
    int merged = std::min(r1, r2);
    std::vector<int> newidx(r.graph.order());
    int next = 0;
    for (int v = 0; v < r.graph.order(); ++v) {
        if (v == r1 || v == r2)
            newidx[v] = -1;
        else
            newidx[v] = next++;
    }
    int merged_new = next;
    for (int v = 0; v < r.graph.order(); ++v)
        if (newidx[v] < 0) newidx[v] = merged_new;
    (void)merged;
    std::vector<Arc> arcs;
    for (Arc a : r.graph.arcs()) arcs.push_back({newidx[a.tail], newidx[a.head]});
    return OrientedGraph(next + 1, std::move(arcs));
}

inline bool labelled_equal(const LabelledPattern& a, const LabelledPattern& b) {
    return a.graph == b.graph;
}

} // namespace detail

namespace detail {

inline PatternCatalog build_catalog() {
    PatternCatalog cat;
    cat.z_classes = parse_catalog_blocks(kZCatalogText);
    if (cat.z_classes.size() != 4) throw CatalogError("expected 4 base classes");
    const LabelledPattern& z1 = cat.z_classes[0];
    const LabelledPattern& z2 = cat.z_classes[1];
    const LabelledPattern& z3 = cat.z_classes[2];

    auto dipath_swap = [&](const LabelledPattern& p) {
        // Reverse the 2-dipath z4 -> z5 -> z3 (or its current direction).
        int a = p.role("z3"), b = p.role("z4"), m = p.role("z5");
        if (p.graph.has_arc(b, m))
            return relabelled(p, "'", {{b, m}, {m, a}}, {{a, m}, {m, b}});
        return relabelled(p, "'", {{a, m}, {m, b}}, {{b, m}, {m, a}});
    };
    auto star_z1 = [&](const LabelledPattern& p) {
        int a = p.role("z1"), b = p.role("z2");
        if (p.graph.has_arc(a, b)) return relabelled(p, "*", {{a, b}}, {{b, a}});
        return relabelled(p, "*", {{b, a}}, {{a, b}});
    };
    auto star_z3 = [&](const LabelledPattern& p) {
        int a = p.role("z1"), b = p.role("z2"), m = p.role("z6");
        if (p.graph.has_arc(a, m))
            return relabelled(p, "*", {{a, m}, {m, b}}, {{m, a}, {b, m}});
        return relabelled(p, "*", {{m, a}, {b, m}}, {{a, m}, {m, b}});
    };

    std::vector<LabelledPattern> base;
    base.push_back(z1);
    base.push_back(dipath_swap(z1));
    base.push_back(star_z1(z1));
    base.push_back(dipath_swap(star_z1(z1)));
    base.push_back(z2);
    base.push_back(dipath_swap(z2));
    base.push_back(z3);
    base.push_back(dipath_swap(z3));
    base.push_back(star_z3(z3));
    base.push_back(dipath_swap(star_z3(z3)));
    for (const auto& p : base) cat.z_labelled.push_back(p);
    for (const auto& p : base) cat.z_labelled.push_back(converse_pattern(p, " conv"));

    for (const auto& z : cat.z_classes) cat.r_family.push_back(build_r(z));
    return cat;
}

inline void verify_catalog(const PatternCatalog& cat) {
    const PaleyTournament qr7 = paley_tournament(7);

    // 20 labelled members, pairwise distinct as labelled graphs.
    if (cat.z_labelled.size() != 20) throw CatalogError("expected 20 labelled members");
    for (std::size_t a = 0; a < cat.z_labelled.size(); ++a)
        for (std::size_t b = a + 1; b < cat.z_labelled.size(); ++b)
            if (cat.z_labelled[a].graph.order() == cat.z_labelled[b].graph.order() &&
                labelled_equal(cat.z_labelled[a], cat.z_labelled[b]))
                throw CatalogError("labelled members coincide: " + cat.z_labelled[a].name + " and " +
                                   cat.z_labelled[b].name);

    // Every labelled member is isomorphic to one of the four classes.
    for (const auto& p : cat.z_labelled) {
        bool matched = false;
        for (const auto& c : cat.z_classes)
            if (p.graph.order() == c.graph.order() && isomorphic(p.graph, c.graph)) matched = true;
        if (!matched) throw CatalogError(p.name + " matches no class");
    }

    // Class-level facts: Z2 and Z3 self-converse, Z1 not; the fourth class is
    // the converse of Z1.
    const auto& z1 = cat.z_classes[0];
    const auto& z2 = cat.z_classes[1];
    const auto& z3 = cat.z_classes[2];
    const auto& z1c = cat.z_classes[3];
    if (isomorphic(z1.graph, converse(z1.graph))) throw CatalogError("Z1 should not be self-converse");
    if (!isomorphic(z2.graph, converse(z2.graph))) throw CatalogError("Z2 must be self-converse");
    if (!isomorphic(z3.graph, converse(z3.graph))) throw CatalogError("Z3 must be self-converse");
    if (!isomorphic(z1c.graph, converse(z1.graph))) throw CatalogError("fourth class must be converse(Z1)");
    if (isomorphic(z1.graph, z2.graph) || isomorphic(z1.graph, z1c.graph) ||
        isomorphic(z2.graph, z1c.graph))
        throw CatalogError("classes must be pairwise non-isomorphic");

    // Role structure: the 2-dipath z4 -> z5 -> z3; z6 only in Z3; the z1/z2
    // relation is an arc (or a 2-dipath through z6 in Z3).
    for (const auto& c : cat.z_classes) {
        if (!c.graph.has_arc(c.role("z4"), c.role("z5")) || !c.graph.has_arc(c.role("z5"), c.role("z3")))
            throw CatalogError(c.name + " lacks the z4 -> z5 -> z3 dipath");
        bool has_z6 = c.has_role("z6");
        if (has_z6 != (c.name == "Z3")) throw CatalogError("z6 must exist exactly in Z3");
        if (has_z6) {
            if (!c.graph.has_arc(c.role("z1"), c.role("z6")) || !c.graph.has_arc(c.role("z6"), c.role("z2")))
                throw CatalogError("Z3 lacks the z1 -> z6 -> z2 dipath");
        } else if (!c.graph.adjacent(c.role("z1"), c.role("z2"))) {
            throw CatalogError(c.name + " lacks the z1 z2 arc");
        }
    }

    // None of the classes maps to QR_7; that is the whole point of the family.
    for (const auto& c : cat.z_classes) {
        SolverOutcome out = find_homomorphism(c.graph, qr7.graph);
        if (out.verdict != HomVerdict::exhausted)
            throw CatalogError(c.name + " unexpectedly maps to QR_7");
    }

    // Each class contains a vertex of out-degree three adjacent to a vertex of
    // in-degree three (the hypothesis the reduced-graph theorem relies on).
    for (const auto& c : cat.z_classes) {
        bool ok = false;
        for (Arc a : c.graph.arcs())
            if ((c.graph.out_degree(a.tail) == 3 && c.graph.in_degree(a.head) == 3) ||
                (c.graph.out_degree(a.head) == 3 && c.graph.in_degree(a.tail) == 3))
                ok = true;
        if (!ok) throw CatalogError(c.name + " lacks an out-3 vertex adjacent to an in-3 vertex");
    }

    // Subdividing the z1 z2 arc of Z1 yields (the converse of) Z3.
    {
        OrientedGraph sub = subdivide_arc(z1.graph, {z1.role("z1"), z1.role("z2")});
        if (!isomorphic(sub, converse(z3.graph)) || !isomorphic(sub, z3.graph))
            throw CatalogError("subdividing z1 z2 of Z1 must give converse(Z3)");
    }

    // R family: identification reproduces the source class; every member has a
    // degree-3 source or sink; r1 feeds z3 and z4 feeds r2.
    if (cat.r_family.size() != 4) throw CatalogError("expected 4 R patterns");
    for (std::size_t i = 0; i < cat.r_family.size(); ++i) {
        const auto& r = cat.r_family[i];
        if (!isomorphic(detail::identify_r1_r2(r), cat.z_classes[i].graph))
            throw CatalogError(r.name + ": identifying r1, r2 does not reproduce its source");
        bool has = false;
        for (int v = 0; v < r.graph.order(); ++v) {
            if (r.graph.degree(v) != 3) continue;
            if (r.graph.in_degree(v) == 0 || r.graph.out_degree(v) == 0) has = true;
        }
        if (!has) throw CatalogError(r.name + " lacks a degree-3 source or sink");
        if (!r.graph.has_arc(r.role("r1"), r.role("z3")) || !r.graph.has_arc(r.role("z4"), r.role("r2")))
            throw CatalogError(r.name + " lacks the r1 -> z3 / z4 -> r2 arcs");
    }
}

} // namespace detail

inline const PatternCatalog& pattern_catalog() {
    static const PatternCatalog cat = [] {
        PatternCatalog c = detail::build_catalog();
        detail::verify_catalog(c);
        return c;
    }();
    return cat;
}

// --- subgraph-pattern detection ---------------------------------------------

namespace detail {

// Complete subgraph-embedding search (injective, arc-preserving, extra host
// arcs allowed). Pattern vertices assigned in index order, host candidates in
// ascending order: embeddings come out in a reproducible order.
inline std::optional<std::vector<int>> embed_pattern(const OrientedGraph& pattern, const OrientedGraph& host) {
    const int pn = pattern.order();
    if (pn > host.order()) return std::nullopt;
    std::vector<int> map(pn, -1);
    std::vector<char> used(host.order(), 0);
    std::vector<int> cand_at(pn + 1, 0);
    int depth = 0;
    auto feasible = [&](int pv, int hv) {
        if (pattern.out_degree(pv) > host.out_degree(hv)) return false;
        if (pattern.in_degree(pv) > host.in_degree(hv)) return false;
        for (int w : pattern.out(pv))
            if (w < depth && !host.has_arc(hv, map[w])) return false;
        for (int w : pattern.in(pv))
            if (w < depth && !host.has_arc(map[w], hv)) return false;
        return true;
    };
    while (true) {
        if (depth == pn) return map;
        bool advanced = false;
        for (int hv = cand_at[depth]; hv < host.order(); ++hv) {
            if (used[hv]) continue;
            if (!feasible(depth, hv)) continue;
            map[depth] = hv;
            used[hv] = 1;
            cand_at[depth] = hv + 1;
            ++depth;
            cand_at[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return std::nullopt;
        --depth;
        used[map[depth]] = 0;
        map[depth] = -1;
    }
}

} // namespace detail

inline std::optional<PatternEmbedding> find_pattern(const OrientedGraph& g, PatternFamily family) {
    const PatternCatalog& cat = pattern_catalog();
    const auto& list = family == PatternFamily::Z ? cat.z_classes : cat.r_family;
    for (std::size_t i = 0; i < list.size(); ++i) {
        auto map = detail::embed_pattern(list[i].graph, g);
        if (map) {
            PatternEmbedding emb;
            emb.family = family;
            emb.pattern_index = static_cast<int>(i);
            emb.pattern_name = list[i].name;
            emb.map = *map;
            return emb;
        }
    }
    return std::nullopt;
}

// --- the Reduction ----------------------------------------------------------

struct ReductionStep {
    std::string pattern;
    std::vector<std::pair<std::string, int>> role_hosts; // role -> host vertex (pre-reduction indices)
    int order_before = 0;
    int order_after = 0;
};

inline void check_embedding(const OrientedGraph& g, const PatternEmbedding& emb) {
    const PatternCatalog& cat = pattern_catalog();
    const auto& list = emb.family == PatternFamily::Z ? cat.z_classes : cat.r_family;
    if (emb.pattern_index < 0 || emb.pattern_index >= static_cast<int>(list.size()))
        throw std::invalid_argument("embedding refers to no catalog pattern");
    const OrientedGraph& p = list[emb.pattern_index].graph;
    if (static_cast<int>(emb.map.size()) != p.order()) throw std::invalid_argument("embedding map size mismatch");
    std::vector<char> used(g.order(), 0);
    for (int hv : emb.map) {
        if (hv < 0 || hv >= g.order()) throw std::invalid_argument("embedding image out of range");
        if (used[hv]) throw std::invalid_argument("embedding not injective");
        used[hv] = 1;
    }
    for (Arc a : p.arcs())
        if (!g.has_arc(emb.map[a.tail], emb.map[a.head]))
            throw std::invalid_argument("embedding does not preserve arcs");
}

// Applies the reduction at an R-embedding: delete the hosts of z1..z4 and (if
// present) z6, then splice in a fresh vertex r with arcs r1 -> r -> r2.
inline OrientedGraph reduce_once(const OrientedGraph& g, const PatternEmbedding& emb,
                                 ReductionStep* step = nullptr) {
    if (emb.family != PatternFamily::R) throw std::invalid_argument("reduction requires an R-embedding");
    if (!properly_subcubic(g)) throw std::invalid_argument("reduction is defined for properly subcubic graphs");
    check_embedding(g, emb);
    const LabelledPattern& pat = pattern_catalog().r_family[emb.pattern_index];

    std::vector<char> drop(g.order(), 0);
    for (const char* role : {"z1", "z2", "z3", "z4", "z6"})
        if (pat.has_role(role)) drop[emb.map[pat.role(role)]] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (!drop[v]) keep.push_back(v);
    std::vector<int> newidx(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newidx[keep[i]] = static_cast<int>(i);

    std::vector<Arc> arcs;
    for (Arc a : g.arcs())
        if (newidx[a.tail] >= 0 && newidx[a.head] >= 0) arcs.push_back({newidx[a.tail], newidx[a.head]});
    int r = static_cast<int>(keep.size());
    arcs.push_back({newidx[emb.map[pat.role("r1")]], r});
    arcs.push_back({r, newidx[emb.map[pat.role("r2")]]});
    OrientedGraph reduced(r + 1, std::move(arcs));
    if (!properly_subcubic(reduced)) throw std::logic_error("reduction left a non-properly-subcubic graph");

    if (step) {
        step->pattern = pat.name;
        step->role_hosts.clear();
        for (const auto& [role, pv] : pat.roles) step->role_hosts.push_back({role, emb.map[pv]});
        step->order_before = g.order();
        step->order_after = reduced.order();
    }
    return reduced;
}

// Applies reductions until none is possible; terminates because the order
// strictly decreases.
inline std::pair<OrientedGraph, std::vector<ReductionStep>> reduce_fully(const OrientedGraph& g) {
    if (!properly_subcubic(g)) throw std::invalid_argument("reduction is defined for properly subcubic graphs");
    OrientedGraph cur = g;
    std::vector<ReductionStep> steps;
    while (true) {
        auto emb = find_pattern(cur, PatternFamily::R);
        if (!emb) break;
        ReductionStep step;
        cur = reduce_once(cur, *emb, &step);
        steps.push_back(std::move(step));
    }
    return {cur, steps};
}

inline bool is_reduced(const OrientedGraph& g) { return !find_pattern(g, PatternFamily::R).has_value(); }

} // namespace ocol
