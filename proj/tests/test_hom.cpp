#include "doctest.h"

#include <set>

#include "ocol/canonical.hpp"
#include "ocol/chromatic.hpp"
#include "ocol/hom.hpp"
#include "ocol/paley.hpp"
#include "support/corpus.hpp"

using namespace ocol;

namespace {
const OrientedGraph& qr7() {
    static OrientedGraph g = paley_tournament(7).graph;
    return g;
}
} // namespace

TEST_SUITE_BEGIN("hom");

TEST_CASE("three-cycle maps to QR_7, transitive 4-tournament does not") {
    CHECK(find_homomorphism(corpus::directed_cycle(3), qr7()).verdict == HomVerdict::found);
    CHECK(find_homomorphism(corpus::transitive_tournament(4), qr7()).verdict == HomVerdict::exhausted);

    auto t4 = enumerate_tournaments(4);
    int mapped = 0, failed = 0;
    for (const auto& t : t4.members) {
        bool transitive = isomorphic(t, corpus::transitive_tournament(4));
        auto out = find_homomorphism(t, qr7());
        if (out.verdict == HomVerdict::found) {
            CHECK_FALSE(transitive);
            ++mapped;
        } else {
            CHECK(transitive);
            ++failed;
        }
    }
    CHECK(mapped == 3); // every non-transitive 4-tournament maps
    CHECK(failed == 1);
}

TEST_CASE("solver verdicts agree with the brute-force oracle") {
    RngStream rng(37);
    for (int t = 0; t < 120; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(1, 5), rng.range(20, 90), rng);
        OrientedGraph h = corpus::random_oriented(rng.range(1, 4), rng.range(20, 90), rng);
        bool oracle = corpus::brute_hom_exists(g, h);
        auto out = find_homomorphism(g, h);
        CHECK((out.verdict == HomVerdict::found) == oracle);
        if (out.verdict == HomVerdict::found)
            for (Arc a : g.arcs()) CHECK(h.has_arc(out.witness[a.tail], out.witness[a.head]));
    }
}

TEST_CASE("seed maps are honoured and validated") {
    OrientedGraph p = corpus::dipath(2);
    PartialMap seed = PartialMap::empty(3);
    seed.image[0] = 0;
    auto out = find_homomorphism(p, qr7(), &seed);
    REQUIRE(out.verdict == HomVerdict::found);
    CHECK(out.witness[0] == 0);

    PartialMap bad = PartialMap::empty(3);
    bad.image[0] = 0;
    bad.image[1] = 3; // 0 -> 3 is not an arc of QR_7 (3 is not a residue)
    CHECK_THROWS_AS(find_homomorphism(p, qr7(), &bad), std::invalid_argument);
}

TEST_CASE("fix-first-vertex and root-split agree with the plain search") {
    RngStream rng(41);
    for (int t = 0; t < 40; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(2, 7), 45, rng);
        auto plain = find_homomorphism(g, qr7());
        HomOptions fixed;
        fixed.fix_first_vertex = true; // QR_7 is vertex transitive
        CHECK(find_homomorphism(g, qr7(), nullptr, fixed).verdict == plain.verdict);
        HomOptions split;
        split.threads = 3;
        auto par = find_homomorphism(g, qr7(), nullptr, split);
        CHECK(par.verdict == plain.verdict);
        if (plain.verdict == HomVerdict::found) CHECK(par.witness == plain.witness);
    }
}

TEST_CASE("budgeted search never reports exhausted spuriously") {
    OrientedGraph z1 = pattern_catalog().z_classes[0].graph;
    HomOptions tiny;
    tiny.node_budget = 3;
    auto out = find_homomorphism(z1, qr7(), nullptr, tiny);
    CHECK(out.verdict == HomVerdict::budget_exceeded);
    auto full = find_homomorphism(z1, qr7());
    CHECK(full.verdict == HomVerdict::exhausted);
}

TEST_CASE("converse duality") {
    RngStream rng(43);
    for (int t = 0; t < 40; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(1, 6), 50, rng);
        OrientedGraph h = corpus::random_oriented(rng.range(1, 4), 60, rng);
        auto fwd = find_homomorphism(g, h);
        auto bwd = find_homomorphism(converse(g), converse(h));
        CHECK(fwd.verdict == bwd.verdict);
    }
}

TEST_CASE("subdivision closure: replacing an arc by a 2-dipath keeps QR_7 maps") {
    RngStream rng(47);
    int exercised = 0;
    for (int t = 0; t < 80 && exercised < 30; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(2, 7), 50, rng);
        if (g.arc_count() == 0) continue;
        if (find_homomorphism(g, qr7()).verdict != HomVerdict::found) continue;
        Arc a = g.arcs()[rng.below(g.arc_count())];
        OrientedGraph star = subdivide_arc(g, a);
        CHECK(find_homomorphism(star, qr7()).verdict == HomVerdict::found);
        ++exercised;
    }
    CHECK(exercised >= 10);
}

TEST_CASE("cut-arc composition for QR_7 targets") {
    RngStream rng(53);
    int exercised = 0;
    for (int t = 0; t < 60 && exercised < 20; ++t) {
        OrientedGraph a = corpus::random_oriented(rng.range(2, 5), 55, rng);
        OrientedGraph b = corpus::random_oriented(rng.range(2, 5), 55, rng);
        OrientedGraph join = disjoint_union(a, b);
        // bridge arc a:0 -> b:0; it is a cut arc of the union
        OrientedGraph g = add_arcs(join, {{0, a.order()}});
        auto cuts = cut_arcs(g);
        if (std::find(cuts.begin(), cuts.end(), Arc{0, a.order()}) == cuts.end()) continue;
        bool whole = find_homomorphism(g, qr7()).verdict == HomVerdict::found;
        bool left = find_homomorphism(a, qr7()).verdict == HomVerdict::found;
        bool right = find_homomorphism(b, qr7()).verdict == HomVerdict::found;
        CHECK(whole == (left && right));
        ++exercised;
    }
    CHECK(exercised >= 10);
}

TEST_CASE("chi_o spot values") {
    CHECK(oriented_chromatic_number(corpus::dipath(2)).chi == 3);
    CHECK(oriented_chromatic_number(corpus::bipartite_construction(2)).chi == 4);
    CHECK(oriented_chromatic_number(corpus::directed_cycle(5)).chi == 5);
    CHECK(oriented_chromatic_number(OrientedGraph(0, {})).chi == 0);
    CHECK(oriented_chromatic_number(OrientedGraph(3, {})).chi == 1);
    // k_max exceeded
    CHECK(oriented_chromatic_number(corpus::directed_cycle(5), 4).exceeded());
}

TEST_CASE("chi_o of the directed 5-cycle against a naive oracle") {
    // Oracle: complete map enumeration over all labelled tournaments on k
    // vertices, k = 1..5.
    OrientedGraph c5 = corpus::directed_cycle(5);
    auto tournaments_on = [](int k) {
        std::vector<OrientedGraph> out;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<Arc> arcs;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                auto [i, j] = pairs[e];
                arcs.push_back(((mask >> e) & 1) ? Arc{j, i} : Arc{i, j});
            }
            out.push_back(OrientedGraph(k, std::move(arcs)));
        }
        return out;
    };
    int oracle_chi = 0;
    for (int k = 1; k <= 5 && oracle_chi == 0; ++k)
        for (const auto& t : tournaments_on(k))
            if (corpus::brute_hom_exists(c5, t)) {
                oracle_chi = k;
                break;
            }
    CHECK(oracle_chi == 5);
    CHECK(oriented_chromatic_number(c5).chi == oracle_chi);
}

TEST_CASE("chi_o equals order exactly on weak diameter <= 2, order <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_oriented_graphs(n)) {
            auto wd = weak_diameter(g);
            bool oclique = wd.has_value() && *wd <= 2;
            CHECK((oriented_chromatic_number(g).chi == n) == oclique);
        }
}

TEST_SUITE_END();
