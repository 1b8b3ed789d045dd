#include "doctest.h"

#include <set>

#include "ocol/canonical.hpp"
#include "ocol/chromatic.hpp"
#include "ocol/enumerate.hpp"
#include "support/corpus.hpp"

using namespace ocol;

namespace {

// Naive tournament count: all 2^C(n,2) labelled tournaments, dedup by code.
std::size_t naive_tournament_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::set<CanonCode> codes;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            auto [i, j] = pairs[e];
            if ((mask >> e) & 1)
                arcs.push_back({j, i});
            else
                arcs.push_back({i, j});
        }
        codes.insert(canonical_code(OrientedGraph(n, std::move(arcs))));
    }
    return codes.size();
}

// Naive count of max-degree-bounded undirected graphs up to isomorphism.
std::size_t naive_underlying_count(int n, int max_degree) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::set<CanonCode> codes;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1) edges.push_back(pairs[e]);
        SmallDigraph s = SmallDigraph::of_undirected(n, edges);
        bool ok = true;
        for (int v = 0; v < n; ++v)
            if (std::popcount(static_cast<unsigned>(s.out[v])) > max_degree) ok = false;
        if (!ok) continue;
        codes.insert(canonical_code(s));
    }
    return codes.size();
}

} // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("tournament counts match the known sequence") {
    CHECK(enumerate_tournaments(1).members.size() == 1);
    CHECK(enumerate_tournaments(3).members.size() == 2);
    CHECK(enumerate_tournaments(4).members.size() == 4);
    CHECK(enumerate_tournaments(5).members.size() == 12);
    CHECK(enumerate_tournaments(6).members.size() == 56);
    CHECK_THROWS_AS(enumerate_tournaments(8), std::invalid_argument);
}

TEST_CASE("tournament counts cross-checked by naive generation for n <= 5") {
    for (int n = 2; n <= 5; ++n)
        CHECK(enumerate_tournaments(n).members.size() == naive_tournament_count(n));
}

TEST_CASE("four-vertex tournaments split into one transitive and three non-transitive") {
    auto t4 = enumerate_tournaments(4);
    int transitive = 0;
    for (const auto& t : t4.members)
        if (isomorphic(t, corpus::transitive_tournament(4))) ++transitive;
    CHECK(transitive == 1);
    CHECK(t4.members.size() - transitive == 3);
}

TEST_CASE("oriented graph counts for small n") {
    CHECK(enumerate_oriented_graphs(1).size() == 1);
    CHECK(enumerate_oriented_graphs(2).size() == 2);
    CHECK(enumerate_oriented_graphs(3).size() == 7);
    CHECK(enumerate_oriented_graphs(4).size() == 42);
    CHECK(enumerate_oriented_graphs(5).size() == 582);
}

TEST_CASE("underlying enumeration cross-checked naively") {
    CHECK(enumerate_underlying_graphs(3, 3).size() == naive_underlying_count(3, 3));
    CHECK(enumerate_underlying_graphs(4, 3).size() == naive_underlying_count(4, 3));
    CHECK(enumerate_underlying_graphs(5, 3).size() == naive_underlying_count(5, 3));
    CHECK(enumerate_underlying_graphs(4, 2).size() == naive_underlying_count(4, 2));
}

TEST_CASE("subcubic oclique catalog at order 3") {
    auto found = enumerate_subcubic_ocliques(3);
    // Brute oracle: the properly subcubic ocliques on <= 3 vertices are the
    // single vertex, the single arc, and on 3 vertices the 2-dipath, the
    // transitive triangle and the directed 3-cycle.
    CHECK(found.size() == 5);
    int with_order3 = 0;
    bool has_c3 = false, has_dipath = false, has_t3 = false;
    for (const auto& g : found) {
        if (g.order() != 3) continue;
        ++with_order3;
        if (isomorphic(g, corpus::directed_cycle(3))) has_c3 = true;
        if (isomorphic(g, corpus::dipath(2))) has_dipath = true;
        if (isomorphic(g, corpus::transitive_tournament(3))) has_t3 = true;
    }
    CHECK(with_order3 == 3);
    CHECK(has_c3);
    CHECK(has_dipath);
    CHECK(has_t3);
}

TEST_CASE("universal filter on the tiny order-3 target set") {
    // With 3-vertex targets and the order <= 3 catalog: a survivor must
    // contain the 2-dipath, the transitive triangle and the 3-cycle; no
    // 3-vertex tournament contains both triangle types.
    TournamentSet t3 = enumerate_tournaments(3);
    auto ocl = enumerate_subcubic_ocliques(3);
    auto res = filter_universal_candidates(t3, ocl);
    CHECK(res.survivors.empty());
    CHECK(res.eliminated == 2);
}

TEST_CASE("witness maps from ocliques into tournaments are injective") {
    TournamentSet t5 = enumerate_tournaments(5);
    auto ocl = enumerate_subcubic_ocliques(4);
    int sampled = 0;
    for (const auto& o : ocl) {
        for (const auto& t : t5.members) {
            auto out = find_homomorphism(o, t);
            if (out.verdict != HomVerdict::found) continue;
            std::set<int> img(out.witness.begin(), out.witness.end());
            CHECK(img.size() == out.witness.size());
            if (++sampled > 25) return;
        }
    }
}

TEST_SUITE_END();
