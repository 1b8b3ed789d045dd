#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "ocol/canonical.hpp"
#include "ocol/rng.hpp"
#include "support/corpus.hpp"

using namespace ocol;

namespace {

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    for (Arc a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
    return OrientedGraph(g.order(), std::move(arcs));
}

// All-permutations reference for the canonical code, same staircase cell
// order, no pruning.
CanonCode brute_code(const OrientedGraph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CanonCode best;
    bool have = false;
    do {
        CanonCode cur;
        cur.n = n;
        for (int d = 0; d < n; ++d) {
            std::uint32_t b = 0;
            for (int i = 0; i < d; ++i) b = (b << 1) | (g.has_arc(perm[i], perm[d]) ? 1u : 0u);
            for (int j = 0; j < d; ++j) b = (b << 1) | (g.has_arc(perm[d], perm[j]) ? 1u : 0u);
            cur.blocks[d] = b;
        }
        if (!have || cur < best) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!have) best.n = n;
    return best;
}

} // namespace

TEST_SUITE_BEGIN("canonical");

TEST_CASE("canonical code matches the all-permutations reference") {
    RngStream rng(23);
    for (int t = 0; t < 80; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(1, 6), rng.range(20, 80), rng);
        CHECK(canonical_code(g) == brute_code(g));
    }
}

TEST_CASE("isomorphic relabelings share a code; idempotent representative") {
    RngStream rng(29);
    for (int t = 0; t < 60; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(1, 8), rng.range(20, 80), rng);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        OrientedGraph h = relabel(g, perm);
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(isomorphic(g, h));
        OrientedGraph rep = canonical_form(g);
        CHECK(canonical_form(rep) == rep);
        CHECK(canonical_code(rep) == canonical_code(g));
    }
}

TEST_CASE("non-isomorphic graphs get distinct codes (small exhaustive slice)") {
    OrientedGraph c3 = corpus::directed_cycle(3);
    OrientedGraph t3 = corpus::transitive_tournament(3);
    CHECK_FALSE(isomorphic(c3, t3));
    CHECK_FALSE(canonical_code(c3) == canonical_code(t3));
}

TEST_CASE("find_isomorphism returns a checkable witness") {
    RngStream rng(31);
    for (int t = 0; t < 40; ++t) {
        OrientedGraph g = corpus::random_oriented(rng.range(1, 7), 50, rng);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        OrientedGraph h = relabel(g, perm);
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso.has_value());
        for (Arc a : g.arcs()) CHECK(h.has_arc((*iso)[a.tail], (*iso)[a.head]));
    }
    CHECK_FALSE(find_isomorphism(corpus::directed_cycle(3), corpus::transitive_tournament(3)));
}

TEST_CASE("automorphism collection") {
    auto c3 = collect_automorphisms(corpus::directed_cycle(3));
    CHECK(c3.size() == 3); // rotations
    auto t3 = collect_automorphisms(corpus::transitive_tournament(3));
    CHECK(t3.size() == 1); // rigid
}

TEST_SUITE_END();
