#include "doctest.h"

#include "ocol/colouring.hpp"
#include "ocol/patterns.hpp"
#include "ocol/pipeline.hpp"
#include "ocol/random_graphs.hpp"
#include "support/corpus.hpp"

using namespace ocol;

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("transitive 4-tournament needs the peel: 8 colours") {
    auto cert = colour_subcubic(corpus::transitive_tournament(4));
    CHECK(cert.method == "source-peel");
    CHECK(cert.guaranteed_palette == 8);
    CHECK(validate_oriented_colouring(corpus::transitive_tournament(4), cert.colouring).valid());
    CHECK(cert.peeled == std::vector<int>{0});
}

TEST_CASE("Z members colour within 8 via a peel") {
    for (const auto& z : pattern_catalog().z_classes) {
        auto cert = colour_subcubic(z.graph);
        CHECK((cert.method == "source-peel" || cert.method == "sink-peel"));
        CHECK(cert.guaranteed_palette <= 8);
        CHECK(validate_oriented_colouring(z.graph, cert.colouring).valid());
    }
}

TEST_CASE("direct route used when a QR_7 map exists") {
    auto cert = colour_subcubic(corpus::directed_cycle(3));
    CHECK(cert.method == "direct-QR7");
    CHECK(cert.guaranteed_palette == 7);
}

TEST_CASE("arc removal covers source-free sink-free cubic orientations") {
    // A strongly connected 4-tournament: 3-regular underlying, no source, no
    // sink. Starving the direct attempt forces the arc-removal branch.
    OrientedGraph g = OrientedGraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {2, 3}});
    REQUIRE(g.sources().empty());
    REQUIRE(g.sinks().empty());
    REQUIRE(g.max_degree() == 3);
    PipelineOptions opts;
    opts.direct_budget = 1;
    auto cert = colour_subcubic(g, opts);
    CHECK(cert.method == "arc-removal-QR7");
    CHECK(cert.removed_arc == Arc{0, 1});
    CHECK(validate_oriented_colouring(g, cert.colouring).valid());
    CHECK(cert.guaranteed_palette == 9);
    CHECK(colours_used(cert.colouring) <= 9);
}

TEST_CASE("sink peel transports through the converse") {
    // A sink but no source; starving the direct attempt forces the peel.
    OrientedGraph g = OrientedGraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}});
    REQUIRE(g.sources().empty());
    REQUIRE(g.sinks() == std::vector<int>{3});
    PipelineOptions opts;
    opts.direct_budget = 1;
    auto cert = colour_subcubic(g, opts);
    CHECK(cert.method == "sink-peel");
    CHECK(validate_oriented_colouring(g, cert.colouring).valid());
    CHECK(cert.guaranteed_palette == 8);
    CHECK(cert.peeled == std::vector<int>{3});
}

TEST_CASE("subcubic input validation") {
    CHECK_THROWS_AS(colour_subcubic(corpus::transitive_tournament(5)), std::invalid_argument);
    CHECK_THROWS_AS(colour_subcubic(OrientedGraph(4, {})), std::invalid_argument); // disconnected
}

TEST_CASE("random connected cubic orientations stay within 9 colours") {
    RngStream rng(83);
    for (int t = 0; t < 12; ++t) {
        int n = 2 * rng.range(3, 8);
        UndirectedGraph u = random_connected_regular_graph(n, 3, rng);
        OrientedGraph g = random_orientation(u, rng);
        auto cert = colour_subcubic(g);
        CHECK(validate_oriented_colouring(g, cert.colouring).valid());
        CHECK(cert.guaranteed_palette <= 9);
        CHECK(colours_used(cert.colouring) <= 9);
        if (!g.sources().empty() || !g.sinks().empty()) CHECK(cert.guaranteed_palette <= 8);
    }
}

TEST_CASE("subquartic: direct QR_67 for properly subquartic inputs") {
    auto cert = colour_subquartic(corpus::directed_cycle(3));
    CHECK(cert.method == "direct-QR67");
    CHECK(cert.guaranteed_palette == 67);
    CHECK(validate_oriented_colouring(corpus::directed_cycle(3), cert.colouring).valid());

    RngStream rng(89);
    for (int t = 0; t < 6; ++t) {
        int n = rng.range(8, 16);
        UndirectedGraph u = random_connected_max_degree(n, 4, n, rng);
        OrientedGraph g = random_orientation(u, rng);
        if (!properly_subquartic(g)) continue;
        auto cert2 = colour_subquartic(g);
        CHECK(cert2.method == "direct-QR67");
        CHECK(validate_oriented_colouring(g, cert2.colouring).valid());
    }
}

TEST_CASE("subquartic: 4-regular components spend colours 67 and 68") {
    // K_5 tournaments are 4-regular underlying.
    auto cert = colour_subquartic(corpus::transitive_tournament(5));
    CHECK(cert.method == "component-QR67-arc-removal");
    CHECK(cert.guaranteed_palette == 69);
    CHECK(cert.removed_arc.has_value());
    CHECK(validate_oriented_colouring(corpus::transitive_tournament(5), cert.colouring).valid());

    RngStream rng(97);
    for (int t = 0; t < 4; ++t) {
        UndirectedGraph u = random_connected_regular_graph(rng.range(3, 5) * 2, 4, rng);
        OrientedGraph g = random_orientation(u, rng);
        auto c = colour_subquartic(g);
        CHECK(validate_oriented_colouring(g, c.colouring).valid());
        CHECK(c.guaranteed_palette == 69);
    }
}

TEST_CASE("subquartic rejects degree 5 and multiple 4-regular components") {
    CHECK_THROWS_AS(colour_subquartic(corpus::transitive_tournament(6)), std::invalid_argument);
    OrientedGraph two = disjoint_union(corpus::transitive_tournament(5), corpus::transitive_tournament(5));
    CHECK_THROWS_AS(colour_subquartic(two), std::invalid_argument);
    // One 4-regular component beside a properly subquartic one is fine.
    OrientedGraph mixed = disjoint_union(corpus::transitive_tournament(5), corpus::directed_cycle(3));
    auto cert = colour_subquartic(mixed);
    CHECK(validate_oriented_colouring(mixed, cert.colouring).valid());
}

TEST_CASE("theoretical bounds") {
    auto b3 = theoretical_bounds(3);
    CHECK(b3.general == 144);
    CHECK(b3.improved == 9);
    CHECK(b3.conjectured == 7);
    CHECK_FALSE(b3.acyclic_route.has_value());

    auto b4 = theoretical_bounds(4);
    CHECK(b4.general == 4 * 4 * 32);
    CHECK(b4.acyclic_route == 80);
    CHECK(b4.improved == 69);
    CHECK(b4.lower_bound == 11);

    CHECK(theoretical_bounds(1).general == 4);
    CHECK_THROWS_AS(theoretical_bounds(0), std::invalid_argument);
}

TEST_SUITE_END();
