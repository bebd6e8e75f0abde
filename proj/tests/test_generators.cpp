#include <doctest.h>

#include <stdexcept>

#include "indmatch/exact.hpp"
#include "indmatch/generators.hpp"
#include "test_helpers.hpp"

using namespace indmatch;
using namespace indmatch::testing;

TEST_SUITE_BEGIN("generators");

TEST_CASE("sharpness graphs match the closed-form order") {
    for (int delta = 3; delta <= 64; ++delta) {
        const long long expected =
            (static_cast<long long>((delta + 1) / 2) + 1) * (delta / 2 + 1);
        const Graph h1 = sharpness_h1(delta);
        const Graph h2 = sharpness_h2(delta);
        CHECK(h1.vertex_count() == expected);
        CHECK(h2.vertex_count() == expected);
        CHECK(h1.max_degree() == delta);
        CHECK(h2.max_degree() == delta);

        // Exactly the clique vertices reach degree delta.
        int full_h1 = 0;
        for (VertexId v = 0; v < h1.vertex_count(); ++v) {
            if (h1.degree(v) == delta) {
                ++full_h1;
            }
        }
        CHECK(full_h1 == (delta + 1) / 2 + 1);
    }
    for (int delta : {999, 1000, 2000}) {
        const long long expected =
            (static_cast<long long>((delta + 1) / 2) + 1) * (delta / 2 + 1);
        CHECK(sharpness_h1(delta).vertex_count() == expected);
        CHECK(sharpness_h2(delta).vertex_count() == expected);
    }
    CHECK(sharpness_h1(3).vertex_count() == 6);
    CHECK(sharpness_h1(4).vertex_count() == 9);
    CHECK(sharpness_h2(3).vertex_count() == 6);
    CHECK(sharpness_h2(5).vertex_count() == 12);
    CHECK(sharpness_h1(1000).vertex_count() == 251001);
    CHECK_THROWS_AS(sharpness_h1(2), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_h2(2), std::invalid_argument);
}

TEST_CASE("h1 and h2 coincide for even delta") {
    CHECK(sharpness_h1(4) == sharpness_h2(4));
    CHECK(sharpness_h1(10) == sharpness_h2(10));
    CHECK(sharpness_h1(5) != sharpness_h2(5));
}

TEST_CASE("sharp graphs have strong matching number one") {
    for (int delta = 3; delta <= 8; ++delta) {
        CHECK(nu_s_exact(sharpness_h1(delta)).value == 1);
        CHECK(nu_s_exact(sharpness_h2(delta)).value == 1);
    }
}

TEST_CASE("c5_blowup") {
    const Graph c5 = c5_blowup({1, 1, 1, 1, 1});
    CHECK(is_isomorphic_small(c5, cycle_graph(5)));

    const Graph c5sq = c5_blowup({2, 2, 2, 2, 2});
    CHECK(c5sq.vertex_count() == 10);
    CHECK(c5sq.edge_count() == 20);
    for (VertexId v = 0; v < 10; ++v) {
        CHECK(c5sq.degree(v) == 4);
    }

    const Graph k33p = c5_blowup({1, 1, 1, 2, 2});
    CHECK(k33p.vertex_count() == 7);
    CHECK(k33p.edge_count() == 10);
    CHECK(is_isomorphic_small(k33p, k33_subdivided()));

    CHECK_THROWS_AS(c5_blowup({0, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("attach_pendants") {
    CHECK(attach_pendants(Graph(1, EdgeList{}), 3) == star_graph(3));
    // h1 is literally the pendant transform applied to a clique.
    CHECK(attach_pendants(complete_graph(4), 3) == sharpness_h1(6));
    CHECK(attach_pendants(complete_graph(5), 3) == sharpness_h1(7));
    const Graph c5p = attach_pendants(cycle_graph(5), 2);
    CHECK(c5p.vertex_count() == 15);
    CHECK(c5p.max_degree() == 4);
    CHECK_THROWS_AS(attach_pendants(k2(), 0), std::invalid_argument);
}

TEST_CASE("basic families") {
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(star_graph(4).max_degree() == 4);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("random_regular") {
    const Graph g = random_regular(10, 3, 1);
    CHECK(g.edge_count() == 15);
    for (VertexId v = 0; v < 10; ++v) {
        CHECK(g.degree(v) == 3);
    }
    CHECK(random_regular(10, 3, 1) == g);  // deterministic under seed
    CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);  // odd nd
    CHECK_THROWS_AS(random_regular(4, 4, 1), std::invalid_argument);  // d >= n
}

TEST_CASE("random_graph is deterministic under its seed") {
    const Graph a = random_graph(30, 0.3, 42);
    CHECK(a == random_graph(30, 0.3, 42));
    CHECK(a != random_graph(30, 0.3, 43));
    CHECK(random_graph(20, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(20, 1.0, 1).edge_count() == 190);
}

TEST_SUITE_END();
