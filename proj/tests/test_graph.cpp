#include <doctest.h>

#include <algorithm>

#include "mdim/error.hpp"
#include "mdim/gen.hpp"
#include "mdim/graph.hpp"
#include "mdim/rng.hpp"

using namespace mdim;

TEST_CASE("build_graph constructs P4") {
    auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.n == 4);
    CHECK(g.m == 3);
    CHECK(g.adj[1] == std::vector<int>{0, 2});
    CHECK(g.has_edge(2, 3));
    CHECK(!g.has_edge(0, 3));
}

TEST_CASE("build_graph handles a single vertex") {
    auto g = build_graph(1, {});
    CHECK(g.n == 1);
    CHECK(g.m == 0);
}

TEST_CASE("build_graph collapses duplicate edges") {
    auto g = build_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.m == 2);
    CHECK(g.adj[1] == std::vector<int>{0, 2});
}

TEST_CASE("build_graph rejects bad edges with the offending pair") {
    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 2}}), doctest::Contains("(0, 2)"), Error);
    CHECK_THROWS_WITH_AS(build_graph(3, {{1, 1}}), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_AS(build_graph(-1, {}), Error);
}

TEST_CASE("distances on P4, C4 and a lone vertex") {
    auto dp = all_pairs_distances(path_graph(4));
    CHECK(dp.at(0, 3) == 3);
    CHECK(dp.at(1, 2) == 1);
    auto dc = all_pairs_distances(cycle_graph(4));
    CHECK(dc.at(0, 2) == 2);
    CHECK(dc.at(1, 3) == 2);
    auto d1 = all_pairs_distances(build_graph(1, {}));
    CHECK(d1.n == 1);
    CHECK(d1.at(0, 0) == 0);
}

TEST_CASE("disconnected graphs are rejected naming two vertices") {
    auto g = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(g));
    CHECK_THROWS_WITH_AS(all_pairs_distances(g), doctest::Contains("0 and 2"), Error);
    CHECK_THROWS_WITH_AS(ensure_connected(g), doctest::Contains("unreachable"), Error);
}

TEST_CASE("distance matrices satisfy the metric axioms") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto g = random_connected_graph(n, 30 + static_cast<int>(rng.below(60)), rng);
        auto dm = all_pairs_distances(g);
        for (int u = 0; u < n; ++u) {
            CHECK(dm.at(u, u) == 0);
            for (int v = 0; v < n; ++v) {
                CHECK(dm.at(u, v) == dm.at(v, u));
                CHECK((dm.at(u, v) == 1) == g.has_edge(u, v));
                for (int w = 0; w < n; ++w) {
                    CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
                }
            }
        }
    }
}

TEST_CASE("named graphs have the expected shape") {
    CHECK(petersen_graph().m == 15);
    CHECK(hypercube_graph(3).m == 12);
    CHECK(star_graph(3).m == 3);
    CHECK(complete_graph(5).m == 10);
    for (int v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
}

TEST_CASE("connected graph enumeration matches known counts") {
    CHECK(count_connected_graphs(1) == 1);
    CHECK(count_connected_graphs(2) == 1);
    CHECK(count_connected_graphs(3) == 4);
    CHECK(count_connected_graphs(4) == 38);
    CHECK(count_connected_graphs(5) == 728);
}

TEST_CASE("random_connected_graph returns connected graphs of the right order") {
    SplitMix64 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto g = random_connected_graph(6, 40, rng);
        CHECK(g.n == 6);
        CHECK(is_connected(g));
    }
}
