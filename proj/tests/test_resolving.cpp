#include <doctest.h>

#include <algorithm>

#include "mdim/error.hpp"
#include "mdim/gen.hpp"
#include "mdim/resolving.hpp"
#include "mdim/rng.hpp"

using namespace mdim;

namespace {

std::vector<int> random_subset(int n, SplitMix64& rng) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (rng.coin()) s.push_back(v);
    return s;
}

}  // namespace

TEST_CASE("is_resolving on the worked examples") {
    CHECK(is_resolving(path_graph(4), {0}).resolved);

    auto c4 = is_resolving(cycle_graph(4), {0});
    CHECK(!c4.resolved);
    CHECK(c4.unresolved_pair == std::pair<int, int>{1, 3});

    CHECK(is_resolving(build_graph(1, {}), {}).resolved);
}

TEST_CASE("is_resolving rejects out-of-range ids") {
    CHECK_THROWS_WITH_AS(is_resolving(path_graph(4), {4}), doctest::Contains("out of range"),
                         Error);
}

TEST_CASE("equidistance classes on the worked examples") {
    auto part = equidistance_classes(cycle_graph(4), {0, 1}, {2, 3});
    REQUIRE(part.count() == 2);
    CHECK(part.classes[0] == std::vector<int>{2});
    CHECK(part.classes[1] == std::vector<int>{3});

    CHECK(equidistance_classes(path_graph(4), {}, {1, 2, 3}).count() == 1);
    CHECK(equidistance_classes(path_graph(4), {0}, {1, 2, 3}).count() == 3);
    CHECK(equidistance_classes(path_graph(4), {0}, {}).count() == 0);
}

TEST_CASE("growing the probe set never merges equidistance classes") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng.below(7));
        auto g = random_connected_graph(n, 35 + static_cast<int>(rng.below(55)), rng);
        auto probe = random_subset(n, rng);
        auto target = random_subset(n, rng);
        auto bigger = probe;
        for (int v = 0; v < n; ++v)
            if (rng.coin()) bigger.push_back(v);
        CHECK(equidistance_classes(g, bigger, target).count() >=
              equidistance_classes(g, probe, target).count());
    }
}

TEST_CASE("supersets of resolving sets resolve, and V always does") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng.below(7));
        auto g = random_connected_graph(n, 40 + static_cast<int>(rng.below(50)), rng);
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        CHECK(is_resolving(g, all).resolved);

        auto base = metric_dimension_exact(g, Engine::enumerate).witness;
        auto extended = base;
        for (int v = 0; v < n; ++v)
            if (rng.coin()) extended.push_back(v);
        CHECK(is_resolving(g, extended).resolved);
        if (n >= 2) CHECK(static_cast<int>(base.size()) <= n - 1);
    }
}

TEST_CASE("has_resolving_set_of_size on the worked examples") {
    auto k4_yes = has_resolving_set_of_size(complete_graph(4), 3);
    REQUIRE(k4_yes.has_value());
    CHECK(k4_yes->size() <= 3);
    CHECK(is_resolving(complete_graph(4), *k4_yes).resolved);
    CHECK(!has_resolving_set_of_size(complete_graph(4), 2).has_value());

    auto p4 = has_resolving_set_of_size(path_graph(4), 1);
    REQUIRE(p4.has_value());
    CHECK((*p4 == std::vector<int>{0} || *p4 == std::vector<int>{3}));

    auto full = has_resolving_set_of_size(path_graph(5), 5);
    REQUIRE(full.has_value());
    CHECK(is_resolving(path_graph(5), *full).resolved);

    CHECK(has_resolving_set_of_size(build_graph(1, {}), 0) == std::vector<int>{});
    CHECK_THROWS_AS(has_resolving_set_of_size(path_graph(3), -1), Error);
    CHECK_THROWS_AS(has_resolving_set_of_size(build_graph(4, {{0, 1}, {2, 3}}), 2), Error);
}

TEST_CASE("branch and bound agrees with the enumeration oracle") {
    auto check_graph = [](const Graph& g) {
        auto oracle = metric_dimension_exact(g, Engine::enumerate);
        auto bnb = metric_dimension_exact(g, Engine::branch_and_bound);
        CHECK(bnb.md == oracle.md);
        CHECK(is_resolving(g, bnb.witness).resolved);
        CHECK(is_resolving(g, oracle.witness).resolved);
        CHECK(static_cast<int>(bnb.witness.size()) == bnb.md);
    };
    for (int n = 1; n <= 5; ++n) for_each_connected_graph(n, check_graph);
    SplitMix64 rng(123);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 6 + static_cast<int>(rng.below(2));
        check_graph(random_connected_graph(n, 25 + static_cast<int>(rng.below(65)), rng));
    }
}

TEST_CASE("metric dimension of the classic families") {
    for (int n = 2; n <= 9; ++n) CHECK(metric_dimension_exact(path_graph(n)).md == 1);
    for (int n = 3; n <= 9; ++n) CHECK(metric_dimension_exact(cycle_graph(n)).md == 2);
    for (int n = 2; n <= 6; ++n) CHECK(metric_dimension_exact(complete_graph(n)).md == n - 1);
    CHECK(metric_dimension_exact(petersen_graph()).md == 3);
    CHECK(metric_dimension_exact(hypercube_graph(3)).md == 3);
    CHECK(metric_dimension_exact(build_graph(1, {})).md == 0);
}

TEST_CASE("search stats are populated") {
    SearchStats stats;
    metric_dimension_exact(petersen_graph(), Engine::branch_and_bound, &stats);
    CHECK(stats.nodes > 0);
}

TEST_CASE("resolve_witness on the worked examples") {
    CHECK(resolve_witness(path_graph(4), {1, 2, 3}) == std::vector<int>{0});
    CHECK(resolve_witness(path_graph(4), {}) == std::vector<int>{});

    auto s = resolve_witness(cycle_graph(4), {2, 3});
    CHECK(s == std::vector<int>{0});
    CHECK(s.size() <= 2);
}

TEST_CASE("resolve_witness rejects non-co-resolving sets with the pair") {
    // complement of {0,1,2,3} is empty and resolves nothing in C4
    CHECK_THROWS_WITH_AS(resolve_witness(cycle_graph(4), {0, 1, 2, 3}),
                         doctest::Contains("not co-resolving"), Error);
}

TEST_CASE("resolve_witness contract holds for every co-resolving set, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            auto dm = all_pairs_distances(g);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> t, complement;
                for (int v = 0; v < n; ++v)
                    (mask >> v & 1 ? t : complement).push_back(v);
                if (!is_resolving(g, dm, complement).resolved) continue;
                auto s = resolve_witness(g, t);
                CHECK(s.size() <= t.size());
                std::vector<int> overlap;
                std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                      std::back_inserter(overlap));
                CHECK(overlap.empty());
                CHECK(equidistance_classes(g, dm, s, t).count() == static_cast<int>(t.size()));
            }
        });
    }
}
