#include <doctest.h>

#include "mdim/error.hpp"
#include "mdim/gen.hpp"
#include "mdim/io.hpp"
#include "mdim/rng.hpp"
#include "mdim/saving.hpp"

using namespace mdim;

TEST_CASE("parse_graph on the worked examples") {
    CHECK(parse_graph("4 3\n0 1\n1 2\n2 3\n") == path_graph(4));
    CHECK(parse_graph("1 0\n") == build_graph(1, {}));
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 2\n"),
                         doctest::Contains("vertex 2 out of range (line 2)"), Error);
}

TEST_CASE("parse_graph tolerates comments and trailing whitespace only") {
    CHECK(parse_graph("# a path\n4 3\n0 1\n1 2\n2 3  \n") == path_graph(4));
    CHECK(parse_graph("4 3\n0 1\n# middle note\n1 2\n2 3") == path_graph(4));

    CHECK_THROWS_WITH_AS(parse_graph(""), doctest::Contains("header"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("4\n"), doctest::Contains("header"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("two 3\n"), doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("2 2\n0 1\n"), doctest::Contains("edge count mismatch"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1\n0 1\n"), doctest::Contains("line 3"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1 1\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n\n0 1\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n1 1\n"), doctest::Contains("self-loop"), Error);
}

TEST_CASE("format_graph writes sorted edges and round-trips bytes") {
    CHECK(format_graph(path_graph(3)) == "3 2\n0 1\n1 2\n");
    SplitMix64 rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng.below(9));
        auto g = random_connected_graph(n, 30 + static_cast<int>(rng.below(60)), rng);
        auto text = format_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(format_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("hitting-set files parse, dedupe and round-trip") {
    auto inst = parse_hitting_set("# example\n3 2 1\n0 1\n1 2\n");
    CHECK(inst.universe_size == 3);
    CHECK(inst.budget == 1);
    REQUIRE(inst.family.size() == 2);
    CHECK(inst.family[0] == std::vector<int>{0, 1});

    CHECK(format_hitting_set(inst) == "3 2 1\n0 1\n1 2\n");

    CHECK_THROWS_WITH_AS(parse_hitting_set("3 2 1\n0 1\n"), doctest::Contains("set count"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_hitting_set("3 1 1\n5\n"), doctest::Contains("out of range"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_hitting_set("3 1 1\n0\nextra\n"), doctest::Contains("line 3"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_hitting_set(""), doctest::Contains("header"), Error);
}

TEST_CASE("kernel outcomes serialize with trailer lines and parse back") {
    auto reduced = kernelize({path_graph(4), 1});
    auto text = format_kernel_outcome(reduced);
    CHECK(text == "# verdict: reduced\n4 3\n0 1\n1 2\n2 3\nk=1\n");
    auto back = parse_kernel_outcome(text);
    CHECK(back.verdict == KernelVerdict::reduced);
    CHECK(back.instance.g == path_graph(4));
    CHECK(back.instance.k == 1);

    auto trivial = kernelize({cycle_graph(9), 1});
    auto ttext = format_kernel_outcome(trivial);
    CHECK(ttext == "# verdict: trivial-yes\n1 0\nk=1\ncertificate: 0\n");
    auto tback = parse_kernel_outcome(ttext);
    CHECK(tback.verdict == KernelVerdict::trivial_yes);
    CHECK(tback.certificate == std::vector<int>{0});

    CHECK_THROWS_WITH_AS(parse_kernel_outcome("1 0\n"), doctest::Contains("k="), Error);
}

TEST_CASE("reduction outputs carry graph, parameter, cover and roles") {
    auto red = reduce_to_metric_dimension(make_hitting_set_instance(2, {{0}, {1}}, 2));
    auto text = format_reduction_output(red);
    CHECK(text.find("k=9\n") != std::string::npos);
    CHECK(text.find("vc=") != std::string::npos);
    CHECK(text.find("role 0 U\n") != std::string::npos);
    CHECK(text.find("role 4 F'\n") != std::string::npos);
    CHECK(text.find("role 19 a'_F\n") != std::string::npos);
    // the graph portion parses on its own
    auto upto = text.find("k=");
    CHECK(parse_graph(text.substr(0, upto)) == red.g);
}

TEST_CASE("format_id_list") {
    CHECK(format_id_list({}) == "");
    CHECK(format_id_list({3}) == "3");
    CHECK(format_id_list({0, 2, 5}) == "0 2 5");
}
