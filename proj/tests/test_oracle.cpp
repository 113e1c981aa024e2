#include "kempe/oracle.hpp"
#include "kempe/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>

using namespace kempe;

TEST_CASE("K33 with three colors has twelve proper edge colorings") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    SolutionSet s = enumerate_colorings(g, 3);
    REQUIRE_FALSE(s.overflow);
    REQUIRE(s.size() == 12);
}

TEST_CASE("K44 with four colors has 576 proper edge colorings") {
    BipartiteGraph g = make_complete_bipartite(4, 4);
    SolutionSet s = enumerate_colorings(g, 4);
    REQUIRE_FALSE(s.overflow);
    REQUIRE(s.size() == 576);
}

TEST_CASE("enumeration output is lexicographic and duplicate free") {
    BipartiteGraph g = make_complete_bipartite(2, 3);
    SolutionSet s = enumerate_colorings(g, 3);
    REQUIRE(s.size() > 0);
    auto strings = s.strings();
    for (size_t i = 1; i < strings.size(); ++i)
        REQUIRE(strings[i - 1] < strings[i]);
}

TEST_CASE("a path with two colors has two colorings") {
    BipartiteGraph g = make_graph(2, 3, {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
    SolutionSet s = enumerate_colorings(g, 2);
    REQUIRE(s.size() == 2); // alternation forced, two choices for the first edge
}

TEST_CASE("the limit is honored and reported") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    SolutionSet s = enumerate_colorings(g, 3, /*limit=*/5);
    REQUIRE(s.overflow);
    REQUIRE(s.size() == 5);
}

TEST_CASE("large instances need an explicit override") {
    BipartiteGraph g = make_complete_bipartite(5, 5); // 25 edges
    REQUIRE_THROWS_AS(enumerate_colorings(g, 5), std::invalid_argument);
    SolutionSet s = enumerate_colorings(g, 5, /*limit=*/3, /*force_large=*/true);
    REQUIRE(s.overflow);
    REQUIRE(s.size() == 3);
}

TEST_CASE("distance from uniform on hand-checked histograms") {
    // Uniform support of size 4, 100 samples.
    REQUIRE(tvd_from_uniform({25, 25, 25, 25}, 100, 4) == 0.0);
    // All mass on one point: tvd = 1 - 1/4.
    REQUIRE(tvd_from_uniform({100, 0, 0, 0}, 100, 4) == Catch::Approx(0.75));
    double chi = chi_square_uniform({30, 20, 25, 25}, 100);
    REQUIRE(chi == Catch::Approx((25.0 + 25.0 + 0.0 + 0.0) / 25.0));
}

TEST_CASE("histogram alignment rejects foreign states") {
    BipartiteGraph g = make_graph(1, 2, {{0, 1}, {0, 2}});
    SolutionSet s = enumerate_colorings(g, 2);
    REQUIRE(s.size() == 2);
    std::map<std::string, uint64_t> h;
    h[s.strings()[0]] = 7;
    auto counts = align_histogram(s, h);
    REQUIRE(counts.size() == 2);
    REQUIRE(counts[0] + counts[1] == 7);
    std::map<std::string, uint64_t> bad;
    bad["zz"] = 1;
    REQUIRE_THROWS_AS(align_histogram(s, bad), invariant_error);
}
