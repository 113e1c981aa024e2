#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

using namespace kempe;

namespace {

Coloring latin_coloring_k33() {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    Coloring col;
    col.k = 3;
    col.color.assign(9, 0);
    for (int e = 0; e < 9; ++e) {
        auto [i, j] = g.edges[e];
        col.color[e] = (i + (j - 3)) % 3;
    }
    return col;
}

} // namespace

TEST_CASE("validate classifies proper, almost and invalid") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    Coloring col = latin_coloring_k33();
    REQUIRE(validate(g, col).status == Status::Proper);

    // Two blue edges at one right vertex: almost with a single deficiency.
    BipartiteGraph h = make_graph(2, 2, {{0, 2}, {0, 3}, {1, 2}});
    Coloring a{2, {0, 1, 0}};
    ValidationResult vr = validate(h, a);
    REQUIRE(vr.status == Status::Almost);
    REQUIRE(vr.deficiencies.size() == 1);
    REQUIRE(vr.deficiencies[0].vertex == 2);
    REQUIRE(vr.deficiencies[0].repeated == 0);
    REQUIRE(vr.deficiencies[0].missing == std::vector<int>{1});

    // Same color three times at a vertex: invalid.
    BipartiteGraph star = make_graph(1, 3, {{0, 1}, {0, 2}, {0, 3}});
    Coloring bad{3, {0, 0, 0}};
    ValidationResult vb = validate(star, bad);
    REQUIRE(vb.status == Status::Invalid);
    REQUIRE(vb.invalid_vertices == std::vector<int>{0});

    // Low-degree deficient vertex carries several missing colors.
    Coloring two{3, {1, 1, 0}};
    ValidationResult vt = validate(star, two);
    REQUIRE(vt.status == Status::Almost);
    REQUIRE(vt.deficiencies.size() == 1);
    REQUIRE(vt.deficiencies[0].missing == std::vector<int>{2});
}

TEST_CASE("three or more deficiencies count as invalid") {
    // Three disjoint cherries, each with a doubled color.
    BipartiteGraph g = make_graph(3, 6,
                                  {{0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
    Coloring col{2, {0, 0, 0, 0, 0, 0}};
    REQUIRE(validate(g, col).status == Status::Invalid);
}

TEST_CASE("initial coloring is proper on complete bipartite graphs") {
    for (int n = 2; n <= 5; ++n) {
        BipartiteGraph g = make_complete_bipartite(n, n);
        for (int k = n; k <= n + 2; ++k) {
            Coloring col = initial_coloring(g, k);
            REQUIRE(col.k == k);
            REQUIRE(validate(g, col).status == Status::Proper);
        }
    }
}

TEST_CASE("initial coloring rejects too few colors") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    REQUIRE_THROWS_AS(initial_coloring(g, 2), std::invalid_argument);
}

TEST_CASE("initial coloring is proper on random subgraphs") {
    SplitMix64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int a = 2 + int(rng.below(4)), b = 2 + int(rng.below(4));
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rng.below(100) < 60) es.emplace_back(i, a + j);
        if (es.empty()) continue;
        BipartiteGraph g = make_graph(a, b, es);
        int k = g.max_degree() + int(rng.below(2));
        Coloring col = initial_coloring(g, k);
        REQUIRE(validate(g, col).status == Status::Proper);
    }
}

TEST_CASE("coloring file round trip") {
    Coloring col{3, {2, 0, 1, 1}};
    std::ostringstream out;
    write_coloring(out, col);
    std::istringstream in(out.str());
    Coloring back = read_coloring(in, 4, 3);
    REQUIRE(back == col);

    std::istringstream missing("c 0 1\n");
    REQUIRE_THROWS_AS(read_coloring(missing, 2, 3), std::invalid_argument);
    std::istringstream dup("c 0 1\nc 0 2\n");
    REQUIRE_THROWS_AS(read_coloring(dup, 1, 3), std::invalid_argument);
    std::istringstream range("c 0 5\n");
    REQUIRE_THROWS_AS(read_coloring(range, 1, 3), std::invalid_argument);
}

TEST_CASE("color strings") {
    Coloring col{12, {0, 9, 10, 11}};
    REQUIRE(color_string(col) == "09ab");
}
