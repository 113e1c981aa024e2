#include "kempe/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace kempe;

TEST_CASE("complete bipartite construction") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    REQUIRE(g.num_vertices() == 6);
    REQUIRE(g.num_edges() == 9);
    REQUIRE(g.max_degree() == 3);
    // Row-major edge order.
    REQUIRE(g.edges[0] == std::pair<int, int>(0, 3));
    REQUIRE(g.edges[1] == std::pair<int, int>(0, 4));
    REQUIRE(g.edges[8] == std::pair<int, int>(2, 5));
    REQUIRE(g.is_left(2));
    REQUIRE_FALSE(g.is_left(3));
    REQUIRE(g.other_end(0, 0) == 3);
    REQUIRE(g.other_end(0, 3) == 0);
}

TEST_CASE("adjacency is ascending by edge id") {
    BipartiteGraph g = make_graph(2, 2, {{0, 2}, {0, 3}, {1, 2}});
    REQUIRE(g.adj[0] == std::vector<int>{0, 1});
    REQUIRE(g.adj[2] == std::vector<int>{0, 2});
    REQUIRE(g.degree(3) == 1);
}

TEST_CASE("graph construction rejects bad input") {
    REQUIRE_THROWS_AS(make_graph(2, 2, {{0, 1}}), std::invalid_argument); // right id too low
    REQUIRE_THROWS_AS(make_graph(2, 2, {{2, 2}}), std::invalid_argument); // left id too high
    REQUIRE_THROWS_AS(make_graph(2, 2, {{0, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("graph file round trip") {
    BipartiteGraph g = make_graph(2, 3, {{0, 2}, {0, 4}, {1, 3}});
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    BipartiteGraph h = read_graph(in);
    REQUIRE(h.n_left == 2);
    REQUIRE(h.n_right == 3);
    REQUIRE(h.edges == g.edges);
}

TEST_CASE("graph file parsing") {
    std::istringstream in("# comment\np bipartite 2 2 2\ne 1 1\ne 2 2\n");
    BipartiteGraph g = read_graph(in);
    REQUIRE(g.num_edges() == 2);
    REQUIRE(g.edges[0] == std::pair<int, int>(0, 2));
    REQUIRE(g.edges[1] == std::pair<int, int>(1, 3));

    std::istringstream bad1("p bipartite 2 2 1\ne 1 3\n");
    REQUIRE_THROWS_AS(read_graph(bad1), std::invalid_argument);
    std::istringstream bad2("p bipartite 2 2 2\ne 1 1\n");
    REQUIRE_THROWS_AS(read_graph(bad2), std::invalid_argument); // count mismatch
    std::istringstream bad3("e 1 1\n");
    REQUIRE_THROWS_AS(read_graph(bad3), std::invalid_argument); // e before p
    std::istringstream bad4("p bipartite 1 1 1\nq 1 1\n");
    REQUIRE_THROWS_AS(read_graph(bad4), std::invalid_argument);
}
