#include "kempe/chain_general.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

using namespace kempe;

namespace {

// Exhaustive check: the probabilities of all ways out of `from` sum to one,
// every way lands on a proper coloring, replays to the same place, and no two
// decision paths produce the same record.
void check_totality(const BipartiteGraph& g, const Coloring& from) {
    Rat sum = 0;
    size_t n = 0;
    std::set<std::string> seen;
    enumerate_general_ways(g, from, [&](const Proposal& p) {
        REQUIRE(is_proper(g, p.to));
        REQUIRE(p.prob > 0);
        std::string s = format_way(p.way);
        REQUIRE(seen.insert(s).second);
        Proposal r = apply_general_way(g, from, p.way);
        REQUIRE(r.to == p.to);
        REQUIRE(r.prob == p.prob);
        sum += p.prob;
        ++n;
    });
    INFO("ways out of this state: " << n);
    REQUIRE(sum == Rat(1));
}

} // namespace

TEST_CASE("way probabilities sum to one on a path with two colors") {
    BipartiteGraph g = make_graph(2, 3, {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
    check_totality(g, Coloring{2, {0, 1, 0, 1}});
}

TEST_CASE("way probabilities sum to one on a four cycle") {
    BipartiteGraph g = make_graph(2, 2, {{0, 2}, {0, 3}, {1, 3}, {1, 2}});
    check_totality(g, Coloring{2, {0, 1, 0, 1}});
    check_totality(g, Coloring{3, {0, 1, 0, 1}});
    check_totality(g, Coloring{3, {0, 1, 2, 1}});
}

TEST_CASE("way probabilities sum to one on an uneven graph") {
    // A path with a pendant edge; vertex degrees 1 and 2, three colors.
    BipartiteGraph g = make_graph(2, 3, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {0, 4}});
    Coloring col = initial_coloring(g, 3);
    check_totality(g, col);
}

TEST_CASE("way probabilities sum to one on K33") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    Coloring col{3, std::vector<int>(9, -1)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            col.color[i * 3 + j] = (i + j) % 3;
    check_totality(g, col);
}

TEST_CASE("way probabilities sum to one along a short random walk") {
    BipartiteGraph g = make_graph(2, 2, {{0, 2}, {0, 3}, {1, 3}, {1, 2}});
    Coloring col = initial_coloring(g, 3);
    SplitMix64 rng(5150);
    for (int step = 0; step < 5; ++step) {
        check_totality(g, col);
        col = propose_general(g, col, rng).to;
    }
}
