#include "kempe/two_color.hpp"
#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace kempe;

namespace {

// An 8-cycle with colors alternating 0,1 and a spare color 2 in k.
struct CycleFixture {
    BipartiteGraph g = make_graph(4, 4, {{0, 4}, {1, 4}, {1, 5}, {2, 5},
                                         {2, 6}, {3, 6}, {3, 7}, {0, 7}});
    Coloring col{3, {0, 1, 0, 1, 0, 1, 0, 1}};
};

// Two disjoint 2-edge paths, colors 0 then 1 along each.
struct TwoPathFixture {
    BipartiteGraph g = make_graph(2, 4, {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
    Coloring col{2, {0, 1, 0, 1}};
};

} // namespace

TEST_CASE("two color subgraph of a latin coloring of K33 is one 6-cycle") {
    BipartiteGraph g = make_complete_bipartite(3, 3);
    Coloring col{3, {}};
    col.color.assign(9, 0);
    for (int e = 0; e < 9; ++e) {
        auto [i, j] = g.edges[e];
        col.color[e] = (i + (j - 3)) % 3;
    }
    TwoColorSubgraph h = two_color_subgraph(g, col, 0, 1);
    REQUIRE(h.components.size() == 1);
    REQUIRE(h.components[0].is_cycle);
    REQUIRE(h.components[0].vertices.size() == 6);
    REQUIRE(h.components[0].vertices[0] == 0); // canonical start
    // toward the smaller-id neighbor
    REQUIRE(h.components[0].vertices[1] < h.components[0].vertices[5]);
    REQUIRE(h.edge_ids.size() == 6);
}

TEST_CASE("menu sizes on a single 8-cycle") {
    CycleFixture f;
    TwoColorSubgraph h = two_color_subgraph(f.g, f.col, 0, 1);
    REQUIRE(h.components.size() == 1);
    REQUIRE(h.components[0].is_cycle);
    REQUIRE(subpath_menu(h).size() == 57);          // 2*C(8,2) + 1
    REQUIRE(interior_subpath_menu(h).size() == 57); // cycles keep everything
    REQUIRE(even_subpath_menu(h).size() == 24);     // |j-i| in {2,4,6}, two arcs each
    REQUIRE(anchored_subpaths(h).empty());
    REQUIRE(anchored_pair_menu(h).empty());
}

TEST_CASE("menu sizes on two 4-cycles") {
    BipartiteGraph g = make_graph(4, 4, {{0, 4}, {1, 4}, {1, 5}, {0, 5},
                                         {2, 6}, {3, 6}, {3, 7}, {2, 7}});
    Coloring col{2, {0, 1, 0, 1, 0, 1, 0, 1}};
    TwoColorSubgraph h = two_color_subgraph(g, col, 0, 1);
    REQUIRE(h.components.size() == 2);
    REQUIRE(subpath_menu(h).size() == 26); // (2*C(4,2) + 1) per cycle
    REQUIRE(interior_subpath_menu(h).size() == 26);
}

TEST_CASE("menus on a path component") {
    TwoPathFixture f;
    TwoColorSubgraph h = two_color_subgraph(f.g, f.col, 0, 1);
    REQUIRE(h.components.size() == 2);
    REQUIRE_FALSE(h.components[0].is_cycle);
    REQUIRE(h.components[0].vertices.size() == 3);
    // Path of 3 vertices: C(3,2) = 3 subpaths each, interior drops the full one.
    REQUIRE(subpath_menu(h).size() == 6);
    REQUIRE(interior_subpath_menu(h).size() == 4);
    // Anchored: prefix and suffix to the middle vertex, per component.
    REQUIRE(anchored_subpaths(h).size() == 4);
    REQUIRE(anchored_pair_menu(h).size() == 6);
}

TEST_CASE("path components start at the lower endpoint") {
    // Path 5 - 0 - 3 - 1 - 4 in H colors.
    BipartiteGraph g = make_graph(3, 3, {{0, 5}, {0, 3}, {1, 3}, {1, 4}});
    Coloring col{2, {0, 1, 0, 1}};
    TwoColorSubgraph h = two_color_subgraph(g, col, 0, 1);
    REQUIRE(h.components.size() == 1);
    const Component& comp = h.components[0];
    REQUIRE_FALSE(comp.is_cycle);
    REQUIRE(comp.vertices.front() == 4);
    REQUIRE(comp.vertices.back() == 5);
}

TEST_CASE("menu edge sets are all distinct and locatable") {
    CycleFixture f;
    TwoColorSubgraph h = two_color_subgraph(f.g, f.col, 0, 1);
    auto menu = subpath_menu(h);
    std::set<std::vector<int>> seen;
    for (const SubPathChoice& s : menu) {
        std::vector<int> e = s.edges;
        std::sort(e.begin(), e.end());
        REQUIRE(seen.insert(e).second);
    }
    for (int i = 0; i < int(menu.size()); ++i) {
        auto found = locate_subpath(menu, menu[i].edges);
        REQUIRE(found.has_value());
        REQUIRE(*found == i);
    }
}

TEST_CASE("anchored pairs are edge disjoint with one interior end each") {
    TwoPathFixture f;
    TwoColorSubgraph h = two_color_subgraph(f.g, f.col, 0, 1);
    auto pairs = anchored_pair_menu(h);
    for (const auto& [a, b] : pairs) {
        std::set<int> ea(a.edges.begin(), a.edges.end());
        for (int e : b.edges) REQUIRE_FALSE(ea.count(e));
    }
    for (int i = 0; i < int(pairs.size()); ++i) {
        auto found = locate_pair(pairs, pairs[i].second.edges, pairs[i].first.edges);
        REQUIRE(found.has_value());
        REQUIRE(*found == i);
    }
}

TEST_CASE("flip_edges toggles within the pair and rejects other colors") {
    TwoPathFixture f;
    Coloring col = f.col;
    flip_edges(col, {0, 1}, 0, 1);
    REQUIRE(col.color[0] == 1);
    REQUIRE(col.color[1] == 0);
    Coloring other{3, {2, 0, 0, 0}};
    REQUIRE_THROWS_AS(flip_edges(other, {0}, 0, 1), invariant_error);
}
