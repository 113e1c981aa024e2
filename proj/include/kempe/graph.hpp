#pragma once

#include "kempe/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

// Simple bipartite graph with an ordered edge list. Vertices are global ids:
// left class 0..n_left-1, right class n_left..n_left+n_right-1. Edge order is
// the input order and is load-bearing: menus, traversals and the enumeration
// oracle all derive their canonical order from it.
struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::pair<int, int>> edges; // (left id, right id)
    std::vector<std::vector<int>> adj;      // vertex id -> incident edge ids, ascending

    int num_vertices() const { return n_left + n_right; }
    int num_edges() const { return int(edges.size()); }
    bool is_left(int v) const { return v < n_left; }

    int other_end(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }

    int degree(int v) const { return int(adj[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
        return d;
    }
};

inline BipartiteGraph make_graph(int n_left, int n_right,
                                 const std::vector<std::pair<int, int>>& edge_list) {
    require(n_left >= 0 && n_right >= 0, "vertex counts must be nonnegative");
    BipartiteGraph g;
    g.n_left = n_left;
    g.n_right = n_right;
    g.adj.assign(n_left + n_right, {});
    for (auto [u, w] : edge_list) {
        require(0 <= u && u < n_left, "left endpoint out of range");
        require(n_left <= w && w < n_left + n_right, "right endpoint out of range");
        for (int e : g.adj[u])
            require(g.edges[e].second != w, "duplicate edge");
        int id = int(g.edges.size());
        g.edges.emplace_back(u, w);
        g.adj[u].push_back(id);
        g.adj[w].push_back(id);
    }
    return g;
}

// K_{a,b} with edges in row-major order.
inline BipartiteGraph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return make_graph(a, b, es);
}

// Text format:
//   p bipartite <|U|> <|W|> <|E|>
//   e <u> <w>          (1-based within each class, |E| lines)
// Blank lines and lines starting with '#' are ignored.
inline BipartiteGraph read_graph(std::istream& in) {
    std::string line;
    int nu = -1, nw = -1, ne = -1;
    std::vector<std::pair<int, int>> es;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "p") {
            require(nu < 0, "duplicate p line");
            std::string kind;
            require(bool(ls >> kind >> nu >> nw >> ne), "malformed p line");
            require(kind == "bipartite", "expected 'p bipartite'");
            require(nu >= 0 && nw >= 0 && ne >= 0, "negative size in p line");
        } else if (tok == "e") {
            require(nu >= 0, "e line before p line");
            int u, w;
            require(bool(ls >> u >> w), "malformed e line");
            require(1 <= u && u <= nu, "edge endpoint u out of range");
            require(1 <= w && w <= nw, "edge endpoint w out of range");
            es.emplace_back(u - 1, nu + w - 1);
        } else {
            throw std::invalid_argument("unknown line type '" + tok + "' in graph file");
        }
    }
    require(nu >= 0, "missing p line");
    require(int(es.size()) == ne, "edge count does not match p line");
    return make_graph(nu, nw, es);
}

inline void write_graph(std::ostream& out, const BipartiteGraph& g) {
    out << "p bipartite " << g.n_left << " " << g.n_right << " " << g.num_edges() << "\n";
    for (auto [u, w] : g.edges)
        out << "e " << (u + 1) << " " << (w - g.n_left + 1) << "\n";
}

} // namespace kempe
