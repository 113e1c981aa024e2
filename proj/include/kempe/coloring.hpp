#pragma once

#include "kempe/error.hpp"
#include "kempe/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kempe {

struct Coloring {
    int k = 0;
    std::vector<int> color; // color[edge id], values in [0, k)

    bool operator==(const Coloring& o) const { return k == o.k && color == o.color; }
    bool operator!=(const Coloring& o) const { return !(*this == o); }
};

enum class Status { Proper, Almost, Invalid };

// A deficient vertex has exactly one color appearing on two incident edges.
// missing lists every color absent at the vertex (nonempty whenever
// degree <= k, since the repeat eats one slot); a low-degree vertex can thus
// be deficient in several (repeated, missing) combinations at once.
struct Deficiency {
    int vertex = -1;
    int repeated = -1;
    std::vector<int> missing; // ascending
};

struct ValidationResult {
    Status status = Status::Invalid;
    std::vector<Deficiency> deficiencies;    // ascending by vertex id
    std::vector<int> invalid_vertices;       // vertices breaking the almost shape
};

inline ValidationResult validate(const BipartiteGraph& g, const Coloring& col) {
    require(int(col.color.size()) == g.num_edges(), "coloring size mismatch");
    for (int c : col.color)
        require(0 <= c && c < col.k, "edge color out of range");
    ValidationResult res;
    std::vector<int> count(col.k);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (int e : g.adj[v]) ++count[col.color[e]];
        int repeated = -1;
        bool bad = false;
        for (int c = 0; c < col.k; ++c) {
            if (count[c] >= 3) bad = true;
            if (count[c] == 2) {
                if (repeated >= 0) bad = true;
                repeated = c;
            }
        }
        if (bad) {
            res.invalid_vertices.push_back(v);
        } else if (repeated >= 0) {
            Deficiency d;
            d.vertex = v;
            d.repeated = repeated;
            for (int c = 0; c < col.k; ++c)
                if (count[c] == 0) d.missing.push_back(c);
            res.deficiencies.push_back(std::move(d));
        }
    }
    if (!res.invalid_vertices.empty() || res.deficiencies.size() > 2)
        res.status = Status::Invalid;
    else if (!res.deficiencies.empty())
        res.status = Status::Almost;
    else
        res.status = Status::Proper;
    return res;
}

inline bool is_proper(const BipartiteGraph& g, const Coloring& col) {
    return validate(g, col).status == Status::Proper;
}

// Greedy proper coloring in edge input order. When no color is free at both
// ends, one alternating path flip frees one up; in a bipartite graph the flip
// can never run back into the starting edge, so k = max degree always
// suffices.
inline Coloring initial_coloring(const BipartiteGraph& g, int k) {
    require(k >= 1, "need at least one color");
    require(k >= g.max_degree(), "infeasible color count: k below max degree");
    Coloring col;
    col.k = k;
    col.color.assign(g.num_edges(), -1);
    auto free_at = [&](int v, int from) {
        std::vector<bool> used(k, false);
        for (int e : g.adj[v])
            if (col.color[e] >= 0) used[col.color[e]] = true;
        for (int c = from; c < k; ++c)
            if (!used[c]) return c;
        return -1;
    };
    auto edge_with_color = [&](int v, int c) {
        for (int e : g.adj[v])
            if (col.color[e] == c) return e;
        return -1;
    };
    for (int id = 0; id < g.num_edges(); ++id) {
        auto [u, w] = g.edges[id];
        int a = free_at(u, 0);
        ensure(a >= 0, "greedy coloring ran out of colors at a left vertex");
        if (edge_with_color(w, a) < 0) {
            col.color[id] = a;
            continue;
        }
        int b = free_at(w, 0);
        ensure(b >= 0 && b != a, "greedy coloring ran out of colors at a right vertex");
        // Flip the maximal (a,b)-path out of w; parity keeps it away from u.
        // The arrival edge already carries the sought color after its flip,
        // so the walk must skip it or it would oscillate in place.
        int v = w, want = a, prev = -1;
        while (true) {
            int e = -1;
            for (int e2 : g.adj[v])
                if (e2 != prev && col.color[e2] == want) { e = e2; break; }
            if (e < 0) break;
            col.color[e] = (want == a) ? b : a;
            prev = e;
            v = g.other_end(e, v);
            want = (want == a) ? b : a;
        }
        ensure(edge_with_color(w, a) < 0 && edge_with_color(u, a) < 0,
               "alternating flip failed to free the color");
        col.color[id] = a;
    }
    ensure(is_proper(g, col), "greedy coloring produced an improper coloring");
    return col;
}

// Compact per-edge serialization used for histogram keys and oracle output.
inline char color_char(int c) {
    if (c < 10) return char('0' + c);
    if (c < 36) return char('a' + c - 10);
    if (c < 62) return char('A' + c - 36);
    throw std::invalid_argument("color index too large for string form");
}

inline std::string color_string(const Coloring& col) {
    std::string s;
    s.reserve(col.color.size());
    for (int c : col.color) s += color_char(c);
    return s;
}

// Text format: one line per edge, `c <edge-index> <color-index>`, 0-based.
inline Coloring read_coloring(std::istream& in, int num_edges, int k) {
    Coloring col;
    col.k = k;
    col.color.assign(num_edges, -1);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        require(tok == "c", "unknown line type '" + tok + "' in coloring file");
        int e, c;
        require(bool(ls >> e >> c), "malformed c line");
        require(0 <= e && e < num_edges, "edge index out of range in coloring file");
        require(0 <= c && c < k, "color index out of range in coloring file");
        require(col.color[e] < 0, "duplicate edge index in coloring file");
        col.color[e] = c;
    }
    for (int e = 0; e < num_edges; ++e)
        require(col.color[e] >= 0, "coloring file misses an edge");
    return col;
}

inline void write_coloring(std::ostream& out, const Coloring& col) {
    for (int e = 0; e < int(col.color.size()); ++e)
        out << "c " << e << " " << col.color[e] << "\n";
}

} // namespace kempe
