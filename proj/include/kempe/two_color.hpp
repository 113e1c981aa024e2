#pragma once

#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/graph.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace kempe {

// One component of the subgraph spanned by two color classes. In a proper
// coloring every vertex has degree <= 2 there, so components are simple paths
// or even cycles. Paths: vertices[i] -- edges[i] -- vertices[i+1]. Cycles:
// edges[i] joins vertices[i] and vertices[(i+1) % size].
struct Component {
    bool is_cycle = false;
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct TwoColorSubgraph {
    int c = -1, cp = -1;
    std::vector<Component> components; // ascending by smallest vertex id
    std::vector<int> edge_ids;         // all member edges, ascending
};

// Deterministic decomposition. Components are ordered by their smallest
// vertex id; a path starts at its lower-id endpoint; a cycle starts at its
// smallest vertex and walks toward the smaller-id neighbor. Every caller that
// indexes into a menu relies on this order being a pure function of the edge
// set, which it is: the flip of any selection keeps the edge set intact.
inline TwoColorSubgraph two_color_subgraph(const BipartiteGraph& g, const Coloring& col,
                                           int c, int cp) {
    require(0 <= c && c < col.k && 0 <= cp && cp < col.k && c != cp,
            "two_color_subgraph needs two distinct valid colors");
    TwoColorSubgraph h;
    h.c = c;
    h.cp = cp;
    int n = g.num_vertices();
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (col.color[e] == c || col.color[e] == cp) {
            h.edge_ids.push_back(e);
            inc[g.edges[e].first].push_back(e);
            inc[g.edges[e].second].push_back(e);
        }
    }
    for (int v = 0; v < n; ++v)
        ensure(inc[v].size() <= 2, "vertex has three edges in a two color class pair");

    std::vector<bool> seen_edge(g.num_edges(), false);
    auto walk_from = [&](int start, int first_edge, Component& comp) {
        comp.vertices.push_back(start);
        int v = start, e = first_edge;
        while (true) {
            seen_edge[e] = true;
            comp.edges.push_back(e);
            v = g.other_end(e, v);
            if (v == start) return true; // closed a cycle
            comp.vertices.push_back(v);
            int next = -1;
            for (int cand : inc[v])
                if (!seen_edge[cand]) next = cand;
            if (next < 0) return false;
            e = next;
        }
    };

    std::vector<bool> in_comp(n, false);
    for (int v = 0; v < n; ++v) {
        if (inc[v].empty() || in_comp[v]) continue;
        // Find the canonical start of v's component: lowest vertex id.
        std::vector<int> members{v};
        std::vector<bool> local(n, false);
        local[v] = true;
        for (size_t i = 0; i < members.size(); ++i)
            for (int e : inc[members[i]]) {
                int u = g.other_end(e, members[i]);
                if (!local[u]) {
                    local[u] = true;
                    members.push_back(u);
                }
            }
        int start = *std::min_element(members.begin(), members.end());
        bool cycle = true;
        for (int m : members)
            if (inc[m].size() == 1) cycle = false;
        Component comp;
        if (cycle) {
            int e0 = inc[start][0], e1 = inc[start][1];
            // Walk toward the smaller-id neighbor first.
            if (g.other_end(e1, start) < g.other_end(e0, start)) std::swap(e0, e1);
            comp.is_cycle = true;
            ensure(walk_from(start, e0, comp), "cycle walk failed to close");
        } else {
            // Start at the lower-id endpoint.
            int best = -1;
            for (int m : members)
                if (inc[m].size() == 1 && (best < 0 || m < best)) best = m;
            comp.is_cycle = false;
            ensure(!walk_from(best, inc[best][0], comp), "path walk closed unexpectedly");
        }
        for (int m : members) in_comp[m] = true;
        h.components.push_back(std::move(comp));
    }
    std::sort(h.components.begin(), h.components.end(),
              [](const Component& a, const Component& b) {
                  return a.vertices[0] < b.vertices[0];
              });
    return h;
}

// A contiguous piece of one component, or a whole cycle. end_a/end_b are the
// boundary vertices (-1 for a full cycle, which has none).
struct SubPathChoice {
    int comp = -1;
    bool full_cycle = false;
    int end_a = -1, end_b = -1;
    std::vector<int> edges;
};

namespace detail {

inline SubPathChoice path_piece(const Component& comp, int comp_idx, int i, int j) {
    SubPathChoice s;
    s.comp = comp_idx;
    s.end_a = comp.vertices[i];
    s.end_b = comp.vertices[j];
    for (int t = i; t < j; ++t) s.edges.push_back(comp.edges[t]);
    return s;
}

inline SubPathChoice cycle_arc(const Component& comp, int comp_idx, int i, int j,
                               bool complement) {
    SubPathChoice s;
    s.comp = comp_idx;
    s.end_a = comp.vertices[complement ? j : i];
    s.end_b = comp.vertices[complement ? i : j];
    int m = int(comp.edges.size());
    if (!complement) {
        for (int t = i; t < j; ++t) s.edges.push_back(comp.edges[t]);
    } else {
        for (int t = j; t != i; t = (t + 1) % m) s.edges.push_back(comp.edges[t]);
    }
    return s;
}

} // namespace detail

// Every subpath of every component, plus one full-cycle entry per cycle.
// Canonical order: components in order; within a path, index pairs (i,j)
// lexicographic; within a cycle the two arcs of each pair (forward arc first),
// then the full cycle. An m-vertex path yields C(m,2) entries, an m-cycle
// 2*C(m,2) + 1.
inline std::vector<SubPathChoice> subpath_menu(const TwoColorSubgraph& h) {
    std::vector<SubPathChoice> menu;
    for (int ci = 0; ci < int(h.components.size()); ++ci) {
        const Component& comp = h.components[ci];
        int m = int(comp.vertices.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (comp.is_cycle) {
                    menu.push_back(detail::cycle_arc(comp, ci, i, j, false));
                    menu.push_back(detail::cycle_arc(comp, ci, i, j, true));
                } else {
                    menu.push_back(detail::path_piece(comp, ci, i, j));
                }
            }
        if (comp.is_cycle) {
            SubPathChoice full;
            full.comp = ci;
            full.full_cycle = true;
            full.edges = comp.edges;
            menu.push_back(std::move(full));
        }
    }
    return menu;
}

// Subpaths having at least one boundary vertex of degree 2 in H, plus full
// cycles. On a path component this drops exactly the full path; on a cycle
// nothing is dropped.
inline std::vector<SubPathChoice> interior_subpath_menu(const TwoColorSubgraph& h) {
    std::vector<SubPathChoice> menu;
    for (int ci = 0; ci < int(h.components.size()); ++ci) {
        const Component& comp = h.components[ci];
        int m = int(comp.vertices.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (comp.is_cycle) {
                    menu.push_back(detail::cycle_arc(comp, ci, i, j, false));
                    menu.push_back(detail::cycle_arc(comp, ci, i, j, true));
                } else {
                    if (i == 0 && j == m - 1) continue;
                    menu.push_back(detail::path_piece(comp, ci, i, j));
                }
            }
        if (comp.is_cycle) {
            SubPathChoice full;
            full.comp = ci;
            full.full_cycle = true;
            full.edges = comp.edges;
            menu.push_back(std::move(full));
        }
    }
    return menu;
}

// Subpaths with an even number of edges, full cycles excluded. Only sensible
// when every component is a cycle; the flip of such a piece creates exactly
// two deficiencies of opposite kind in the same vertex class, or none.
inline std::vector<SubPathChoice> even_subpath_menu(const TwoColorSubgraph& h) {
    std::vector<SubPathChoice> menu;
    for (const SubPathChoice& s : subpath_menu(h)) {
        if (s.full_cycle) continue;
        if (s.edges.size() % 2 == 0) menu.push_back(s);
    }
    return menu;
}

// Subpaths with exactly one boundary vertex an endpoint of H. Only path
// components have endpoints, so these are proper prefixes and suffixes.
inline std::vector<SubPathChoice> anchored_subpaths(const TwoColorSubgraph& h) {
    std::vector<SubPathChoice> out;
    for (int ci = 0; ci < int(h.components.size()); ++ci) {
        const Component& comp = h.components[ci];
        if (comp.is_cycle) continue;
        int m = int(comp.vertices.size());
        for (int t = 1; t <= m - 2; ++t) out.push_back(detail::path_piece(comp, ci, 0, t));
        for (int t = 1; t <= m - 2; ++t) out.push_back(detail::path_piece(comp, ci, t, m - 1));
    }
    return out;
}

// Unordered pairs of edge-disjoint anchored subpaths, indexed
// lexicographically over the anchored_subpaths order.
inline std::vector<std::pair<SubPathChoice, SubPathChoice>>
anchored_pair_menu(const TwoColorSubgraph& h) {
    std::vector<SubPathChoice> singles = anchored_subpaths(h);
    std::vector<std::pair<SubPathChoice, SubPathChoice>> menu;
    for (size_t i = 0; i < singles.size(); ++i) {
        for (size_t j = i + 1; j < singles.size(); ++j) {
            bool disjoint = true;
            for (int e : singles[i].edges)
                for (int f : singles[j].edges)
                    if (e == f) disjoint = false;
            if (disjoint) menu.emplace_back(singles[i], singles[j]);
        }
    }
    return menu;
}

inline void flip_edges(Coloring& col, const std::vector<int>& edges, int c, int cp) {
    for (int e : edges) {
        ensure(col.color[e] == c || col.color[e] == cp,
               "flip touched an edge outside the color pair");
        col.color[e] = (col.color[e] == c) ? cp : c;
    }
}

// Locate an edge set in a menu (order-insensitive). Returns nullopt if absent.
inline std::optional<int> locate_subpath(const std::vector<SubPathChoice>& menu,
                                         std::vector<int> edges) {
    std::sort(edges.begin(), edges.end());
    for (int i = 0; i < int(menu.size()); ++i) {
        std::vector<int> m = menu[i].edges;
        std::sort(m.begin(), m.end());
        if (m == edges) return i;
    }
    return std::nullopt;
}

inline std::optional<int>
locate_pair(const std::vector<std::pair<SubPathChoice, SubPathChoice>>& menu,
            std::vector<int> ea, std::vector<int> eb) {
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    for (int i = 0; i < int(menu.size()); ++i) {
        std::vector<int> a = menu[i].first.edges, b = menu[i].second.edges;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if ((a == ea && b == eb) || (a == eb && b == ea)) return i;
    }
    return std::nullopt;
}

} // namespace kempe
