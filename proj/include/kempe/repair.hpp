#pragma once

#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/graph.hpp"
#include "kempe/two_color.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <vector>

namespace kempe {

// Maximal alternating trail in colors {ca, cb} containing first_edge. Edge
// reuse is forbidden, one edge may be banned outright. At a vertex carrying
// two usable continuation edges (a deficient vertex passed through) the lower
// edge id wins, so the trail is a pure function of its inputs.
//
// In a bipartite graph the trail can close only into a properly alternating
// cycle: a return to the start vertex arrives with the opposite color parity,
// never clashing with the first edge. Second visits elsewhere just end the
// trail at that vertex.
struct Trail {
    std::vector<int> edges;    // walk order
    std::vector<int> vertices; // walk order; cycles repeat the first vertex last
    bool closed = false;
};

inline Trail trail_through(const BipartiteGraph& g, const Coloring& col, int first_edge,
                           int ca, int cb, int banned_edge = -1) {
    ensure(col.color[first_edge] == ca || col.color[first_edge] == cb,
           "trail seed edge not in the color pair");
    std::vector<bool> used(g.num_edges(), false);
    used[first_edge] = true;
    std::deque<int> edges{first_edge};
    std::deque<int> verts{g.edges[first_edge].first, g.edges[first_edge].second};
    auto other_color = [&](int c) { return c == ca ? cb : ca; };
    auto next_edge = [&](int v, int want) {
        int best = -1;
        for (int e : g.adj[v])
            if (!used[e] && e != banned_edge && col.color[e] == want && (best < 0 || e < best))
                best = e;
        return best;
    };
    bool closed = false;
    // Back extension first; it may close the cycle.
    while (true) {
        int v = verts.back();
        int want = other_color(col.color[edges.back()]);
        int e = next_edge(v, want);
        if (e < 0) break;
        used[e] = true;
        edges.push_back(e);
        verts.push_back(g.other_end(e, v));
        if (verts.back() == verts.front()) {
            ensure(col.color[edges.front()] != col.color[edges.back()],
                   "trail closed without alternating at the joint");
            closed = true;
            break;
        }
    }
    if (!closed) {
        while (true) {
            int v = verts.front();
            int want = other_color(col.color[edges.front()]);
            int e = next_edge(v, want);
            if (e < 0) break;
            used[e] = true;
            edges.push_front(e);
            verts.push_front(g.other_end(e, v));
            ensure(verts.front() != verts.back(), "front extension closed a half-built trail");
        }
    }
    Trail t;
    t.edges.assign(edges.begin(), edges.end());
    t.vertices.assign(verts.begin(), verts.end());
    t.closed = closed;
    return t;
}

struct RepairStep {
    int vertex = -1;
    int picked_edge = -1;
    int repeated = -1;
    int partner = -1;
    std::vector<int> walk_edges;
};

struct RepairResult {
    Coloring coloring;
    std::vector<RepairStep> steps;
};

// Which color pairs up with the repeated one for the fixing walk: the lowest
// missing color inside the move's color context, falling back to the lowest
// missing color overall. The fallback only fires outside ordinary kernel
// flows (a kernel-created deficiency always misses a context color).
inline int repair_partner(const Deficiency& d, const std::vector<int>& context) {
    for (int c : context)
        if (std::find(d.missing.begin(), d.missing.end(), c) != d.missing.end()) return c;
    return d.missing.front();
}

// Eliminate the deficiencies of an almost coloring, lowest vertex id first.
// Per vertex: one of its two repeated-color edges is picked (a genuine coin in
// the kernel), and the maximal (repeated, partner)-walk through it is flipped.
// The walk either ends elsewhere, fixing this vertex and possibly creating or
// destroying nothing, or ends at the second visit of the other deficient
// vertex, changing that one's repeated color; it can never return to its own
// start. At most two rounds are ever needed.
inline RepairResult repair_deficiencies(const BipartiteGraph& g, Coloring col,
                                        const std::vector<int>& context,
                                        const std::function<int(int, int, int)>& pick) {
    RepairResult res;
    for (int round = 0; round < 3; ++round) {
        ValidationResult vr = validate(g, col);
        ensure(vr.status != Status::Invalid, "repair entered on an invalid coloring");
        if (vr.deficiencies.empty()) {
            res.coloring = std::move(col);
            return res;
        }
        ensure(round < 2, "repair failed to converge in two rounds");
        const Deficiency& d = vr.deficiencies.front();
        int e1 = -1, e2 = -1;
        for (int e : g.adj[d.vertex])
            if (col.color[e] == d.repeated) (e1 < 0 ? e1 : e2) = e;
        ensure(e1 >= 0 && e2 >= 0, "deficient vertex lost its repeated pair");
        int chosen = pick(d.vertex, e1, e2);
        ensure(chosen == e1 || chosen == e2, "repair pick outside the repeated pair");
        int partner = repair_partner(d, context);
        Trail t = trail_through(g, col, chosen, d.repeated, partner);
        ensure(!t.closed, "repair walk closed into a cycle");
        ensure(t.vertices.front() == d.vertex || t.vertices.back() == d.vertex,
               "repair walk does not start at the deficient vertex");
        RepairStep step;
        step.vertex = d.vertex;
        step.picked_edge = chosen;
        step.repeated = d.repeated;
        step.partner = partner;
        step.walk_edges = t.edges;
        flip_edges(col, t.edges, d.repeated, partner);
        res.steps.push_back(std::move(step));
    }
    ensure(false, "unreachable");
    return res;
}

} // namespace kempe
