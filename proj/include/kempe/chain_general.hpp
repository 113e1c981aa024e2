#pragma once

#include "kempe/chooser.hpp"
#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/graph.hpp"
#include "kempe/repair.hpp"
#include "kempe/two_color.hpp"
#include "kempe/way.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

namespace kempe {

// Everything the proposal flipped, stage by stage. reverse_way and the
// transformation planner rebuild their bookkeeping from this rather than
// re-deriving walks.
struct WayTrace {
    std::vector<std::vector<int>> selection_walks; // 0, 1 or 2 flipped edge sets
    int post_edge = -1;                            // recolored edge, -1 if none
    std::vector<int> pivot_walk;                   // three-color action walk
    bool pivot_closed = false;
    std::vector<RepairStep> repair_steps;
    std::vector<Deficiency> defs_after_selection;
    std::vector<Deficiency> defs_after_action;
};

struct Proposal {
    Coloring to;
    Way way;
    Rat prob;
    WayTrace trace;
};

namespace detail {

inline std::pair<int, int> repeated_edge_pair(const BipartiteGraph& g, const Coloring& col,
                                              int v, int color) {
    int e1 = -1, e2 = -1;
    for (int e : g.adj[v])
        if (col.color[e] == color) (e1 < 0 ? e1 : e2) = e;
    ensure(e1 >= 0 && e2 >= 0, "vertex does not carry the repeated color twice");
    return {e1, e2};
}

inline const Deficiency& deficiency_of(const std::vector<Deficiency>& defs, int v) {
    for (const Deficiency& d : defs)
        if (d.vertex == v) return d;
    throw invariant_error("vertex is not in the deficiency list");
}

// Vertices eligible as a non-deficient pivot: some edge of the distinguished
// color plus at least one edge in the pair colors, and not deficient.
inline std::vector<int> qualifying_vertices(const BipartiteGraph& g, const Coloring& col,
                                            const std::vector<Deficiency>& defs, int c,
                                            int cp, int cpp) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool deficient = false;
        for (const Deficiency& d : defs)
            if (d.vertex == v) deficient = true;
        if (deficient) continue;
        bool has_cpp = false, has_pair = false;
        for (int e : g.adj[v]) {
            if (col.color[e] == cpp) has_cpp = true;
            if (col.color[e] == c || col.color[e] == cp) has_pair = true;
        }
        if (has_cpp && has_pair) out.push_back(v);
    }
    return out;
}

} // namespace detail

// One kernel body behind three chooser personalities (random, replay,
// enumerate). Structure per move:
//   lazy | two-color: colors, selection a/b/c, then a mandatory recolor at a
//   deficient vertex or an optional free recolor, then repair | three-color:
//   colors + distinguished color, selection a/b/c over the pair subgraph,
//   pivot choice, one alternating flip in (repeated-or-f color, distinguished
//   color), then repair.
inline Proposal propose_general(const BipartiteGraph& g, const Coloring& from, Chooser& ch) {
    int k = from.k;
    require(is_proper(g, from), "proposal requires a proper coloring");
    Proposal p;
    Branch b = ch.choose_branch(k);
    p.way.branch = b;
    if (b == Branch::Lazy) {
        p.to = from;
        p.prob = ch.prob;
        return p;
    }
    Coloring col = from;
    if (b == Branch::TwoColor) {
        auto [c, cp] = ch.choose_color_pair(k);
        p.way.c = c;
        p.way.cp = cp;
        TwoColorSubgraph h = two_color_subgraph(g, col, c, cp);
        Sub sub = ch.choose_sub(true);
        p.way.sel.sub = sub;
        if (sub == Sub::B) {
            auto menu = subpath_menu(h);
            if (auto oi = ch.choose_menu_index(int(menu.size()))) {
                p.way.sel.index = *oi;
                flip_edges(col, menu[*oi].edges, c, cp);
                p.trace.selection_walks.push_back(menu[*oi].edges);
            }
        } else if (sub == Sub::C) {
            auto menu = anchored_pair_menu(h);
            if (auto oi = ch.choose_menu_index(int(menu.size()))) {
                p.way.sel.index = *oi;
                flip_edges(col, menu[*oi].first.edges, c, cp);
                flip_edges(col, menu[*oi].second.edges, c, cp);
                p.trace.selection_walks.push_back(menu[*oi].first.edges);
                p.trace.selection_walks.push_back(menu[*oi].second.edges);
            }
        }
        ValidationResult vr = validate(g, col);
        ensure(vr.status != Status::Invalid, "selection flip broke the coloring");
        p.trace.defs_after_selection = vr.deficiencies;
        if (!vr.deficiencies.empty()) {
            std::vector<int> vs;
            for (const Deficiency& d : vr.deficiencies) vs.push_back(d.vertex);
            int v = ch.choose_deficient(vs);
            const Deficiency& dv = detail::deficiency_of(vr.deficiencies, v);
            ensure(dv.repeated == c || dv.repeated == cp,
                   "two-color deficiency repeats a color outside the pair");
            auto [e1, e2] = detail::repeated_edge_pair(g, col, v, dv.repeated);
            int e = ch.choose_repeated_edge(v, e1, e2);
            col.color[e] = (col.color[e] == c) ? cp : c;
            p.way.post = {PostRec::DeficientFlip, v, e};
            p.trace.post_edge = e;
        } else if (ch.choose_act()) {
            std::vector<int> pair_edges;
            for (int e = 0; e < g.num_edges(); ++e)
                if (col.color[e] == c || col.color[e] == cp) pair_edges.push_back(e);
            if (pair_edges.empty()) {
                p.way.post = {PostRec::FreeNone, -1, -1};
            } else {
                int e = ch.choose_free_edge(pair_edges);
                col.color[e] = (col.color[e] == c) ? cp : c;
                p.way.post = {PostRec::FreeFlip, -1, e};
                p.trace.post_edge = e;
            }
        } else {
            p.way.post = {PostRec::Nothing, -1, -1};
        }
        ValidationResult vr2 = validate(g, col);
        ensure(vr2.status != Status::Invalid, "recolor broke the coloring");
        p.trace.defs_after_action = vr2.deficiencies;
        RepairResult rr = repair_deficiencies(
            g, std::move(col), {c, cp},
            [&](int v, int e1, int e2) { return ch.choose_repair_pick(v, e1, e2); });
        col = std::move(rr.coloring);
        for (const RepairStep& s : rr.steps)
            p.way.repair_picks.emplace_back(s.vertex, s.picked_edge);
        p.trace.repair_steps = std::move(rr.steps);
    } else {
        auto [c, cp, cpp] = ch.choose_color_triple(k);
        p.way.c = c;
        p.way.cp = cp;
        p.way.cpp = cpp;
        TwoColorSubgraph h = two_color_subgraph(g, col, c, cp);
        Sub sub = ch.choose_sub(true);
        p.way.sel.sub = sub;
        if (sub == Sub::B) {
            auto menu = interior_subpath_menu(h);
            if (auto oi = ch.choose_menu_index(int(menu.size()))) {
                p.way.sel.index = *oi;
                flip_edges(col, menu[*oi].edges, c, cp);
                p.trace.selection_walks.push_back(menu[*oi].edges);
            }
        } else if (sub == Sub::C) {
            auto menu = anchored_pair_menu(h);
            if (auto oi = ch.choose_menu_index(int(menu.size()))) {
                p.way.sel.index = *oi;
                flip_edges(col, menu[*oi].first.edges, c, cp);
                flip_edges(col, menu[*oi].second.edges, c, cp);
                p.trace.selection_walks.push_back(menu[*oi].first.edges);
                p.trace.selection_walks.push_back(menu[*oi].second.edges);
            }
        }
        ValidationResult vr = validate(g, col);
        ensure(vr.status != Status::Invalid, "selection flip broke the coloring");
        p.trace.defs_after_selection = vr.deficiencies;
        std::optional<int> pivot; // deficient pivot
        std::optional<int> nd_pivot;
        if (vr.deficiencies.size() == 2) {
            std::vector<int> vs{vr.deficiencies[0].vertex, vr.deficiencies[1].vertex};
            pivot = ch.choose_deficient(vs);
        } else if (vr.deficiencies.size() == 1) {
            if (ch.choose_pivot_deficient()) {
                pivot = vr.deficiencies[0].vertex;
            } else {
                auto q = detail::qualifying_vertices(g, col, vr.deficiencies, c, cp, cpp);
                nd_pivot = ch.choose_qualifying(q);
            }
        } else {
            auto q = detail::qualifying_vertices(g, col, vr.deficiencies, c, cp, cpp);
            nd_pivot = ch.choose_qualifying(q);
        }
        if (pivot) {
            int v = *pivot;
            const Deficiency& dv = detail::deficiency_of(vr.deficiencies, v);
            ensure(dv.repeated == c || dv.repeated == cp,
                   "pivot deficiency repeats a color outside the pair");
            auto [e1, e2] = detail::repeated_edge_pair(g, col, v, dv.repeated);
            int e = ch.choose_repeated_edge(v, e1, e2);
            Trail t = trail_through(g, col, e, dv.repeated, cpp);
            flip_edges(col, t.edges, dv.repeated, cpp);
            p.way.pivot = {PivotRec::Deficient, v, e};
            p.trace.pivot_walk = t.edges;
            p.trace.pivot_closed = t.closed;
        } else if (nd_pivot) {
            int v = *nd_pivot;
            int e0 = -1;
            for (int e : g.adj[v])
                if (col.color[e] == cpp) {
                    ensure(e0 < 0, "non-deficient pivot has two distinguished edges");
                    e0 = e;
                }
            ensure(e0 >= 0, "qualifying pivot lost its distinguished edge");
            std::vector<int> fs;
            for (int e : g.adj[v])
                if (col.color[e] == c || col.color[e] == cp) fs.push_back(e);
            int f = ch.choose_f_edge(fs);
            int ct = col.color[f];
            Trail t = trail_through(g, col, e0, cpp, ct, f);
            flip_edges(col, t.edges, cpp, ct);
            p.way.pivot = {PivotRec::NonDeficient, v, f};
            p.trace.pivot_walk = t.edges;
            p.trace.pivot_closed = t.closed;
        } else {
            p.way.pivot = {PivotRec::NoneQualifying, -1, -1};
        }
        ValidationResult vr2 = validate(g, col);
        ensure(vr2.status != Status::Invalid, "pivot flip broke the coloring");
        p.trace.defs_after_action = vr2.deficiencies;
        RepairResult rr = repair_deficiencies(
            g, std::move(col), {c, cp, cpp},
            [&](int v, int e1, int e2) { return ch.choose_repair_pick(v, e1, e2); });
        col = std::move(rr.coloring);
        for (const RepairStep& s : rr.steps)
            p.way.repair_picks.emplace_back(s.vertex, s.picked_edge);
        p.trace.repair_steps = std::move(rr.steps);
    }
    ensure(is_proper(g, col), "proposal did not end on a proper coloring");
    p.to = std::move(col);
    p.prob = ch.prob;
    return p;
}

inline Proposal propose_general(const BipartiteGraph& g, const Coloring& from,
                                SplitMix64& rng) {
    RandomChooser ch(rng);
    return propose_general(g, from, ch);
}

// Replay a recorded way against a state. Throws std::invalid_argument ("way
// does not apply") when the record cannot be realized from this state; the
// final whole-record comparison makes the validation airtight.
inline Proposal apply_general_way(const BipartiteGraph& g, const Coloring& from,
                                  const Way& way) {
    ReplayChooser<Way> ch(way);
    Proposal p = propose_general(g, from, ch);
    require(ch.all_picks_consumed(), "way does not apply: unused repair picks");
    require(p.way == way, "way does not apply: flow reconstructs a different way");
    return p;
}

inline Rat general_way_probability(const BipartiteGraph& g, const Coloring& from,
                                   const Way& way) {
    return apply_general_way(g, from, way).prob;
}

// DFS over every way out of `from`. Probabilities of the visited proposals
// sum to exactly 1 by construction; tests lean on that.
template <class F>
inline void enumerate_general_ways(const BipartiteGraph& g, const Coloring& from, F&& fn) {
    std::vector<int> prefix;
    while (true) {
        EnumChooser ch(prefix);
        Proposal p = propose_general(g, from, ch);
        fn(p);
        int d = int(ch.chosen.size()) - 1;
        while (d >= 0 && ch.chosen[d] + 1 >= ch.counts[d]) --d;
        if (d < 0) return;
        prefix.assign(ch.chosen.begin(), ch.chosen.begin() + d);
        prefix.push_back(ch.chosen[d] + 1);
    }
}

} // namespace kempe
