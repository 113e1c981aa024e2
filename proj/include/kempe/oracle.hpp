#pragma once

#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/graph.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kempe {

// Exhaustive enumeration of proper edge k-colorings by depth-first search in
// edge input order, colors tried ascending, so the output is lexicographic by
// color string. Reference oracle for the samplers; deliberately small-minded.
struct SolutionSet {
    int k = 0;
    std::vector<Coloring> colorings; // lexicographic
    bool overflow = false;           // hit the limit before finishing

    size_t size() const { return colorings.size(); }

    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        out.reserve(colorings.size());
        for (const Coloring& c : colorings) out.push_back(color_string(c));
        return out;
    }
};

inline SolutionSet enumerate_colorings(const BipartiteGraph& g, int k,
                                       size_t limit = size_t(1) << 24,
                                       bool force_large = false) {
    require(k >= 1, "need at least one color");
    require(force_large || g.num_edges() <= 24,
            "refusing to enumerate more than 24 edges without force");
    SolutionSet out;
    out.k = k;
    int m = g.num_edges();
    std::vector<uint32_t> used(g.num_vertices(), 0); // bitmask of colors at vertex
    ensure(k <= 31, "enumeration supports at most 31 colors");
    Coloring cur;
    cur.k = k;
    cur.color.assign(m, -1);
    // Explicit stack DFS: frame e holds the next color to try for edge e.
    std::vector<int> next_color(m + 1, 0);
    int e = 0;
    while (e >= 0) {
        if (e == m) {
            if (out.colorings.size() >= limit) {
                out.overflow = true;
                return out;
            }
            out.colorings.push_back(cur);
            --e;
            continue;
        }
        auto [u, w] = g.edges[e];
        if (cur.color[e] >= 0) {
            used[u] &= ~(uint32_t(1) << cur.color[e]);
            used[w] &= ~(uint32_t(1) << cur.color[e]);
            cur.color[e] = -1;
        }
        int c = next_color[e];
        while (c < k && ((used[u] | used[w]) >> c) & 1) ++c;
        if (c >= k) {
            next_color[e] = 0;
            --e;
            continue;
        }
        cur.color[e] = c;
        used[u] |= uint32_t(1) << c;
        used[w] |= uint32_t(1) << c;
        next_color[e] = c + 1;
        next_color[e + 1] = 0;
        ++e;
    }
    return out;
}

// Total variation distance between the empirical distribution of `counts`
// (indexed like the solution set, total n) and uniform over `support` states.
inline double tvd_from_uniform(const std::vector<uint64_t>& counts, uint64_t n,
                               size_t support) {
    require(support > 0, "empty support");
    require(counts.size() == support, "count vector does not match support");
    double acc = 0.0, uni = 1.0 / double(support);
    for (uint64_t c : counts) acc += std::abs(double(c) / double(n) - uni);
    return acc / 2.0;
}

// Chi-square statistic against the uniform distribution; df = support - 1.
inline double chi_square_uniform(const std::vector<uint64_t>& counts, uint64_t n) {
    require(!counts.empty(), "empty support");
    double expc = double(n) / double(counts.size());
    double acc = 0.0;
    for (uint64_t c : counts) {
        double d = double(c) - expc;
        acc += d * d / expc;
    }
    return acc;
}

// Map sampled histogram keys onto the oracle's index space. Throws if a
// sample is not a known proper coloring.
inline std::vector<uint64_t> align_histogram(const SolutionSet& sols,
                                             const std::map<std::string, uint64_t>& hist) {
    std::map<std::string, size_t> index;
    std::vector<std::string> strs = sols.strings();
    for (size_t i = 0; i < strs.size(); ++i) index[strs[i]] = i;
    std::vector<uint64_t> counts(sols.size(), 0);
    for (const auto& [key, n] : hist) {
        auto it = index.find(key);
        ensure(it != index.end(), "sampled state is not in the enumerated solution set");
        counts[it->second] = n;
    }
    return counts;
}

} // namespace kempe
