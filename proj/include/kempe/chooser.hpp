#pragma once

#include "kempe/error.hpp"
#include "kempe/rational.hpp"
#include "kempe/rng.hpp"
#include "kempe/way.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace kempe {

// The kernel body is written once against this interface. A RandomChooser
// drives a live proposal, a ReplayChooser forces a recorded way back through
// the same code path (validating it on the fly), and an EnumChooser turns the
// body into a DFS over every reachable way. Every implementation accumulates
// the exact probability of the realized path in `prob`.
class Chooser {
public:
    virtual ~Chooser() = default;

    Rat prob = 1;

    virtual Branch choose_branch(int k) = 0;
    virtual std::pair<int, int> choose_color_pair(int k) = 0;              // c < cp
    virtual std::tuple<int, int, int> choose_color_triple(int k) = 0;      // (c < cp, cpp)
    virtual Sub choose_sub(bool allow_c) = 0;
    virtual std::optional<int> choose_menu_index(int count) = 0;           // nullopt iff 0
    virtual int choose_deficient(const std::vector<int>& vs) = 0;          // vertex id
    virtual int choose_repeated_edge(int v, int e1, int e2) = 0;
    virtual bool choose_act() = 0;
    virtual int choose_free_edge(const std::vector<int>& edges) = 0;
    virtual bool choose_pivot_deficient() = 0;
    virtual std::optional<int> choose_qualifying(const std::vector<int>& vs) = 0;
    virtual int choose_f_edge(const std::vector<int>& edges) = 0;
    virtual int choose_repair_pick(int v, int e1, int e2) = 0;

protected:
    // Lazy mass absorbs the branches a small k makes impossible: 1/2 for
    // k >= 3, 3/4 for k = 2 (no triple exists), 1 for k = 1.
    static Rat branch_mass(int k, Branch b) {
        if (k >= 3) return b == Branch::Lazy ? rat(1, 2) : rat(1, 4);
        if (k == 2) {
            require(b != Branch::ThreeColor, "three-color branch needs k >= 3");
            return b == Branch::Lazy ? rat(3, 4) : rat(1, 4);
        }
        require(b == Branch::Lazy, "only the lazy branch exists for k = 1");
        return rat(1, 1);
    }

    static long long pair_count(int k) { return (long long)k * (k - 1) / 2; }
    static long long triple_count(int k) { return (long long)k * (k - 1) * (k - 2) / 6; }
};

class RandomChooser : public Chooser {
public:
    explicit RandomChooser(SplitMix64& rng) : rng_(rng) {}

    Branch choose_branch(int k) override {
        Branch b;
        if (k >= 3) {
            uint64_t r = rng_.below(4);
            b = r < 2 ? Branch::Lazy : r == 2 ? Branch::TwoColor : Branch::ThreeColor;
        } else if (k == 2) {
            b = rng_.below(4) < 3 ? Branch::Lazy : Branch::TwoColor;
        } else {
            b = Branch::Lazy;
        }
        prob *= branch_mass(k, b);
        return b;
    }

    std::pair<int, int> choose_color_pair(int k) override {
        long long n = pair_count(k);
        long long idx = (long long)rng_.below(n);
        prob *= Rat(1, Int(n));
        for (int c = 0; c < k; ++c) {
            long long here = k - 1 - c;
            if (idx < here) return {c, c + 1 + int(idx)};
            idx -= here;
        }
        ensure(false, "pair unrank out of range");
        return {-1, -1};
    }

    std::tuple<int, int, int> choose_color_triple(int k) override {
        long long n = triple_count(k);
        long long idx = (long long)rng_.below(n);
        prob *= Rat(1, Int(3 * n));
        int x = -1, y = -1, z = -1;
        for (int a = 0; a < k && x < 0; ++a)
            for (int b = a + 1; b < k && x < 0; ++b)
                for (int c2 = b + 1; c2 < k && x < 0; ++c2)
                    if (idx-- == 0) { x = a; y = b; z = c2; }
        int which = int(rng_.below(3));
        int trio[3] = {x, y, z};
        int cpp = trio[which];
        int lo = -1, hi = -1;
        for (int t : trio)
            if (t != cpp) (lo < 0 ? lo : hi) = t;
        return {lo, hi, cpp};
    }

    Sub choose_sub(bool allow_c) override {
        int n = allow_c ? 3 : 2;
        prob *= Rat(1, n);
        return Sub(rng_.below(n));
    }

    std::optional<int> choose_menu_index(int count) override {
        if (count == 0) return std::nullopt;
        prob *= Rat(1, count);
        return int(rng_.below(count));
    }

    int choose_deficient(const std::vector<int>& vs) override {
        prob *= Rat(1, Int(vs.size()));
        return vs[rng_.below(vs.size())];
    }

    int choose_repeated_edge(int, int e1, int e2) override {
        prob *= rat(1, 2);
        return rng_.below(2) ? e2 : e1;
    }

    bool choose_act() override {
        prob *= rat(1, 2);
        return rng_.below(2) == 0;
    }

    int choose_free_edge(const std::vector<int>& edges) override {
        prob *= Rat(1, Int(edges.size()));
        return edges[rng_.below(edges.size())];
    }

    bool choose_pivot_deficient() override {
        prob *= rat(1, 2);
        return rng_.below(2) == 0;
    }

    std::optional<int> choose_qualifying(const std::vector<int>& vs) override {
        if (vs.empty()) return std::nullopt;
        prob *= Rat(1, Int(vs.size()));
        return vs[rng_.below(vs.size())];
    }

    int choose_f_edge(const std::vector<int>& edges) override {
        prob *= Rat(1, Int(edges.size()));
        return edges[rng_.below(edges.size())];
    }

    int choose_repair_pick(int, int e1, int e2) override {
        prob *= rat(1, 2);
        return rng_.below(2) ? e2 : e1;
    }

private:
    SplitMix64& rng_;
};

// Forces a recorded way through the kernel. Any disagreement between the
// record and the live state is a hard "way does not apply". The kernel
// additionally re-assembles a way during replay and compares it whole, so
// validation here only needs to keep the flow on track.
template <class W>
class ReplayChooser : public Chooser {
public:
    explicit ReplayChooser(const W& way) : way_(way) {}

    Branch choose_branch(int k) override {
        prob *= branch_mass(k, way_.branch); // throws on impossible branch
        return way_.branch;
    }

    std::pair<int, int> choose_color_pair(int k) override {
        require(0 <= way_.c && way_.c < way_.cp && way_.cp < k,
                "way does not apply: bad color pair");
        prob *= Rat(1, Int(pair_count(k)));
        return {way_.c, way_.cp};
    }

    std::tuple<int, int, int> choose_color_triple(int k) override {
        require(0 <= way_.c && way_.c < way_.cp && way_.cp < k,
                "way does not apply: bad color pair");
        require(0 <= way_.cpp && way_.cpp < k && way_.cpp != way_.c && way_.cpp != way_.cp,
                "way does not apply: bad distinguished color");
        prob *= Rat(1, Int(3 * triple_count(k)));
        return {way_.c, way_.cp, way_.cpp};
    }

    Sub choose_sub(bool allow_c) override {
        require(allow_c || way_.sel.sub != Sub::C, "way does not apply: no c branch here");
        prob *= Rat(1, allow_c ? 3 : 2);
        return way_.sel.sub;
    }

    std::optional<int> choose_menu_index(int count) override {
        if (way_.sel.index < 0) {
            require(count == 0, "way does not apply: recorded empty menu is nonempty");
            return std::nullopt;
        }
        require(way_.sel.index < count, "way does not apply: menu index out of range");
        prob *= Rat(1, count);
        return way_.sel.index;
    }

    int choose_deficient(const std::vector<int>& vs) override {
        int want = (way_.branch == Branch::TwoColor) ? way_.post.vertex : way_.pivot.vertex;
        require(std::find(vs.begin(), vs.end(), want) != vs.end(),
                "way does not apply: recorded vertex is not deficient");
        prob *= Rat(1, Int(vs.size()));
        return want;
    }

    int choose_repeated_edge(int, int e1, int e2) override {
        int want = (way_.branch == Branch::TwoColor) ? way_.post.edge : way_.pivot.edge;
        require(want == e1 || want == e2, "way does not apply: recorded edge not in pair");
        prob *= rat(1, 2);
        return want;
    }

    bool choose_act() override {
        require(way_.post.kind != PostRec::DeficientFlip,
                "way does not apply: expected a deficient flip");
        prob *= rat(1, 2);
        return way_.post.kind != PostRec::Nothing;
    }

    int choose_free_edge(const std::vector<int>& edges) override {
        require(way_.post.kind == PostRec::FreeFlip, "way does not apply: no free flip");
        require(std::find(edges.begin(), edges.end(), way_.post.edge) != edges.end(),
                "way does not apply: free edge not in the pair classes");
        prob *= Rat(1, Int(edges.size()));
        return way_.post.edge;
    }

    bool choose_pivot_deficient() override {
        prob *= rat(1, 2);
        return way_.pivot.kind == PivotRec::Deficient;
    }

    std::optional<int> choose_qualifying(const std::vector<int>& vs) override {
        if (way_.pivot.kind == PivotRec::NoneQualifying) {
            require(vs.empty(), "way does not apply: qualifying set is nonempty");
            return std::nullopt;
        }
        require(way_.pivot.kind == PivotRec::NonDeficient,
                "way does not apply: pivot kind mismatch");
        require(std::find(vs.begin(), vs.end(), way_.pivot.vertex) != vs.end(),
                "way does not apply: pivot does not qualify");
        prob *= Rat(1, Int(vs.size()));
        return way_.pivot.vertex;
    }

    int choose_f_edge(const std::vector<int>& edges) override {
        require(std::find(edges.begin(), edges.end(), way_.pivot.edge) != edges.end(),
                "way does not apply: f edge not incident in pair colors");
        prob *= Rat(1, Int(edges.size()));
        return way_.pivot.edge;
    }

    int choose_repair_pick(int v, int e1, int e2) override {
        require(next_pick_ < way_.repair_picks.size(),
                "way does not apply: missing repair pick");
        auto [rv, re] = way_.repair_picks[next_pick_++];
        require(rv == v, "way does not apply: repair pick vertex mismatch");
        require(re == e1 || re == e2, "way does not apply: repair pick edge mismatch");
        prob *= rat(1, 2);
        return re;
    }

    bool all_picks_consumed() const { return next_pick_ == way_.repair_picks.size(); }

private:
    const W& way_;
    size_t next_pick_ = 0;
};

// DFS driver: choices are a tape. Positions before `prefix.size()` are
// forced; each later choice takes option 0 and records how many options
// existed, so the caller can run an odometer over the whole tree.
class EnumChooser : public Chooser {
public:
    explicit EnumChooser(std::vector<int> prefix) : prefix_(std::move(prefix)) {}

    std::vector<int> chosen;    // the full path taken this run
    std::vector<int> counts;    // option count at each position

    Branch choose_branch(int k) override {
        int n = k >= 3 ? 3 : k == 2 ? 2 : 1;
        int i = take(n);
        Branch b = Branch(i);
        prob *= branch_mass(k, b);
        return b;
    }

    std::pair<int, int> choose_color_pair(int k) override {
        long long n = pair_count(k);
        int idx = take(int(n));
        prob *= Rat(1, Int(n));
        for (int c = 0; c < k; ++c) {
            int here = k - 1 - c;
            if (idx < here) return {c, c + 1 + idx};
            idx -= here;
        }
        ensure(false, "pair unrank out of range");
        return {-1, -1};
    }

    std::tuple<int, int, int> choose_color_triple(int k) override {
        long long n = triple_count(k);
        int idx = take(int(n));
        int which = take(3);
        prob *= Rat(1, Int(3 * n));
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int c2 = b + 1; c2 < k; ++c2)
                    if (idx-- == 0) {
                        int trio[3] = {a, b, c2};
                        int cpp = trio[which];
                        int lo = -1, hi = -1;
                        for (int t : trio)
                            if (t != cpp) (lo < 0 ? lo : hi) = t;
                        return {lo, hi, cpp};
                    }
        ensure(false, "triple unrank out of range");
        return {-1, -1, -1};
    }

    Sub choose_sub(bool allow_c) override {
        int n = allow_c ? 3 : 2;
        int i = take(n);
        prob *= Rat(1, n);
        return Sub(i);
    }

    std::optional<int> choose_menu_index(int count) override {
        if (count == 0) return std::nullopt;
        int i = take(count);
        prob *= Rat(1, count);
        return i;
    }

    int choose_deficient(const std::vector<int>& vs) override {
        int i = take(int(vs.size()));
        prob *= Rat(1, Int(vs.size()));
        return vs[i];
    }

    int choose_repeated_edge(int, int e1, int e2) override {
        int i = take(2);
        prob *= rat(1, 2);
        return i ? e2 : e1;
    }

    bool choose_act() override {
        int i = take(2);
        prob *= rat(1, 2);
        return i == 0;
    }

    int choose_free_edge(const std::vector<int>& edges) override {
        int i = take(int(edges.size()));
        prob *= Rat(1, Int(edges.size()));
        return edges[i];
    }

    bool choose_pivot_deficient() override {
        int i = take(2);
        prob *= rat(1, 2);
        return i == 0;
    }

    std::optional<int> choose_qualifying(const std::vector<int>& vs) override {
        if (vs.empty()) return std::nullopt;
        int i = take(int(vs.size()));
        prob *= Rat(1, Int(vs.size()));
        return vs[i];
    }

    int choose_f_edge(const std::vector<int>& edges) override {
        int i = take(int(edges.size()));
        prob *= Rat(1, Int(edges.size()));
        return edges[i];
    }

    int choose_repair_pick(int, int e1, int e2) override {
        int i = take(2);
        prob *= rat(1, 2);
        return i ? e2 : e1;
    }

private:
    int take(int n) {
        ensure(n > 0, "enumeration hit an empty choice");
        size_t d = counts.size();
        int pick = (d < prefix_.size()) ? prefix_[d] : 0;
        ensure(pick < n, "enumeration prefix out of range");
        counts.push_back(n);
        chosen.push_back(pick);
        return pick;
    }

    std::vector<int> prefix_;
};

} // namespace kempe
