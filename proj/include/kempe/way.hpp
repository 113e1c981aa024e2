#pragma once

#include "kempe/error.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

enum class Branch { Lazy, TwoColor, ThreeColor };
enum class Sub { A, B, C };

// Selection stage record. index is a menu position for Sub B (subpath menu)
// or Sub C (anchored pair menu); -1 means the menu was empty and the branch
// fell through to doing nothing while keeping its probability mass.
struct SelectionRec {
    Sub sub = Sub::A;
    int index = -1;

    bool operator==(const SelectionRec& o) const { return sub == o.sub && index == o.index; }
};

// Two-color follow-up. DeficientFlip: mandatory recolor at a deficient
// vertex. FreeFlip: act-coin heads, recolor one two-colored edge. FreeNone:
// act-coin heads but the color pair covers no edge. Nothing: act-coin tails.
struct PostRec {
    enum Kind { DeficientFlip, FreeFlip, FreeNone, Nothing };
    Kind kind = Nothing;
    int vertex = -1;
    int edge = -1;

    bool operator==(const PostRec& o) const {
        return kind == o.kind && vertex == o.vertex && edge == o.edge;
    }
};

// Three-color follow-up. Deficient: pivot is a deficient vertex, edge is the
// picked repeated-color edge (-1 in the regular kernel, whose cycle is
// forced). NonDeficient: pivot with its picked two-colored edge f.
// NoneQualifying: the non-deficient side came up empty, nothing happens.
struct PivotRec {
    enum Kind { Deficient, NonDeficient, NoneQualifying };
    Kind kind = NoneQualifying;
    int vertex = -1;
    int edge = -1;

    bool operator==(const PivotRec& o) const {
        return kind == o.kind && vertex == o.vertex && edge == o.edge;
    }
};

struct Way {
    Branch branch = Branch::Lazy;
    int c = -1, cp = -1, cpp = -1;
    SelectionRec sel;
    PostRec post;   // TwoColor only
    PivotRec pivot; // ThreeColor only
    std::vector<std::pair<int, int>> repair_picks; // (vertex, edge), repair order

    bool operator==(const Way& o) const {
        return branch == o.branch && c == o.c && cp == o.cp && cpp == o.cpp &&
               sel == o.sel && post == o.post && pivot == o.pivot &&
               repair_picks == o.repair_picks;
    }
    bool operator!=(const Way& o) const { return !(*this == o); }
};

// Same record shape for the restricted kernel; kept as its own type because
// the two kernels accept different field combinations and must not be mixed.
struct RegularWay {
    Branch branch = Branch::Lazy;
    int c = -1, cp = -1, cpp = -1;
    SelectionRec sel; // Sub::A or Sub::B only
    PostRec post;
    PivotRec pivot;
    std::vector<std::pair<int, int>> repair_picks; // at most one

    bool operator==(const RegularWay& o) const {
        return branch == o.branch && c == o.c && cp == o.cp && cpp == o.cpp &&
               sel == o.sel && post == o.post && pivot == o.pivot &&
               repair_picks == o.repair_picks;
    }
    bool operator!=(const RegularWay& o) const { return !(*this == o); }
};

namespace detail {

inline std::string sub_name(Sub s) { return s == Sub::A ? "a" : s == Sub::B ? "b" : "c"; }

inline std::string sel_text(const SelectionRec& s) {
    std::string out = "sub=" + sub_name(s.sub) + " sel=";
    out += (s.index < 0) ? "none" : std::to_string(s.index);
    return out;
}

inline std::string post_text(const PostRec& p) {
    switch (p.kind) {
    case PostRec::DeficientFlip:
        return "post=def:" + std::to_string(p.vertex) + ":" + std::to_string(p.edge);
    case PostRec::FreeFlip: return "post=free:" + std::to_string(p.edge);
    case PostRec::FreeNone: return "post=freenone";
    default: return "post=none";
    }
}

inline std::string pivot_text(const PivotRec& p) {
    switch (p.kind) {
    case PivotRec::Deficient:
        if (p.edge < 0) return "piv=def:" + std::to_string(p.vertex);
        return "piv=def:" + std::to_string(p.vertex) + ":" + std::to_string(p.edge);
    case PivotRec::NonDeficient:
        return "piv=nd:" + std::to_string(p.vertex) + ":" + std::to_string(p.edge);
    default: return "piv=nq";
    }
}

inline std::string rep_text(const std::vector<std::pair<int, int>>& picks) {
    if (picks.empty()) return "rep=-";
    std::string out = "rep=";
    for (size_t i = 0; i < picks.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(picks[i].first) + ":" + std::to_string(picks[i].second);
    }
    return out;
}

inline std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline int to_int(const std::string& s) {
    require(!s.empty(), "empty number in way text");
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    require(pos == s.size(), "trailing junk in way number '" + s + "'");
    return v;
}

// Shared field parser for Way and RegularWay text.
template <class W>
inline W parse_way_fields(const std::string& text, const std::string& tag) {
    std::istringstream in(text);
    std::string head, kind;
    require(bool(in >> head >> kind), "way text too short");
    require(head == tag, "expected '" + tag + "' record");
    W w;
    if (kind == "lazy") {
        std::string extra;
        require(!(in >> extra), "trailing junk after lazy way");
        return w;
    }
    require(kind == "two" || kind == "three", "unknown way kind '" + kind + "'");
    w.branch = (kind == "two") ? Branch::TwoColor : Branch::ThreeColor;
    std::string tok;
    bool saw_sub = false, saw_sel = false, saw_post = false, saw_piv = false, saw_rep = false;
    while (in >> tok) {
        auto eq = tok.find('=');
        require(eq != std::string::npos, "malformed way field '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "c") {
            w.c = to_int(val);
        } else if (key == "cp") {
            w.cp = to_int(val);
        } else if (key == "cpp") {
            w.cpp = to_int(val);
        } else if (key == "sub") {
            require(val == "a" || val == "b" || val == "c", "bad sub value");
            w.sel.sub = val == "a" ? Sub::A : val == "b" ? Sub::B : Sub::C;
            saw_sub = true;
        } else if (key == "sel") {
            w.sel.index = (val == "none") ? -1 : to_int(val);
            saw_sel = true;
        } else if (key == "post") {
            auto parts = split_colon(val);
            if (parts[0] == "def") {
                require(parts.size() == 3, "bad def post");
                w.post = {PostRec::DeficientFlip, to_int(parts[1]), to_int(parts[2])};
            } else if (parts[0] == "free") {
                require(parts.size() == 2, "bad free post");
                w.post = {PostRec::FreeFlip, -1, to_int(parts[1])};
            } else if (parts[0] == "freenone") {
                w.post = {PostRec::FreeNone, -1, -1};
            } else if (parts[0] == "none") {
                w.post = {PostRec::Nothing, -1, -1};
            } else {
                throw std::invalid_argument("bad post value '" + val + "'");
            }
            saw_post = true;
        } else if (key == "piv") {
            auto parts = split_colon(val);
            if (parts[0] == "def") {
                require(parts.size() == 2 || parts.size() == 3, "bad def pivot");
                w.pivot = {PivotRec::Deficient, to_int(parts[1]),
                           parts.size() == 3 ? to_int(parts[2]) : -1};
            } else if (parts[0] == "nd") {
                require(parts.size() == 3, "bad nd pivot");
                w.pivot = {PivotRec::NonDeficient, to_int(parts[1]), to_int(parts[2])};
            } else if (parts[0] == "nq") {
                w.pivot = {PivotRec::NoneQualifying, -1, -1};
            } else {
                throw std::invalid_argument("bad pivot value '" + val + "'");
            }
            saw_piv = true;
        } else if (key == "rep") {
            if (val != "-") {
                std::istringstream rs(val);
                std::string item;
                while (std::getline(rs, item, ',')) {
                    auto parts = split_colon(item);
                    require(parts.size() == 2, "bad repair pick");
                    w.repair_picks.emplace_back(to_int(parts[0]), to_int(parts[1]));
                }
            }
            saw_rep = true;
        } else {
            throw std::invalid_argument("unknown way field '" + key + "'");
        }
    }
    require(w.c >= 0 && w.cp >= 0, "way missing colors");
    require(w.c < w.cp, "way colors must be an ascending pair");
    require(saw_sub && saw_sel && saw_rep, "way missing selection fields");
    if (w.branch == Branch::TwoColor) {
        require(saw_post && !saw_piv && w.cpp < 0, "two-color way has wrong fields");
    } else {
        require(saw_piv && !saw_post && w.cpp >= 0, "three-color way has wrong fields");
        require(w.cpp != w.c && w.cpp != w.cp, "distinguished color inside the pair");
    }
    return w;
}

template <class W>
inline std::string format_way_fields(const W& w, const std::string& tag) {
    if (w.branch == Branch::Lazy) return tag + " lazy";
    std::string out = tag;
    out += (w.branch == Branch::TwoColor) ? " two" : " three";
    out += " c=" + std::to_string(w.c) + " cp=" + std::to_string(w.cp);
    if (w.branch == Branch::ThreeColor) out += " cpp=" + std::to_string(w.cpp);
    out += " " + sel_text(w.sel);
    if (w.branch == Branch::TwoColor)
        out += " " + post_text(w.post);
    else
        out += " " + pivot_text(w.pivot);
    out += " " + rep_text(w.repair_picks);
    return out;
}

} // namespace detail

inline std::string format_way(const Way& w) { return detail::format_way_fields(w, "way"); }
inline Way parse_way(const std::string& text) {
    return detail::parse_way_fields<Way>(text, "way");
}

inline std::string format_way(const RegularWay& w) {
    return detail::format_way_fields(w, "rway");
}
inline RegularWay parse_regular_way(const std::string& text) {
    return detail::parse_way_fields<RegularWay>(text, "rway");
}

} // namespace kempe
