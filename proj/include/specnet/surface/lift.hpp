#pragma once

#include "specnet/surface/chart.hpp"
#include "specnet/surface/path.hpp"

#include <variant>
#include <vector>

namespace specnet {

// Flattened traversal of a path: generator legs interleaved with the wall-lane
// and cut crossings implied by the endpoint sides (displacement rule).
struct LegItem {
    std::string gen;
    int exp;
};
struct LaneItem {
    std::string lane;
    std::string label;  // label at the basepoint
    bool forward;       // crossing '-' -> '+' uses S, reverse uses S^-1
};
struct CutItem {
    bool forward;
};
using TraversalItem = std::variant<LegItem, LaneItem, CutItem>;

namespace detail {

inline void append_crossing(const SurfaceChart& chart, const std::string& bp_id,
                            bool forward, std::vector<TraversalItem>& out) {
    const auto& bp = chart.basepoint(bp_id);
    if (!bp.street) return;
    const Street& st = chart.street(*bp.street);
    if (forward) {
        for (const auto& item : st.seq) {
            if (item.kind == CrossItem::Kind::Lane)
                out.push_back(LaneItem{item.lane, st.lane_label.at(item.lane), true});
            else
                out.push_back(CutItem{true});
        }
    } else {
        for (auto it = st.seq.rbegin(); it != st.seq.rend(); ++it) {
            if (it->kind == CrossItem::Kind::Lane)
                out.push_back(LaneItem{it->lane, st.lane_label.at(it->lane), false});
            else
                out.push_back(CutItem{false});
        }
    }
}

} // namespace detail

// Expand a path into legs and crossings. For each generator leg: if it starts on
// the '-' side, the wall is crossed '+'->'-' first; if it ends on '-', the wall
// is crossed '-'->'+' after. Inverse legs invert and reverse their expansion.
inline std::vector<TraversalItem> traverse(const SurfaceChart& chart, const PathWord& path) {
    path.check(chart);
    std::vector<TraversalItem> out;
    for (const auto& s : path.steps()) {
        const auto& g = chart.generator(s.gen);
        std::vector<TraversalItem> leg;
        if (g.from_side == '-') detail::append_crossing(chart, g.from, false, leg);
        leg.push_back(LegItem{s.gen, 1});
        if (g.to_side == '-') detail::append_crossing(chart, g.to, true, leg);
        if (s.exp == -1) {
            std::vector<TraversalItem> rev;
            for (auto it = leg.rbegin(); it != leg.rend(); ++it) {
                if (auto* l = std::get_if<LegItem>(&*it))
                    rev.push_back(LegItem{l->gen, -l->exp});
                else if (auto* ln = std::get_if<LaneItem>(&*it))
                    rev.push_back(LaneItem{ln->lane, ln->label, !ln->forward});
                else
                    rev.push_back(CutItem{!std::get<CutItem>(*it).forward});
            }
            leg = std::move(rev);
        }
        out.insert(out.end(), leg.begin(), leg.end());
    }
    return out;
}

inline int cut_parity(const SurfaceChart& chart, const PathWord& path) {
    int p = 0;
    for (const auto& item : traverse(chart, path)) {
        if (auto* l = std::get_if<LegItem>(&item))
            p += chart.generator(l->gen).cut_parity;
        else if (std::holds_alternative<CutItem>(item))
            p += 1;
    }
    return p & 1;
}

struct LiftedPath {
    PathWord base;
    int start_sheet = 1;
    int end_sheet = 1;
    std::vector<int> sheet_trace;  // sheet after each step of the base word
};

inline LiftedPath lift(const SurfaceChart& chart, const PathWord& path, int start_sheet) {
    if (start_sheet != 1 && start_sheet != 2) throw BadInput("sheet must be 1 or 2");
    LiftedPath lp;
    lp.base = path;
    lp.start_sheet = start_sheet;
    int sheet = start_sheet;
    for (const auto& s : path.steps()) {
        PathWord one({PathStep{s.gen, s.exp}});
        // leading junction crossings belong to the previous step in the trace;
        // parity of the single-step word is what flips the sheet here
        if (cut_parity(chart, one)) sheet = 3 - sheet;
        lp.sheet_trace.push_back(sheet);
    }
    lp.end_sheet = sheet;
    return lp;
}

} // namespace specnet
