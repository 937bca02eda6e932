#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknots {

/// One crossing of a planar diagram: arc labels listed counterclockwise
/// starting from the incoming under-strand. The under-strand runs from
/// slot 0 to slot 2; the over-strand occupies slots 1 and 3 and its
/// direction is inferred by strand-following.
struct Crossing {
    std::array<int, 4> arcs;
    int operator[](int i) const { return arcs[static_cast<std::size_t>(i)]; }
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// PD-coded link diagram. An empty crossing list is the 0-crossing unknot.
/// Arc labels are 1..arc_count and each label occurs exactly twice.
struct PDCode {
    std::vector<Crossing> crossings;
    int arc_count = 0;

    bool empty() const { return crossings.empty(); }
    friend bool operator==(const PDCode&, const PDCode&) = default;
};

namespace detail {

inline void validate_pd(const PDCode& pd) {
    if (pd.crossings.empty()) {
        if (pd.arc_count != 0) throw std::invalid_argument("pd: empty diagram with arcs");
        return;
    }
    std::vector<int> count(static_cast<std::size_t>(pd.arc_count) + 1, 0);
    for (const auto& x : pd.crossings) {
        for (int a : x.arcs) {
            if (a < 1 || a > pd.arc_count)
                throw std::invalid_argument("pd: arc label out of range: " + std::to_string(a));
            ++count[static_cast<std::size_t>(a)];
        }
    }
    for (int a = 1; a <= pd.arc_count; ++a) {
        if (count[static_cast<std::size_t>(a)] != 2)
            throw std::invalid_argument("pd: arc label " + std::to_string(a) + " appears " +
                                        std::to_string(count[static_cast<std::size_t>(a)]) +
                                        " times (expected 2)");
    }
}

}  // namespace detail

/// Parses whitespace-separated "X(a,b,c,d)" terms. "" is the unknot.
inline PDCode parse_pd(const std::string& text) {
    PDCode pd;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    int max_label = 0;
    while (i < text.size()) {
        if (text[i] != 'X' && text[i] != 'x')
            throw std::invalid_argument("pd: expected 'X' at offset " + std::to_string(i));
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '(') throw std::invalid_argument("pd: expected '('");
        ++i;
        Crossing x{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("pd: expected arc label");
            x.arcs[static_cast<std::size_t>(k)] = std::stoi(text.substr(start, i - start));
            if (x.arcs[static_cast<std::size_t>(k)] < 1)
                throw std::invalid_argument("pd: arc labels are positive");
            max_label = std::max(max_label, x.arcs[static_cast<std::size_t>(k)]);
            skip_ws();
            char expect = (k < 3) ? ',' : ')';
            if (i >= text.size() || text[i] != expect)
                throw std::invalid_argument(std::string("pd: expected '") + expect + "'");
            ++i;
        }
        pd.crossings.push_back(x);
        skip_ws();
    }
    pd.arc_count = max_label;
    detail::validate_pd(pd);
    return pd;
}

inline std::string serialize_pd(const PDCode& pd) {
    std::string out;
    for (const auto& x : pd.crossings) {
        if (!out.empty()) out += ' ';
        out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
               std::to_string(x[2]) + "," + std::to_string(x[3]) + ")";
    }
    return out;
}

/// Orientation data recovered by strand-following: for each crossing,
/// whether the over-strand enters at slot 3 (positive crossing) or slot 1,
/// and the successor arc map.
struct PDOrientation {
    std::vector<int> crossing_sign;      // +1 or -1 per crossing
    std::vector<int> next_arc;           // successor of each arc (1-based; index 0 unused)
    int component_count = 0;
    std::vector<int> component_of_arc;   // 0-based component index per arc
};

/// Infers orientations by strand-following. Components whose direction is
/// not forced (all-over circles) start at their lowest-numbered arc, taking
/// its earliest over-slot occurrence as the inflow. Throws when the arc
/// structure cannot be oriented consistently.
inline PDOrientation orient_pd(const PDCode& pd) {
    detail::validate_pd(pd);
    PDOrientation out;
    if (pd.crossings.empty()) {
        out.component_count = 1;
        return out;
    }
    const int n_arcs = pd.arc_count;
    struct Occ {
        int crossing;
        int slot;
    };
    std::vector<std::vector<Occ>> occs(static_cast<std::size_t>(n_arcs) + 1);
    for (int c = 0; c < static_cast<int>(pd.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occs[static_cast<std::size_t>(pd.crossings[static_cast<std::size_t>(c)][s])].push_back(
                {c, s});

    // type of each occurrence: +1 arc flows in here, -1 flows out, 0 unknown
    std::vector<std::array<int, 4>> type(pd.crossings.size(), {0, 0, 0, 0});
    auto set_type = [&](int c, int s, int t, auto&& recurse) -> void {
        int& cur = type[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
        if (cur == t) return;
        if (cur != 0) throw std::invalid_argument("pd: inconsistent arc orientation");
        cur = t;
        // over-strand slots pair up: exactly one inflow between slots 1 and 3
        if (s == 1 || s == 3) {
            int other = 4 - s;
            recurse(c, other, -t, recurse);
        }
        // propagate along the arc to its other occurrence
        int arc = pd.crossings[static_cast<std::size_t>(c)][s];
        for (const auto& o : occs[static_cast<std::size_t>(arc)]) {
            if (o.crossing == c && o.slot == s) continue;
            recurse(o.crossing, o.slot, -t, recurse);
        }
    };
    for (int c = 0; c < static_cast<int>(pd.crossings.size()); ++c) {
        set_type(c, 0, +1, set_type);
        set_type(c, 2, -1, set_type);
    }
    // Any still-untyped occurrences belong to always-over components; anchor
    // each at its lowest arc's first listed occurrence.
    for (int a = 1; a <= n_arcs; ++a) {
        const auto& o = occs[static_cast<std::size_t>(a)].front();
        if (type[static_cast<std::size_t>(o.crossing)][static_cast<std::size_t>(o.slot)] == 0)
            set_type(o.crossing, o.slot, +1, set_type);
    }

    // Successor map: the arc flowing out of the crossing an arc flows into.
    out.next_arc.assign(static_cast<std::size_t>(n_arcs) + 1, 0);
    for (int a = 1; a <= n_arcs; ++a) {
        const Occ* inflow = nullptr;
        for (const auto& o : occs[static_cast<std::size_t>(a)])
            if (type[static_cast<std::size_t>(o.crossing)][static_cast<std::size_t>(o.slot)] == 1)
                inflow = &o;
        if (!inflow) throw std::invalid_argument("pd: arc never flows into a crossing");
        const auto& x = pd.crossings[static_cast<std::size_t>(inflow->crossing)];
        int out_slot;
        if (inflow->slot == 0)
            out_slot = 2;
        else if (inflow->slot == 1)
            out_slot = 3;
        else if (inflow->slot == 3)
            out_slot = 1;
        else
            throw std::invalid_argument("pd: under-out slot marked as inflow");
        out.next_arc[static_cast<std::size_t>(a)] = x[out_slot];
    }

    // Components: orbits of the successor map.
    out.component_of_arc.assign(static_cast<std::size_t>(n_arcs) + 1, -1);
    for (int a = 1; a <= n_arcs; ++a) {
        if (out.component_of_arc[static_cast<std::size_t>(a)] >= 0) continue;
        int comp = out.component_count++;
        int cur = a;
        while (out.component_of_arc[static_cast<std::size_t>(cur)] < 0) {
            out.component_of_arc[static_cast<std::size_t>(cur)] = comp;
            cur = out.next_arc[static_cast<std::size_t>(cur)];
        }
        if (cur != a) throw std::invalid_argument("pd: strand-following does not close up");
    }

    // Signs: positive when the over-strand enters at slot 3.
    out.crossing_sign.assign(pd.crossings.size(), 0);
    for (int c = 0; c < static_cast<int>(pd.crossings.size()); ++c) {
        int t3 = type[static_cast<std::size_t>(c)][3];
        out.crossing_sign[static_cast<std::size_t>(c)] = (t3 == 1) ? +1 : -1;
    }
    return out;
}

inline int components(const PDCode& pd) { return orient_pd(pd).component_count; }

inline int writhe(const PDCode& pd) {
    auto orientation = orient_pd(pd);
    int w = 0;
    for (int s : orientation.crossing_sign) w += s;
    return w;
}

/// Mirror image: each crossing's over-strand becomes the under-strand. The
/// tuple is rotated so the new incoming under-strand (the old incoming
/// over-strand) comes first, which requires the inferred orientation.
inline PDCode mirror(const PDCode& pd) {
    if (pd.crossings.empty()) return pd;
    auto orientation = orient_pd(pd);
    PDCode out;
    out.arc_count = pd.arc_count;
    for (int c = 0; c < static_cast<int>(pd.crossings.size()); ++c) {
        const auto& x = pd.crossings[static_cast<std::size_t>(c)];
        if (orientation.crossing_sign[static_cast<std::size_t>(c)] > 0) {
            // over entered at slot 3
            out.crossings.push_back(Crossing{{x[3], x[0], x[1], x[2]}});
        } else {
            out.crossings.push_back(Crossing{{x[1], x[2], x[3], x[0]}});
        }
    }
    detail::validate_pd(out);
    return out;
}

}  // namespace vknots
