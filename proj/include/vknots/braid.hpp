#pragma once

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/pd_code.hpp"

namespace vknots {

/// Braid word on a fixed number of strands; entry +i / -i is the standard
/// generator sigma_i or its inverse (1 <= i < strands).
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline void validate_braid(const BraidWord& b) {
    if (b.strands < 1) throw std::invalid_argument("braid: strands must be >= 1");
    for (int w : b.word) {
        if (w == 0) throw std::invalid_argument("braid: zero letter");
        int i = w < 0 ? -w : w;
        if (i >= b.strands)
            throw std::invalid_argument("braid: generator index " + std::to_string(i) +
                                        " out of range for " + std::to_string(b.strands) +
                                        " strands");
    }
}

/// Parses "strands; w1 w2 ...". The word may be empty.
inline BraidWord parse_braid(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("braid: expected strand count");
    BraidWord b;
    b.strands = std::stoi(text.substr(start, i - start));
    skip_ws();
    if (i >= text.size() || text[i] != ';') throw std::invalid_argument("braid: expected ';'");
    ++i;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        start = i;
        if (text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && text[start] == '-'))
            throw std::invalid_argument("braid: expected letter");
        b.word.push_back(std::stoi(text.substr(start, i - start)));
    }
    validate_braid(b);
    return b;
}

inline std::string serialize_braid(const BraidWord& b) {
    std::string out = std::to_string(b.strands) + ";";
    for (int w : b.word) out += " " + std::to_string(w);
    return out;
}

inline BraidWord mirror(const BraidWord& b) {
    BraidWord m = b;
    for (int& w : m.word) w = -w;
    return m;
}

/// Underlying permutation of the braid (1-based positions; perm[i] is where
/// the strand starting at position i ends up).
inline std::vector<int> braid_permutation(const BraidWord& b) {
    validate_braid(b);
    std::vector<int> pos(static_cast<std::size_t>(b.strands) + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int w : b.word) {
        int i = w < 0 ? -w : w;
        std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i) + 1]);
    }
    // pos maps final position -> initial strand; invert for strand -> final.
    std::vector<int> perm(static_cast<std::size_t>(b.strands) + 1);
    for (int p = 1; p <= b.strands; ++p) perm[static_cast<std::size_t>(pos[static_cast<std::size_t>(p)])] = p;
    return perm;
}

/// Number of components of the braid closure = cycles of the permutation.
inline int components(const BraidWord& b) {
    auto perm = braid_permutation(b);
    std::vector<bool> seen(static_cast<std::size_t>(b.strands) + 1, false);
    int cycles = 0;
    for (int s = 1; s <= b.strands; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++cycles;
        int cur = s;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = perm[static_cast<std::size_t>(cur)];
        }
    }
    return cycles;
}

inline int writhe(const BraidWord& b) {
    int e = 0;
    for (int w : b.word) e += (w > 0) ? 1 : -1;
    return e;
}

/// The (2, 2m+1) torus knot as a braid: sigma_1 repeated 2m+1 times.
inline BraidWord torus_braid(int m) {
    if (m < 1) throw std::invalid_argument("torus_braid: m must be >= 1");
    BraidWord b;
    b.strands = 2;
    b.word.assign(static_cast<std::size_t>(2 * m + 1), 1);
    return b;
}

/// Braid closure as a planar diagram. Strands that meet no crossing close
/// into crossingless circles, which a PD code cannot carry; they are
/// returned as a separate count.
struct ClosedBraidDiagram {
    PDCode pd;
    int free_loops = 0;  // split unknot components with no crossings
};

inline ClosedBraidDiagram braid_to_pd(const BraidWord& b) {
    validate_braid(b);
    const int n = b.strands;
    // Tentative arc ids; closure identifications resolved by union-find.
    int next_id = 0;
    std::vector<int> initial(static_cast<std::size_t>(n) + 1);
    std::vector<int> at(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n; ++s) initial[static_cast<std::size_t>(s)] = at[static_cast<std::size_t>(s)] = next_id++;

    struct RawCrossing {
        std::array<int, 4> arcs;
    };
    std::vector<RawCrossing> raw;
    for (int w : b.word) {
        int i = w < 0 ? -w : w;
        int l_in = at[static_cast<std::size_t>(i)];
        int r_in = at[static_cast<std::size_t>(i) + 1];
        int l_out = next_id++;
        int r_out = next_id++;
        if (w > 0)
            raw.push_back({{l_in, l_out, r_out, r_in}});
        else
            raw.push_back({{r_in, l_in, l_out, r_out}});
        at[static_cast<std::size_t>(i)] = l_out;
        at[static_cast<std::size_t>(i) + 1] = r_out;
    }

    std::vector<int> parent(static_cast<std::size_t>(next_id));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int s = 1; s <= n; ++s) {
        int a = find(initial[static_cast<std::size_t>(s)]);
        int c = find(at[static_cast<std::size_t>(s)]);
        parent[static_cast<std::size_t>(a)] = c;
    }

    // Relabel roots in order of first appearance across the crossings.
    std::vector<int> label(static_cast<std::size_t>(next_id), 0);
    int next_label = 0;
    ClosedBraidDiagram out;
    for (const auto& x : raw) {
        Crossing c{};
        for (int k = 0; k < 4; ++k) {
            int root = find(x.arcs[static_cast<std::size_t>(k)]);
            if (label[static_cast<std::size_t>(root)] == 0) label[static_cast<std::size_t>(root)] = ++next_label;
            c.arcs[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(root)];
        }
        out.pd.crossings.push_back(c);
    }
    out.pd.arc_count = next_label;
    detail::validate_pd(out.pd);

    // Strands untouched by any letter close into free circles.
    std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
    for (int w : b.word) {
        int i = w < 0 ? -w : w;
        touched[static_cast<std::size_t>(i)] = true;
        touched[static_cast<std::size_t>(i) + 1] = true;
    }
    for (int s = 1; s <= n; ++s)
        if (!touched[static_cast<std::size_t>(s)]) ++out.free_loops;
    // A fully empty diagram still closes into at least one circle; keep the
    // PD-side convention that the empty PD is one unknot.
    if (out.pd.crossings.empty() && out.free_loops > 0) --out.free_loops;
    return out;
}

}  // namespace vknots
