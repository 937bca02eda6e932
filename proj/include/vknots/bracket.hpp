#pragma once

#include <stdexcept>
#include <vector>

#include "vknots/braid.hpp"
#include "vknots/config.hpp"
#include "vknots/laurent.hpp"
#include "vknots/pd_code.hpp"

namespace vknots {

/// Kauffman bracket <L> in ZZ[A^{+-1}], returned on the integer exponent
/// grid (stored h is twice the A-exponent). Brute state sum: each crossing
/// X(a,b,c,d) is smoothed either the A-way, joining (a,b) and (c,d), or the
/// B-way, joining (a,d) and (b,c); a state with s A-smoothings of c
/// crossings and k circles contributes A^{2s-c} delta^{k-1},
/// delta = -A^2 - A^{-2}.
inline HalfGridLaurent kauffman_bracket(const PDCode& pd, const EngineLimits& limits = {}) {
    detail::validate_pd(pd);
    const int c = static_cast<int>(pd.crossings.size());
    if (c > limits.max_crossings)
        throw std::invalid_argument("bracket: crossing count " + std::to_string(c) +
                                    " exceeds limit " + std::to_string(limits.max_crossings));
    if (c == 0) return HalfGridLaurent::one();

    const HalfGridLaurent delta =
        HalfGridLaurent::monomial(4, Rational(-1)) + HalfGridLaurent::monomial(-4, Rational(-1));
    std::vector<HalfGridLaurent> delta_pow;
    delta_pow.push_back(HalfGridLaurent::one());
    for (int i = 0; i < pd.arc_count; ++i) delta_pow.push_back(delta_pow.back() * delta);

    std::vector<int> parent(static_cast<std::size_t>(pd.arc_count) + 1);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<std::size_t>(x)] = y;
    };

    HalfGridLaurent acc;
    const unsigned long states = 1UL << c;
    for (unsigned long s = 0; s < states; ++s) {
        for (int a = 0; a <= pd.arc_count; ++a) parent[static_cast<std::size_t>(a)] = a;
        int a_exponent = 0;
        for (int i = 0; i < c; ++i) {
            const auto& x = pd.crossings[static_cast<std::size_t>(i)];
            if (s & (1UL << i)) {
                a_exponent += 1;  // A-smoothing
                unite(x[0], x[1]);
                unite(x[2], x[3]);
            } else {
                a_exponent -= 1;
                unite(x[0], x[3]);
                unite(x[1], x[2]);
            }
        }
        int loops = 0;
        for (int a = 1; a <= pd.arc_count; ++a)
            if (find(a) == a) ++loops;
        acc = acc + delta_pow[static_cast<std::size_t>(loops - 1)].shifted(2 * a_exponent);
    }
    return acc;
}

}  // namespace vknots
