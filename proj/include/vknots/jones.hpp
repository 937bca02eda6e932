#pragma once

#include <stdexcept>
#include <string>

#include "vknots/bracket.hpp"
#include "vknots/braid.hpp"
#include "vknots/config.hpp"
#include "vknots/laurent.hpp"
#include "vknots/pd_code.hpp"

namespace vknots {

/// Jones polynomial in t (half-grid type; knots land on the integer grid).
/// Convention: V_L = (-A)^{-3w} <L> re-expressed in t = A^{-4}, normalized
/// so the closure of torus_braid(m) gives -t^m (t^{2m+1} - ... - t^2 - 1).
struct JonesPolynomial {
    HalfGridLaurent poly;
    int components = 1;
};

namespace detail {

/// Convert a polynomial in A (stored h = 2 * A-exponent) to t = A^{-4}
/// (stored h = 2 * t-exponent). Defined exactly when every A-h is a
/// multiple of 4, which writhe-normalized brackets always satisfy.
inline HalfGridLaurent a_units_to_t(const HalfGridLaurent& p) {
    HalfGridLaurent out;
    for (const auto& [h, c] : p.terms()) {
        if (h % 4 != 0) throw std::logic_error("jones: bracket exponent not divisible by 4");
        out.set_coeff(-h / 4, c);
    }
    return out;
}

inline HalfGridLaurent loop_factor_t(int loops) {
    // delta in t units: -t^{1/2} - t^{-1/2}
    HalfGridLaurent delta =
        HalfGridLaurent::monomial(1, Rational(-1)) + HalfGridLaurent::monomial(-1, Rational(-1));
    return delta.pow(static_cast<unsigned>(loops));
}

}  // namespace detail

inline JonesPolynomial jones(const PDCode& pd, const EngineLimits& limits = {}) {
    auto orientation = orient_pd(pd);
    int w = 0;
    for (int s : orientation.crossing_sign) w += s;
    HalfGridLaurent bracket = kauffman_bracket(pd, limits);
    // (-A)^{-3w} = (-1)^w A^{-3w}
    HalfGridLaurent norm = HalfGridLaurent::monomial(-6 * w, Rational(w % 2 == 0 ? 1 : -1));
    JonesPolynomial out;
    out.poly = detail::a_units_to_t(bracket * norm);
    out.components = orientation.component_count;
    return out;
}

inline JonesPolynomial jones(const BraidWord& braid, const EngineLimits& limits = {}) {
    ClosedBraidDiagram diagram = braid_to_pd(braid);
    JonesPolynomial out = jones(diagram.pd, limits);
    if (diagram.free_loops > 0) {
        out.poly = out.poly * detail::loop_factor_t(diagram.free_loops);
        out.components += diagram.free_loops;
    }
    return out;
}

/// J(T_m) as printed closed form: -t^m (t^{2m+1} - t^{2m} + ... + t^3 - t^2 - 1).
inline HalfGridLaurent torus_jones_closed_form(int m) {
    if (m < 1) throw std::invalid_argument("torus_jones_closed_form: m must be >= 1");
    HalfGridLaurent inner;
    for (int j = 2; j <= 2 * m + 1; ++j)
        inner.set_coeff(2 * j, Rational((j % 2 == 1) ? 1 : -1));
    inner.set_coeff(0, Rational(-1));
    return (-inner).shifted(2 * m);
}

}  // namespace vknots
