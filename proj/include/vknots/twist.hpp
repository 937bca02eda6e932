#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/braid.hpp"
#include "vknots/config.hpp"
#include "vknots/jones.hpp"
#include "vknots/vassiliev.hpp"

namespace vknots {

/// Jones data for the twist sequence T_1..T_{m_max} of (2, 2m+1) torus
/// knots: each J(T_m) computed from the braid closure, verified against the
/// closed form -t^m (t^{2m+1} - ... + t^3 - t^2 - 1), plus the coefficient
/// matrix a_n(T_m) with its vanishing window
///     a_n(T_m) = 0  whenever  m < (n-1)/3  or  m > n.
struct TwistSequenceReport {
    int m_max = 0;
    int n_max = 0;
    std::vector<HalfGridLaurent> jones_polys;        // index m-1
    std::vector<std::vector<Rational>> coefficients;  // [m-1][n] = a_n(T_m), n = 0..n_max

    std::string to_csv() const {
        std::ostringstream out;
        out << "m";
        for (int n = 0; n <= n_max; ++n) out << ",a_" << n;
        out << "\n";
        for (int m = 1; m <= m_max; ++m) {
            out << m;
            for (int n = 0; n <= n_max; ++n)
                out << "," << coefficients[static_cast<std::size_t>(m) - 1]
                                          [static_cast<std::size_t>(n)].get_str();
            out << "\n";
        }
        return out.str();
    }
};

inline TwistSequenceReport twist_sequence_report(int m_max, const EngineLimits& limits = {}) {
    if (m_max < 1) throw std::invalid_argument("twist_sequence_report: m_max must be >= 1");
    TwistSequenceReport report;
    report.m_max = m_max;
    report.n_max = 3 * m_max + 2;
    for (int m = 1; m <= m_max; ++m) {
        JonesPolynomial jm = jones(torus_braid(m), limits);
        HalfGridLaurent closed = torus_jones_closed_form(m);
        if (!(jm.poly == closed))
            throw std::logic_error("twist_sequence_report: J(T_" + std::to_string(m) +
                                   ") does not match the closed form");
        std::vector<Rational> row;
        for (int n = 0; n <= report.n_max; ++n) {
            Rational a_n = jm.poly.coeff_at_exponent(n);
            bool window_zero = (3 * m < n - 1) || (m > n);
            if (window_zero && a_n != 0)
                throw std::logic_error("twist_sequence_report: a_" + std::to_string(n) + "(T_" +
                                       std::to_string(m) + ") violates the vanishing window");
            row.push_back(a_n);
        }
        report.jones_polys.push_back(jm.poly);
        report.coefficients.push_back(std::move(row));
    }
    return report;
}

}  // namespace vknots
