#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/complex_hp.hpp"
#include "vknots/laurent.hpp"
#include "vknots/pi_poly.hpp"
#include "vknots/sinc_series.hpp"
#include "vknots/vandermonde.hpp"
#include "vknots/vassiliev.hpp"

namespace vknots {

/// Partial sums of the infinite reconstruction: row i carries
/// v~_i = sum_{j<=i} f_{inf,n}^{(j)}(0) v_j, kept exact in Q[pi^2] until the
/// final numeric evaluation, plus the error against the exact coefficient
/// when the source polynomial is known.
struct ReconstructionReport {
    int target_n = 0;
    Grid grid = Grid::integer;
    mpfr_prec_t precision = 128;
    std::optional<Rational> reference;

    struct Row {
        int order;
        RealHP value;
        std::optional<RealHP> abs_error;
    };
    std::vector<Row> rows;

    /// First order whose error drops below tol; requires a reference.
    std::optional<int> first_order_within(const RealHP& tol) const {
        for (const auto& r : rows)
            if (r.abs_error && *r.abs_error < tol) return r.order;
        return std::nullopt;
    }

    /// CSV with fixed columns: order,partial_sum_re,partial_sum_im,abs_error.
    std::string to_csv(int digits = 40) const {
        std::ostringstream out;
        out << "order,partial_sum_re,partial_sum_im,abs_error\n";
        for (const auto& r : rows) {
            out << r.order << "," << r.value.str(digits) << ",0,";
            if (r.abs_error) out << r.abs_error->str(digits);
            out << "\n";
        }
        return out.str();
    }
};

inline ReconstructionReport reconstruct_infinite(const VassilievSequence& v, int n, int order,
                                                 mpfr_prec_t precision = 128) {
    if (order < 0) throw std::invalid_argument("reconstruct_infinite: order must be >= 0");
    if (static_cast<int>(v.values.size()) < order + 1)
        throw std::invalid_argument("reconstruct_infinite: sequence shorter than order");
    if (precision < 64) throw std::invalid_argument("reconstruct_infinite: precision < 64 bits");

    ReconstructionReport report;
    report.target_n = n;
    report.grid = v.grid;
    report.precision = precision;
    report.reference = v.source_coefficient(n);

    SincCoefficients sinc = sinc_coeffs(n, order, v.grid);
    std::optional<RealHP> ref_value;
    if (report.reference) ref_value = RealHP(*report.reference, precision);

    PiPolynomial partial;
    for (int i = 0; i <= order; ++i) {
        partial = partial + sinc.entries[static_cast<std::size_t>(i)].scaled(
                                v.values[static_cast<std::size_t>(i)]);
        ReconstructionReport::Row row{i, partial.eval(precision), std::nullopt};
        if (ref_value) row.abs_error = (row.value - *ref_value).abs();
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Corollary-2.3 evaluation approximant: g_d(z) = sum_k alpha_{d,k} z^{node k}.
/// Exact (up to rounding) once d reaches the source degree.
inline ComplexHP approx_eval(const VassilievSequence& v, const ComplexHP& z, int d) {
    if (z.is_zero()) throw std::invalid_argument("approx_eval: z must be nonzero");
    VandermondeSolution sol = vandermonde_solve(v, d);
    HalfGridLaurent p;
    for (int k = -d; k <= d; ++k) {
        int h = v.grid == Grid::integer ? 2 * k : k;
        p.set_coeff(h, sol.at_index(k));
    }
    return p.eval(z);
}

/// One term of the Remark-4.3 degree estimator: (n! |v_n|)^{1/n}.
struct DegreeEstimate {
    RealHP value;
    bool vanished = false;  // v_n = 0, estimate carries no information
};

inline DegreeEstimate degree_estimate(const VassilievSequence& v, int n,
                                      mpfr_prec_t precision = 128) {
    if (n < 1) throw std::invalid_argument("degree_estimate: n must be >= 1");
    const Rational& vn = v.at(static_cast<std::size_t>(n));
    if (vn == 0) return {RealHP(0, precision), true};
    Rational term = Rational(factorial(static_cast<unsigned>(n))) * vn;
    if (term < 0) term = -term;
    RealHP x(term, precision);
    return {x.rootn(static_cast<unsigned long>(n)), false};
}

}  // namespace vknots
