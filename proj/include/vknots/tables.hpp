#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/complex_hp.hpp"
#include "vknots/config.hpp"
#include "vknots/fox.hpp"
#include "vknots/homfly.hpp"
#include "vknots/jones.hpp"
#include "vknots/kauffman_q.hpp"
#include "vknots/laurent.hpp"
#include "vknots/pd_code.hpp"
#include "vknots/vassiliev.hpp"

namespace vknots {

/// Reports for the special-value tables: one row per evaluation point,
/// carrying the derived integer invariant and, where an independent oracle
/// exists (Fox colorings, coloring-matrix determinant), the oracle value
/// and a match flag.
struct EvaluationRow {
    int r = 0;
    std::optional<ComplexHP> point;
    std::optional<ComplexHP> value;
    std::string derived_name;
    std::string derived_value;
    std::string oracle_value;  // empty when no oracle applies
    std::optional<bool> match;
    std::string flags;
};

struct EvaluationReport {
    std::string link;
    std::string table;
    std::vector<EvaluationRow> rows;

    bool all_match() const {
        for (const auto& row : rows)
            if (row.match && !*row.match) return false;
        return true;
    }

    std::string to_csv(int digits = 30) const {
        std::ostringstream out;
        out << "link,r,point_re,point_im,value_re,value_im,derived_name,derived_value,"
               "oracle_value,match\n";
        for (const auto& row : rows) {
            out << link << "," << row.r << ",";
            if (row.point) out << row.point->re.str(digits) << "," << row.point->im.str(digits);
            else out << ",";
            out << ",";
            if (row.value) out << row.value->re.str(digits) << "," << row.value->im.str(digits);
            else out << ",";
            out << "," << row.derived_name << "," << row.derived_value << "," << row.oracle_value
                << ",";
            if (row.match) out << (*row.match ? 1 : 0);
            out << "\n";
        }
        return out.str();
    }

    nlohmann::json to_json(int digits = 30) const {
        nlohmann::json rows_json = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j;
            j["r"] = row.r;
            if (row.point) {
                j["point_re"] = row.point->re.str(digits);
                j["point_im"] = row.point->im.str(digits);
            }
            if (row.value) {
                j["value_re"] = row.value->re.str(digits);
                j["value_im"] = row.value->im.str(digits);
            }
            j["derived_name"] = row.derived_name;
            j["derived_value"] = row.derived_value;
            if (!row.oracle_value.empty()) j["oracle_value"] = row.oracle_value;
            if (row.match) j["match"] = *row.match;
            if (!row.flags.empty()) j["flags"] = row.flags;
            rows_json.push_back(j);
        }
        return nlohmann::json{{"link", link}, {"table", table}, {"rows", rows_json}};
    }
};

namespace detail {

inline RealHP rounding_tolerance(const NumericConfig& cfg) {
    return RealHP::pow2(cfg.tolerance_log2, cfg.precision);
}

/// Nearest integer if the residue is below tolerance, otherwise nothing.
inline std::optional<Integer> near_integer(const RealHP& x, const RealHP& tol) {
    auto [z, residue] = x.round_to_integer();
    if (residue < tol) return z;
    return std::nullopt;
}

inline Integer require_integer(const RealHP& x, const RealHP& tol, const std::string& what) {
    auto z = near_integer(x, tol);
    if (!z)
        throw std::domain_error(what + ": value " + x.str() +
                                " is not an integer within tolerance");
    return *z;
}

/// log_base of a positive integer that must be a perfect power of base.
inline int integer_log(const Integer& value, long base, const std::string& what) {
    if (value <= 0) throw std::domain_error(what + ": expected a positive power");
    Integer v = value;
    int e = 0;
    while (v > 1) {
        if (v % base != 0)
            throw std::domain_error(what + ": " + value.get_str() + " is not a power of " +
                                    std::to_string(base));
        v /= base;
        ++e;
    }
    return e;
}

inline Integer pow_long(long base, int e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(e));
    if (base < 0 && e % 2 != 0) r = -r;
    return r;
}

}  // namespace detail

/// Table of J_L(e^{2 pi i / r}) for r in {1,2,3,4,6}: the component-count
/// power at r=1, the determinant at r=2 (checked against the Fox coloring
/// minor), 1 at r=3 for knots, the Arf invariant sign at r=4, and
/// dim H_1(Sigma_2, Z_3) at r=6 (checked against Fox 3-colorings).
inline EvaluationReport table1_report(const std::string& name, const JonesPolynomial& J,
                                      const std::optional<PDCode>& pd,
                                      const NumericConfig& cfg = {}) {
    EvaluationReport report;
    report.link = name;
    report.table = "jones_roots_of_unity";
    const RealHP tol = detail::rounding_tolerance(cfg);
    const int ell = J.components;

    // r = 1: exact rational evaluation at t = 1.
    {
        EvaluationRow row;
        row.r = 1;
        row.point = ComplexHP(1, cfg.precision);
        Rational v1 = J.poly.eval_rational(Rational(1));
        row.value = ComplexHP(v1, cfg.precision);
        row.derived_name = "(-2)^(l-1)";
        row.derived_value = v1.get_str();
        Rational expected = rat_pow(Rational(-2), ell - 1);
        row.oracle_value = expected.get_str();
        row.match = (v1 == expected);
        if (!J.poly.is_integer_grid()) row.flags = "sqrt-branch-trivial-at-1";
        report.rows.push_back(std::move(row));
    }
    // r = 2: determinant.
    {
        EvaluationRow row;
        row.r = 2;
        row.point = ComplexHP(-1, cfg.precision);
        ComplexHP v = J.poly.eval(ComplexHP(-1, cfg.precision));
        row.value = v;
        row.derived_name = "det";
        Integer det = detail::require_integer(v.abs(), tol, "table1 r=2 det");
        row.derived_value = det.get_str();
        if (pd) {
            Integer oracle = coloring_minor_determinant(*pd);
            row.oracle_value = oracle.get_str();
            row.match = (det == oracle);
        }
        report.rows.push_back(std::move(row));
    }
    // r = 3: value 1 for every knot.
    {
        EvaluationRow row;
        row.r = 3;
        row.point = ComplexHP::root_of_unity(1, 3, cfg.precision);
        ComplexHP v = J.poly.eval(*row.point);
        row.value = v;
        row.derived_name = "jones_at_omega3";
        if (ell == 1) {
            bool is_one = ((v - ComplexHP(1, cfg.precision)).abs() < tol);
            row.derived_value = is_one ? "1" : "not-1";
            row.oracle_value = "1";
            row.match = is_one;
        } else {
            row.derived_value = "(link)";
        }
        report.rows.push_back(std::move(row));
    }
    // r = 4: Arf invariant from J(i).
    {
        EvaluationRow row;
        row.r = 4;
        row.point = ComplexHP::root_of_unity(1, 4, cfg.precision);
        ComplexHP v = J.poly.eval(*row.point);
        row.value = v;
        row.derived_name = "arf";
        if (v.abs() < tol) {
            row.derived_value = "undefined";
        } else if (ell == 1) {
            Integer s = detail::require_integer(v.re, tol, "table1 r=4");
            if (s == 1)
                row.derived_value = "0";
            else if (s == -1)
                row.derived_value = "1";
            else
                throw std::domain_error("table1 r=4: knot value " + s.get_str() +
                                        " is not +-1");
        } else {
            // links: magnitude (sqrt 2)^{l-1}, phase carries the Arf sign
            row.derived_value = "defined";
        }
        report.rows.push_back(std::move(row));
    }
    // r = 6: dim H_1(Sigma_2, Z_3) from |J|^2.
    {
        EvaluationRow row;
        row.r = 6;
        row.point = ComplexHP::root_of_unity(1, 6, cfg.precision);
        ComplexHP v = J.poly.eval(*row.point);
        row.value = v;
        row.derived_name = "dim_h1_sigma2_z3";
        Integer norm = detail::require_integer(v.norm(), tol, "table1 r=6 |J|^2");
        int dim = detail::integer_log(norm, 3, "table1 r=6");
        row.derived_value = std::to_string(dim);
        if (pd) {
            Integer count = fox_colorings(*pd, 3);
            int oracle_dim = detail::integer_log(count, 3, "fox count") - 1;
            row.oracle_value = std::to_string(oracle_dim);
            row.match = (dim == oracle_dim);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Table of Q_L(2 cos(2 pi / r)) for r in {1,2,3,5,6}; r=4 is undefined.
/// Signed checks are exact at the rational points (x = 2, -2, -1, 1); the
/// golden-ratio point r=5 is checked through |Q|^2 = 5^dim against Fox
/// 5-colorings.
inline EvaluationReport table2_report(const std::string& name, const HalfGridLaurent& Q, int ell,
                                      const std::optional<PDCode>& pd,
                                      const NumericConfig& cfg = {}) {
    EvaluationReport report;
    report.link = name;
    report.table = "q_polynomial_values";
    const RealHP tol = detail::rounding_tolerance(cfg);

    auto exact_row = [&](int r, long x, const std::string& derived_name, const Rational& expected,
                         const std::string& oracle_str) {
        EvaluationRow row;
        row.r = r;
        row.point = ComplexHP(x, cfg.precision);
        Rational v = Q.eval_rational(Rational(x));
        row.value = ComplexHP(v, cfg.precision);
        row.derived_name = derived_name;
        row.derived_value = v.get_str();
        row.oracle_value = oracle_str.empty() ? expected.get_str() : oracle_str;
        row.match = (v == expected);
        report.rows.push_back(std::move(row));
        return v;
    };

    std::optional<Integer> det;
    if (pd) det = coloring_minor_determinant(*pd);

    // r = 1: (-1)^{l-1} |det|^2.
    if (det) {
        Rational expected = Rational(*det * *det) * (ell % 2 == 1 ? 1 : -1);
        exact_row(1, 2, "(-1)^(l-1)det^2", expected, det->get_str() + "^2");
    } else {
        EvaluationRow row;
        row.r = 1;
        row.point = ComplexHP(2, cfg.precision);
        Rational v = Q.eval_rational(Rational(2));
        row.value = ComplexHP(v, cfg.precision);
        row.derived_name = "(-1)^(l-1)det^2";
        row.derived_value = v.get_str();
        report.rows.push_back(std::move(row));
    }
    // r = 2: (-2)^{l-1}.
    exact_row(2, -2, "(-2)^(l-1)", rat_pow(Rational(-2), ell - 1), "");
    // r = 3: (-3)^{dim H_1(Sigma_2, Z_3)}.
    {
        EvaluationRow row;
        row.r = 3;
        row.point = ComplexHP(-1, cfg.precision);
        Rational v = Q.eval_rational(Rational(-1));
        row.value = ComplexHP(v, cfg.precision);
        row.derived_name = "(-3)^dim_h1_sigma2_z3";
        row.derived_value = v.get_str();
        if (pd) {
            int dim = detail::integer_log(fox_colorings(*pd, 3), 3, "fox count") - 1;
            Rational expected = rat_pow(Rational(-3), dim);
            row.oracle_value = "dim=" + std::to_string(dim);
            row.match = (v == expected);
        }
        report.rows.push_back(std::move(row));
    }
    // r = 4: undefined.
    {
        EvaluationRow row;
        row.r = 4;
        row.derived_name = "q_at_2cos_pi_over_2";
        row.derived_value = "undefined";
        report.rows.push_back(std::move(row));
    }
    // r = 5: |Q|^2 = 5^{dim H_1(Sigma_2, Z_5)} at x = 2 cos(2 pi / 5).
    {
        EvaluationRow row;
        row.r = 5;
        RealHP c = ComplexHP::root_of_unity(1, 5, cfg.precision).re;
        row.point = ComplexHP{c + c, RealHP(0, cfg.precision)};
        ComplexHP v = Q.eval(*row.point);
        row.value = v;
        row.derived_name = "dim_h1_sigma2_z5";
        Integer norm = detail::require_integer(v.norm(), tol, "table2 r=5 |Q|^2");
        int dim = detail::integer_log(norm, 5, "table2 r=5");
        row.derived_value = std::to_string(dim);
        if (pd) {
            int oracle_dim = detail::integer_log(fox_colorings(*pd, 5), 5, "fox count") - 1;
            row.oracle_value = std::to_string(oracle_dim);
            row.match = (dim == oracle_dim);
        }
        report.rows.push_back(std::move(row));
    }
    // r = 6: Q(1) = 1.
    exact_row(6, 1, "q_at_1", Rational(1), "1");
    return report;
}

/// |H_1(Sigma_n, Z)| = |prod over nontrivial n-th roots of unity of
/// Delta(r_i)|, computed in conjugate pairs (plus the real Delta(-1) when n
/// is even) and rounded. Returns 0 when the product vanishes, signalling
/// infinite first homology.
inline Integer h1_sigma_n(const HalfGridLaurent& alexander_poly, int n,
                          const NumericConfig& cfg = {}) {
    if (n < 2) throw std::invalid_argument("h1_sigma_n: n must be >= 2");
    const RealHP tol = detail::rounding_tolerance(cfg);
    RealHP product(1, cfg.precision);
    for (int j = 1; 2 * j < n; ++j) {
        ComplexHP point = ComplexHP::root_of_unity(j, n, cfg.precision);
        product = product * alexander_poly.eval(point).norm();
    }
    if (n % 2 == 0) {
        ComplexHP v = alexander_poly.eval(ComplexHP(-1, cfg.precision));
        product = product * v.re;  // conjugate-symmetric, so real
    }
    Integer result = detail::require_integer(product.abs(), tol, "h1_sigma_n");
    return result;
}

/// dim H_1(Sigma_3, Z_2) from |H(-i, i)|^2, cross-checked against the N=9
/// specialization at t = e^{i pi / 3} (the same number by the half-grid
/// substitution).
inline int h1_sigma3_z2(const HomflyPolynomial& h, const NumericConfig& cfg = {}) {
    const RealHP tol = detail::rounding_tolerance(cfg);
    ComplexHP minus_i{RealHP(0, cfg.precision), RealHP(-1, cfg.precision)};
    ComplexHP plus_i{RealHP(0, cfg.precision), RealHP(1, cfg.precision)};
    ComplexHP direct = h.poly.eval(minus_i, plus_i);

    Integer norm = detail::require_integer(direct.norm(), tol, "h1_sigma3_z2 |H(-i,i)|^2");
    int dim = detail::integer_log(norm, 2, "h1_sigma3_z2");

    HalfGridLaurent spec = homfly_specialize(h, 9);
    ComplexHP via_spec = spec.eval(ComplexHP::unit_pi_fraction(1, 3, cfg.precision));
    RealHP dual_tol = RealHP::pow2(-(static_cast<long>(cfg.precision) - 16), cfg.precision);
    if (!((via_spec - direct).abs() < dual_tol))
        throw std::logic_error("h1_sigma3_z2: dual-path mismatch between H(-i,i) and H^9(e^{i pi/3})");
    return dim;
}

/// tri(L) two ways: 3 |J(e^{i pi/3})|^2 and the Fox 3-coloring count.
struct TricoloringResult {
    Integer from_jones;
    Integer from_fox;
};

inline TricoloringResult tricolorings(const JonesPolynomial& J, const PDCode& pd,
                                      const NumericConfig& cfg = {}) {
    const RealHP tol = detail::rounding_tolerance(cfg);
    ComplexHP v = J.poly.eval(ComplexHP::unit_pi_fraction(1, 3, cfg.precision));
    Integer from_jones =
        detail::require_integer(v.norm() * RealHP(3, cfg.precision), tol, "tricolorings");
    Integer from_fox = fox_colorings(pd, 3);
    if (from_jones != from_fox)
        throw std::logic_error("tricolorings: Jones route " + from_jones.get_str() +
                               " != Fox route " + from_fox.get_str());
    return {from_jones, from_fox};
}

}  // namespace vknots
