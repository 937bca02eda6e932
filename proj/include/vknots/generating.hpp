#pragma once

#include <stdexcept>
#include <vector>

#include "vknots/rational.hpp"
#include "vknots/vassiliev.hpp"

namespace vknots {

/// The Lagrange-type generating polynomial f_{d,n}: on the integer grid
///     f_{d,n}(v) = prod_{j != n, j = -d..d} (v - j) / (n - j),
/// and on the half grid (2v - j) / (n - j), so that f_{d,n}(m) (resp.
/// f_{d,n}(m/2)) is the Kronecker delta on the grid points. Its i-th
/// derivative at 0, i! * coefficients[i], reconstructs polynomial
/// coefficients from the Vassiliev sequence.
struct GeneratingPolynomial {
    int d = 0;
    int n = 0;
    Grid grid = Grid::integer;
    std::vector<Rational> coefficients;  // coefficients of v^0 .. v^{2d}

    Rational derivative_at_zero(int i) const {
        if (i < 0 || i >= static_cast<int>(coefficients.size())) return Rational(0);
        return Rational(factorial(static_cast<unsigned>(i))) *
               coefficients[static_cast<std::size_t>(i)];
    }

    Rational eval(const Rational& v) const {
        Rational acc(0);
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * v + *it;
        return acc;
    }
};

inline GeneratingPolynomial finite_gen_fn(int d, int n, Grid grid = Grid::integer) {
    if (n < -d || n > d) throw std::invalid_argument("finite_gen_fn: need -d <= n <= d");
    GeneratingPolynomial out;
    out.d = d;
    out.n = n;
    out.grid = grid;
    out.coefficients.assign(1, Rational(1));
    const Rational lead = grid == Grid::integer ? Rational(1) : Rational(2);
    Rational denom(1);
    for (int j = -d; j <= d; ++j) {
        if (j == n) continue;
        // multiply by (lead * v - j)
        std::vector<Rational> next(out.coefficients.size() + 1, Rational(0));
        for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
            next[i + 1] += out.coefficients[i] * lead;
            next[i] -= out.coefficients[i] * Rational(j);
        }
        out.coefficients = std::move(next);
        denom *= Rational(n - j);
    }
    for (auto& c : out.coefficients) c /= denom;
    return out;
}

/// Theorem-3.1 route: a_n = sum_i f_{d,n}^{(i)}(0) v_i. Must agree entry by
/// entry with the Vandermonde solve (the dual-path acceptance check).
inline Rational reconstruct_finite(const VassilievSequence& v, int d, int n) {
    if (n < -d || n > d) throw std::invalid_argument("reconstruct_finite: need -d <= n <= d");
    if (static_cast<int>(v.values.size()) < 2 * d + 1)
        throw std::invalid_argument("reconstruct_finite: sequence too short");
    GeneratingPolynomial f = finite_gen_fn(d, n, v.grid);
    Rational acc(0);
    Integer fact(1);
    for (int i = 0; i <= 2 * d; ++i) {
        if (i >= 2) fact *= i;
        acc += Rational(fact) * f.coefficients[static_cast<std::size_t>(i)] *
               v.values[static_cast<std::size_t>(i)];
    }
    return acc;
}

/// Remark-3.1 consistency: v_i re-expressed through v_0..v_{2d} via the
/// reconstructed coefficients; exact for any source of degree <= d.
inline Rational vassiliev_consistency(const VassilievSequence& v, int d, int i) {
    if (i < 0) throw std::invalid_argument("vassiliev_consistency: i must be >= 0");
    if (static_cast<int>(v.values.size()) < 2 * d + 1)
        throw std::invalid_argument("vassiliev_consistency: sequence too short");
    Rational acc(0);
    for (int k = -d; k <= d; ++k) {
        GeneratingPolynomial f = finite_gen_fn(d, k, v.grid);
        Rational node_pow = rat_pow(grid_node(v.grid, k), i);
        Integer fact(1);
        for (int j = 0; j <= 2 * d; ++j) {
            if (j >= 2) fact *= j;
            acc += node_pow * Rational(fact) * f.coefficients[static_cast<std::size_t>(j)] *
                   v.values[static_cast<std::size_t>(j)];
        }
    }
    return acc / Rational(factorial(static_cast<unsigned>(i)));
}

}  // namespace vknots
