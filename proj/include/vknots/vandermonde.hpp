#pragma once

#include <stdexcept>
#include <vector>

#include "vknots/rational.hpp"
#include "vknots/vassiliev.hpp"

namespace vknots {

/// Exact solution of the (2d+1) x (2d+1) moment system: row i is the i-th
/// powers of the grid nodes -d..d (half steps on the half grid) and the
/// right side is (0! v_0, 1! v_1, ..., (2d)! v_{2d}). coeffs[k] is the
/// recovered polynomial coefficient at grid index k - d.
struct VandermondeSolution {
    int d = 0;
    Grid grid = Grid::integer;
    std::vector<Rational> coeffs;
    Rational pivot_product;  // product of elimination pivots = determinant

    const Rational& at_index(int k) const {
        if (k < -d || k > d) throw std::out_of_range("vandermonde: index out of range");
        return coeffs[static_cast<std::size_t>(k + d)];
    }
};

inline VandermondeSolution vandermonde_solve(const VassilievSequence& v, int d) {
    if (d < 0) throw std::invalid_argument("vandermonde_solve: d must be >= 0");
    const int n = 2 * d + 1;
    if (static_cast<int>(v.values.size()) < n)
        throw std::invalid_argument("vandermonde_solve: sequence too short: need " +
                                    std::to_string(n) + " entries");

    std::vector<Rational> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    for (int k = -d; k <= d; ++k) nodes.push_back(grid_node(v.grid, k));

    // Augmented matrix [V | rhs].
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n));
    Integer fact(1);
    for (int i = 0; i < n; ++i) {
        if (i >= 2) fact *= i;
        auto& row = m[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n; ++j)
            row.push_back(i == 0 ? Rational(1)
                                 : m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)] *
                                       nodes[static_cast<std::size_t>(j)]);
        row.push_back(Rational(fact) * v.values[static_cast<std::size_t>(i)]);
    }

    // Gaussian elimination without pivoting: every leading block of a
    // Vandermonde matrix with distinct nodes is itself Vandermonde, so the
    // pivots are nonzero and their product is the determinant.
    VandermondeSolution out;
    out.d = d;
    out.grid = v.grid;
    out.pivot_product = Rational(1);
    for (int col = 0; col < n; ++col) {
        Rational pivot = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (pivot == 0) throw std::logic_error("vandermonde_solve: zero pivot");
        out.pivot_product *= pivot;
        for (int r = col + 1; r < n; ++r) {
            Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pivot;
            if (f == 0) continue;
            for (int j = col; j <= n; ++j)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    out.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
    for (int r = n - 1; r >= 0; --r) {
        Rational s = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
        for (int j = r + 1; j < n; ++j)
            s -= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
                 out.coeffs[static_cast<std::size_t>(j)];
        out.coeffs[static_cast<std::size_t>(r)] =
            s / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }
    return out;
}

}  // namespace vknots
