#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/laurent.hpp"
#include "vknots/rational.hpp"

namespace vknots {

/// Exponent lattice of the source polynomial: knots live on the integer
/// grid, link Jones polynomials and HOMFLY specializations on the half grid.
enum class Grid { integer, half };

/// Grid node for coefficient index k: k on the integer grid, k/2 on the
/// half grid.
inline Rational grid_node(Grid grid, int k) {
    if (grid == Grid::integer) return Rational(k);
    Rational q(k, 2);
    q.canonicalize();
    return q;
}

/// The Vassiliev invariant sequence v_0, v_1, ... extracted from a link
/// polynomial via t = e^x: v_i = (1/i!) sum_k node_k^i * coeff_k, where the
/// sum runs over the exponent grid of the source polynomial.
struct VassilievSequence {
    Grid grid = Grid::integer;
    std::vector<Rational> values;
    std::string source_name;
    std::optional<HalfGridLaurent> source;

    const Rational& at(std::size_t i) const {
        if (i >= values.size()) throw std::out_of_range("vassiliev sequence: index too large");
        return values[i];
    }
    /// Exact coefficient of the source polynomial at grid index n, if known.
    std::optional<Rational> source_coefficient(int n) const {
        if (!source) return std::nullopt;
        return source->coeff(grid == Grid::integer ? 2 * n : n);
    }
    /// Max |grid index| carrying a nonzero coefficient of the source.
    static int degree_on_grid(const HalfGridLaurent& p, Grid grid) {
        int d = 0;
        for (const auto& [h, c] : p.terms()) {
            int k = grid == Grid::integer ? h / 2 : h;
            d = std::max(d, k < 0 ? -k : k);
        }
        return d;
    }
};

inline Grid natural_grid(const HalfGridLaurent& p) {
    return p.is_integer_grid() ? Grid::integer : Grid::half;
}

inline VassilievSequence vassiliev_from_laurent(const HalfGridLaurent& p, int i_max,
                                                std::optional<Grid> grid_override = std::nullopt,
                                                std::string source_name = {}) {
    if (i_max < 0) throw std::invalid_argument("vassiliev_from_laurent: i_max must be >= 0");
    Grid grid = grid_override.value_or(natural_grid(p));
    if (grid == Grid::integer && !p.is_integer_grid())
        throw std::invalid_argument("vassiliev_from_laurent: half-grid polynomial on integer grid");
    VassilievSequence out;
    out.grid = grid;
    out.source = p;
    out.source_name = std::move(source_name);
    out.values.assign(static_cast<std::size_t>(i_max) + 1, Rational(0));
    for (const auto& [h, c] : p.terms()) {
        Rational node = grid == Grid::integer ? Rational(h / 2) : grid_node(grid, h);
        Rational power(1);
        for (int i = 0; i <= i_max; ++i) {
            out.values[static_cast<std::size_t>(i)] += c * power;
            power *= node;
        }
    }
    Integer fact(1);
    for (int i = 2; i <= i_max; ++i) {
        fact *= i;
        out.values[static_cast<std::size_t>(i)] /= Rational(fact);
    }
    return out;
}

}  // namespace vknots
