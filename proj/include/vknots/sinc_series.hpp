#pragma once

#include <stdexcept>
#include <vector>

#include "vknots/pi_poly.hpp"
#include "vknots/rational.hpp"
#include "vknots/vassiliev.hpp"

namespace vknots {

/// Taylor data at 0 of the d -> infinity limit of the generating
/// polynomials: on the integer grid
///     f_{inf,n}(v) = sin(pi (v - n)) / (pi (v - n)),
/// on the half grid the same with 2v in place of v. entries[i] is the exact
/// derivative f^{(i)}(0) as an element of Q[pi^2]; for n = 0 these are the
/// classical sinc coefficients 1, 0, -pi^2/3, 0, pi^4/5, ...
struct SincCoefficients {
    int n = 0;
    Grid grid = Grid::integer;
    std::vector<PiPolynomial> entries;

    const PiPolynomial& at(std::size_t i) const {
        if (i >= entries.size()) throw std::out_of_range("sinc coefficients: index too large");
        return entries[i];
    }
};

inline SincCoefficients sinc_coeffs(int n, int i_max, Grid grid = Grid::integer) {
    if (i_max < 0) throw std::invalid_argument("sinc_coeffs: i_max must be >= 0");
    SincCoefficients out;
    out.n = n;
    out.grid = grid;
    out.entries.reserve(static_cast<std::size_t>(i_max) + 1);
    const bool half = grid == Grid::half;
    for (int i = 0; i <= i_max; ++i) {
        PiPolynomial entry;
        if (n == 0) {
            // sin(pi v)/(pi v): f^{(i)}(0) = (-1)^{i/2} pi^i / (i+1), i even
            if (i % 2 == 0) {
                Rational c(((i / 2) % 2 == 0) ? 1 : -1, i + 1);
                c.canonicalize();
                entry = PiPolynomial::pi_power(static_cast<unsigned>(i), c);
            }
        } else {
            // f(v) = (-1)^{n+1} sin(pi v) / (pi n (1 - v/n)); expanding both
            // series gives, for the v^i coefficient,
            //   c_i = (-1)^{n+1} sum_{2j+1 <= i} (-1)^j pi^{2j} /
            //         ((2j+1)! n^{i-2j}),
            // and f^{(i)}(0) = i! c_i.
            const int sign_n = (n % 2 != 0) ? 1 : -1;  // (-1)^{n+1}
            const Integer i_fact = factorial(static_cast<unsigned>(i));
            for (int j = 0; 2 * j + 1 <= i; ++j) {
                Rational c = Rational(i_fact) / Rational(factorial(static_cast<unsigned>(2 * j + 1)));
                c *= rat_pow(Rational(n), -(i - 2 * j));
                if ((j % 2 != 0) != (sign_n < 0)) c = -c;  // (-1)^j * (-1)^{n+1}
                entry = entry + PiPolynomial::pi_power(static_cast<unsigned>(2 * j), c);
            }
        }
        if (half && i > 0) entry = entry.scaled(rat_pow(Rational(2), i));
        out.entries.push_back(std::move(entry));
    }
    return out;
}

/// Closed-form value of f_{inf,n} at a grid point (index m): the sine
/// factor vanishes at every integer offset, so this is delta_{mn} exactly.
inline Rational sinc_closed_form_at_grid(int n, int m) {
    return Rational(m == n ? 1 : 0);
}

}  // namespace vknots
