#pragma once

#include <stdexcept>

#include "vknots/laurent.hpp"
#include "vknots/two_var.hpp"

namespace vknots {

/// The N-th specialization of an ingested Dubrovnik Kauffman polynomial:
/// a = t^N, z = t - t^{-1}; result lives on the integer grid.
inline HalfGridLaurent kauffman_specialize(const TwoVarLaurent& f, int N) {
    if (N == 0) throw std::invalid_argument("kauffman_specialize: N must be nonzero");
    HalfGridLaurent a_sub = HalfGridLaurent::monomial(2 * N);
    HalfGridLaurent z_sub =
        HalfGridLaurent::monomial(2) + HalfGridLaurent::monomial(-2, Rational(-1));
    return substitute_two_var(f, a_sub, z_sub);
}

/// Q polynomial from the Dubrovnik polynomial: Q(x) = (-1)^{l-1} F(i, -ix).
/// The powers of i must collapse to a real integer polynomial; a nonzero
/// imaginary residue means the ingested data is not in the Dubrovnik
/// convention this change of variables expects.
inline HalfGridLaurent q_polynomial(const TwoVarLaurent& f, int components) {
    HalfGridLaurent real_part;
    HalfGridLaurent imag_part;
    for (const auto& [k, c] : f.terms()) {
        // a^p z^q -> i^p (-i)^q x^q = i^{p+q} (-1)^q x^q
        int ipow = ((k.first + k.second) % 4 + 4) % 4;
        Rational coeff(c);
        if (k.second % 2 != 0) coeff = -coeff;
        if (ipow == 2 || ipow == 3) coeff = -coeff;
        if (ipow % 2 == 0)
            real_part.set_coeff(2 * k.second, real_part.coeff(2 * k.second) + coeff);
        else
            imag_part.set_coeff(2 * k.second, imag_part.coeff(2 * k.second) + coeff);
    }
    if (!imag_part.is_zero())
        throw std::domain_error(
            "q_polynomial: nonzero imaginary residue; ingested Kauffman data does not follow "
            "the expected Dubrovnik convention");
    if (components % 2 == 0) real_part = -real_part;  // (-1)^{l-1}
    return real_part;
}

}  // namespace vknots
