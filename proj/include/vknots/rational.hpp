#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vknots {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (reduced, positive denominator), which is the representation invariant
// every exact routine here relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer int_pow(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e for integer e; negative exponents invert (base must be nonzero).
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rational(0);
    }
    Rational r;
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
    if (e < 0) {
        r = Rational(1) / r;
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "num", "num/den", or a plain decimal integer string.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool fits_int64(const Integer& z) {
    return z.fits_slong_p() || (sizeof(long) == 8 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 63);
}

}  // namespace vknots
