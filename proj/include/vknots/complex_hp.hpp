#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "vknots/rational.hpp"
#include "vknots/real_hp.hpp"

namespace vknots {

/// Complex value built from two RealHP parts. The precision of a value is
/// the precision of its parts; there is no hidden working precision.
struct ComplexHP {
    RealHP re;
    RealHP im;

    explicit ComplexHP(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    ComplexHP(RealHP r, RealHP i) : re(std::move(r)), im(std::move(i)) {}
    ComplexHP(long r, mpfr_prec_t prec) : re(r, prec), im(0, prec) {}
    ComplexHP(const Rational& r, mpfr_prec_t prec) : re(r, prec), im(0, prec) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend ComplexHP operator+(const ComplexHP& a, const ComplexHP& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexHP operator-(const ComplexHP& a, const ComplexHP& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexHP operator*(const ComplexHP& a, const ComplexHP& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexHP operator/(const ComplexHP& a, const ComplexHP& b) {
        RealHP n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    ComplexHP operator-() const { return {-re, -im}; }

    ComplexHP conj() const { return {re, -im}; }
    RealHP norm() const { return re * re + im * im; }
    RealHP abs() const { return norm().sqrt(); }

    /// Integer power by repeated squaring; negative exponents invert.
    ComplexHP pow_int(long e) const {
        if (e == 0) return ComplexHP(1, prec());
        ComplexHP base = *this;
        unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
        ComplexHP acc(1, prec());
        while (mag) {
            if (mag & 1) acc = acc * base;
            base = base * base;
            mag >>= 1;
        }
        if (e < 0) acc = ComplexHP(1, prec()) / acc;
        return acc;
    }

    /// Principal square root: exp(Log(z)/2) with the principal logarithm.
    ComplexHP sqrt_principal() const {
        mpfr_prec_t p = prec();
        if (is_zero()) return ComplexHP(0, p);
        RealHP r = abs().sqrt();
        RealHP theta = atan2hp(im, re);
        RealHP half = theta / RealHP(2, p);
        RealHP s(p), c(p);
        sin_cos(half, s, c);
        return {r * c, r * s};
    }

    /// e^{i pi num/den} at the given precision.
    static ComplexHP unit_pi_fraction(long num, long den, mpfr_prec_t prec) {
        if (den == 0) throw std::invalid_argument("unit_pi_fraction: zero denominator");
        RealHP angle = RealHP::pi(prec) * RealHP(num, prec) / RealHP(den, prec);
        RealHP s(prec), c(prec);
        sin_cos(angle, s, c);
        return {c, s};
    }

    /// e^{2 pi i j / r}: the evaluation points t used throughout.
    static ComplexHP root_of_unity(long j, long r, mpfr_prec_t prec) {
        return unit_pi_fraction(2 * j, r, prec);
    }

    std::string str(int digits = 30) const {
        return re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i";
    }
};

}  // namespace vknots
