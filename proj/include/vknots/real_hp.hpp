#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "vknots/rational.hpp"

namespace vknots {

/// Arbitrary-precision binary float (MPFR, round-to-nearest). Every value
/// carries its precision; binary operations work at the larger precision of
/// the two operands.
class RealHP {
  public:
    explicit RealHP(mpfr_prec_t prec = 128) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    RealHP(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    RealHP(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    RealHP(const RealHP& o) {
        mpfr_init2(x_, o.prec());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    RealHP(RealHP&& o) noexcept {
        mpfr_init2(x_, o.prec());
        mpfr_swap(x_, o.x_);
    }
    RealHP& operator=(const RealHP& o) {
        if (this != &o) {
            mpfr_set_prec(x_, o.prec());
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    RealHP& operator=(RealHP&& o) noexcept {
        if (this != &o) mpfr_swap(x_, o.x_);
        return *this;
    }
    ~RealHP() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    const mpfr_t& raw() const { return x_; }
    mpfr_t& raw() { return x_; }

    static RealHP pi(mpfr_prec_t prec) {
        RealHP r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    friend RealHP operator+(const RealHP& a, const RealHP& b) {
        RealHP r(join(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend RealHP operator-(const RealHP& a, const RealHP& b) {
        RealHP r(join(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend RealHP operator*(const RealHP& a, const RealHP& b) {
        RealHP r(join(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend RealHP operator/(const RealHP& a, const RealHP& b) {
        RealHP r(join(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    RealHP operator-() const {
        RealHP r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    RealHP abs() const {
        RealHP r(prec());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }
    RealHP sqrt() const {
        RealHP r(prec());
        mpfr_sqrt(r.x_, x_, MPFR_RNDN);
        return r;
    }
    /// n-th root of a nonnegative value.
    RealHP rootn(unsigned long n) const {
        RealHP r(prec());
        mpfr_rootn_ui(r.x_, x_, n, MPFR_RNDN);
        return r;
    }
    RealHP log() const {
        RealHP r(prec());
        mpfr_log(r.x_, x_, MPFR_RNDN);
        return r;
    }

    friend RealHP atan2hp(const RealHP& y, const RealHP& x) {
        RealHP r(join(y, x));
        mpfr_atan2(r.x_, y.x_, x.x_, MPFR_RNDN);
        return r;
    }
    friend void sin_cos(const RealHP& a, RealHP& s, RealHP& c) {
        s = RealHP(a.prec());
        c = RealHP(a.prec());
        mpfr_sin_cos(s.x_, c.x_, a.x_, MPFR_RNDN);
    }

    friend bool operator<(const RealHP& a, const RealHP& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const RealHP& a, const RealHP& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const RealHP& a, const RealHP& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }

    /// Nearest integer together with the absolute rounding residue.
    std::pair<Integer, RealHP> round_to_integer() const {
        RealHP nearest(prec());
        mpfr_round(nearest.x_, x_);
        Integer z;
        mpfr_get_z(z.get_mpz_t(), nearest.x_, MPFR_RNDN);
        RealHP residue = (*this - nearest).abs();
        return {z, residue};
    }

    /// 2^e at this value's precision (e may be negative), used for tolerances.
    static RealHP pow2(long e, mpfr_prec_t prec) {
        RealHP r(prec);
        mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
        return r;
    }

    std::string str(int digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, x_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    static mpfr_prec_t join(const RealHP& a, const RealHP& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t x_;
};

}  // namespace vknots
