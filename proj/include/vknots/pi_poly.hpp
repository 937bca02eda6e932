#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/rational.hpp"
#include "vknots/real_hp.hpp"

namespace vknots {

/// Element of Q[pi^2]: coefficient k multiplies pi^{2k}. These are the exact
/// values taken by the derivatives at 0 of the sinc-type generating
/// functions; they stay symbolic until a final numeric evaluation.
class PiPolynomial {
  public:
    PiPolynomial() = default;
    explicit PiPolynomial(Rational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    static PiPolynomial pi_power(unsigned two_k, Rational coeff) {
        PiPolynomial p;
        if (coeff == 0) return p;
        p.coeffs_.assign(two_k / 2 + 1, Rational(0));
        p.coeffs_.back() = std::move(coeff);
        return p;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    friend PiPolynomial operator+(const PiPolynomial& a, const PiPolynomial& b) {
        PiPolynomial r;
        std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend PiPolynomial operator-(const PiPolynomial& a, const PiPolynomial& b) {
        PiPolynomial r;
        std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    PiPolynomial scaled(const Rational& s) const {
        PiPolynomial r;
        if (s == 0) return r;
        r.coeffs_ = coeffs_;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Numeric value: sum of c_k pi^{2k} with pi at the requested precision
    /// (at least 64 bits).
    RealHP eval(mpfr_prec_t prec) const {
        if (prec < 64) throw std::invalid_argument("pi polynomial eval: precision < 64 bits");
        RealHP acc(0, prec);
        if (coeffs_.empty()) return acc;
        RealHP pi2 = RealHP::pi(prec) * RealHP::pi(prec);
        RealHP p(1, prec);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0) acc = acc + RealHP(coeffs_[k], prec) * p;
            p = p * pi2;
        }
        return acc;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (!out.empty()) out += " + ";
            out += coeffs_[k].get_str();
            if (k == 1) out += "*pi^2";
            if (k > 1) out += "*pi^" + std::to_string(2 * k);
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies pi^{2k}
};

}  // namespace vknots
